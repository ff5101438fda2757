#pragma once

#include <array>
#include <optional>
#include <utility>

#include "idemgeo/linalg.hpp"

namespace idemgeo {

/// n = eng, eg = ge = 0, e = nk, kn = g, f = 1 - e - g idempotent and
/// orthogonal to e and g. Only constructible through checked().
class NilpotentFrame {
 public:
  /// Throws PreconditionError unless every frame identity holds.
  static NilpotentFrame checked(Matrix n, Matrix e, Matrix g, Matrix f, Matrix k);

  [[nodiscard]] const Matrix& n() const { return n_; }
  [[nodiscard]] const Matrix& e() const { return e_; }
  [[nodiscard]] const Matrix& g() const { return g_; }
  [[nodiscard]] const Matrix& f() const { return f_; }
  [[nodiscard]] const Matrix& k() const { return k_; }
  [[nodiscard]] BlockFrame blocks() const { return {e_, g_, f_}; }

 private:
  NilpotentFrame(Matrix n, Matrix e, Matrix g, Matrix f, Matrix k)
      : n_(std::move(n)), e_(std::move(e)), g_(std::move(g)), f_(std::move(f)), k_(std::move(k)) {}
  Matrix n_, e_, g_, f_, k_;
};

/// s != 1 and (s - 1)^2 = 0.
bool is_class_two(const Matrix& s);

/// Frame for n != 0 with n^2 = 0, built in the basis U | nU | W where U is
/// the pivot complement of ker(n) and W completes col(n) inside ker(n).
NilpotentFrame nilpotent_frame(const Matrix& n);

struct ClassTwoWitness {
  Matrix u;  ///< involution with usu = s^-1
  Matrix r;  ///< in C^2(u) with r s r^-1 = s^2
  Matrix r_inverse;
  NilpotentFrame frame;
};

/// u = 2e - 1 and r = 1 + e for the frame idempotent e of n = s - 1. All
/// identities, including r commuting with the commutant basis of u, are
/// verified before returning (InvariantViolation otherwise).
ClassTwoWitness witness_u_r(const Matrix& s);

/// Zero blocks gte, fte, gtf and gtg = k (ete) n, relative to (e, g, f).
bool centralizer_form_check(const Matrix& t, const NilpotentFrame& frame);

/// The three block-diagonal-ish elements of C(s) used against C^2(s):
/// x + kxn + f, e + g + y + f, e + g + z + f with x = 2e, y in fNg, z in eNf.
std::array<Matrix, 3> centralizer_probes(const NilpotentFrame& frame);

/// (z1, z2) with d = z1 + z2 n when d commutes with the probes and the full
/// commutant basis of s; nullopt when d is outside C^2(s).
std::optional<std::pair<Scalar, Scalar>> double_centralizer_structure(const Matrix& s, const Matrix& d);

}  // namespace idemgeo
