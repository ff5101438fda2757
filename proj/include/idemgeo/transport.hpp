#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idemgeo/delta_sets.hpp"

namespace idemgeo {

/// One catalog generator of Aut(GL_n).
struct IsoStep {
  enum class Kind { inner, transpose_inverse, field_automorphism };
  Kind kind = Kind::inner;
  std::optional<Matrix> g;       ///< inner only: u -> g u g^-1
  std::optional<Matrix> g_inv;
  unsigned frobenius_power = 0;  ///< field_automorphism only
  [[nodiscard]] std::string describe() const;
};

/// Composite of catalog generators, applied in list order. Source and target
/// share domain and dimension.
class IsoSpec {
 public:
  IsoSpec(ScalarDomain domain, std::size_t n) : domain_(domain), n_(n) {}

  static IsoSpec identity(ScalarDomain domain, std::size_t n) { return {domain, n}; }
  /// Throws PreconditionError unless g is invertible.
  static IsoSpec inner(const Matrix& g);
  static IsoSpec transpose_inverse(ScalarDomain domain, std::size_t n);
  /// Entrywise x -> x^(p^k); the identity on F_p. Over Q only k = 0 exists.
  static IsoSpec field_automorphism(ScalarDomain domain, std::size_t n, unsigned k);

  /// Apply *this, then `next`.
  [[nodiscard]] IsoSpec then(const IsoSpec& next) const;
  [[nodiscard]] IsoSpec inverse() const;
  /// Throws PreconditionError for non-invertible input.
  [[nodiscard]] Matrix apply(const Matrix& u) const;

  [[nodiscard]] const std::vector<IsoStep>& steps() const { return steps_; }
  [[nodiscard]] const ScalarDomain& domain() const { return domain_; }
  [[nodiscard]] std::size_t dim() const { return n_; }
  [[nodiscard]] bool involves_transpose() const;
  /// Composition notation, last step leftmost, e.g. "inner(g)∘transpose_inverse".
  [[nodiscard]] std::string describe() const;

 private:
  ScalarDomain domain_;
  std::size_t n_;
  std::vector<IsoStep> steps_;
};

inline Matrix apply_iso(const IsoSpec& f, const Matrix& u) { return f.apply(u); }

/// F(-1) = -1.
bool check_minus_one(const IsoSpec& f);

/// iota^-1(-F(-iota(e))), i.e. 1 - 2 theta(e) = F(1 - 2e).
Matrix theta(const IsoSpec& f, const Matrix& e);

/// Orientation of Delta+(e) under F from two distinct members u != v: plus if
/// F(u), F(v) share I+, minus if they share I-. Also checks the shared space
/// is col(theta(e)) resp. col(theta(1-e)). Throws InvariantViolation if the
/// evidence is inconsistent.
Sign orientation(const IsoSpec& f, const Matrix& e, const Matrix& u, const Matrix& v);
/// Uses u = iota(e) and v = iota(e + b) for the first basis element b of eN(1-e).
Sign orientation(const IsoSpec& f, const Matrix& e);

/// [e] -> [theta(e)] (plus) or [theta(1-e)] (minus); trivial classes fixed.
RightIdeal theta_tilde(const IsoSpec& f, const RightIdeal& cls);

struct ClassImage {
  RightIdeal source;
  RightIdeal image;
  std::optional<Sign> orientation;  ///< empty for the trivial classes
};

struct TheoremDReport {
  std::string iso;
  bool exhaustive = true;
  std::vector<ClassImage> table;
  std::size_t oriented_plus = 0;   ///< |I_o|
  std::size_t oriented_minus = 0;  ///< |I_o-bar|
  bool minus_one = false;
  bool theta_bijective = false;  ///< finite: theta permutes I(N)
  bool well_defined = false;     ///< same image and orientation from every representative
  bool bijection = false;
  bool inverse_ok = false;       ///< psi~ theta~ = id and theta~ psi~ = id
  std::vector<std::string> failures;
  [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// samples = 0: exhaustive over all classes of M_n(F_p). Otherwise the two
/// trivial classes plus `samples` sampled classes, each probed with `reps`
/// representatives.
TheoremDReport verify_theorem_d(const IsoSpec& f, std::size_t samples = 0, std::uint64_t seed = 0,
                                std::size_t reps = 4);

/// Items (1)-(3) for a nontrivial e. Item (1) is exhaustive over Delta+(e) in
/// finite domains and checked on `samples` sampled members otherwise.
bool verify_lemma_3_4(const IsoSpec& f, const Matrix& e, std::size_t samples = 16, std::uint64_t seed = 0);

}  // namespace idemgeo
