#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "idemgeo/centralizers.hpp"
#include "idemgeo/idempotents.hpp"

namespace idemgeo {

enum class Sign { plus, minus };
const char* sign_name(Sign sign);

/// {v in Inv : I^sign(v) = ideal}. Delta-(0) = {1} = Delta+(N) and
/// Delta-(N) = {-1} = Delta+(0) are stored with sign plus.
class DeltaSet {
 public:
  DeltaSet(Sign sign, RightIdeal ideal);
  static DeltaSet plus(const Matrix& e) { return {Sign::plus, RightIdeal::of(e)}; }
  static DeltaSet minus(const Matrix& e) { return {Sign::minus, RightIdeal::of(e)}; }

  [[nodiscard]] Sign sign() const { return sign_; }
  [[nodiscard]] const RightIdeal& ideal() const { return ideal_; }
  [[nodiscard]] const ScalarDomain& domain() const { return ideal_.domain(); }
  [[nodiscard]] std::size_t dim() const { return ideal_.ambient_dim(); }
  /// One of {1}, {-1}.
  [[nodiscard]] bool is_trivial() const { return ideal_.is_zero() || ideal_.is_full(); }

  /// Decided from plus_minus_space(v) alone; v must be an involution.
  [[nodiscard]] bool contains(const Matrix& v) const;
  /// Every member, sorted (finite domains).
  [[nodiscard]] std::vector<Matrix> members() const;
  /// +-iota(f) for f = e + e y (1-e) with y from the sampler box.
  [[nodiscard]] Matrix sample_member(Sampler& sampler) const;
  /// +-iota(e) for the canonical idempotent of the ideal.
  [[nodiscard]] Matrix representative() const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const DeltaSet&, const DeltaSet&) = default;
  friend std::strong_ordering operator<=>(const DeltaSet& a, const DeltaSet& b);

 private:
  Sign sign_;
  RightIdeal ideal_;
};

/// All (sign, class) labels of M_n(F_p): Delta+(J) then Delta-(J) for each
/// class J in order. Two labels name the same set as another label.
std::vector<DeltaSet> delta_set_labels(const ScalarDomain& domain, std::size_t n);
/// The distinct Delta-sets, sorted.
std::vector<DeltaSet> enumerate_delta_sets(const ScalarDomain& domain, std::size_t n);

// The four properties on a single Delta-set.

/// uvw = wvu, (uvw)^2 = 1 and uvw in D. Throws PreconditionError unless
/// u, v, w are members.
bool property_a(const Matrix& u, const Matrix& v, const Matrix& w, const DeltaSet& d);
/// w = (u + v)/2, checked to be a member with wvw = u (InvariantViolation
/// otherwise).
Matrix property_b_solve(const Matrix& u, const Matrix& v, const DeltaSet& d);
/// Number of w in D with wvw = u (finite domains).
std::size_t property_b_solution_count(const Matrix& u, const Matrix& v, const DeltaSet& d);

struct NormalizerCheck {
  bool lhs = false;  ///< uD = Du
  bool rhs = false;  ///< uw = wu for some w in D
  std::optional<Matrix> commuting_member;
};
/// Exhaustive: set comparison and a scan of D. Structural: uD u = D iff
/// col(u e u) = col(e), and a commuting member solves the affine system
/// uX - Xu = eu - ue over X in eN(1-e).
NormalizerCheck property_c_normalizer(const Matrix& u, const DeltaSet& d, Mode mode);
/// (uv - 1)^2 = 0.
bool property_d_square(const Matrix& u, const Matrix& v, const DeltaSet& d);

/// I+(phi^2) = intersection of ker(uv - 1) over u, v in phi.
RightIdeal fixed_space_of_square(const std::vector<Matrix>& phi);

// The four properties for an arbitrary finite set of involutions.

struct Violation {
  int property = 0;             ///< 1..4
  std::vector<Matrix> witness;  ///< (u,v,w), (u,v), (u) or (u,v) respectively
  std::string detail;
};

/// First failure of properties (1)-(4) on `phi`, scanning tuples in index
/// order; `involutions` is the whole of Inv(N) for property (3).
std::optional<Violation> first_violation(const std::vector<Matrix>& phi, const std::vector<Matrix>& involutions);

struct MaximalityReport {
  bool forward = false;              ///< D itself passes (1)-(4)
  std::size_t outside = 0;           ///< involutions not in D
  std::vector<Matrix> outsiders;     ///< each v not in D, ascending
  std::vector<std::optional<Violation>> violations;  ///< for D with v adjoined
  [[nodiscard]] bool holds() const;
};
MaximalityReport maximality_check(const DeltaSet& d);

struct Lemma28 {
  RightIdeal a;
  bool hypothesis = false;  ///< vA = A for every v in C(u) cap Inv
  bool conclusion = false;  ///< A in {0, I+(u), I-(u), N}
  [[nodiscard]] bool holds() const { return !hypothesis || conclusion; }
};
/// A = {x : bx = 0 for b in B}, as the common kernel. Finite domains.
Lemma28 lemma_2_8_check(const Matrix& u, const std::vector<Matrix>& b);

}  // namespace idemgeo
