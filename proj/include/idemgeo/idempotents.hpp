#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "idemgeo/linalg.hpp"
#include "idemgeo/sampling.hpp"

namespace idemgeo {

/// eN, stored as the canonical echelon basis of col(e).
class RightIdeal {
 public:
  explicit RightIdeal(Subspace space) : space_(std::move(space)) {}
  static RightIdeal of(const Matrix& e) { return RightIdeal(column_space(e)); }
  static RightIdeal zero(ScalarDomain domain, std::size_t n) { return RightIdeal(Subspace(domain, n)); }
  static RightIdeal full(ScalarDomain domain, std::size_t n) { return RightIdeal(Subspace::full(domain, n)); }

  [[nodiscard]] const Subspace& space() const { return space_; }
  [[nodiscard]] const std::vector<Vector>& basis() const { return space_.basis(); }
  [[nodiscard]] std::size_t rank() const { return space_.dim(); }
  [[nodiscard]] std::size_t ambient_dim() const { return space_.ambient_dim(); }
  [[nodiscard]] const ScalarDomain& domain() const { return space_.domain(); }
  [[nodiscard]] bool is_zero() const { return space_.is_zero(); }
  [[nodiscard]] bool is_full() const { return space_.is_full(); }
  [[nodiscard]] bool contains(const Matrix& x) const;  ///< x in eN: every column of x in the span
  /// A fixed idempotent generating this ideal.
  [[nodiscard]] Matrix idempotent() const { return canonical_idempotent(space_); }
  [[nodiscard]] std::string to_string() const { return space_.to_string(); }

  friend bool operator==(const RightIdeal& a, const RightIdeal& b) { return a.space_ == b.space_; }
  /// Rank first, then basis entries.
  friend std::strong_ordering operator<=>(const RightIdeal& a, const RightIdeal& b);

 private:
  Subspace space_;
};

/// e -> 2e - 1; throws PreconditionError unless e^2 = e.
Matrix iota(const Matrix& e);
/// u -> (1 + u)/2; throws PreconditionError unless u^2 = 1.
Matrix iota_inv(const Matrix& u);

struct PlusMinus {
  RightIdeal plus;
  RightIdeal minus;
  friend bool operator==(const PlusMinus&, const PlusMinus&) = default;
};

/// (I+(u), I-(u)) = (col((1+u)/2), col((1-u)/2)).
PlusMinus plus_minus_space(const Matrix& u);

/// col(e) == col(f); both must be idempotent.
bool same_right_ideal(const Matrix& e, const Matrix& f);

/// Basis of the linear space eN(1-e); its dimension is rank(e)(n - rank(e)).
std::vector<Matrix> offdiagonal_basis(const Matrix& e);

/// Every f with fN = eN, each once, sorted. Finite domains only; the class
/// has p^(k(n-k)) members and is guarded like matrix enumeration.
std::vector<Matrix> class_members(const Matrix& e);
void for_each_class_member(const Matrix& e, const std::function<bool(const Matrix&)>& visit);

/// e + e y (1-e) for y drawn from the sampler's integer box.
Matrix sample_class_member(const Matrix& e, Sampler& sampler);

/// (I+(u), I-(u)) = (I+(v), I-(v)) implies u = v.
bool involution_rigidity(const Matrix& u, const Matrix& v);

/// Distinct right ideals eN over all idempotents of M_n(F_p), sorted.
std::vector<RightIdeal> right_ideal_classes(const ScalarDomain& domain, std::size_t n);

}  // namespace idemgeo
