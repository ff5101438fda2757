#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "idemgeo/matrix.hpp"

namespace idemgeo {

/// {sum c_i B_i : ops(sum c_i B_i) = 0}, where `ops` is linear and returns a
/// list of matrices that must all vanish. Result is a basis in echelon order
/// of the coefficient vectors.
std::vector<Matrix> solve_homogeneous(const std::vector<Matrix>& basis,
                                      const std::function<std::vector<Matrix>(const Matrix&)>& ops);

/// Standard basis E_ij of M_n, row-major.
std::vector<Matrix> unit_basis(const ScalarDomain& domain, std::size_t n);

/// Coefficients of x in terms of the linearly independent `basis`, if x lies
/// in its span.
std::optional<Vector> coordinates(const std::vector<Matrix>& basis, const Matrix& x);

struct CommutantBasis {
  Matrix base_point;
  std::vector<Matrix> basis;
  [[nodiscard]] std::size_t dim() const { return basis.size(); }
  [[nodiscard]] bool spans(const Matrix& x) const { return coordinates(basis, x).has_value(); }
};

/// Linear basis of {x : sx = xs}.
CommutantBasis commutant_basis(const Matrix& s);
/// Linear basis of {y : by = yb for every b in commutant_basis(s)}.
CommutantBasis double_commutant_basis(const Matrix& s);

enum class Mode { structural, exhaustive };
const char* mode_name(Mode mode);

/// Fixed-size bitset over group element indices.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  [[nodiscard]] bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  [[nodiscard]] bool subset_of(const IndexSet& other) const;
  [[nodiscard]] std::size_t count() const;
  [[nodiscard]] std::size_t size() const { return size_; }
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// |GL_n(F_p)| above which the exhaustive group table is refused.
inline constexpr std::uint64_t kGroupTableGuard = 5000;

/// prod_{i<n} (p^n - p^i).
std::uint64_t general_linear_order(std::uint32_t p, std::size_t n);

/// GL_n(F_p) listed in lexicographic order with all centralizers C(t) as
/// index sets. Built once per (p, n) and shared.
class GroupTable {
 public:
  static const GroupTable& get(const ScalarDomain& domain, std::size_t n);

  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] const Matrix& element(std::size_t i) const { return elements_[i]; }
  [[nodiscard]] const std::vector<Matrix>& elements() const { return elements_; }
  [[nodiscard]] std::size_t index_of(const Matrix& m) const;  ///< throws PreconditionError if not in GL
  [[nodiscard]] const IndexSet& centralizer(std::size_t i) const { return centralizers_[i]; }
  /// {v : C(i) is contained in C(v)}, i.e. the group double centralizer.
  [[nodiscard]] IndexSet second_centralizer(std::size_t i) const;
  [[nodiscard]] bool is_central(std::size_t i) const { return centralizers_[i].count() == size(); }
  /// Indices of the involutions, ascending.
  [[nodiscard]] const std::vector<std::size_t>& involutions() const { return involutions_; }

 private:
  GroupTable(const ScalarDomain& domain, std::size_t n);

  std::vector<Matrix> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<IndexSet> centralizers_;
  std::vector<std::size_t> involutions_;
};

struct ConditionOne {
  bool holds = false;
  /// Exhaustive mode: the least t on which the biconditional fails.
  std::optional<Matrix> witness;
};

/// For every invertible t: C(s) strictly inside C(t) iff C(t) = GL.
/// Exhaustive mode checks this literally over GL_n(F_p). Structural mode
/// decides whether every non-scalar element of F[s] generates F[s] from the
/// minimal polynomial (degree <= 4; finite domains need n < p).
ConditionOne condition_one(const Matrix& s, Mode mode);

/// True iff every non-scalar element of F[s] generates all of F[s], read off
/// the minimal polynomial.
bool generated_algebra_is_minimal(const Matrix& s);

struct TheoremC {
  bool verdict = false;
  std::array<bool, 4> conditions{};
  std::optional<Matrix> u;  ///< condition (2) witness
  std::optional<Matrix> r;  ///< condition (3) witness for u
  std::optional<Matrix> condition_one_witness;
  Mode mode = Mode::structural;
  std::string note;  ///< set when a search was bounded and came up empty
};

inline constexpr const char* kBoundedSearchNote = "no witness found (bounded search)";

/// Conditions (1)-(4) for 1 != s in GL. Exhaustive mode scans involutions and
/// the group double centralizer and reports the least witnesses.
TheoremC theorem_c_decide(const Matrix& s, Mode mode);

}  // namespace idemgeo
