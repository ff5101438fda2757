#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "idemgeo/matrix.hpp"

namespace idemgeo {

/// Reduced row echelon form of a list of row vectors, zero rows dropped.
struct EchelonForm {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;  ///< pivot column of rows[i]
};

EchelonForm row_reduce(std::vector<Vector> rows, std::size_t cols);

/// Basis of {x : r.x = 0 for every row r}; one vector per free column, with
/// that coordinate set to 1.
std::vector<Vector> null_space(const std::vector<Vector>& rows, std::size_t cols, const ScalarDomain& domain);

/// Particular solution of A x = b (free coordinates zero), or nullopt when
/// the system is inconsistent.
std::optional<Vector> solve_linear(const std::vector<Vector>& rows, const Vector& rhs, std::size_t cols,
                                   const ScalarDomain& domain);

/// A subspace of the column space F^n, held as its canonical reduced echelon
/// basis. Equal subspaces have identical bases.
class Subspace {
 public:
  Subspace(ScalarDomain domain, std::size_t ambient);

  static Subspace span(ScalarDomain domain, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace full(ScalarDomain domain, std::size_t ambient);

  [[nodiscard]] const ScalarDomain& domain() const { return domain_; }
  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Vector>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
  [[nodiscard]] bool is_zero() const { return basis_.empty(); }
  [[nodiscard]] bool is_full() const { return basis_.size() == ambient_; }

  [[nodiscard]] bool contains(const Vector& v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;
  [[nodiscard]] Subspace sum(const Subspace& other) const;
  [[nodiscard]] Subspace intersect(const Subspace& other) const;
  /// span{ m b : b in basis }
  [[nodiscard]] Subspace image(const Matrix& m) const;
  /// Standard basis vectors at the non-pivot coordinates; completes basis()
  /// to a basis of F^n.
  [[nodiscard]] std::vector<Vector> pivot_complement() const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.domain_ == b.domain_ && a.basis_ == b.basis_;
  }

 private:
  ScalarDomain domain_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix& a);
std::vector<Vector> kernel_basis(const Matrix& a);
Subspace column_space(const Matrix& a);
Subspace kernel(const Matrix& a);

/// Exact Gauss-Jordan inverse; throws NotInvertible on singular input.
Matrix inverse(const Matrix& a);
std::optional<Matrix> try_inverse(const Matrix& a);
bool is_invertible(const Matrix& a);

/// The idempotent with the given range and kernel; throws PreconditionError
/// unless the two subspaces are complementary.
Matrix projection(const Subspace& range, const Subspace& null);
/// The idempotent with the given range whose kernel is spanned by the
/// standard basis vectors at the range's non-pivot coordinates.
Matrix canonical_idempotent(const Subspace& range);

/// Pairwise orthogonal idempotents e, g, f with e + g + f = 1.
class BlockFrame {
 public:
  /// Throws PreconditionError if the frame identities fail.
  BlockFrame(Matrix e, Matrix g, Matrix f);

  [[nodiscard]] const Matrix& e() const { return parts_[0]; }
  [[nodiscard]] const Matrix& g() const { return parts_[1]; }
  [[nodiscard]] const Matrix& f() const { return parts_[2]; }
  [[nodiscard]] const Matrix& part(std::size_t i) const { return parts_.at(i); }

 private:
  std::array<Matrix, 3> parts_;
};

/// The nine components x t y for x, y in (e, g, f), in that order.
struct BlockGrid {
  std::array<std::array<Matrix, 3>, 3> blocks;

  [[nodiscard]] const Matrix& at(std::size_t row, std::size_t col) const { return blocks.at(row).at(col); }
  [[nodiscard]] Matrix sum() const;
};

BlockGrid block_decompose(const Matrix& t, const BlockFrame& frame);

/// True iff t is a scalar multiple of 1.
bool is_central(const Matrix& t);

struct ProjectionSimilarity {
  Matrix u;  ///< invertible, p = u e u^-1
  Matrix p;  ///< diag(1,..,1,0,..,0)
};

/// Conjugates an idempotent to a symmetric idempotent by a change of basis to
/// (column space | kernel). Throws PreconditionError for non-idempotents.
ProjectionSimilarity similarity_to_projection(const Matrix& e);

/// Monic minimal polynomial, coefficients from degree 0 upwards.
std::vector<Scalar> minimal_polynomial(const Matrix& s);

/// dim span{1, t, t^2, ...}, the dimension of the unital algebra F[t].
std::size_t generated_algebra_dim(const Matrix& t);

}  // namespace idemgeo
