#include "idemgeo/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "idemgeo/errors.hpp"

namespace idemgeo {

EchelonForm row_reduce(std::vector<Vector> rows, std::size_t cols) {
  EchelonForm out;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < cols && lead_row < rows.size(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[lead_row]);
    Vector& pr = rows[lead_row];
    if (!pr[col].is_one()) {
      Scalar inv = pr[col].inverse();
      for (std::size_t j = col; j < cols; ++j) {
        if (!pr[j].is_zero()) pr[j] = pr[j] * inv;
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead_row || rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col];
      for (std::size_t j = col; j < cols; ++j) {
        if (!pr[j].is_zero()) rows[r][j] -= factor * pr[j];
      }
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  rows.resize(lead_row);
  out.rows = std::move(rows);
  return out;
}

std::vector<Vector> null_space(const std::vector<Vector>& rows, std::size_t cols, const ScalarDomain& domain) {
  EchelonForm ef = row_reduce(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : ef.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector x(cols, domain.zero());
    x[free] = domain.one();
    for (std::size_t r = 0; r < ef.rows.size(); ++r) x[ef.pivots[r]] = -ef.rows[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vector> solve_linear(const std::vector<Vector>& rows, const Vector& rhs, std::size_t cols,
                                   const ScalarDomain& domain) {
  if (rows.size() != rhs.size()) throw DimensionError("solve_linear: row/rhs count mismatch");
  std::vector<Vector> aug;
  aug.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Vector r = rows[i];
    r.push_back(rhs[i]);
    aug.push_back(std::move(r));
  }
  EchelonForm ef = row_reduce(std::move(aug), cols + 1);
  Vector x(cols, domain.zero());
  for (std::size_t r = 0; r < ef.rows.size(); ++r) {
    if (ef.pivots[r] == cols) return std::nullopt;
    x[ef.pivots[r]] = ef.rows[r][cols];
  }
  return x;
}

Subspace::Subspace(ScalarDomain domain, std::size_t ambient) : domain_(domain), ambient_(ambient) {}

Subspace Subspace::span(ScalarDomain domain, std::size_t ambient, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw DimensionError("spanning vector has wrong length");
  }
  Subspace s(domain, ambient);
  EchelonForm ef = row_reduce(vectors, ambient);
  s.basis_ = std::move(ef.rows);
  s.pivots_ = std::move(ef.pivots);
  return s;
}

Subspace Subspace::full(ScalarDomain domain, std::size_t ambient) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector v(ambient, domain.zero());
    v[i] = domain.one();
    vs.push_back(std::move(v));
  }
  return span(domain, ambient, vs);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("vector has wrong length");
  // Reduce v against the echelon basis; v lies in the span iff nothing is left.
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!basis_[i][j].is_zero()) r[j] -= c * basis_[i][j];
    }
  }
  return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [this](const Vector& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vector> vs = basis_;
  vs.insert(vs.end(), other.basis_.begin(), other.basis_.end());
  return span(domain_, ambient_, vs);
}

Subspace Subspace::intersect(const Subspace& other) const {
  // Solve sum a_i u_i - sum b_j w_j = 0; the u-part of each solution spans the meet.
  const std::size_t k = basis_.size();
  const std::size_t l = other.basis_.size();
  std::vector<Vector> rows(ambient_, Vector(k + l, domain_.zero()));
  for (std::size_t r = 0; r < ambient_; ++r) {
    for (std::size_t i = 0; i < k; ++i) rows[r][i] = basis_[i][r];
    for (std::size_t j = 0; j < l; ++j) rows[r][k + j] = -other.basis_[j][r];
  }
  std::vector<Vector> meet;
  for (const Vector& sol : null_space(rows, k + l, domain_)) {
    Vector x(ambient_, domain_.zero());
    for (std::size_t i = 0; i < k; ++i) {
      if (sol[i].is_zero()) continue;
      for (std::size_t r = 0; r < ambient_; ++r) x[r] += sol[i] * basis_[i][r];
    }
    meet.push_back(std::move(x));
  }
  return span(domain_, ambient_, meet);
}

Subspace Subspace::image(const Matrix& m) const {
  if (m.dim() != ambient_) throw DimensionError("image: dimension mismatch");
  std::vector<Vector> vs;
  vs.reserve(basis_.size());
  for (const auto& b : basis_) vs.push_back(m.apply(b));
  return span(domain_, ambient_, vs);
}

std::vector<Vector> Subspace::pivot_complement() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (is_pivot[j]) continue;
    Vector v(ambient_, domain_.zero());
    v[j] = domain_.one();
    out.push_back(std::move(v));
  }
  return out;
}

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    os << (i ? ", (" : "(");
    for (std::size_t j = 0; j < ambient_; ++j) os << (j ? "," : "") << basis_[i][j].to_string();
    os << ')';
  }
  os << '}';
  return os.str();
}

std::size_t rank(const Matrix& a) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.row(i));
  return row_reduce(std::move(rows), a.dim()).rows.size();
}

std::vector<Vector> kernel_basis(const Matrix& a) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.row(i));
  return null_space(rows, a.dim(), a.domain());
}

Subspace column_space(const Matrix& a) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(a.column(j));
  return Subspace::span(a.domain(), a.dim(), cols);
}

Subspace kernel(const Matrix& a) { return Subspace::span(a.domain(), a.dim(), kernel_basis(a)); }

std::optional<Matrix> try_inverse(const Matrix& a) {
  const std::size_t n = a.dim();
  const ScalarDomain& d = a.domain();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vector r = a.row(i);
    r.resize(2 * n, d.zero());
    r[n + i] = d.one();
    rows.push_back(std::move(r));
  }
  EchelonForm ef = row_reduce(std::move(rows), 2 * n);
  if (ef.rows.size() < n || ef.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(d, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ef.rows[i][n + j];
  return inv;
}

Matrix inverse(const Matrix& a) {
  auto inv = try_inverse(a);
  if (!inv) throw NotInvertible("matrix is singular: " + a.to_string());
  return *std::move(inv);
}

bool is_invertible(const Matrix& a) { return rank(a) == a.dim(); }

Matrix projection(const Subspace& range, const Subspace& null) {
  const std::size_t n = range.ambient_dim();
  if (range.dim() + null.dim() != n || !range.intersect(null).is_zero()) {
    throw PreconditionError("projection: range and kernel are not complementary");
  }
  std::vector<Vector> cols = range.basis();
  cols.insert(cols.end(), null.basis().begin(), null.basis().end());
  Matrix q = Matrix::from_columns(range.domain(), cols);
  std::vector<Scalar> diag(n, range.domain().zero());
  for (std::size_t i = 0; i < range.dim(); ++i) diag[i] = range.domain().one();
  return q * Matrix::diagonal(range.domain(), diag) * inverse(q);
}

Matrix canonical_idempotent(const Subspace& range) {
  return projection(range, Subspace::span(range.domain(), range.ambient_dim(), range.pivot_complement()));
}

BlockFrame::BlockFrame(Matrix e, Matrix g, Matrix f) : parts_{std::move(e), std::move(g), std::move(f)} {
  for (const auto& p : parts_) {
    if (!is_idempotent(p)) throw PreconditionError("block frame member is not idempotent");
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j && !(parts_[i] * parts_[j]).is_zero()) {
        throw PreconditionError("block frame members are not orthogonal");
      }
    }
  if (!(parts_[0] + parts_[1] + parts_[2]).is_identity()) {
    throw PreconditionError("block frame does not sum to 1");
  }
}

Matrix BlockGrid::sum() const {
  Matrix s = Matrix::zero(blocks[0][0].domain(), blocks[0][0].dim());
  for (const auto& row : blocks)
    for (const auto& b : row) s += b;
  return s;
}

BlockGrid block_decompose(const Matrix& t, const BlockFrame& frame) {
  std::array<Matrix, 3> right = {t * frame.e(), t * frame.g(), t * frame.f()};
  auto block = [&](std::size_t i, std::size_t j) { return frame.part(i) * right[j]; };
  return BlockGrid{{{{block(0, 0), block(0, 1), block(0, 2)},
                     {block(1, 0), block(1, 1), block(1, 2)},
                     {block(2, 0), block(2, 1), block(2, 2)}}}};
}

bool is_central(const Matrix& t) {
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j) {
      if (i != j && !t(i, j).is_zero()) return false;
      if (i == j && t(i, i) != t(0, 0)) return false;
    }
  return true;
}

ProjectionSimilarity similarity_to_projection(const Matrix& e) {
  if (!is_idempotent(e)) throw PreconditionError("similarity_to_projection: input is not idempotent");
  Subspace range = column_space(e);
  std::vector<Vector> cols = range.basis();
  for (auto& v : kernel_basis(e)) cols.push_back(std::move(v));
  Matrix q = Matrix::from_columns(e.domain(), cols);
  Matrix u = inverse(q);
  Matrix p = u * e * q;
  return {std::move(u), std::move(p)};
}

std::vector<Scalar> minimal_polynomial(const Matrix& s) {
  const ScalarDomain& d = s.domain();
  const std::size_t m = s.dim() * s.dim();
  std::vector<Vector> powers;  // vec(s^0), vec(s^1), ...
  Matrix current = Matrix::identity(d, s.dim());
  while (true) {
    Vector target = current.to_vector();
    if (!powers.empty()) {
      // Solve sum c_i vec(s^i) = vec(s^k) for the previous powers.
      std::vector<Vector> rows(m, Vector(powers.size(), d.zero()));
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i < powers.size(); ++i) rows[r][i] = powers[i][r];
      if (auto c = solve_linear(rows, target, powers.size(), d)) {
        std::vector<Scalar> poly;
        for (auto& ci : *c) poly.push_back(-ci);
        poly.push_back(d.one());
        return poly;
      }
    }
    powers.push_back(std::move(target));
    current = current * s;
  }
}

std::size_t generated_algebra_dim(const Matrix& t) { return minimal_polynomial(t).size() - 1; }

}  // namespace idemgeo
