#include "idemgeo/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "idemgeo/errors.hpp"

namespace idemgeo {

Matrix::Matrix(ScalarDomain domain, std::size_t n) : domain_(domain), n_(n), a_(n * n, domain.zero()) {
  if (n == 0) throw DimensionError("matrix dimension must be at least 1");
}

Matrix Matrix::identity(ScalarDomain domain, std::size_t n) { return scalar(domain, n, domain.one()); }

Matrix Matrix::scalar(ScalarDomain domain, std::size_t n, const Scalar& c) {
  Matrix m(domain, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::unit(ScalarDomain domain, std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw DimensionError("matrix unit index out of range");
  Matrix m(domain, n);
  m(i, j) = domain.one();
  return m;
}

Matrix Matrix::diagonal(ScalarDomain domain, const std::vector<Scalar>& diag) {
  Matrix m(domain, diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_ints(ScalarDomain domain, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  Matrix m(domain, rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw DimensionError("matrix literal is not square");
    std::size_t j = 0;
    for (std::int64_t v : row) m(i, j++) = domain.from_int(v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(ScalarDomain domain, const std::vector<Vector>& rows) {
  Matrix m(domain, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DimensionError("matrix rows are not square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j].domain() != domain) throw DomainError("entry outside matrix domain");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_columns(ScalarDomain domain, const std::vector<Vector>& columns) {
  Matrix m(domain, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != columns.size()) throw DimensionError("column count must equal column length");
    for (std::size_t i = 0; i < columns.size(); ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::from_vector(ScalarDomain domain, std::size_t n, const Vector& entries) {
  if (entries.size() != n * n) throw DimensionError("vector length is not n*n");
  Matrix m(domain, n);
  m.a_ = entries;
  return m;
}

Vector Matrix::row(std::size_t i) const { return {a_.begin() + static_cast<std::ptrdiff_t>(i * n_), a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_)}; }

Vector Matrix::column(std::size_t j) const {
  Vector c;
  c.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) c.push_back((*this)(i, j));
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(domain_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const Scalar& s = (*this)(i, j);
      if (i == j ? !s.is_one() : !s.is_zero()) return false;
    }
  return true;
}

Scalar Matrix::trace() const {
  Scalar t = domain_.zero();
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != n_) throw DimensionError("vector length mismatch");
  Vector y(n_, domain_.zero());
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (!a.is_zero() && !x[k].is_zero()) y[i] += a * x[k];
    }
  return y;
}

Matrix Matrix::pow(unsigned k) const {
  Matrix result = identity(domain_, n_);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

std::uint64_t Matrix::key() const {
  if (!domain_.is_finite()) throw DomainError("key() needs a finite field");
  std::uint64_t k = 0;
  for (const Scalar& s : a_) k = k * domain_.modulus() + s.residue_value();
  return k;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

void Matrix::require_compatible(const Matrix& other, const char* op) const {
  if (n_ != other.n_) {
    throw DimensionError(std::string(op) + ": dimension mismatch " + std::to_string(n_) + " vs " + std::to_string(other.n_));
  }
  if (domain_ != other.domain_) {
    throw DomainError(std::string(op) + ": domain mismatch " + domain_.name() + " vs " + other.domain_.name());
  }
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  a.require_compatible(b, "add");
  Matrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  a.require_compatible(b, "sub");
  Matrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.require_compatible(b, "mul");
  const std::size_t n = a.n_;
  Matrix c(a.domain_, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& aik = a.a_[i * n + k];
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& bkj = b.a_[k * n + j];
        if (!bkj.is_zero()) c.a_[i * n + j] += aik * bkj;
      }
    }
  }
  return c;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.a_) x = s * x;
  return c;
}

Matrix Matrix::operator-() const {
  Matrix c = *this;
  for (auto& x : c.a_) x = -x;
  return c;
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
  a.require_compatible(b, "compare");
  for (std::size_t i = 0; i < a.a_.size(); ++i) {
    auto c = a.a_[i] <=> b.a_[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Matrix scalar_matrix(ScalarDomain domain, std::size_t n, std::int64_t c) {
  return Matrix::scalar(domain, n, domain.from_int(c));
}

bool commute(const Matrix& a, const Matrix& b) { return a * b == b * a; }

bool is_idempotent(const Matrix& e) { return e * e == e; }

bool is_involution(const Matrix& u) { return (u * u).is_identity(); }

}  // namespace idemgeo
