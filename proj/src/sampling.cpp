#include "idemgeo/sampling.hpp"

#include "idemgeo/errors.hpp"
#include "idemgeo/linalg.hpp"

namespace idemgeo {

std::uint64_t enumeration_size(const ScalarDomain& domain, std::size_t n) {
  if (!domain.is_finite()) throw GuardExceeded("exhaustive enumeration needs a prime-field domain");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    total *= domain.modulus();
    if (total > kEnumerationGuard) {
      throw GuardExceeded("p^(n^2) exceeds the enumeration guard of 10^8 for " + domain.name() +
                          ", n=" + std::to_string(n));
    }
  }
  return total;
}

void for_each_matrix(const ScalarDomain& domain, std::size_t n, const std::function<bool(const Matrix&)>& visit) {
  const std::uint64_t total = enumeration_size(domain, n);
  const std::uint32_t p = domain.modulus();
  std::vector<std::uint32_t> digits(n * n, 0);
  Matrix m(domain, n);
  for (std::uint64_t count = 0; count < total; ++count) {
    if (!visit(m)) return;
    // odometer: the last entry moves fastest
    for (std::size_t k = n * n; k-- > 0;) {
      if (++digits[k] < p) {
        m(k / n, k % n) = Scalar::residue(digits[k], p);
        break;
      }
      digits[k] = 0;
      m(k / n, k % n) = Scalar::residue(0, p);
    }
  }
}

std::vector<Matrix> enumerate_all(const ScalarDomain& domain, std::size_t n,
                                  const std::function<bool(const Matrix&)>& predicate) {
  std::vector<Matrix> out;
  for_each_matrix(domain, n, [&](const Matrix& m) {
    if (predicate(m)) out.push_back(m);
    return true;
  });
  return out;
}

std::vector<Matrix> enumerate_idempotents(const ScalarDomain& domain, std::size_t n) {
  return enumerate_all(domain, n, is_idempotent);
}

std::vector<Matrix> enumerate_involutions(const ScalarDomain& domain, std::size_t n) {
  return enumerate_all(domain, n, is_involution);
}

std::vector<Matrix> enumerate_invertibles(const ScalarDomain& domain, std::size_t n) {
  return enumerate_all(domain, n, is_invertible);
}

Matrix Sampler::box_matrix() {
  Matrix m(domain_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = domain_.from_int(rng_.between(-kSampleBox, kSampleBox));
  return m;
}

Matrix Sampler::invertible() {
  while (true) {
    Matrix m = box_matrix();
    if (is_invertible(m)) return m;
  }
}

Matrix Sampler::idempotent(std::size_t rank) {
  if (rank > n_) throw PreconditionError("idempotent rank exceeds dimension");
  Matrix q = invertible();
  std::vector<Scalar> diag(n_, domain_.zero());
  for (std::size_t i = 0; i < rank; ++i) diag[i] = domain_.one();
  return q * Matrix::diagonal(domain_, diag) * inverse(q);
}

Matrix Sampler::idempotent() { return idempotent(static_cast<std::size_t>(rng_.below(n_ + 1))); }

Matrix Sampler::involution() {
  Matrix e = idempotent();
  return domain_.from_int(2) * e - Matrix::identity(domain_, n_);
}

Matrix Sampler::square_zero_nilpotent() {
  if (n_ < 2) throw PreconditionError("no nonzero square-zero elements in M_1");
  const std::size_t rho = 1 + static_cast<std::size_t>(rng_.below(n_ / 2));
  while (true) {
    std::vector<Vector> b_rows;
    for (std::size_t r = 0; r < rho; ++r) {
      Vector row;
      for (std::size_t j = 0; j < n_; ++j) row.push_back(domain_.from_int(rng_.between(-kSampleBox, kSampleBox)));
      b_rows.push_back(std::move(row));
    }
    if (row_reduce(b_rows, n_).rows.size() != rho) continue;
    std::vector<Vector> ker = null_space(b_rows, n_, domain_);
    // columns of A: random combinations of ker(B)
    std::vector<Vector> a_cols;
    for (std::size_t r = 0; r < rho; ++r) {
      Vector col(n_, domain_.zero());
      for (const auto& k : ker) {
        Scalar c = domain_.from_int(rng_.between(-kSampleBox, kSampleBox));
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < n_; ++i) col[i] += c * k[i];
      }
      a_cols.push_back(std::move(col));
    }
    if (Subspace::span(domain_, n_, a_cols).dim() != rho) continue;
    Matrix nil(domain_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t r = 0; r < rho; ++r) nil(i, j) += a_cols[r][i] * b_rows[r][j];
    return nil;
  }
}

Matrix Sampler::sample(SampleKind kind) {
  switch (kind) {
    case SampleKind::invertible:
      return invertible();
    case SampleKind::idempotent:
      return idempotent();
    case SampleKind::involution:
      return involution();
    case SampleKind::square_zero_nilpotent:
      return square_zero_nilpotent();
  }
  throw PreconditionError("unknown sample kind");
}

}  // namespace idemgeo
