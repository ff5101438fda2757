#include "idemgeo/idempotents.hpp"

#include <algorithm>

#include "idemgeo/errors.hpp"

namespace idemgeo {

bool RightIdeal::contains(const Matrix& x) const {
  for (std::size_t j = 0; j < x.dim(); ++j) {
    if (!space_.contains(x.column(j))) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const RightIdeal& a, const RightIdeal& b) {
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  return a.basis() <=> b.basis();
}

Matrix iota(const Matrix& e) {
  if (!is_idempotent(e)) throw PreconditionError("iota: argument is not idempotent");
  return e.domain().from_int(2) * e - Matrix::identity(e.domain(), e.dim());
}

Matrix iota_inv(const Matrix& u) {
  if (!is_involution(u)) throw PreconditionError("iota_inv: argument is not an involution");
  return halve(u.domain().one()) * (Matrix::identity(u.domain(), u.dim()) + u);
}

PlusMinus plus_minus_space(const Matrix& u) {
  if (!is_involution(u)) throw PreconditionError("plus_minus_space: argument is not an involution");
  const Matrix one = Matrix::identity(u.domain(), u.dim());
  const Scalar half = halve(u.domain().one());
  return {RightIdeal::of(half * (one + u)), RightIdeal::of(half * (one - u))};
}

bool same_right_ideal(const Matrix& e, const Matrix& f) {
  if (!is_idempotent(e) || !is_idempotent(f)) throw PreconditionError("same_right_ideal: non-idempotent argument");
  return column_space(e) == column_space(f);
}

std::vector<Matrix> offdiagonal_basis(const Matrix& e) {
  const auto& d = e.domain();
  const std::size_t n = e.dim();
  const Matrix co = Matrix::identity(d, n) - e;
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) vecs.push_back((e * Matrix::unit(d, n, i, j) * co).to_vector());
  // rows of the echelon form are a basis of the span, in canonical order
  std::vector<Matrix> out;
  for (auto& row : row_reduce(std::move(vecs), n * n).rows) out.push_back(Matrix::from_vector(d, n, row));
  return out;
}

void for_each_class_member(const Matrix& e, const std::function<bool(const Matrix&)>& visit) {
  if (!is_idempotent(e)) throw PreconditionError("class_members: argument is not idempotent");
  const auto& d = e.domain();
  if (!d.is_finite()) throw PreconditionError("class_members: exhaustive listing needs a finite domain");
  const std::vector<Matrix> basis = offdiagonal_basis(e);
  const std::uint32_t p = d.modulus();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    total *= p;
    if (total > kEnumerationGuard) throw GuardExceeded("class_members: class size exceeds the enumeration guard");
  }
  std::vector<std::uint32_t> digits(basis.size(), 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    Matrix f = e;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (digits[i] != 0) f += d.element(digits[i]) * basis[i];
    }
    if (!visit(f)) return;
    for (std::size_t k = basis.size(); k-- > 0;) {
      if (++digits[k] < p) break;
      digits[k] = 0;
    }
  }
}

std::vector<Matrix> class_members(const Matrix& e) {
  std::vector<Matrix> out;
  for_each_class_member(e, [&](const Matrix& f) {
    out.push_back(f);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

Matrix sample_class_member(const Matrix& e, Sampler& sampler) {
  if (!is_idempotent(e)) throw PreconditionError("sample_class_member: argument is not idempotent");
  const Matrix y = sampler.box_matrix();
  return e + e * y * (Matrix::identity(e.domain(), e.dim()) - e);
}

bool involution_rigidity(const Matrix& u, const Matrix& v) {
  return !(plus_minus_space(u) == plus_minus_space(v)) || u == v;
}

std::vector<RightIdeal> right_ideal_classes(const ScalarDomain& domain, std::size_t n) {
  std::vector<RightIdeal> out;
  for (const Matrix& e : enumerate_idempotents(domain, n)) out.push_back(RightIdeal::of(e));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace idemgeo
