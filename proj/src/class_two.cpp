#include "idemgeo/class_two.hpp"

#include "idemgeo/centralizers.hpp"
#include "idemgeo/errors.hpp"

namespace idemgeo {

NilpotentFrame NilpotentFrame::checked(Matrix n, Matrix e, Matrix g, Matrix f, Matrix k) {
  const auto& d = n.domain();
  const std::size_t dim = n.dim();
  const Matrix zero = Matrix::zero(d, dim);
  const bool ok = !n.is_zero() && (n * n).is_zero() && is_idempotent(e) && is_idempotent(g) && is_idempotent(f) &&
                  e * n * g == n && (e * g).is_zero() && (g * e).is_zero() && n * k == e && k * n == g &&
                  e + g + f == Matrix::identity(d, dim) && (e * f).is_zero() && (f * e).is_zero() &&
                  (g * f).is_zero() && (f * g).is_zero();
  if (!ok) throw PreconditionError("nilpotent frame identities fail");
  return {std::move(n), std::move(e), std::move(g), std::move(f), std::move(k)};
}

bool is_class_two(const Matrix& s) {
  const Matrix m = s - Matrix::identity(s.domain(), s.dim());
  return !m.is_zero() && (m * m).is_zero();
}

NilpotentFrame nilpotent_frame(const Matrix& n) {
  if (n.is_zero() || !(n * n).is_zero()) throw PreconditionError("nilpotent_frame: need n != 0 with n^2 = 0");
  const auto& d = n.domain();
  const std::size_t dim = n.dim();
  const Subspace ker = kernel(n);
  const std::vector<Vector> u_part = ker.pivot_complement();
  std::vector<Vector> n_part;
  for (const auto& u : u_part) n_part.push_back(n.apply(u));
  Subspace acc = Subspace::span(d, dim, n_part);
  std::vector<Vector> w_part;
  for (const auto& v : ker.basis()) {
    if (acc.contains(v)) continue;
    w_part.push_back(v);
    acc = acc.sum(Subspace::span(d, dim, {v}));
  }
  const std::size_t rho = u_part.size();
  std::vector<Vector> cols = u_part;
  cols.insert(cols.end(), n_part.begin(), n_part.end());
  cols.insert(cols.end(), w_part.begin(), w_part.end());
  const Matrix p = Matrix::from_columns(d, cols);
  const Matrix p_inv = inverse(p);

  auto block_projection = [&](std::size_t from, std::size_t to) {
    std::vector<Scalar> diag(dim, d.zero());
    for (std::size_t i = from; i < to; ++i) diag[i] = d.one();
    return p * Matrix::diagonal(d, diag) * p_inv;
  };
  Matrix shift(d, dim);  // n u_i -> u_i in P coordinates
  for (std::size_t i = 0; i < rho; ++i) shift(i, rho + i) = d.one();
  return NilpotentFrame::checked(n, block_projection(rho, 2 * rho), block_projection(0, rho),
                                 block_projection(2 * rho, dim), p * shift * p_inv);
}

ClassTwoWitness witness_u_r(const Matrix& s) {
  if (!is_class_two(s)) throw PreconditionError("witness_u_r: s is not of class 2");
  const auto& d = s.domain();
  const std::size_t dim = s.dim();
  const Matrix one = Matrix::identity(d, dim);
  NilpotentFrame frame = nilpotent_frame(s - one);
  const Matrix& e = frame.e();
  Matrix u = d.from_int(2) * e - one;
  Matrix r = one + e;
  Matrix r_inv = one - halve(d.one()) * e;
  const Matrix s_inv = d.from_int(2) * one - s;

  const auto fail = [](const char* what) { throw InvariantViolation(std::string("witness_u_r: ") + what); };
  if (!is_involution(u)) fail("u^2 != 1");
  if (u * s * u != s_inv || s * s_inv != one) fail("usu != s^-1");
  if (r * r_inv != one || r_inv * r != one) fail("r^-1 != 1 - e/2");
  if (r * s * r_inv != s * s) fail("r s r^-1 != s^2");
  if (s.pow(3) == one) fail("s^3 = 1");
  for (const auto& b : commutant_basis(u).basis) {
    if (!commute(r, b)) fail("r does not commute with C(u)");
  }
  return {std::move(u), std::move(r), std::move(r_inv), std::move(frame)};
}

bool centralizer_form_check(const Matrix& t, const NilpotentFrame& frame) {
  const Matrix gt = frame.g() * t;
  if (!(gt * frame.e()).is_zero() || !(gt * frame.f()).is_zero()) return false;
  if (!(frame.f() * t * frame.e()).is_zero()) return false;
  return gt * frame.g() == frame.k() * (frame.e() * t * frame.e()) * frame.n();
}

std::array<Matrix, 3> centralizer_probes(const NilpotentFrame& frame) {
  const auto& d = frame.e().domain();
  const std::size_t dim = frame.e().dim();
  Matrix ones(d, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) ones(i, j) = d.one();
  const Matrix& e = frame.e();
  const Matrix& g = frame.g();
  const Matrix& f = frame.f();
  const Matrix x = d.from_int(2) * e;
  return {x + frame.k() * x * frame.n() + f, e + g + f * ones * g + f, e + g + e * ones * f + f};
}

std::optional<std::pair<Scalar, Scalar>> double_centralizer_structure(const Matrix& s, const Matrix& dd) {
  if (!is_class_two(s)) throw PreconditionError("double_centralizer_structure: s is not of class 2");
  if (!is_invertible(dd)) throw PreconditionError("double_centralizer_structure: d is not invertible");
  const Matrix one = Matrix::identity(s.domain(), s.dim());
  const Matrix n = s - one;
  const NilpotentFrame frame = nilpotent_frame(n);
  for (const auto& t : centralizer_probes(frame)) {
    if (!commute(t, s)) throw InvariantViolation("centralizer probe outside C(s)");
    if (!commute(dd, t)) return std::nullopt;
  }
  for (const auto& b : commutant_basis(s).basis) {
    if (!commute(dd, b)) return std::nullopt;
  }
  auto z = coordinates({one, n}, dd);
  if (!z) throw InvariantViolation("element of C^2(s) is not of the form z1 + z2 n");
  return std::make_pair((*z)[0], (*z)[1]);
}

}  // namespace idemgeo
