#include "idemgeo/delta_sets.hpp"

#include <algorithm>

#include "idemgeo/errors.hpp"

namespace idemgeo {

const char* sign_name(Sign sign) { return sign == Sign::plus ? "+" : "-"; }

DeltaSet::DeltaSet(Sign sign, RightIdeal ideal) : sign_(sign), ideal_(std::move(ideal)) {
  if (sign_ == Sign::minus && ideal_.is_zero()) {
    sign_ = Sign::plus;
    ideal_ = RightIdeal::full(ideal_.domain(), ideal_.ambient_dim());
  } else if (sign_ == Sign::minus && ideal_.is_full()) {
    sign_ = Sign::plus;
    ideal_ = RightIdeal::zero(ideal_.domain(), ideal_.ambient_dim());
  }
}

bool DeltaSet::contains(const Matrix& v) const {
  const PlusMinus pm = plus_minus_space(v);
  return (sign_ == Sign::plus ? pm.plus : pm.minus) == ideal_;
}

std::vector<Matrix> DeltaSet::members() const {
  std::vector<Matrix> out;
  for_each_class_member(ideal_.idempotent(), [&](const Matrix& f) {
    Matrix v = iota(f);
    out.push_back(sign_ == Sign::plus ? std::move(v) : -v);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

Matrix DeltaSet::sample_member(Sampler& sampler) const {
  Matrix v = iota(sample_class_member(ideal_.idempotent(), sampler));
  return sign_ == Sign::plus ? v : -v;
}

Matrix DeltaSet::representative() const {
  Matrix v = iota(ideal_.idempotent());
  return sign_ == Sign::plus ? v : -v;
}

std::string DeltaSet::to_string() const {
  return std::string("Delta") + sign_name(sign_) + "(" + ideal_.to_string() + ")";
}

std::strong_ordering operator<=>(const DeltaSet& a, const DeltaSet& b) {
  if (auto c = a.sign_ <=> b.sign_; c != 0) return c;
  return a.ideal_ <=> b.ideal_;
}

std::vector<DeltaSet> delta_set_labels(const ScalarDomain& domain, std::size_t n) {
  std::vector<DeltaSet> out;
  for (const auto& j : right_ideal_classes(domain, n)) {
    out.emplace_back(Sign::plus, j);
    out.emplace_back(Sign::minus, j);
  }
  return out;
}

std::vector<DeltaSet> enumerate_delta_sets(const ScalarDomain& domain, std::size_t n) {
  std::vector<DeltaSet> out = delta_set_labels(domain, n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void require_member(const Matrix& v, const DeltaSet& d, const char* op) {
  if (!is_involution(v) || !d.contains(v)) throw PreconditionError(std::string(op) + ": argument is not in the Delta-set");
}

}  // namespace

bool property_a(const Matrix& u, const Matrix& v, const Matrix& w, const DeltaSet& d) {
  require_member(u, d, "property_a");
  require_member(v, d, "property_a");
  require_member(w, d, "property_a");
  const Matrix x = u * v * w;
  return x == w * v * u && is_involution(x) && d.contains(x);
}

Matrix property_b_solve(const Matrix& u, const Matrix& v, const DeltaSet& d) {
  require_member(u, d, "property_b_solve");
  require_member(v, d, "property_b_solve");
  Matrix w = halve(u.domain().one()) * (u + v);
  if (!is_involution(w) || !d.contains(w) || w * v * w != u) {
    throw InvariantViolation("property_b_solve: (u + v)/2 is not a solution in the Delta-set");
  }
  return w;
}

std::size_t property_b_solution_count(const Matrix& u, const Matrix& v, const DeltaSet& d) {
  std::size_t count = 0;
  for (const auto& w : d.members()) {
    if (w * v * w == u) ++count;
  }
  return count;
}

NormalizerCheck property_c_normalizer(const Matrix& u, const DeltaSet& d, Mode mode) {
  if (!is_involution(u)) throw PreconditionError("property_c_normalizer: u is not an involution");
  NormalizerCheck out;
  if (mode == Mode::exhaustive) {
    const std::vector<Matrix> members = d.members();
    std::vector<Matrix> left;
    std::vector<Matrix> right;
    for (const auto& w : members) {
      left.push_back(u * w);
      right.push_back(w * u);
      if (!out.commuting_member && commute(u, w)) out.commuting_member = w;
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    out.lhs = left == right;
    out.rhs = out.commuting_member.has_value();
    return out;
  }
  const Matrix e = d.ideal().idempotent();
  out.lhs = column_space(u * e * u) == column_space(e);
  const auto basis = offdiagonal_basis(e);
  const Matrix target = e * u - u * e;
  std::optional<Matrix> f;
  if (basis.empty()) {
    if (target.is_zero()) f = e;
  } else {
    const auto& dom = u.domain();
    const std::size_t len = u.dim() * u.dim();
    std::vector<Vector> rows(len, Vector(basis.size(), dom.zero()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Matrix image = u * basis[i] - basis[i] * u;
      for (std::size_t r = 0; r < len; ++r) rows[r][i] = image.entries()[r];
    }
    if (auto c = solve_linear(rows, target.entries(), basis.size(), dom)) {
      Matrix x = e;
      for (std::size_t i = 0; i < basis.size(); ++i) x += (*c)[i] * basis[i];
      f = std::move(x);
    }
  }
  if (f) {
    Matrix w = iota(*f);
    out.commuting_member = d.sign() == Sign::plus ? std::move(w) : -w;
  }
  out.rhs = out.commuting_member.has_value();
  return out;
}

bool property_d_square(const Matrix& u, const Matrix& v, const DeltaSet& d) {
  require_member(u, d, "property_d_square");
  require_member(v, d, "property_d_square");
  const Matrix m = u * v - Matrix::identity(u.domain(), u.dim());
  return (m * m).is_zero();
}

RightIdeal fixed_space_of_square(const std::vector<Matrix>& phi) {
  if (phi.empty()) throw PreconditionError("fixed_space_of_square: empty set");
  const auto& d = phi.front().domain();
  const std::size_t n = phi.front().dim();
  const Matrix one = Matrix::identity(d, n);
  Subspace fixed = Subspace::full(d, n);
  for (const auto& u : phi) {
    for (const auto& v : phi) {
      const Matrix t = u * v;
      if (t != one) fixed = fixed.intersect(kernel(t - one));
    }
  }
  return RightIdeal(std::move(fixed));
}

std::optional<Violation> first_violation(const std::vector<Matrix>& phi, const std::vector<Matrix>& involutions) {
  if (phi.empty()) return std::nullopt;
  std::vector<Matrix> sorted = phi;
  std::sort(sorted.begin(), sorted.end());
  const auto in_phi = [&](const Matrix& x) { return std::binary_search(sorted.begin(), sorted.end(), x); };

  for (const auto& u : phi)
    for (const auto& v : phi)
      for (const auto& w : phi) {
        const Matrix x = u * v * w;
        if (x != w * v * u) return Violation{1, {u, v, w}, "uvw != wvu"};
        if (!in_phi(x)) return Violation{1, {u, v, w}, "uvw outside the set"};
      }

  for (const auto& u : phi)
    for (const auto& v : phi) {
      std::size_t count = 0;
      for (const auto& w : phi) {
        if (w * v * w == u) ++count;
      }
      if (count != 1) return Violation{2, {u, v}, std::to_string(count) + " solutions of wvw = u"};
    }

  for (const auto& u : involutions) {
    std::vector<Matrix> left;
    std::vector<Matrix> right;
    bool commutes = false;
    for (const auto& w : phi) {
      left.push_back(u * w);
      right.push_back(w * u);
      commutes = commutes || commute(u, w);
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    const bool normalizes = left == right;
    if (normalizes != commutes) {
      return Violation{3, {u}, normalizes ? "normalizes without a commuting member" : "commuting member but uS != Su"};
    }
  }

  const Matrix one = Matrix::identity(phi[0].domain(), phi[0].dim());
  for (const auto& u : phi)
    for (const auto& v : phi) {
      const Matrix m = u * v - one;
      if (!(m * m).is_zero()) return Violation{4, {u, v}, "(uv - 1)^2 != 0"};
    }
  return std::nullopt;
}

bool MaximalityReport::holds() const {
  return forward && std::all_of(violations.begin(), violations.end(), [](const auto& v) { return v.has_value(); });
}

MaximalityReport maximality_check(const DeltaSet& d) {
  MaximalityReport out;
  const std::vector<Matrix> members = d.members();
  const std::vector<Matrix> involutions = enumerate_involutions(d.domain(), d.dim());
  out.forward = !first_violation(members, involutions).has_value();
  for (const auto& v : involutions) {
    if (std::binary_search(members.begin(), members.end(), v)) continue;
    std::vector<Matrix> extended = members;
    extended.push_back(v);
    out.outsiders.push_back(v);
    out.violations.push_back(first_violation(extended, involutions));
  }
  out.outside = out.outsiders.size();
  return out;
}

Lemma28 lemma_2_8_check(const Matrix& u, const std::vector<Matrix>& b) {
  if (!is_involution(u)) throw PreconditionError("lemma_2_8_check: u is not an involution");
  const auto& d = u.domain();
  const std::size_t n = u.dim();
  Subspace a = Subspace::full(d, n);
  for (const auto& x : b) a = a.intersect(kernel(x));
  Lemma28 out{RightIdeal(a)};
  out.hypothesis = true;
  for (const auto& v : enumerate_involutions(d, n)) {
    if (commute(u, v) && !(a.image(v) == a)) {
      out.hypothesis = false;
      break;
    }
  }
  const PlusMinus pm = plus_minus_space(u);
  out.conclusion = out.a.is_zero() || out.a.is_full() || out.a == pm.plus || out.a == pm.minus;
  return out;
}

}  // namespace idemgeo
