#include "idemgeo/centralizers.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "idemgeo/class_two.hpp"
#include "idemgeo/errors.hpp"
#include "idemgeo/linalg.hpp"
#include "idemgeo/polynomial.hpp"
#include "idemgeo/sampling.hpp"

namespace idemgeo {

std::vector<Matrix> solve_homogeneous(const std::vector<Matrix>& basis,
                                      const std::function<std::vector<Matrix>(const Matrix&)>& ops) {
  if (basis.empty()) return {};
  const auto& d = basis.front().domain();
  const std::size_t n = basis.front().dim();
  const std::size_t m = basis.size();
  // column i holds every entry of ops(basis[i])
  std::vector<Vector> columns;
  for (const auto& b : basis) {
    Vector col;
    for (const auto& image : ops(b)) {
      const auto& entries = image.entries();
      col.insert(col.end(), entries.begin(), entries.end());
    }
    columns.push_back(std::move(col));
  }
  const std::size_t height = columns.front().size();
  std::vector<Vector> rows(height, Vector(m, d.zero()));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t r = 0; r < height; ++r) rows[r][i] = columns[i][r];
  std::vector<Matrix> out;
  for (const auto& c : null_space(rows, m, d)) {
    Matrix x(d, n);
    for (std::size_t i = 0; i < m; ++i) {
      if (!c[i].is_zero()) x += c[i] * basis[i];
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Matrix> unit_basis(const ScalarDomain& domain, std::size_t n) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.push_back(Matrix::unit(domain, n, i, j));
  return out;
}

std::optional<Vector> coordinates(const std::vector<Matrix>& basis, const Matrix& x) {
  const auto& d = x.domain();
  const std::size_t len = x.dim() * x.dim();
  std::vector<Vector> rows(len, Vector(basis.size(), d.zero()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t r = 0; r < len; ++r) rows[r][i] = basis[i].entries()[r];
  return solve_linear(rows, x.entries(), basis.size(), d);
}

CommutantBasis commutant_basis(const Matrix& s) {
  auto basis = solve_homogeneous(unit_basis(s.domain(), s.dim()),
                                 [&](const Matrix& x) { return std::vector<Matrix>{s * x - x * s}; });
  return {s, std::move(basis)};
}

CommutantBasis double_commutant_basis(const Matrix& s) {
  const CommutantBasis c = commutant_basis(s);
  auto basis = solve_homogeneous(unit_basis(s.domain(), s.dim()), [&](const Matrix& y) {
    std::vector<Matrix> out;
    out.reserve(c.basis.size());
    for (const auto& b : c.basis) out.push_back(b * y - y * b);
    return out;
  });
  return {s, std::move(basis)};
}

const char* mode_name(Mode mode) { return mode == Mode::exhaustive ? "exhaustive" : "structural"; }

bool IndexSet::subset_of(const IndexSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

std::size_t IndexSet::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(__builtin_popcountll(w));
  return total;
}

std::uint64_t general_linear_order(std::uint32_t p, std::size_t n) {
  std::uint64_t pn = 1;
  for (std::size_t i = 0; i < n; ++i) pn *= p;
  std::uint64_t order = 1;
  std::uint64_t pi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= pn - pi;
    pi *= p;
  }
  return order;
}

GroupTable::GroupTable(const ScalarDomain& domain, std::size_t n) {
  elements_ = enumerate_invertibles(domain, n);
  const std::size_t size = elements_.size();
  for (std::size_t i = 0; i < size; ++i) index_.emplace(elements_[i].key(), i);
  centralizers_.assign(size, IndexSet(size));
  for (std::size_t i = 0; i < size; ++i) {
    centralizers_[i].set(i);
    for (std::size_t j = i + 1; j < size; ++j) {
      if (commute(elements_[i], elements_[j])) {
        centralizers_[i].set(j);
        centralizers_[j].set(i);
      }
    }
    if (is_involution(elements_[i])) involutions_.push_back(i);
  }
}

const GroupTable& GroupTable::get(const ScalarDomain& domain, std::size_t n) {
  if (!domain.is_finite()) throw PreconditionError("group table needs a prime-field domain");
  if (general_linear_order(domain.modulus(), n) > kGroupTableGuard) {
    throw GuardExceeded("|GL_" + std::to_string(n) + "(" + domain.name() + ")| exceeds the group table guard");
  }
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::size_t>, std::unique_ptr<GroupTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{domain.modulus(), n}];
  if (!slot) slot.reset(new GroupTable(domain, n));
  return *slot;
}

std::size_t GroupTable::index_of(const Matrix& m) const {
  auto it = index_.find(m.key());
  if (it == index_.end()) throw PreconditionError("matrix is not invertible");
  return it->second;
}

IndexSet GroupTable::second_centralizer(std::size_t i) const {
  IndexSet out(size());
  for (std::size_t v = 0; v < size(); ++v) {
    if (centralizers_[i].subset_of(centralizers_[v])) out.set(v);
  }
  return out;
}

bool generated_algebra_is_minimal(const Matrix& s) {
  const auto& d = s.domain();
  if (is_central(s)) return false;
  const Poly m = minimal_polynomial(s);
  const int deg = poly_degree(m);
  if (deg == 2) return true;
  if (deg > 4) throw PreconditionError("structural condition (1) supports minimal polynomials of degree <= 4");
  if (poly_has_root(m, d)) return false;
  if (deg == 3) return true;
  if (!poly_squarefree(m, d)) return false;
  return !poly_has_root(quartic_resolvent(m, d), d);
}

namespace {

ConditionOne condition_one_exhaustive(const Matrix& s) {
  const GroupTable& table = GroupTable::get(s.domain(), s.dim());
  const IndexSet& cs = table.centralizer(table.index_of(s));
  for (std::size_t t = 0; t < table.size(); ++t) {
    const IndexSet& ct = table.centralizer(t);
    const bool proper = cs.subset_of(ct) && !(cs == ct);
    if (proper != table.is_central(t)) return {false, table.element(t)};
  }
  return {true, std::nullopt};
}

ConditionOne condition_one_structural(const Matrix& s) {
  const auto& d = s.domain();
  if (d.is_finite() && s.dim() >= d.modulus()) {
    throw PreconditionError("structural mode over F_p needs n < p");
  }
  return {generated_algebra_is_minimal(s), std::nullopt};
}

// Odometer over coefficient vectors in [-1, 1]^m, stopping after `cap` points.
inline constexpr std::size_t kInvolutionSearchCap = 50'000;

std::optional<Matrix> bounded_involution_search(const Matrix& s, const Matrix& s_inv) {
  const auto& d = s.domain();
  const std::size_t n = s.dim();
  const auto space = solve_homogeneous(unit_basis(d, n), [&](const Matrix& x) {
    return std::vector<Matrix>{x * s - s_inv * x};
  });
  if (space.empty()) return std::nullopt;
  std::vector<int> digits(space.size(), -1);
  for (std::size_t step = 0; step < kInvolutionSearchCap; ++step) {
    Matrix u(d, n);
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (digits[i] != 0) u += d.from_int(digits[i]) * space[i];
    }
    if (is_involution(u)) return u;
    std::size_t k = space.size();
    while (k-- > 0) {
      if (++digits[k] <= 1) break;
      digits[k] = -1;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return std::nullopt;
}

std::optional<Matrix> invertible_in_span(const std::vector<Matrix>& span) {
  if (span.empty()) return std::nullopt;
  for (const auto& r : span) {
    if (is_invertible(r)) return r;
  }
  const auto& d = span.front().domain();
  std::vector<int> digits(span.size(), -2);
  while (true) {
    Matrix r(d, span.front().dim());
    for (std::size_t i = 0; i < span.size(); ++i) {
      if (digits[i] != 0) r += d.from_int(digits[i]) * span[i];
    }
    if (is_invertible(r)) return r;
    std::size_t k = span.size();
    while (k-- > 0) {
      if (++digits[k] <= 2) break;
      digits[k] = -2;
    }
    if (k == static_cast<std::size_t>(-1)) return std::nullopt;
  }
}

TheoremC decide_exhaustive(const Matrix& s, const Matrix& s_inv) {
  TheoremC out;
  out.mode = Mode::exhaustive;
  const GroupTable& table = GroupTable::get(s.domain(), s.dim());
  const ConditionOne c1 = condition_one_exhaustive(s);
  out.conditions[0] = c1.holds;
  out.condition_one_witness = c1.witness;
  const Matrix s2 = s * s;
  for (std::size_t ui : table.involutions()) {
    const Matrix& u = table.element(ui);
    if (u * s * u != s_inv) continue;
    out.conditions[1] = true;
    const IndexSet c2 = table.second_centralizer(ui);
    for (std::size_t ri = 0; ri < table.size(); ++ri) {
      if (!c2.test(ri)) continue;
      const Matrix& r = table.element(ri);
      if (r * s == s2 * r) {
        out.conditions[2] = true;
        out.u = u;
        out.r = r;
        break;
      }
    }
    if (out.conditions[2]) break;
  }
  if (out.conditions[1] && !out.conditions[2]) {
    // report the least u satisfying (2) alone
    for (std::size_t ui : table.involutions()) {
      if (table.element(ui) * s * table.element(ui) == s_inv) {
        out.u = table.element(ui);
        break;
      }
    }
  }
  return out;
}

TheoremC decide_structural(const Matrix& s, const Matrix& s_inv) {
  TheoremC out;
  out.mode = Mode::structural;
  out.conditions[0] = condition_one_structural(s).holds;
  if (is_class_two(s)) {
    out.u = witness_u_r(s).u;
  } else {
    out.u = bounded_involution_search(s, s_inv);
  }
  out.conditions[1] = out.u.has_value();
  if (out.u) {
    const Matrix s2 = s * s;
    const auto span = solve_homogeneous(double_commutant_basis(*out.u).basis, [&](const Matrix& r) {
      return std::vector<Matrix>{r * s - s2 * r};
    });
    out.r = invertible_in_span(span);
    out.conditions[2] = out.r.has_value();
    if (!out.r && !span.empty()) out.note = kBoundedSearchNote;
  } else {
    out.note = kBoundedSearchNote;
  }
  return out;
}

}  // namespace

ConditionOne condition_one(const Matrix& s, Mode mode) {
  if (!is_invertible(s)) throw PreconditionError("condition_one: s is not invertible");
  return mode == Mode::exhaustive ? condition_one_exhaustive(s) : condition_one_structural(s);
}

TheoremC theorem_c_decide(const Matrix& s, Mode mode) {
  const Matrix one = Matrix::identity(s.domain(), s.dim());
  if (s == one) throw PreconditionError("theorem_c_decide: s = 1 is excluded");
  const auto s_inv = try_inverse(s);
  if (!s_inv) throw PreconditionError("theorem_c_decide: s is not invertible");
  TheoremC out = mode == Mode::exhaustive ? decide_exhaustive(s, *s_inv) : decide_structural(s, *s_inv);
  out.conditions[3] = s.pow(3) != one;
  out.verdict = out.conditions[0] && out.conditions[1] && out.conditions[2] && out.conditions[3];
  return out;
}

}  // namespace idemgeo
