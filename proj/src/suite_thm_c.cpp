#include "idemgeo/centralizers.hpp"
#include "idemgeo/class_two.hpp"
#include "suite.hpp"

namespace idemgeo::suite {
namespace {

Outcome check_decision(const Matrix& s, Mode mode) {
  Outcome o;
  const TheoremC c = theorem_c_decide(s, mode);
  const bool expected = is_class_two(s);
  if (expected) o.count("class_two");
  o.expect(c.verdict == expected, expected ? "class-2 element rejected" : "non-class-2 element accepted", {{"s", &s}});
  if (!o.ok) o.witness["decision"] = theorem_c_to_json(c);
  o.record = Json{{"s", matrix_to_json(s)}, {"class2", expected}, {"decision", theorem_c_to_json(c)}};
  if (c.verdict) {
    const Matrix& u = *c.u;
    const Matrix& r = *c.r;
    o.expect(is_involution(u) && u * s * u == inverse(s), "u is not an inverting involution", {{"s", &s}, {"u", &u}});
    o.expect(r * s * inverse(r) == s * s, "r s r^-1 != s^2", {{"s", &s}, {"r", &r}});
  }
  return o;
}

/// Mixed rational sample: half class 2, the rest invertibles and near misses.
Matrix sample_s(Sampler& sm) {
  const ScalarDomain& d = sm.domain();
  const std::size_t n = sm.dim();
  const Matrix one = Matrix::identity(d, n);
  switch (sm.rng().below(8)) {
    case 0:
    case 1:
    case 2:
    case 3: return one + sm.square_zero_nilpotent();
    case 4: {
      Matrix u = sm.involution();
      while (u == one) u = sm.involution();
      return u;
    }
    case 5: return -one + sm.square_zero_nilpotent();
    case 6: return scalar_matrix(d, n, 2) + sm.square_zero_nilpotent();
    default: {
      Matrix t = sm.invertible();
      while (t == one) t = sm.invertible();
      return t;
    }
  }
}

}  // namespace

void theorem_c(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  const ScalarDomain& d = cfg.domain;
  const std::size_t n = cfg.dim;
  const bool exhaustive = *cfg.mode == RunMode::exhaustive;

  if (!cfg.s.empty()) {
    const Matrix s = parse_s(cfg);
    if (s.is_identity() || !is_invertible(s)) throw ConfigError("--s must be invertible and different from 1");
    run_section(ctx, "single", 1, [&](std::size_t) {
      return check_decision(s, exhaustive ? Mode::exhaustive : Mode::structural);
    });
    ctx.report.result = Json{{"s", matrix_to_json(s)}, {"class_two", is_class_two(s)}};
    return;
  }

  if (exhaustive) {
    const GroupTable& table = GroupTable::get(d, n);
    std::vector<std::size_t> elements;
    for (std::size_t i = 0; i < table.size(); ++i)
      if (!table.element(i).is_identity()) elements.push_back(i);
    run_section(ctx, "exhaustive decision", elements.size(),
                [&](std::size_t i) { return check_decision(table.element(elements[i]), Mode::exhaustive); });
    run_section(ctx, "structural decision", elements.size(),
                [&](std::size_t i) { return check_decision(table.element(elements[i]), Mode::structural); });
    return;
  }

  if (n < 2) throw ConfigError("sampled thmC needs dim >= 2");
  run_section(ctx, "structural decision", cfg.samples, [&](std::size_t i) {
    Sampler sm(d, n, ctx.rng("thmC", i));
    return check_decision(sample_s(sm), Mode::structural);
  });
}

}  // namespace idemgeo::suite
