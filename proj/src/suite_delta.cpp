#include <algorithm>

#include "idemgeo/delta_sets.hpp"
#include "suite.hpp"

namespace idemgeo::suite {
namespace {

/// Properties (1), (2) and (4) on every tuple of a finite Delta-set.
Outcome check_forward(const DeltaSet& d, const std::vector<Matrix>& members, const std::vector<Matrix>& involutions) {
  Outcome o;
  if (const auto v = first_violation(members, involutions)) {
    o.ok = false;
    o.detail = "property (" + std::to_string(v->property) + "): " + v->detail;
    for (std::size_t i = 0; i < v->witness.size(); ++i) o.witness["m" + std::to_string(i)] = matrix_to_json(v->witness[i]);
    return o;
  }
  for (const auto& u : members)
    for (const auto& v : members) {
      for (const auto& w : members) {
        o.count("triples");
        o.expect(property_a(u, v, w, d), "property (1) fails", {{"u", &u}, {"v", &v}, {"w", &w}});
      }
      o.count("pairs");
      const Matrix w = property_b_solve(u, v, d);
      o.expect(property_b_solution_count(u, v, d) == 1, "wvw = u has no unique solution", {{"u", &u}, {"v", &v}});
      o.expect(w * v * w == u, "(u + v)/2 does not solve wvw = u", {{"u", &u}, {"v", &v}});
      o.expect(property_d_square(u, v, d), "(uv - 1)^2 != 0", {{"u", &u}, {"v", &v}});
    }
  return o;
}

Json violation_to_json(const Violation& v) {
  Json w = Json::array();
  for (const auto& m : v.witness) w.push_back(matrix_to_json(m));
  return Json{{"property", v.property}, {"detail", v.detail}, {"witness", std::move(w)}};
}

/// An involution commuting with w: random signs on an eigenbasis of w.
Matrix commuting_involution(const Matrix& w, Sampler& sm) {
  const PlusMinus pm = plus_minus_space(w);
  std::vector<Vector> cols = pm.plus.basis();
  cols.insert(cols.end(), pm.minus.basis().begin(), pm.minus.basis().end());
  std::vector<Scalar> signs;
  for (std::size_t i = 0; i < cols.size(); ++i) signs.push_back(sm.domain().from_int(sm.rng().below(2) ? 1 : -1));
  const Matrix p = Matrix::from_columns(sm.domain(), cols);
  return p * Matrix::diagonal(sm.domain(), signs) * inverse(p);
}

/// Properties (1) and (4) on S + {v}, membership decided against D + {v}.
std::optional<int> sampled_violation(const std::vector<Matrix>& sample, const Matrix& v, const DeltaSet& d) {
  std::vector<Matrix> phi = sample;
  phi.push_back(v);
  const Matrix one = Matrix::identity(v.domain(), v.dim());
  for (const auto& a : phi)
    for (const auto& b : phi) {
      const Matrix m = a * b - one;
      if (!(m * m).is_zero()) return 4;
    }
  for (const auto& a : phi)
    for (const auto& b : phi)
      for (const auto& c : phi) {
        const Matrix y = a * b * c;
        if (y != c * b * a) return 1;
        if (y != v && !d.contains(y)) return 1;
      }
  return std::nullopt;
}

}  // namespace

void delta_b(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  const ScalarDomain& dom = cfg.domain;
  const std::size_t n = cfg.dim;

  if (*cfg.mode == RunMode::exhaustive) {
    const auto labels = delta_set_labels(dom, n);
    const auto involutions = enumerate_involutions(dom, n);
    std::vector<std::vector<Matrix>> members;
    for (const auto& l : labels) members.push_back(l.members());

    run_section(ctx, "forward", labels.size(),
                [&](std::size_t i) { return check_forward(labels[i], members[i], involutions); });

    run_section(ctx, "maximality", labels.size(), [&](std::size_t i) {
      Outcome o;
      const MaximalityReport m = maximality_check(labels[i]);
      o.count("outsiders", m.outside);
      Json viol = Json::array();
      for (std::size_t k = 0; k < m.outsiders.size(); ++k) {
        Json entry{{"v", matrix_to_json(m.outsiders[k])}};
        if (m.violations[k]) {
          entry["violation"] = violation_to_json(*m.violations[k]);
          o.count("property_" + std::to_string(m.violations[k]->property));
        }
        viol.push_back(std::move(entry));
        o.expect(m.violations[k].has_value(), "adjoining an outside involution keeps (1)-(4)",
                 {{"v", &m.outsiders[k]}});
      }
      o.expect(m.forward, "the set itself violates (1)-(4)");
      o.record = Json{{"delta", delta_to_json(labels[i])},
                      {"label", labels[i].to_string()},
                      {"size", members[i].size()},
                      {"outside", m.outside},
                      {"maximal", m.holds()},
                      {"violations", std::move(viol)}};
      return o;
    });

    run_section(ctx, "recovery", labels.size(), [&](std::size_t i) {
      Outcome o;
      if (labels[i].is_trivial()) return o;
      const auto& m = members[i];
      o.count("nontrivial");
      const RightIdeal got = fixed_space_of_square(m);
      o.expect(got == labels[i].ideal(), "I+(phi^2) != eN for the whole set", {{"member", &m[0]}});
      for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = a + 1; b < m.size(); ++b) {
          o.count("pairs");
          o.expect(fixed_space_of_square({m[a], m[b]}) == labels[i].ideal(), "two-member subset misses eN",
                   {{"u", &m[a]}, {"v", &m[b]}});
        }
      return o;
    });

    run_section(ctx, "normalizer", labels.size() * involutions.size(), [&](std::size_t i) {
      Outcome o;
      const DeltaSet& d = labels[i / involutions.size()];
      const auto& m = members[i / involutions.size()];
      const Matrix& u = involutions[i % involutions.size()];
      const NormalizerCheck ex = property_c_normalizer(u, d, Mode::exhaustive);
      const NormalizerCheck st = property_c_normalizer(u, d, Mode::structural);
      if (ex.lhs) o.count("normalizing");
      o.expect(ex.lhs == ex.rhs, "uD = Du disagrees with a commuting member", {{"u", &u}});
      o.expect(st.lhs == ex.lhs && st.rhs == ex.rhs, "structural and exhaustive normalizer disagree", {{"u", &u}});
      const bool conj = std::any_of(m.begin(), m.end(), [&](const Matrix& w) { return w * u * w == u; });
      o.expect(conj == ex.rhs, "wuw = u and uw = wu disagree", {{"u", &u}});
      return o;
    });

    const auto all = enumerate_all(dom, n, [](const Matrix&) { return true; });
    run_section(ctx, "common-kernel invariance", involutions.size(), [&](std::size_t i) {
      Outcome o;
      const Matrix& u = involutions[i];
      const auto check = [&](const std::vector<Matrix>& b) {
        const Lemma28 l = lemma_2_8_check(u, b);
        if (l.hypothesis) o.count("hypothesis");
        if (!l.holds()) {
          o.expect(false, "invariant A outside {0, I+(u), I-(u), N}", {{"u", &u}});
          o.witness["A"] = ideal_to_json(l.a);
        }
      };
      check({});
      for (const auto& b : all) check({b});
      return o;
    });
    return;
  }

  if (n < 2) throw ConfigError("sampled deltaB needs dim >= 2");
  constexpr std::size_t kDeltaSets = 10;
  std::vector<DeltaSet> deltas;
  for (std::size_t j = 0; j < kDeltaSets; ++j) {
    Sampler sm(dom, n, ctx.rng("delta", j));
    const std::size_t r = sm.rng().below(n + 1);
    const Matrix e = sm.idempotent(r);
    deltas.push_back(sm.rng().below(2) ? DeltaSet::minus(e) : DeltaSet::plus(e));
  }

  run_section(ctx, "forward (sampled tuples)", kDeltaSets * cfg.t_samples, [&](std::size_t i) {
    Outcome o;
    const DeltaSet& d = deltas[i / cfg.t_samples];
    Sampler sm(dom, n, ctx.rng("tuple", i));
    const Matrix u = d.sample_member(sm);
    const Matrix v = d.sample_member(sm);
    const Matrix w = d.sample_member(sm);
    o.expect(property_a(u, v, w, d), "property (1) fails", {{"u", &u}, {"v", &v}, {"w", &w}});
    const Matrix x = property_b_solve(u, v, d);
    o.expect(x * v * x == u && d.contains(x), "(u + v)/2 does not solve wvw = u in D", {{"u", &u}, {"v", &v}});
    o.expect(property_d_square(u, v, d), "(uv - 1)^2 != 0", {{"u", &u}, {"v", &v}});

    const Matrix y = sm.involution();
    const NormalizerCheck random = property_c_normalizer(y, d, Mode::structural);
    o.expect(random.lhs == random.rhs, "normalizer criterion disagrees", {{"u", &y}});
    const Matrix z = commuting_involution(w, sm);
    const NormalizerCheck near = property_c_normalizer(z, d, Mode::structural);
    o.expect(near.lhs && near.rhs, "involution commuting with a member does not normalize", {{"u", &z}, {"w", &w}});
    if (random.lhs) o.count("random_normalizing");
    return o;
  });

  run_section(ctx, "maximality (sampled)", kDeltaSets * cfg.samples, [&](std::size_t i) {
    Outcome o;
    const DeltaSet& d = deltas[i / cfg.samples];
    Sampler sm(dom, n, ctx.rng("outside", i));
    Matrix v = sm.involution();
    while (d.contains(v)) v = sm.involution();
    const std::vector<Matrix> sample{d.representative(), d.sample_member(sm), d.sample_member(sm)};
    const auto hit = sampled_violation(sample, v, d);
    if (hit) o.count("property_" + std::to_string(*hit));
    o.expect(hit.has_value(), "no violation found after adjoining an outside involution", {{"v", &v}});
    return o;
  });

  run_section(ctx, "recovery (two members)", cfg.samples, [&](std::size_t i) {
    Outcome o;
    Sampler sm(dom, n, ctx.rng("recovery", i));
    const std::size_t r = 1 + sm.rng().below(n - 1);
    const Matrix e = sm.idempotent(r);
    const DeltaSet d = DeltaSet::plus(e);
    const Matrix u = d.sample_member(sm);
    Matrix v = d.sample_member(sm);
    while (v == u) v = d.sample_member(sm);
    const Matrix w = d.sample_member(sm);
    o.count("rank_" + std::to_string(r));
    if (fixed_space_of_square({u, v, w}) == d.ideal()) o.count("three_members_recovered");
    o.expect(fixed_space_of_square({u, v}) == d.ideal(), "I+({u,v}^2) != col(e)", {{"e", &e}, {"u", &u}, {"v", &v}});
    return o;
  });
}

}  // namespace idemgeo::suite
