#include <algorithm>

#include "idemgeo/centralizers.hpp"
#include "idemgeo/class_two.hpp"
#include "idemgeo/delta_sets.hpp"
#include "idemgeo/transport.hpp"
#include "suite.hpp"

namespace idemgeo::suite {
namespace {

/// Basis of xNy = {m : (1-x)m = 0 = m(1-y)} for idempotents x, y.
std::vector<Matrix> corner_basis(const Matrix& x, const Matrix& y) {
  const Matrix one = Matrix::identity(x.domain(), x.dim());
  return solve_homogeneous(unit_basis(x.domain(), x.dim()),
                           [&](const Matrix& m) { return std::vector<Matrix>{(one - x) * m, m * (one - y)}; });
}

/// True iff a -> {a b : b in right} (or {b a} when `left`) is injective on span(domain_basis).
bool annihilation_free(const std::vector<Matrix>& domain_basis, const std::vector<Matrix>& others, bool left) {
  if (domain_basis.empty()) return true;
  const auto kernel = solve_homogeneous(domain_basis, [&](const Matrix& a) {
    std::vector<Matrix> out;
    for (const auto& b : others) out.push_back(left ? b * a : a * b);
    return out;
  });
  return kernel.empty();
}

Matrix entrywise(const Matrix& x, Scalar (*f)(const Scalar&)) {
  Matrix out = x;
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) out(i, j) = f(x(i, j));
  return out;
}

Outcome check_halves(const Matrix& x) {
  Outcome o;
  const Matrix h = entrywise(x, halve);
  const Matrix t = entrywise(x, third);
  o.expect(h + h == x, "x/2 + x/2 != x", {{"x", &x}, {"half", &h}});
  o.expect(t + t + t == x, "3 (x/3) != x", {{"x", &x}, {"third", &t}});
  return o;
}

Outcome check_split(const Matrix& n) {
  Outcome o;
  const NilpotentFrame fr = nilpotent_frame(n);
  const Matrix& e = fr.e();
  const Matrix& f = fr.g();
  o.expect(is_idempotent(e) && is_idempotent(f), "e or f not idempotent", {{"n", &n}, {"e", &e}, {"f", &f}});
  o.expect(e * n * f == n, "n != enf", {{"n", &n}, {"e", &e}, {"f", &f}});
  o.expect((f * e).is_zero(), "fe != 0", {{"n", &n}, {"e", &e}, {"f", &f}});
  return o;
}

Outcome check_frame(const Matrix& n) {
  Outcome o;
  const NilpotentFrame fr = nilpotent_frame(n);
  const Matrix &e = fr.e(), &g = fr.g(), &k = fr.k();
  const std::initializer_list<std::pair<const char*, const Matrix*>> w{{"n", &n}, {"e", &e}, {"g", &g}, {"k", &k}};
  o.expect(is_idempotent(e) && is_idempotent(g), "e or g not idempotent", w);
  o.expect(e * n * g == n, "n != eng", w);
  o.expect((g * e).is_zero() && (e * g).is_zero(), "eg or ge nonzero", w);
  o.expect(n * k == e, "nk != e", w);
  o.expect(k * n == g, "kn != g", w);
  return o;
}

/// C^2(2e-1) inside span{e, 1-e}, from a linear basis of C^2(u) (rational) or the group table (finite).
Outcome check_second_centralizer_of_involution(const Matrix& e, bool exhaustive) {
  Outcome o;
  const Matrix one = Matrix::identity(e.domain(), e.dim());
  const Matrix u = iota(e);
  std::vector<Matrix> span{e, one - e};
  std::erase_if(span, [](const Matrix& m) { return m.is_zero(); });
  if (exhaustive) {
    const GroupTable& table = GroupTable::get(e.domain(), e.dim());
    const IndexSet c2 = table.second_centralizer(table.index_of(u));
    for (std::size_t i = 0; i < table.size() && o.ok; ++i) {
      if (!c2.test(i)) continue;
      o.expect(coordinates(span, table.element(i)).has_value(), "element of C2(u) outside span{e, 1-e}",
               {{"e", &e}, {"r", &table.element(i)}});
      o.count("c2_elements");
    }
  } else {
    for (const auto& d : double_commutant_basis(u).basis)
      o.expect(coordinates(span, d).has_value(), "double commutant element outside span{e, 1-e}",
               {{"e", &e}, {"d", &d}});
  }
  return o;
}

/// Units of eNe commuting with eNe are central. Finite mode tests the literal statement over GL(eNe).
Outcome check_corner_center(const Matrix& e, bool exhaustive) {
  Outcome o;
  if (exhaustive) {
    std::vector<Matrix> corner;
    for_each_matrix(e.domain(), e.dim(), [&](const Matrix& m) {
      corner.push_back(e * m * e);
      return true;
    });
    std::sort(corner.begin(), corner.end());
    corner.erase(std::unique(corner.begin(), corner.end()), corner.end());
    std::vector<Matrix> units;
    for (const auto& x : corner)
      for (const auto& y : corner)
        if (x * y == e && y * x == e) {
          units.push_back(x);
          break;
        }
    std::vector<Matrix> multiples;
    for (std::uint64_t c = 0; c < e.domain().modulus(); ++c) multiples.push_back(e.domain().element(c) * e);
    for (const auto& d : corner) {
      const bool central = std::all_of(units.begin(), units.end(), [&](const Matrix& x) { return commute(d, x); });
      if (!central) continue;
      o.count("central_in_corner");
      o.expect(std::find(multiples.begin(), multiples.end(), d) != multiples.end(),
               "d commutes with GL(eNe) but is not a multiple of e", {{"e", &e}, {"d", &d}});
    }
  } else {
    // Units of eNe span eNe, so commuting with GL(eNe) is commuting with a basis of eNe.
    const auto basis = corner_basis(e, e);
    const auto centre = solve_homogeneous(basis, [&](const Matrix& d) {
      std::vector<Matrix> out;
      for (const auto& b : basis) out.push_back(d * b - b * d);
      return out;
    });
    const std::size_t expected = e.is_zero() ? 0 : 1;
    o.expect(centre.size() == expected, "centre of eNe has the wrong dimension", {{"e", &e}});
    if (!centre.empty()) o.expect(coordinates({e}, centre[0]).has_value(), "centre of eNe is not Fe", {{"e", &e}});
  }
  return o;
}

Outcome check_corner_nondegenerate(const Matrix& n) {
  Outcome o;
  const NilpotentFrame fr = nilpotent_frame(n);
  const Matrix& e = fr.e();
  const Matrix& g = fr.g();
  const Matrix f = fr.f();
  const auto enf = corner_basis(e, f);
  const auto fnf = corner_basis(f, f);
  const auto fng = corner_basis(f, g);
  o.expect(annihilation_free(enf, fng, false), "a3 (fNg) = 0 with a3 != 0", {{"n", &n}});
  o.expect(annihilation_free(fnf, fng, false), "a4 (fNg) = 0 with a4 != 0", {{"n", &n}});
  o.expect(annihilation_free(fng, enf, true), "(eNf) a5 = 0 with a5 != 0", {{"n", &n}});
  return o;
}

Outcome check_central_root(const Matrix& t, bool central) {
  Outcome o;
  const auto& d = t.domain();
  const std::size_t n = t.dim();
  const Matrix two = scalar_matrix(d, n, 2);
  const Matrix minus_one = scalar_matrix(d, n, -1);
  if (!((t - two) * (t - minus_one)).is_zero()) throw InvariantViolation("sampled t is not a root of (x-2)(x+1)");
  if (!central) return o;
  o.count("central");
  o.expect(t == two || t == minus_one, "central root of (x-2)(x+1) other than 2, -1", {{"t", &t}});
  return o;
}

Outcome check_nondegenerate_pair(const Matrix& y, const Matrix& x) {
  Outcome o;
  bool found = false;
  for (std::size_t i = 0; i < y.dim() && !found; ++i)
    for (std::size_t j = 0; j < y.dim() && !found; ++j)
      found = !(y * Matrix::unit(y.domain(), y.dim(), i, j) * x).is_zero();
  o.expect(found, "yNx = 0 for nonzero y, x", {{"y", &y}, {"x", &x}});
  return o;
}

Outcome check_similar_to_projection(const Matrix& e) {
  Outcome o;
  const ProjectionSimilarity ps = similarity_to_projection(e);
  const Matrix& p = ps.p;
  const Matrix& u = ps.u;
  o.expect(is_idempotent(p) && p == p.transpose(), "p is not a projection", {{"e", &e}, {"p", &p}});
  o.expect(is_invertible(u) && u * e * inverse(u) == p, "u e u^-1 != p", {{"e", &e}, {"u", &u}, {"p", &p}});
  return o;
}

Outcome check_iota(const Matrix& e) {
  Outcome o;
  const Matrix one = Matrix::identity(e.domain(), e.dim());
  const Matrix u = iota(e);
  o.expect(is_involution(u), "2e - 1 is not an involution", {{"e", &e}});
  const PlusMinus pm = plus_minus_space(u);
  o.expect(pm.plus == RightIdeal::of(e), "I+(2e-1) != eN", {{"e", &e}});
  o.expect(pm.minus == RightIdeal::of(one - e), "I-(2e-1) != (1-e)N", {{"e", &e}});
  o.expect(iota_inv(u) == e, "iota_inv(iota(e)) != e", {{"e", &e}});
  return o;
}

Outcome check_eigen_split(const Matrix& u) {
  Outcome o;
  const PlusMinus pm = plus_minus_space(u);
  o.expect(pm.plus.space().sum(pm.minus.space()).is_full(), "I+(u) + I-(u) != N", {{"u", &u}});
  o.expect(pm.plus.space().intersect(pm.minus.space()).is_zero(), "I+(u) cap I-(u) != 0", {{"u", &u}});
  return o;
}

Outcome check_rigidity(const Matrix& u, const Matrix& v) {
  Outcome o;
  const bool same = plus_minus_space(u) == plus_minus_space(v);
  if (same) o.count("same_spaces");
  o.expect(!same || u == v, "equal I+/I- for distinct involutions", {{"u", &u}, {"v", &v}});
  o.expect(involution_rigidity(u, v), "involution_rigidity disagrees", {{"u", &u}, {"v", &v}});
  return o;
}

Outcome check_class_parameterization(const Matrix& e, const Matrix& f) {
  Outcome o;
  const bool same = same_right_ideal(e, f);
  const bool offset = coordinates(offdiagonal_basis(e), f - e).has_value();
  if (same) o.count("same_class");
  o.expect(same == offset, "eN = fN disagrees with f - e in eN(1-e)", {{"e", &e}, {"f", &f}});
  if (same) o.expect(e * f == f && f * e == e, "eN = fN without ef = f, fe = e", {{"e", &e}, {"f", &f}});
  return o;
}

std::vector<IsoSpec> minus_one_catalog(const ScalarDomain& d, std::size_t n, Sampler& sampler) {
  const IsoSpec ti = IsoSpec::transpose_inverse(d, n);
  const IsoSpec inner = IsoSpec::inner(sampler.invertible());
  std::vector<IsoSpec> out{IsoSpec::identity(d, n), ti, inner, ti.then(inner)};
  if (d.is_finite()) out.push_back(IsoSpec::field_automorphism(d, n, 1));
  return out;
}

}  // namespace

void axioms(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  const ScalarDomain& d = cfg.domain;
  const std::size_t n = cfg.dim;
  const bool exhaustive = *cfg.mode == RunMode::exhaustive;
  const Matrix one = Matrix::identity(d, n);

  if (exhaustive) {
    const auto all = enumerate_all(d, n, [](const Matrix&) { return true; });
    const auto nonzero = enumerate_all(d, n, [](const Matrix& m) { return !m.is_zero(); });
    const auto square_zero = enumerate_all(d, n, [](const Matrix& m) { return !m.is_zero() && (m * m).is_zero(); });
    const auto idem = enumerate_idempotents(d, n);
    const auto inv = enumerate_involutions(d, n);
    const Matrix two = scalar_matrix(d, n, 2);
    const Matrix m1 = scalar_matrix(d, n, -1);
    const auto roots = enumerate_all(d, n, [&](const Matrix& t) { return ((t - two) * (t - m1)).is_zero(); });
    const GroupTable& table = GroupTable::get(d, n);

    run_section(ctx, "halves and thirds", all.size(), [&](std::size_t i) { return check_halves(all[i]); });
    run_section(ctx, "split of square-zero n", square_zero.size(),
                [&](std::size_t i) { return check_split(square_zero[i]); });
    run_section(ctx, "nilpotent frame", square_zero.size(),
                [&](std::size_t i) { return check_frame(square_zero[i]); });
    run_section(ctx, "C2(2e-1) in span{e, 1-e}", idem.size(),
                [&](std::size_t i) { return check_second_centralizer_of_involution(idem[i], true); });
    run_section(ctx, "centre of eNe", idem.size(),
                [&](std::size_t i) { return check_corner_center(idem[i], true); });
    run_section(ctx, "frame corners", square_zero.size(),
                [&](std::size_t i) { return check_corner_nondegenerate(square_zero[i]); });
    run_section(ctx, "central roots of (t-2)(t+1)", roots.size(), [&](std::size_t i) {
      const Matrix& t = roots[i];
      const bool central =
          std::all_of(table.elements().begin(), table.elements().end(), [&](const Matrix& g) { return commute(t, g); });
      return check_central_root(t, central);
    });
    run_section(ctx, "yNx nonzero", nonzero.size(), [&](std::size_t i) {
      Outcome o;
      for (const auto& x : nonzero) {
        Outcome one_pair = check_nondegenerate_pair(nonzero[i], x);
        if (!one_pair.ok) return one_pair;
      }
      return o;
    });
    run_section(ctx, "similar to a projection", idem.size(),
                [&](std::size_t i) { return check_similar_to_projection(idem[i]); });
    run_section(ctx, "iota bijection", idem.size(), [&](std::size_t i) { return check_iota(idem[i]); });
    run_section(ctx, "I+ and I- complementary", inv.size(),
                [&](std::size_t i) { return check_eigen_split(inv[i]); });
    run_section(ctx, "involution rigidity", inv.size() * inv.size(),
                [&](std::size_t i) { return check_rigidity(inv[i / inv.size()], inv[i % inv.size()]); });
    run_section(ctx, "class parameterization", idem.size() * idem.size(), [&](std::size_t i) {
      return check_class_parameterization(idem[i / idem.size()], idem[i % idem.size()]);
    });

    const auto labels = delta_set_labels(d, n);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = 0; b < labels.size(); ++b)
        if (labels[a].sign() == Sign::plus && labels[b].sign() == Sign::minus) pairs.emplace_back(a, b);
    std::vector<std::vector<Matrix>> members;
    for (const auto& l : labels) members.push_back(l.members());
    run_section(ctx, "sets both plus and minus", pairs.size(), [&](std::size_t i) {
      Outcome o;
      const auto& [a, b] = pairs[i];
      if (members[a] != members[b]) return o;
      o.count("coincide");
      const auto& m = members[a];
      const bool trivial = m.size() == 1 && (m[0] == one || m[0] == -one);
      o.expect(trivial, "nontrivial set is both a plus and a minus set", {{"member", &m[0]}});
      return o;
    });
  } else {
    const std::size_t k = cfg.samples;
    auto sampler = [&](std::string_view section, std::size_t i) { return Sampler(d, n, ctx.rng(section, i)); };

    run_section(ctx, "halves and thirds", k, [&](std::size_t i) {
      auto s = sampler("halves", i);
      return check_halves(s.box_matrix());
    });
    run_section(ctx, "split of square-zero n", k, [&](std::size_t i) {
      auto s = sampler("split", i);
      return check_split(s.square_zero_nilpotent());
    });
    run_section(ctx, "nilpotent frame", k, [&](std::size_t i) {
      auto s = sampler("frame", i);
      return check_frame(s.square_zero_nilpotent());
    });
    run_section(ctx, "C2(2e-1) in span{e, 1-e}", k, [&](std::size_t i) {
      auto s = sampler("c2inv", i);
      return check_second_centralizer_of_involution(s.idempotent(), false);
    });
    run_section(ctx, "centre of eNe", k, [&](std::size_t i) {
      auto s = sampler("corner", i);
      return check_corner_center(s.idempotent(), false);
    });
    run_section(ctx, "frame corners", k, [&](std::size_t i) {
      auto s = sampler("corners", i);
      return check_corner_nondegenerate(s.square_zero_nilpotent());
    });
    run_section(ctx, "central roots of (t-2)(t+1)", k, [&](std::size_t i) {
      auto s = sampler("roots", i);
      const Matrix e = s.idempotent();
      const Matrix t = d.from_int(3) * e - one;
      return check_central_root(t, is_central(t));
    });
    run_section(ctx, "yNx nonzero", k, [&](std::size_t i) {
      auto s = sampler("nondegenerate", i);
      Matrix y = s.box_matrix();
      Matrix x = s.box_matrix();
      while (y.is_zero()) y = s.box_matrix();
      while (x.is_zero()) x = s.box_matrix();
      return check_nondegenerate_pair(y, x);
    });
    run_section(ctx, "similar to a projection", k, [&](std::size_t i) {
      auto s = sampler("projection", i);
      return check_similar_to_projection(s.idempotent());
    });
    run_section(ctx, "iota bijection", k, [&](std::size_t i) {
      auto s = sampler("iota", i);
      return check_iota(s.idempotent());
    });
    run_section(ctx, "I+ and I- complementary", k, [&](std::size_t i) {
      auto s = sampler("eigen", i);
      return check_eigen_split(s.involution());
    });
    run_section(ctx, "involution rigidity", k, [&](std::size_t i) {
      auto s = sampler("rigidity", i);
      const Matrix u = s.involution();
      // Rebuild u from its two spaces, then compare with an unrelated involution.
      const PlusMinus pm = plus_minus_space(u);
      const Matrix rebuilt = iota(projection(pm.plus.space(), pm.minus.space()));
      Outcome o = check_rigidity(u, rebuilt);
      if (o.ok) o = check_rigidity(u, s.involution());
      return o;
    });
    run_section(ctx, "class parameterization", k, [&](std::size_t i) {
      auto s = sampler("class", i);
      const Matrix e = s.idempotent();
      Outcome o = check_class_parameterization(e, sample_class_member(e, s));
      if (o.ok) o = check_class_parameterization(e, s.idempotent(rank(e)));
      return o;
    });
    run_section(ctx, "sets both plus and minus", k, [&](std::size_t i) {
      Outcome o;
      if (n < 2) return o;
      auto s = sampler("plusminus", i);
      const std::size_t r = 1 + s.rng().below(n - 1);
      const Matrix e = s.idempotent(r);
      const Matrix u = iota(e);
      const Matrix v = iota(e + offdiagonal_basis(e).front());
      // Two members of the plus set with different I- cannot share a minus set.
      o.expect(plus_minus_space(u).minus != plus_minus_space(v).minus, "distinct members share I-",
               {{"u", &u}, {"v", &v}});
      return o;
    });
  }

  const std::size_t iso_cases = exhaustive ? 1 : cfg.samples;
  run_section(ctx, "iso fixes -1", iso_cases, [&](std::size_t i) {
    Outcome o;
    Sampler s(d, n, ctx.rng("minusone", i));
    for (const auto& f : minus_one_catalog(d, n, s)) {
      o.count("isos");
      if (!check_minus_one(f)) {
        o.ok = false;
        o.detail = "F(-1) != -1 for " + f.describe();
        o.witness = iso_to_json(f);
        break;
      }
    }
    return o;
  });
}

}  // namespace idemgeo::suite
