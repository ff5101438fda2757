#include "idemgeo/centralizers.hpp"
#include "idemgeo/class_two.hpp"
#include "suite.hpp"

namespace idemgeo::suite {
namespace {

Outcome check_witness(const Matrix& s) {
  Outcome o;
  const ClassTwoWitness w = witness_u_r(s);
  const Matrix one = Matrix::identity(s.domain(), s.dim());
  const Matrix s_inv = inverse(s);
  const std::initializer_list<std::pair<const char*, const Matrix*>> wit{{"s", &s}, {"u", &w.u}, {"r", &w.r}};
  o.expect(w.u * w.u == one, "u^2 != 1", wit);
  o.expect(w.u * s * w.u == s_inv, "usu != s^-1", wit);
  o.expect(w.r * w.r_inverse == one && w.r_inverse * w.r == one, "r_inverse is not the inverse of r", wit);
  o.expect(w.r * s * w.r_inverse == s * s, "rsr^-1 != s^2", wit);
  o.expect(s.pow(3) != one, "s^3 = 1", wit);
  for (const auto& c : commutant_basis(w.u).basis) o.expect(commute(w.r, c), "r does not commute with C(u)", wit);
  return o;
}

/// Block criterion against plain commutation.
void check_block_criterion(Outcome& o, const Matrix& s, const NilpotentFrame& frame, const Matrix& t) {
  const bool form = centralizer_form_check(t, frame);
  const bool commutes = commute(s, t);
  o.count(commutes ? "t_commuting" : "t_not_commuting");
  o.expect(form == commutes, form ? "block form holds but st != ts" : "st = ts but block form fails",
           {{"s", &s}, {"t", &t}});
}

void check_double_commutant(Outcome& o, const Matrix& s) {
  const Matrix n = s - Matrix::identity(s.domain(), s.dim());
  const CommutantBasis dc = double_commutant_basis(s);
  o.expect(dc.dim() == 2, "double commutant is not 2-dimensional", {{"s", &s}});
  for (const auto& basis_element : dc.basis) {
    // The structure map wants an invertible d; shift by a scalar until it is.
    Matrix d = basis_element;
    for (std::int64_t c = 1; !is_invertible(d); ++c) d = basis_element + scalar_matrix(s.domain(), s.dim(), c);
    const auto z = double_centralizer_structure(s, d);
    if (!o.expect(z.has_value(), "double commutant element fails the probes", {{"s", &s}, {"d", &d}})) return;
    const Matrix rebuilt = Matrix::scalar(s.domain(), s.dim(), z->first) + z->second * n;
    o.expect(rebuilt == d, "d != z1 + z2 n", {{"s", &s}, {"d", &d}});
  }
}

}  // namespace

void class_two(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  const ScalarDomain& dom = cfg.domain;
  const std::size_t n = cfg.dim;
  if (n < 2) throw ConfigError("class-2 elements need dim >= 2");

  if (*cfg.mode == RunMode::exhaustive) {
    const GroupTable& table = GroupTable::get(dom, n);
    std::vector<std::size_t> elements;
    for (std::size_t i = 0; i < table.size(); ++i)
      if (is_class_two(table.element(i))) elements.push_back(i);

    run_section(ctx, "witnesses u and r", elements.size(),
                [&](std::size_t i) { return check_witness(table.element(elements[i])); });
    run_section(ctx, "block criterion", elements.size(), [&](std::size_t i) {
      Outcome o;
      const Matrix& s = table.element(elements[i]);
      const NilpotentFrame frame = nilpotent_frame(s - Matrix::identity(dom, n));
      for (const auto& t : table.elements()) check_block_criterion(o, s, frame, t);
      return o;
    });
    run_section(ctx, "double centralizer", elements.size(), [&](std::size_t i) {
      Outcome o;
      const std::size_t idx = elements[i];
      const Matrix& s = table.element(idx);
      const Matrix nil = s - Matrix::identity(dom, n);
      check_double_commutant(o, s);
      // Group level: every d in C2(s) is z1 + z2 n.
      const IndexSet c2 = table.second_centralizer(idx);
      const std::vector<Matrix> span{Matrix::identity(dom, n), nil};
      for (std::size_t j = 0; j < table.size() && o.ok; ++j) {
        if (!c2.test(j)) continue;
        o.count("c2_elements");
        o.expect(coordinates(span, table.element(j)).has_value(), "element of C2(s) outside span{1, n}",
                 {{"s", &s}, {"d", &table.element(j)}});
      }
      return o;
    });
    return;
  }

  run_section(ctx, "witnesses u and r", cfg.samples, [&](std::size_t i) {
    Sampler sm(dom, n, ctx.rng("class2", i));
    const Matrix s = Matrix::identity(dom, n) + sm.square_zero_nilpotent();
    return check_witness(s);
  });
  run_section(ctx, "block criterion", cfg.samples, [&](std::size_t i) {
    Outcome o;
    Sampler sm(dom, n, ctx.rng("class2", i));
    const Matrix s = Matrix::identity(dom, n) + sm.square_zero_nilpotent();
    const NilpotentFrame frame = nilpotent_frame(s - Matrix::identity(dom, n));
    const CommutantBasis c = commutant_basis(s);
    for (std::size_t j = 0; j < cfg.t_samples && o.ok; ++j) {
      // Alternate random invertibles (mostly outside C(s)) with random elements of C(s).
      std::optional<Matrix> t;
      if (j % 2 == 1) {
        for (int attempt = 0; attempt < 8 && !t; ++attempt) {
          Matrix x = Matrix::zero(dom, n);
          for (const auto& b : c.basis) x += dom.from_int(sm.rng().between(-2, 2)) * b;
          if (is_invertible(x)) t = std::move(x);
        }
      }
      if (!t) t = sm.invertible();
      check_block_criterion(o, s, frame, *t);
    }
    return o;
  });
  run_section(ctx, "double centralizer", cfg.samples, [&](std::size_t i) {
    Outcome o;
    Sampler sm(dom, n, ctx.rng("class2", i));
    check_double_commutant(o, Matrix::identity(dom, n) + sm.square_zero_nilpotent());
    return o;
  });
}

}  // namespace idemgeo::suite
