#include "idemgeo/centralizers.hpp"
#include "idemgeo/class_two.hpp"
#include "idemgeo/delta_sets.hpp"
#include "suite.hpp"

namespace idemgeo::suite {
namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Number of k-dimensional subspaces of F_p^n.
std::uint64_t gaussian_binomial(std::uint64_t p, std::size_t n, std::size_t k) {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= ipow(p, n - i) - 1;
    den *= ipow(p, i + 1) - 1;
  }
  return num / den;
}

std::uint64_t closed_form(const std::string& kind, std::uint64_t p, std::size_t n) {
  if (kind == "invertible") return general_linear_order(static_cast<std::uint32_t>(p), n);
  std::uint64_t classes = 0;
  std::uint64_t idempotents = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    classes += gaussian_binomial(p, n, k);
    idempotents += gaussian_binomial(p, n, k) * ipow(p, k * (n - k));
  }
  if (kind == "class") return classes;
  if (kind == "delta") return 2 * classes - 2;
  return idempotents;  // idempotents and involutions correspond under iota
}

}  // namespace

void witness(Context& ctx) {
  const Matrix s = parse_s(ctx.cfg);
  if (!is_class_two(s)) throw ConfigError("--s is not of class 2");
  const ClassTwoWitness w = witness_u_r(s);
  run_section(ctx, "witness identities", 1, [&](std::size_t) {
    Outcome o;
    const Matrix one = Matrix::identity(s.domain(), s.dim());
    o.expect(w.u * w.u == one && w.u * s * w.u == inverse(s), "u fails", {{"u", &w.u}});
    o.expect(w.r * s * w.r_inverse == s * s && w.r * w.r_inverse == one, "r fails", {{"r", &w.r}});
    o.expect(s.pow(3) != one, "s^3 = 1");
    return o;
  });
  ctx.report.result = Json{{"s", matrix_to_json(s)},
                           {"u", matrix_to_json(w.u)},
                           {"r", matrix_to_json(w.r)},
                           {"r_inverse", matrix_to_json(w.r_inverse)},
                           {"frame", frame_to_json(w.frame)}};
}

void enumerate(Context& ctx) {
  const std::string& kind = ctx.cfg.kind;
  const ScalarDomain& d = ctx.cfg.domain;
  const std::size_t n = ctx.cfg.dim;
  Json items = Json::array();
  if (kind == "idempotent" || kind == "involution" || kind == "invertible") {
    const auto elements = kind == "idempotent"   ? enumerate_idempotents(d, n)
                          : kind == "involution" ? enumerate_involutions(d, n)
                                                 : enumerate_invertibles(d, n);
    for (const auto& m : elements) items.push_back(matrix_to_json(m));
  } else if (kind == "class") {
    for (const auto& c : right_ideal_classes(d, n))
      items.push_back(Json{{"rank", c.rank()}, {"ideal", ideal_to_json(c)}, {"size", class_members(c.idempotent()).size()}});
  } else {
    for (const auto& s : enumerate_delta_sets(d, n))
      items.push_back(Json{{"delta", delta_to_json(s)}, {"size", s.members().size()}});
  }
  const std::uint64_t expected = closed_form(kind, d.modulus(), n);
  run_section(ctx, "closed-form count", 1, [&](std::size_t) {
    Outcome o;
    o.expect(items.size() == expected, "count " + std::to_string(items.size()) + " != closed form " +
                                           std::to_string(expected));
    return o;
  });
  ctx.report.result = Json{{"kind", kind}, {"count", items.size()}, {"closed_form", expected}, {"items", std::move(items)}};
}

}  // namespace idemgeo::suite
