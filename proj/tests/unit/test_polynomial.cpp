#include "catch_amalgamated.hpp"

#include "idemgeo/errors.hpp"
#include "idemgeo/polynomial.hpp"
#include "idemgeo/random.hpp"

using namespace idemgeo;

namespace {

const ScalarDomain Q = ScalarDomain::rationals();

Poly ints(const ScalarDomain& d, std::initializer_list<std::int64_t> cs) {
  Poly p;
  for (auto c : cs) p.push_back(d.from_int(c));
  return poly_trim(p);
}

Poly mul(const Poly& a, const Poly& b, const ScalarDomain& d) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, d.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_trim(out);
}

Poly random_poly(const ScalarDomain& d, SplitMix64& rng, int degree) {
  Poly p;
  for (int i = 0; i <= degree; ++i) p.push_back(d.from_int(rng.between(-6, 6)));
  p.back() = d.from_int(rng.between(1, 4));
  return p;
}

}  // namespace

TEST_CASE("division identity and gcd") {
  SplitMix64 rng(3);
  for (const auto& d : {Q, ScalarDomain::prime_field(7)}) {
    for (int i = 0; i < 200; ++i) {
      const Poly a = random_poly(d, rng, static_cast<int>(rng.below(6)));
      const Poly b = random_poly(d, rng, static_cast<int>(rng.below(4)));
      const auto [q, r] = poly_divmod(a, b);
      Poly back = mul(q, b, d);
      back.resize(std::max(back.size(), r.size()), d.zero());
      for (std::size_t k = 0; k < r.size(); ++k) back[k] += r[k];
      CHECK(poly_trim(back) == poly_trim(a));
      CHECK(poly_degree(r) < poly_degree(b));

      const Poly c = random_poly(d, rng, 2);
      const Poly g = poly_gcd(mul(a, c, d), mul(b, c, d), d);
      CHECK(poly_divmod(g, poly_monic(c)).second.empty());
    }
  }
  CHECK_THROWS_AS(poly_divmod(ints(Q, {1, 1}), Poly{}), DivisionByZero);
}

TEST_CASE("root test over F_p agrees with a residue scan") {
  SplitMix64 rng(5);
  for (const std::uint32_t p : {5U, 7U, 13U}) {
    const auto d = ScalarDomain::prime_field(p);
    for (int i = 0; i < 300; ++i) {
      const Poly f = random_poly(d, rng, 1 + static_cast<int>(rng.below(4)));
      bool scan = false;
      for (std::uint64_t x = 0; x < p; ++x) scan = scan || poly_eval(f, d.element(x)).is_zero();
      CHECK(poly_has_root(f, d) == scan);
    }
  }
}

TEST_CASE("rational root test") {
  // (2x - 3)(x^2 + 1): root 3/2.
  CHECK(poly_has_root(mul(ints(Q, {-3, 2}), ints(Q, {1, 0, 1}), Q), Q));
  CHECK_FALSE(poly_has_root(mul(ints(Q, {-2, 0, 1}), ints(Q, {3, 0, 1}), Q), Q));
  CHECK_FALSE(poly_has_root(ints(Q, {1, 1, 1}), Q));
  CHECK(poly_has_root(ints(Q, {0, 1}), Q));
  // Close irrational roots around a rational one: x^3 - 2x and (3x - 1).
  CHECK(poly_has_root(mul(ints(Q, {0, -2, 0, 1}), ints(Q, {-1, 3}), Q), Q));
  CHECK(poly_has_root(mul(ints(Q, {-2, 0, 1}), ints(Q, {-7, 5}), Q), Q));
  CHECK_FALSE(poly_has_root(mul(ints(Q, {-2, 0, 1}), ints(Q, {-3, 0, 1}), Q), Q));

  SplitMix64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t a = rng.between(-20, 20);
    const std::int64_t b = rng.between(1, 9);
    const Poly with_root = mul(ints(Q, {-a, b}), random_poly(Q, rng, 2), Q);
    CHECK(poly_has_root(with_root, Q));
  }
}

TEST_CASE("squarefree detection") {
  CHECK(poly_squarefree(ints(Q, {-1, 0, 1}), Q));
  CHECK_FALSE(poly_squarefree(ints(Q, {1, 2, 1}), Q));
  CHECK_FALSE(poly_squarefree(mul(ints(Q, {1, 0, 1}), ints(Q, {1, 0, 1}), Q), Q));
}

TEST_CASE("quartic resolvent vanishes at the pairing sums") {
  SplitMix64 rng(13);
  for (int i = 0; i < 100; ++i) {
    std::int64_t r[4];
    for (auto& x : r) x = rng.between(-5, 5);
    Poly f = ints(Q, {1});
    for (auto x : r) f = mul(f, ints(Q, {-x, 1}), Q);
    const Poly res = quartic_resolvent(f, Q);
    CHECK(poly_eval(res, Q.from_int(r[0] * r[1] + r[2] * r[3])).is_zero());
    CHECK(poly_eval(res, Q.from_int(r[0] * r[2] + r[1] * r[3])).is_zero());
    CHECK(poly_eval(res, Q.from_int(r[0] * r[3] + r[1] * r[2])).is_zero());
  }
}
