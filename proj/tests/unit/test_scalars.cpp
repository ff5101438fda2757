#include "catch_amalgamated.hpp"

#include <limits>

#include "idemgeo/errors.hpp"
#include "idemgeo/random.hpp"
#include "idemgeo/scalar.hpp"

using namespace idemgeo;

namespace {

mpq_class random_mpq(SplitMix64& rng) {
  // Mix tiny values with values near the int64 edge to exercise promotion.
  const std::int64_t edge = std::numeric_limits<std::int64_t>::max();
  auto pick = [&]() -> std::int64_t {
    switch (rng.below(3)) {
      case 0: return rng.between(-9, 9);
      case 1: return rng.between(-1'000'000, 1'000'000);
      default: return edge - static_cast<std::int64_t>(rng.below(1000));
    }
  };
  std::int64_t num = pick();
  std::int64_t den = pick();
  if (den == 0) den = 1;
  if (rng.below(2)) num = -num;
  mpq_class q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return q;
}

Rational to_rational(const mpq_class& q) { return Rational(q); }

}  // namespace

TEST_CASE("rational arithmetic matches GMP on mixed-size operands") {
  SplitMix64 rng(42);
  for (int i = 0; i < 4000; ++i) {
    const mpq_class a = random_mpq(rng);
    const mpq_class b = random_mpq(rng);
    const Rational x = to_rational(a);
    const Rational y = to_rational(b);
    REQUIRE((x + y).to_mpq() == a + b);
    REQUIRE((x - y).to_mpq() == a - b);
    REQUIRE((x * y).to_mpq() == a * b);
    if (b != 0) REQUIRE((x / y).to_mpq() == a / b);
    REQUIRE((x == y) == (a == b));
    REQUIRE(((x <=> y) < 0) == (a < b));
  }
}

TEST_CASE("rational representation is canonical after promotion and demotion") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  const Rational x(big);
  const Rational y = x * x;
  CHECK_FALSE(y.is_small());
  const Rational back = y / x;
  CHECK(back.is_small());
  CHECK(back == x);
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(0, 7).to_string() == "0/1");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK_THROWS(Rational::parse("1/x"));
}

TEST_CASE("prime field construction rejects bad moduli") {
  CHECK_NOTHROW(ScalarDomain::prime_field(5));
  CHECK_NOTHROW(ScalarDomain::prime_field(7));
  CHECK_THROWS_AS(ScalarDomain::prime_field(2), DomainError);
  CHECK_THROWS_AS(ScalarDomain::prime_field(3), DomainError);
  CHECK_THROWS_AS(ScalarDomain::prime_field(9), DomainError);
  CHECK_THROWS_AS(ScalarDomain::prime_field(1), DomainError);
}

TEST_CASE("F_p satisfies the field axioms exhaustively") {
  for (const std::uint32_t p : {5U, 7U, 11U}) {
    const auto d = ScalarDomain::prime_field(p);
    for (std::uint64_t a = 0; a < p; ++a) {
      const Scalar x = d.element(a);
      CHECK(x + d.zero() == x);
      CHECK(x * d.one() == x);
      CHECK(x + (-x) == d.zero());
      if (!x.is_zero()) CHECK(x * x.inverse() == d.one());
      for (std::uint64_t b = 0; b < p; ++b) {
        const Scalar y = d.element(b);
        CHECK((x * y).residue_value() == (a * b) % p);
        CHECK((x + y).residue_value() == (a + b) % p);
      }
    }
  }
}

TEST_CASE("halve and third are the unique solutions") {
  const auto f5 = ScalarDomain::prime_field(5);
  for (std::uint64_t a = 0; a < 5; ++a) {
    const Scalar x = f5.element(a);
    CHECK(halve(x) + halve(x) == x);
    CHECK(third(x) + third(x) + third(x) == x);
  }
  const auto q = ScalarDomain::rationals();
  CHECK(halve(q.from_int(3)) == q.parse("3/2"));
  CHECK(third(q.from_int(1)) == q.parse("1/3"));
  CHECK(halve(f5.from_int(1)) == f5.from_int(3));
}

TEST_CASE("scalar parsing, printing and domain mixing") {
  const auto f5 = ScalarDomain::prime_field(5);
  const auto q = ScalarDomain::rationals();
  CHECK(f5.parse("7").residue_value() == 2);
  CHECK(f5.parse("-1").residue_value() == 4);
  CHECK(f5.parse("1/2") == f5.from_int(3));
  CHECK(q.parse("2/4").to_string() == "1/2");
  CHECK(f5.from_int(-3).to_string() == "2");
  CHECK_THROWS_AS(f5.one() + q.one(), DomainError);
  CHECK_THROWS_AS(f5.zero().inverse(), DivisionByZero);
  CHECK((f5.element(4) <=> f5.element(1)) > 0);
}
