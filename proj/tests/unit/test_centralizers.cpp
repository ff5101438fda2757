#include "catch_amalgamated.hpp"

#include <set>

#include "idemgeo/centralizers.hpp"
#include "idemgeo/class_two.hpp"
#include "idemgeo/errors.hpp"
#include "idemgeo/sampling.hpp"

using namespace idemgeo;

namespace {

const ScalarDomain Q = ScalarDomain::rationals();
const ScalarDomain F5 = ScalarDomain::prime_field(5);
const ScalarDomain F7 = ScalarDomain::prime_field(7);

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Independent oracle: every non-scalar element of F[s] generates F[s].
/// Enumerates F[s] as coefficient vectors over the basis 1, s, .., s^(m-1).
bool minimal_by_enumeration(const Matrix& s) {
  const auto& d = s.domain();
  const std::size_t n = s.dim();
  const std::size_t m = generated_algebra_dim(s);
  std::vector<Matrix> powers{Matrix::identity(d, n)};
  for (std::size_t k = 1; k < m; ++k) powers.push_back(powers.back() * s);
  const std::uint64_t count = ipow(d.modulus(), m);
  for (std::uint64_t code = 0; code < count; ++code) {
    Matrix t = Matrix::zero(d, n);
    std::uint64_t c = code;
    for (std::size_t k = 0; k < m; ++k, c /= d.modulus()) t += d.element(c % d.modulus()) * powers[k];
    if (is_central(t)) continue;
    if (generated_algebra_dim(t) != m) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("commutant examples") {
  const Matrix one = Matrix::identity(Q, 2);
  CHECK(commutant_basis(one).dim() == 4);
  const CommutantBasis c = commutant_basis(one + Matrix::unit(Q, 2, 0, 1));
  CHECK(c.dim() == 2);
  CHECK(c.spans(one));
  CHECK(c.spans(Matrix::unit(Q, 2, 0, 1)));
  const Matrix diag12 = Matrix::from_ints(Q, {{1, 0}, {0, 2}});
  CHECK(commutant_basis(diag12).dim() == 2);
  CHECK(commutant_basis(diag12).spans(Matrix::unit(Q, 2, 1, 1)));

  CHECK(double_commutant_basis(one + Matrix::unit(Q, 2, 0, 1)).dim() == 2);
  CHECK(double_commutant_basis(one).dim() == 1);
  CHECK(double_commutant_basis(diag12).dim() == 2);
}

TEST_CASE("commutant dimension matches a brute-force count over F5") {
  Sampler sm(F5, 2, 21);
  for (int i = 0; i < 20; ++i) {
    const Matrix s = sm.box_matrix();
    std::uint64_t count = 0;
    for_each_matrix(F5, 2, [&](const Matrix& x) {
      count += commute(s, x) ? 1 : 0;
      return true;
    });
    CHECK(count == ipow(5, commutant_basis(s).dim()));
  }
}

TEST_CASE("double commutant closure") {
  Sampler sm(Q, 3, 23);
  for (int i = 0; i < 40; ++i) {
    const Matrix s = i % 2 ? sm.box_matrix() : Matrix::identity(Q, 3) + sm.square_zero_nilpotent();
    const CommutantBasis c = commutant_basis(s);
    const CommutantBasis dc = double_commutant_basis(s);
    // C(C''(s)) = C(s): compare spans through membership both ways.
    std::vector<Matrix> triple = solve_homogeneous(unit_basis(Q, 3), [&](const Matrix& x) {
      std::vector<Matrix> out;
      for (const auto& b : dc.basis) out.push_back(x * b - b * x);
      return out;
    });
    CHECK(triple.size() == c.dim());
    for (const auto& x : triple) CHECK(c.spans(x));
    // Over a field the double commutant is F[s].
    CHECK(dc.dim() == generated_algebra_dim(s));
  }
}

TEST_CASE("general linear group order") {
  CHECK(general_linear_order(5, 2) == 480);
  CHECK(general_linear_order(7, 2) == 2016);
  CHECK(enumerate_invertibles(F5, 2).size() == 480);
  CHECK(GroupTable::get(F5, 2).size() == 480);
  CHECK(GroupTable::get(F5, 2).involutions().size() == 32);
}

TEST_CASE("condition (1): structural agrees with the literal scan") {
  for (const auto& d : {F5, F7}) {
    const GroupTable& g = GroupTable::get(d, 2);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Matrix& s = g.element(i);
      CHECK(condition_one(s, Mode::exhaustive).holds == condition_one(s, Mode::structural).holds);
    }
  }
  const Matrix s = Matrix::identity(F5, 2) + Matrix::unit(F5, 2, 0, 1);
  CHECK(condition_one(s, Mode::exhaustive).holds);
  const auto one = condition_one(Matrix::identity(F5, 2), Mode::exhaustive);
  CHECK_FALSE(one.holds);
  CHECK(one.witness.has_value());
}

TEST_CASE("minimality of F[s] against an enumeration oracle") {
  for (const std::size_t n : {3U, 4U}) {
    Sampler sm(F5, n, 31 + n);
    std::size_t minimal = 0;
    for (int i = 0; i < 150; ++i) {
      Matrix s = i % 3 == 0 ? sm.invertible() : sm.box_matrix();
      if (n == 4 && i % 5 == 0) {
        // diag(C, C) for the companion C of x^2 - 2, conjugated: F[s] = F25.
        Matrix c = Matrix::zero(F5, 4);
        c(0, 1) = c(2, 3) = F5.from_int(2);
        c(1, 0) = c(3, 2) = F5.one();
        const Matrix g = sm.invertible();
        s = g * c * inverse(g);
      }
      const bool expected = minimal_by_enumeration(s);
      minimal += expected ? 1 : 0;
      CHECK(generated_algebra_is_minimal(s) == expected);
    }
    CAPTURE(n, minimal);
    CHECK(minimal > 0);
    CHECK(minimal < 150);
  }
}

TEST_CASE("minimality over Q on constructed minimal polynomials") {
  // Companion matrices: x^3 - 2 is irreducible (minimal), x^3 - x is split (not).
  const Matrix c1 = Matrix::from_ints(Q, {{0, 0, 2}, {1, 0, 0}, {0, 1, 0}});
  const Matrix c2 = Matrix::from_ints(Q, {{0, 0, 0}, {1, 0, 1}, {0, 1, 0}});
  CHECK(generated_algebra_is_minimal(c1));
  CHECK_FALSE(generated_algebra_is_minimal(c2));
  // x^4 + 1 is irreducible over Q; x^4 + 4 = (x^2+2x+2)(x^2-2x+2) has a quadratic subfield chain.
  const Matrix c3 = Matrix::from_ints(Q, {{0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK_FALSE(generated_algebra_is_minimal(c3));  // Q(zeta_8) contains Q(i)
  const Matrix c4 = Matrix::from_ints(Q, {{0, 0, 0, 2}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK_FALSE(generated_algebra_is_minimal(c4));  // Q(2^(1/4)) contains Q(sqrt 2)
  const Matrix c5 = Matrix::from_ints(Q, {{0, 0, 0, -1}, {1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK(generated_algebra_is_minimal(c5));  // x^4 - x - 1: S4 Galois group, no intermediate field
  CHECK(generated_algebra_is_minimal(Matrix::from_ints(Q, {{1, 0}, {0, 2}})));
  CHECK_FALSE(generated_algebra_is_minimal(Matrix::identity(Q, 2)));
}

TEST_CASE("theorem C verdict examples") {
  const Matrix s = Matrix::identity(Q, 2) + Matrix::unit(Q, 2, 0, 1);
  const TheoremC c = theorem_c_decide(s, Mode::structural);
  CHECK(c.verdict);
  CHECK(*c.u == Matrix::from_ints(Q, {{1, 0}, {0, -1}}));
  CHECK(*c.r == Matrix::from_ints(Q, {{2, 0}, {0, 1}}));

  CHECK_FALSE(theorem_c_decide(Matrix::from_ints(Q, {{1, 0}, {0, -1}}), Mode::structural).verdict);
  // Companion of x^2 + x + 1: s^3 = 1.
  const Matrix rot = Matrix::from_ints(Q, {{0, -1}, {1, -1}});
  REQUIRE(rot.pow(3).is_identity());
  const TheoremC r = theorem_c_decide(rot, Mode::structural);
  CHECK_FALSE(r.verdict);
  CHECK_FALSE(r.conditions[3]);
  CHECK_THROWS_AS(theorem_c_decide(Matrix::identity(Q, 2), Mode::structural), PreconditionError);

  // Exhaustive witnesses are the least ones in enumeration order.
  const Matrix s5 = Matrix::identity(F5, 2) + Matrix::unit(F5, 2, 0, 1);
  const TheoremC e = theorem_c_decide(s5, Mode::exhaustive);
  REQUIRE(e.verdict);
  const GroupTable& g = GroupTable::get(F5, 2);
  const Matrix s5_inv = inverse(s5);
  for (const std::size_t idx : g.involutions()) {
    const Matrix& u = g.element(idx);
    if (u * s5 * u == s5_inv) {
      CHECK(u == *e.u);
      break;
    }
  }
}
