#include "catch_amalgamated.hpp"

#include "idemgeo/centralizers.hpp"
#include "idemgeo/class_two.hpp"
#include "idemgeo/errors.hpp"
#include "idemgeo/idempotents.hpp"
#include "idemgeo/sampling.hpp"

using namespace idemgeo;

namespace {

const ScalarDomain Q = ScalarDomain::rationals();

Matrix E(std::size_t n, std::size_t i, std::size_t j) { return Matrix::unit(Q, n, i - 1, j - 1); }
Matrix one(std::size_t n) { return Matrix::identity(Q, n); }

}  // namespace

TEST_CASE("class-2 detection") {
  CHECK(is_class_two(one(2) + E(2, 1, 2)));
  CHECK_FALSE(is_class_two(one(2)));
  CHECK_FALSE(is_class_two(Matrix::from_ints(Q, {{1, 0}, {0, -1}})));
}

TEST_CASE("nilpotent frames") {
  const NilpotentFrame a = nilpotent_frame(E(2, 1, 2));
  CHECK(a.e() == E(2, 1, 1));
  CHECK(a.g() == E(2, 2, 2));
  CHECK(a.f().is_zero());
  CHECK(a.k() == E(2, 2, 1));

  const NilpotentFrame b = nilpotent_frame(E(3, 1, 3));
  CHECK(b.e() == E(3, 1, 1));
  CHECK(b.g() == E(3, 3, 3));
  CHECK(b.f() == E(3, 2, 2));
  CHECK(b.k() == E(3, 3, 1));

  const Matrix n = Matrix::from_ints(Q, {{1, -1}, {1, -1}});
  const NilpotentFrame c = nilpotent_frame(n);
  CHECK(RightIdeal::of(c.e()) == RightIdeal::of(n));

  CHECK_THROWS_AS(nilpotent_frame(Matrix::zero(Q, 2)), PreconditionError);
  CHECK_THROWS_AS(nilpotent_frame(one(2)), PreconditionError);

  for (const std::size_t dim : {2U, 3U, 4U}) {
    Sampler sm(Q, dim, dim);
    for (int i = 0; i < 200; ++i) {
      const Matrix m = sm.square_zero_nilpotent();
      const NilpotentFrame f = nilpotent_frame(m);
      CHECK(f.e() * m * f.g() == m);
      CHECK((f.e() * f.g()).is_zero());
      CHECK((f.g() * f.e()).is_zero());
      CHECK(m * f.k() == f.e());
      CHECK(f.k() * m == f.g());
      CHECK(f.e() + f.g() + f.f() == one(dim));
    }
  }
}

TEST_CASE("witnesses u and r") {
  const Matrix s = one(2) + E(2, 1, 2);
  const ClassTwoWitness w = witness_u_r(s);
  CHECK(w.u == Matrix::from_ints(Q, {{1, 0}, {0, -1}}));
  CHECK(w.r == Matrix::from_ints(Q, {{2, 0}, {0, 1}}));
  CHECK(w.u * s * w.u == Matrix::from_ints(Q, {{1, -1}, {0, 1}}));
  CHECK(w.r * s * w.r_inverse == Matrix::from_ints(Q, {{1, 2}, {0, 1}}));

  const ClassTwoWitness w3 = witness_u_r(one(3) + E(3, 1, 3));
  CHECK(w3.u == Matrix::from_ints(Q, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
  CHECK(w3.r == Matrix::from_ints(Q, {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(w3.r_inverse == one(3) - Q.parse("1/2") * w3.frame.e());

  CHECK_THROWS_AS(witness_u_r(one(2)), PreconditionError);
}

TEST_CASE("block criterion for the centralizer") {
  const Matrix s = one(2) + E(2, 1, 2);
  const NilpotentFrame frame = nilpotent_frame(E(2, 1, 2));
  CHECK(centralizer_form_check(s, frame));
  const Matrix swap = E(2, 2, 1) + E(2, 1, 2);
  CHECK_FALSE(centralizer_form_check(swap, frame));
  CHECK_FALSE(commute(swap, s));
  CHECK(centralizer_form_check(scalar_matrix(Q, 2, 7), frame));

  for (const std::size_t dim : {3U, 4U}) {
    Sampler sm(Q, dim, 40 + dim);
    for (int i = 0; i < 40; ++i) {
      const Matrix n = sm.square_zero_nilpotent();
      const Matrix sd = one(dim) + n;
      const NilpotentFrame fr = nilpotent_frame(n);
      for (int j = 0; j < 25; ++j) {
        const Matrix t = sm.invertible();
        CHECK(centralizer_form_check(t, fr) == commute(sd, t));
      }
      for (const auto& b : commutant_basis(sd).basis) CHECK(centralizer_form_check(b + scalar_matrix(Q, dim, 5), fr));
    }
  }
}

TEST_CASE("double centralizer decomposition") {
  const Matrix n = E(2, 1, 2);
  const Matrix s = one(2) + n;
  auto z = double_centralizer_structure(s, one(2));
  REQUIRE(z);
  CHECK(z->first == Q.one());
  CHECK(z->second == Q.zero());
  z = double_centralizer_structure(s, s);
  REQUIRE(z);
  CHECK(z->first == Q.one());
  CHECK(z->second == Q.one());
  z = double_centralizer_structure(s, scalar_matrix(Q, 2, 3) - Q.from_int(2) * n);
  REQUIRE(z);
  CHECK(z->first == Q.from_int(3));
  CHECK(z->second == Q.from_int(-2));
  CHECK_FALSE(double_centralizer_structure(s, Matrix::from_ints(Q, {{1, 0}, {0, 2}})).has_value());
  CHECK_THROWS_AS(double_centralizer_structure(one(2), one(2)), PreconditionError);

  // Converse: every invertible z1 + z2 n lies in C^2(s).
  Sampler sm(Q, 3, 77);
  for (int i = 0; i < 50; ++i) {
    const Matrix m = sm.square_zero_nilpotent();
    const Matrix sd = one(3) + m;
    const Matrix d = scalar_matrix(Q, 3, sm.rng().between(1, 5)) + Q.from_int(sm.rng().between(-4, 4)) * m;
    for (const auto& b : commutant_basis(sd).basis) CHECK(commute(b, d));
    CHECK(double_centralizer_structure(sd, d).has_value());
  }
}
