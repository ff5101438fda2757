#include "catch_amalgamated.hpp"

#include <algorithm>

#include "idemgeo/errors.hpp"
#include "idemgeo/idempotents.hpp"

using namespace idemgeo;

namespace {

const ScalarDomain Q = ScalarDomain::rationals();
const ScalarDomain F5 = ScalarDomain::prime_field(5);

Vector vec(const ScalarDomain& d, std::initializer_list<std::int64_t> xs) {
  Vector v;
  for (auto x : xs) v.push_back(d.from_int(x));
  return v;
}

RightIdeal line(const ScalarDomain& d, std::initializer_list<std::int64_t> xs) {
  return RightIdeal(Subspace::span(d, xs.size(), {vec(d, xs)}));
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("iota and its inverse") {
  CHECK(iota(Matrix::zero(Q, 2)) == scalar_matrix(Q, 2, -1));
  CHECK(iota(Matrix::identity(Q, 2)) == Matrix::identity(Q, 2));
  CHECK(iota(Matrix::unit(Q, 2, 0, 0)) == Matrix::from_ints(Q, {{1, 0}, {0, -1}}));
  CHECK(iota_inv(scalar_matrix(Q, 2, -1)).is_zero());
  CHECK(iota_inv(Matrix::from_ints(Q, {{1, 0}, {0, -1}})) == Matrix::unit(Q, 2, 0, 0));
  CHECK_THROWS_AS(iota(Matrix::from_ints(Q, {{1, 1}, {0, 1}})), PreconditionError);
  CHECK_THROWS_AS(iota_inv(scalar_matrix(Q, 2, 2)), PreconditionError);

  Sampler sm(Q, 3, 4);
  for (int i = 0; i < 200; ++i) {
    const Matrix f = sm.idempotent();
    CHECK(iota_inv(iota(f)) == f);
    const Matrix u = sm.involution();
    CHECK(iota(iota_inv(u)) == u);
  }
}

TEST_CASE("plus/minus spaces") {
  const auto pm1 = plus_minus_space(Matrix::identity(Q, 2));
  CHECK(pm1.plus.is_full());
  CHECK(pm1.minus.is_zero());
  const auto pm2 = plus_minus_space(Matrix::from_ints(Q, {{1, 0}, {0, -1}}));
  CHECK(pm2.plus == line(Q, {1, 0}));
  CHECK(pm2.minus == line(Q, {0, 1}));
  const auto pm3 = plus_minus_space(Matrix::from_ints(Q, {{1, 2}, {0, -1}}));
  CHECK(pm3.plus == line(Q, {1, 0}));
  CHECK(pm3.minus == line(Q, {1, -1}));

  Sampler sm(Q, 4, 9);
  for (int i = 0; i < 100; ++i) {
    const Matrix e = sm.idempotent();
    const auto pm = plus_minus_space(iota(e));
    CHECK(pm.plus == RightIdeal::of(e));
    CHECK(pm.minus == RightIdeal::of(Matrix::identity(Q, 4) - e));
    CHECK(pm.plus.rank() + pm.minus.rank() == 4);
  }
}

TEST_CASE("same right ideal examples and three-way agreement") {
  const Matrix e11 = Matrix::unit(Q, 2, 0, 0);
  const Matrix f = Matrix::from_ints(Q, {{1, 1}, {0, 0}});
  CHECK(same_right_ideal(e11, f));
  CHECK_FALSE(same_right_ideal(e11, Matrix::unit(Q, 2, 1, 1)));
  CHECK(same_right_ideal(f, f));

  const auto idem = enumerate_idempotents(F5, 2);
  for (const auto& a : idem) {
    const auto members = class_members(a);
    for (const auto& b : idem) {
      const bool listed = std::binary_search(members.begin(), members.end(), b);
      CHECK(listed == same_right_ideal(a, b));
      CHECK(listed == (a * b == b && b * a == a));
    }
  }
}

TEST_CASE("class members") {
  const auto m = class_members(Matrix::unit(F5, 2, 0, 0));
  REQUIRE(m.size() == 5);
  for (std::int64_t b = 0; b < 5; ++b)
    CHECK(std::binary_search(m.begin(), m.end(), Matrix::from_ints(F5, {{1, b}, {0, 0}})));
  CHECK(class_members(Matrix::identity(F5, 2)) == std::vector<Matrix>{Matrix::identity(F5, 2)});
  CHECK(class_members(Matrix::zero(F5, 2)) == std::vector<Matrix>{Matrix::zero(F5, 2)});

  // |class of a rank-k idempotent| = p^(k(n-k)).
  Sampler f5(F5, 3, 8);
  for (std::size_t k = 0; k <= 3; ++k) {
    const Matrix e = f5.idempotent(k);
    const auto members = class_members(e);
    CHECK(members.size() == ipow(5, k * (3 - k)));
    for (const auto& f : members) CHECK((is_idempotent(f) && same_right_ideal(e, f)));
  }

  Sampler sm(Q, 3, 1);
  for (int i = 0; i < 100; ++i) {
    const Matrix e = sm.idempotent();
    const Matrix f = sample_class_member(e, sm);
    CHECK(is_idempotent(f));
    CHECK(same_right_ideal(e, f));
  }
}

TEST_CASE("offdiagonal basis has dimension k(n-k)") {
  Sampler sm(Q, 4, 2);
  for (int i = 0; i < 50; ++i) {
    const Matrix e = sm.idempotent();
    const std::size_t k = rank(e);
    const auto basis = offdiagonal_basis(e);
    CHECK(basis.size() == k * (4 - k));
    const Matrix one = Matrix::identity(Q, 4);
    for (const auto& b : basis) CHECK(e * b * (one - e) == b);
  }
}

TEST_CASE("right ideal classes of M2(F5) and M3(F5)") {
  const auto classes = right_ideal_classes(F5, 2);
  CHECK(classes.size() == 8);  // 1 + (5 + 1) + 1
  CHECK(classes.front().is_zero());
  CHECK(classes.back().is_full());
  // Subspaces of F_5^3: 1 + 31 + 31 + 1.
  CHECK(right_ideal_classes(F5, 3).size() == 64);
}

TEST_CASE("involution rigidity") {
  const auto inv = enumerate_involutions(F5, 2);
  CHECK(inv.size() == 32);
  for (const auto& u : inv)
    for (const auto& v : inv) CHECK(involution_rigidity(u, v));
  Sampler sm(Q, 3, 5);
  for (int i = 0; i < 200; ++i) CHECK(involution_rigidity(sm.involution(), sm.involution()));
}

TEST_CASE("right ideal containment and ordering") {
  const RightIdeal a = RightIdeal::of(Matrix::unit(Q, 2, 0, 0));
  CHECK(a.contains(Matrix::from_ints(Q, {{3, 7}, {0, 0}})));
  CHECK_FALSE(a.contains(Matrix::unit(Q, 2, 1, 0)));
  CHECK(RightIdeal::zero(Q, 2) < a);
  CHECK(a < RightIdeal::full(Q, 2));
  CHECK(is_idempotent(a.idempotent()));
  CHECK(RightIdeal::of(a.idempotent()) == a);
}
