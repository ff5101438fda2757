#include "catch_amalgamated.hpp"

#include <algorithm>
#include <set>

#include "idemgeo/delta_sets.hpp"
#include "idemgeo/errors.hpp"

using namespace idemgeo;

namespace {

const ScalarDomain Q = ScalarDomain::rationals();
const ScalarDomain F5 = ScalarDomain::prime_field(5);

Matrix m(const ScalarDomain& d, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  return Matrix::from_ints(d, rows);
}

RightIdeal line(const ScalarDomain& d, std::int64_t a, std::int64_t b) {
  return RightIdeal(Subspace::span(d, 2, {{d.from_int(a), d.from_int(b)}}));
}

}  // namespace

TEST_CASE("membership") {
  const DeltaSet d = DeltaSet::plus(Matrix::unit(Q, 2, 0, 0));
  CHECK(d.contains(m(Q, {{1, 0}, {0, -1}})));
  CHECK(d.contains(m(Q, {{1, 2}, {0, -1}})));
  CHECK_FALSE(d.contains(m(Q, {{-1, 0}, {0, 1}})));
  CHECK(DeltaSet::minus(Matrix::unit(Q, 2, 0, 0)).contains(m(Q, {{-1, 0}, {0, 1}})));
  CHECK(d.representative() == m(Q, {{1, 0}, {0, -1}}));
}

TEST_CASE("members over F5") {
  const DeltaSet plus = DeltaSet::plus(Matrix::unit(F5, 2, 0, 0));
  const DeltaSet minus = DeltaSet::minus(Matrix::unit(F5, 2, 0, 0));
  const auto a = plus.members();
  const auto b = minus.members();
  REQUIRE(a.size() == 5);
  REQUIRE(b.size() == 5);
  std::set<Matrix> negated;
  for (const auto& u : a) negated.insert(-u);
  CHECK(negated == std::set<Matrix>(b.begin(), b.end()));
  const auto one = DeltaSet::plus(Matrix::identity(F5, 2)).members();
  REQUIRE(one.size() == 1);
  CHECK(one.front().is_identity());
  for (const auto& u : enumerate_involutions(F5, 2)) {
    const bool listed = std::find(a.begin(), a.end(), u) != a.end();
    CHECK(plus.contains(u) == listed);
  }
}

TEST_CASE("labels and distinct sets") {
  CHECK(delta_set_labels(F5, 2).size() == 16);
  const auto sets = enumerate_delta_sets(F5, 2);
  CHECK(sets.size() == 14);
  std::size_t total = 0;
  for (const auto& d : sets) total += d.members().size();
  // Every involution other than +-1 lies in exactly two sets (its I+ and its I- label).
  CHECK(total == 2 + 2 * (32 - 2));
}

TEST_CASE("property (a): uvw = wvu and uvw in D") {
  const DeltaSet d = DeltaSet::plus(Matrix::unit(Q, 2, 0, 0));
  const Matrix u = m(Q, {{1, 0}, {0, -1}});
  const Matrix v = m(Q, {{1, 2}, {0, -1}});
  const Matrix w = m(Q, {{1, 1}, {0, -1}});
  CHECK(property_a(u, u, u, d));
  CHECK(property_a(u, v, w, d));
  CHECK(u * v * w == m(Q, {{1, -1}, {0, -1}}));
  CHECK_THROWS_AS(property_a(u, v, -w, d), PreconditionError);

  const DeltaSet d5 = DeltaSet::plus(Matrix::unit(F5, 2, 0, 0));
  const auto mem = d5.members();
  for (const auto& a : mem)
    for (const auto& b : mem)
      for (const auto& c : mem) CHECK(property_a(a, b, c, d5));
}

TEST_CASE("property (b): unique midpoint") {
  const DeltaSet d = DeltaSet::plus(Matrix::unit(Q, 2, 0, 0));
  const Matrix u = m(Q, {{1, 0}, {0, -1}});
  const Matrix v = m(Q, {{1, 2}, {0, -1}});
  const Matrix w = property_b_solve(u, v, d);
  CHECK(w == m(Q, {{1, 1}, {0, -1}}));
  CHECK(w * v * w == u);
  CHECK(property_b_solve(u, u, d) == u);

  for (const auto& ds : enumerate_delta_sets(F5, 2)) {
    const auto mem = ds.members();
    for (const auto& a : mem)
      for (const auto& b : mem) {
        CHECK(property_b_solution_count(a, b, ds) == 1);
        const Matrix x = property_b_solve(a, b, ds);
        CHECK(x * b * x == a);
      }
  }
}

TEST_CASE("property (c): normalizer criterion") {
  const DeltaSet d = DeltaSet::plus(Matrix::unit(F5, 2, 0, 0));
  const Matrix u = m(F5, {{1, 0}, {0, -1}});
  for (const Mode mode : {Mode::exhaustive, Mode::structural}) {
    const auto r = property_c_normalizer(u, d, mode);
    CHECK(r.lhs);
    CHECK(r.rhs);
  }
  const Matrix swap = m(F5, {{0, 1}, {1, 0}});
  const auto ex = property_c_normalizer(swap, d, Mode::exhaustive);
  CHECK(ex.lhs == ex.rhs);

  const auto invs = enumerate_involutions(F5, 2);
  for (const auto& ds : delta_set_labels(F5, 2)) {
    if (ds.is_trivial()) continue;
    for (const auto& w : invs) {
      const auto e = property_c_normalizer(w, ds, Mode::exhaustive);
      const auto s = property_c_normalizer(w, ds, Mode::structural);
      CHECK(e.lhs == e.rhs);
      CHECK(e.lhs == s.lhs);
      CHECK(e.rhs == s.rhs);
      if (s.commuting_member) {
        CHECK(ds.contains(*s.commuting_member));
        CHECK(commute(w, *s.commuting_member));
      }
    }
  }
}

TEST_CASE("property (d): (uv - 1)^2 = 0") {
  const DeltaSet d = DeltaSet::plus(Matrix::unit(Q, 2, 0, 0));
  const Matrix u = m(Q, {{1, 0}, {0, -1}});
  const Matrix v = m(Q, {{1, 2}, {0, -1}});
  CHECK(property_d_square(u, u, d));
  CHECK(u * v == m(Q, {{1, 2}, {0, 1}}));
  CHECK(property_d_square(u, v, d));
  for (const auto& ds : enumerate_delta_sets(F5, 2)) {
    const auto mem = ds.members();
    for (const auto& a : mem)
      for (const auto& b : mem) CHECK(property_d_square(a, b, ds));
  }
}

TEST_CASE("fixed space of phi^2") {
  const Matrix e = Matrix::unit(Q, 2, 0, 0);
  const Matrix f = m(Q, {{1, 1}, {0, 0}});
  CHECK(fixed_space_of_square({iota(e), iota(f)}) == line(Q, 1, 0));
  CHECK(fixed_space_of_square({Matrix::identity(Q, 2)}).is_full());
  CHECK(fixed_space_of_square(DeltaSet::plus(Matrix::unit(F5, 2, 0, 0)).members()) == line(F5, 1, 0));
}

TEST_CASE("first violation on the four properties") {
  const auto invs = enumerate_involutions(F5, 2);
  for (const auto& ds : enumerate_delta_sets(F5, 2)) CHECK_FALSE(first_violation(ds.members(), invs).has_value());
  // {1, -1}: (d) fails since (-1 - 1)^2 = 4.
  const auto v = first_violation({Matrix::identity(F5, 2), scalar_matrix(F5, 2, -1)}, invs);
  REQUIRE(v.has_value());
  CHECK(v->property >= 1);
  CHECK(v->property <= 4);
}

TEST_CASE("maximality") {
  const auto r = maximality_check(DeltaSet::plus(Matrix::unit(F5, 2, 0, 0)));
  CHECK(r.forward);
  CHECK(r.outside == 27);
  CHECK(r.violations.size() == 27);
  CHECK(r.holds());
  for (const auto& v : r.violations) CHECK(v.has_value());
  CHECK(maximality_check(DeltaSet::plus(Matrix::identity(F5, 2))).holds());
  CHECK(maximality_check(DeltaSet::minus(Matrix::unit(F5, 2, 1, 1))).holds());
}

TEST_CASE("common-kernel invariance lemma") {
  const Matrix u = m(F5, {{1, 0}, {0, -1}});
  const auto empty = lemma_2_8_check(u, {});
  CHECK(empty.a.is_full());
  CHECK(empty.holds());
  const auto one = lemma_2_8_check(u, {Matrix::identity(F5, 2)});
  CHECK(one.a.is_zero());
  CHECK(one.holds());
  const auto e22 = lemma_2_8_check(u, {Matrix::unit(F5, 2, 1, 1)});
  CHECK(e22.a == line(F5, 1, 0));
  CHECK(e22.hypothesis);
  CHECK(e22.conclusion);
  // Every singleton B over M2(F5) for a non-central involution.
  for_each_matrix(F5, 2, [&](const Matrix& b) {
    CHECK(lemma_2_8_check(u, {b}).holds());
    return true;
  });
}
