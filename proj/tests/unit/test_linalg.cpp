#include "catch_amalgamated.hpp"

#include "idemgeo/errors.hpp"
#include "idemgeo/linalg.hpp"
#include "idemgeo/sampling.hpp"

using namespace idemgeo;

namespace {

const ScalarDomain Q = ScalarDomain::rationals();
const ScalarDomain F5 = ScalarDomain::prime_field(5);

Matrix adjugate_inverse_2x2(const Matrix& m) {
  const Scalar det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const Scalar inv = det.inverse();
  Matrix out(m.domain(), 2);
  out(0, 0) = m(1, 1) * inv;
  out(0, 1) = -m(0, 1) * inv;
  out(1, 0) = -m(1, 0) * inv;
  out(1, 1) = m(0, 0) * inv;
  return out;
}

}  // namespace

TEST_CASE("matrix basics") {
  const Matrix a = Matrix::from_ints(Q, {{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_ints(Q, {{0, 1}, {1, 0}});
  CHECK(a * b == Matrix::from_ints(Q, {{2, 1}, {4, 3}}));
  CHECK(a.transpose() == Matrix::from_ints(Q, {{1, 3}, {2, 4}}));
  CHECK(a.trace() == Q.from_int(5));
  CHECK(b.pow(2).is_identity());
  CHECK(Matrix::unit(Q, 2, 0, 1) == Matrix::from_ints(Q, {{0, 1}, {0, 0}}));
  CHECK_THROWS_AS(a + Matrix::identity(F5, 2), DomainError);
  CHECK_THROWS_AS(a * Matrix::identity(Q, 3), DimensionError);
  CHECK(Matrix::from_ints(F5, {{1, 0}, {0, 1}}).key() == 1 * 125 + 1);
}

TEST_CASE("inverse agrees with the adjugate formula") {
  for (const auto& d : {Q, F5}) {
    Sampler sm(d, 2, 7);
    for (int i = 0; i < 300; ++i) {
      const Matrix m = sm.box_matrix();
      const Scalar det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
      if (det.is_zero()) {
        CHECK_FALSE(is_invertible(m));
        CHECK_THROWS_AS(inverse(m), NotInvertible);
      } else {
        CHECK(inverse(m) == adjugate_inverse_2x2(m));
      }
    }
  }
}

TEST_CASE("rank plus nullity and canonical subspaces") {
  Sampler sm(Q, 4, 3);
  for (int i = 0; i < 200; ++i) {
    const Matrix m = sm.idempotent() * sm.box_matrix();
    CHECK(rank(m) + kernel_basis(m).size() == 4);
    for (const auto& v : kernel_basis(m)) {
      const Vector img = m.apply(v);
      for (const auto& x : img) CHECK(x.is_zero());
    }
    // Same span from a shuffled spanning set gives the identical basis.
    const Subspace s = column_space(m);
    const Subspace t = column_space(m * sm.invertible());
    CHECK(s == t);
  }
}

TEST_CASE("subspace operations") {
  const Subspace x = Subspace::span(Q, 3, {{Q.one(), Q.zero(), Q.zero()}, {Q.zero(), Q.one(), Q.zero()}});
  const Subspace y = Subspace::span(Q, 3, {{Q.zero(), Q.one(), Q.zero()}, {Q.zero(), Q.zero(), Q.one()}});
  CHECK(x.intersect(y).dim() == 1);
  CHECK(x.sum(y).is_full());
  CHECK(x.contains(Vector{Q.from_int(3), Q.from_int(-2), Q.zero()}));
  CHECK_FALSE(x.contains(Vector{Q.zero(), Q.zero(), Q.one()}));
  CHECK(x.pivot_complement().size() == 1);
  CHECK(Subspace(Q, 3).is_zero());
}

TEST_CASE("projection and canonical idempotent") {
  const Subspace range = Subspace::span(Q, 2, {{Q.one(), Q.one()}});
  const Subspace null = Subspace::span(Q, 2, {{Q.one(), Q.from_int(-1)}});
  const Matrix p = projection(range, null);
  CHECK(is_idempotent(p));
  CHECK(column_space(p) == range);
  CHECK(kernel(p) == null);
  CHECK(p == Matrix::from_rows(Q, {{Q.parse("1/2"), Q.parse("1/2")}, {Q.parse("1/2"), Q.parse("1/2")}}));
  CHECK_THROWS_AS(projection(range, range), PreconditionError);
  const Matrix c = canonical_idempotent(range);
  CHECK(is_idempotent(c));
  CHECK(column_space(c) == range);
}

TEST_CASE("idempotents are similar to symmetric projections") {
  for (const auto& d : {Q, F5}) {
    Sampler sm(d, 3, 11);
    for (int i = 0; i < 100; ++i) {
      const Matrix e = sm.idempotent();
      const ProjectionSimilarity ps = similarity_to_projection(e);
      CHECK(ps.p == ps.p.transpose());
      CHECK(is_idempotent(ps.p));
      CHECK(ps.u * e * inverse(ps.u) == ps.p);
      CHECK(rank(ps.p) == rank(e));
    }
  }
  CHECK_THROWS_AS(similarity_to_projection(Matrix::from_ints(Q, {{1, 1}, {0, 1}})), PreconditionError);
}

TEST_CASE("block frame decomposition sums back") {
  const Matrix e = Matrix::unit(Q, 3, 0, 0);
  const Matrix g = Matrix::unit(Q, 3, 2, 2);
  const Matrix f = Matrix::unit(Q, 3, 1, 1);
  const BlockFrame frame(e, g, f);
  Sampler sm(Q, 3, 5);
  const Matrix t = sm.box_matrix();
  CHECK(block_decompose(t, frame).sum() == t);
  CHECK_THROWS_AS(BlockFrame(e, e, f), PreconditionError);
}

TEST_CASE("minimal polynomial annihilates and has the generated dimension") {
  Sampler sm(Q, 4, 19);
  for (int i = 0; i < 100; ++i) {
    const Matrix s = i % 2 ? sm.box_matrix() : sm.idempotent();
    const auto mp = minimal_polynomial(s);
    Matrix acc = Matrix::zero(Q, 4);
    for (std::size_t k = 0; k < mp.size(); ++k) acc += mp[k] * s.pow(static_cast<unsigned>(k));
    CHECK(acc.is_zero());
    CHECK(mp.back().is_one());
    CHECK(mp.size() - 1 == generated_algebra_dim(s));
  }
  CHECK(minimal_polynomial(Matrix::identity(Q, 3)).size() == 2);
}
