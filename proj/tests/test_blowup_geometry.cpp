#include "doctest.h"

#include "blowuplab/blowup_geometry.hpp"
#include "blowuplab/catalog.hpp"
#include "blowuplab/errors.hpp"
#include "support.hpp"

using namespace blowuplab;
using namespace blowuplab::testing;

namespace {

Polynomial P(const std::string &text, const RingPtr &ring) { return parse_polynomial(text, ring); }

VectorField random_field(Gen &gen, int m) {
  const auto ring = ambient_ring(m);
  VectorField X{ring, {}};
  for (int k = 0; k < m; ++k)
    X.components.push_back(gen.integer(0, 3) == 0 ? Polynomial(ring) : gen.ideal_polynomial(ring, m, 3, 3));
  return X;
}

} // namespace

TEST_CASE("so3: lift of pi^sharp dx1 in chart 1 is rotation of the fibre") {
  const auto pi = linear_poisson(so3());
  const auto lifted = lift_vector_field(VectorField{pi.ring(), pi.sharp(RationalVector{1, 0, 0})}, 0);
  const auto ring = chart_ring(3);
  CHECK(lifted.components[0].is_zero());
  CHECK(lifted.components[1] == P("x~3", ring));
  CHECK(lifted.components[2] == P("-x~2", ring));
  CHECK(lifted.tangent_to_divisor());
}

TEST_CASE("lifts of simple fields") {
  const auto ring = ambient_ring(3);
  SUBCASE("Euler field lifts to x~c d/dx~c") {
    VectorField E{ring, {P("x1", ring), P("x2", ring), P("x3", ring)}};
    for (int c = 0; c < 3; ++c) {
      const auto L = lift_vector_field(E, c);
      for (int j = 0; j < 3; ++j)
        CHECK(L.components[j] == (j == c ? Polynomial::variable(L.ring, c) : Polynomial(L.ring)));
    }
  }
  SUBCASE("x3 d/dx3 in chart 1") {
    VectorField X{ring, {Polynomial(ring), Polynomial(ring), P("x3", ring)}};
    const auto L = lift_vector_field(X, 0);
    CHECK(L.components[0].is_zero());
    CHECK(L.components[1].is_zero());
    CHECK(L.components[2] == P("x~3", L.ring));
  }
  SUBCASE("zero field") {
    VectorField Z{ring, {Polynomial(ring), Polynomial(ring), Polynomial(ring)}};
    const auto L = lift_vector_field(Z, 1);
    for (const auto &c : L.components)
      CHECK(c.is_zero());
  }
  SUBCASE("field not vanishing at the origin") {
    VectorField X{ring, {P("1 + x1", ring), Polynomial(ring), Polynomial(ring)}};
    CHECK_THROWS_AS(lift_vector_field(X, 0), DomainError);
  }
  SUBCASE("chart out of range") {
    VectorField X{ring, {P("x1", ring), Polynomial(ring), Polynomial(ring)}};
    CHECK_THROWS_AS(lift_vector_field(X, 3), DomainError);
  }
}

TEST_CASE("property: lifted field is p-related and tangent to the divisor") {
  Gen gen(71);
  for (int trial = 0; trial < 120; ++trial) {
    const int m = static_cast<int>(gen.integer(2, 4));
    const auto X = random_field(gen, m);
    const int chart = static_cast<int>(gen.integer(0, m - 1));
    const auto L = lift_vector_field(X, chart);
    CHECK(L.tangent_to_divisor());
    // X~(p*f) = p*(X f) for coordinate functions and a random function.
    for (int k = 0; k < m; ++k) {
      const auto xk = Polynomial::variable(X.ring, k);
      CHECK(L.apply(pullback_function(xk, chart, m)) == pullback_function(X.apply(xk), chart, m));
    }
    const auto f = gen.polynomial(X.ring, 3, 3);
    CHECK(L.apply(pullback_function(f, chart, m)) == pullback_function(X.apply(f), chart, m));
  }
}

TEST_CASE("divisor points") {
  CHECK(divisor_point({2, 4, -6}, 0) == RationalVector{0, 2, -3});
  CHECK(divisor_point({2, 4, -6}, 2) == RationalVector{Rational(-1, 3), Rational(-2, 3), 0});
  CHECK_THROWS_AS(divisor_point({0, 1, 1}, 0), DomainError);
}

TEST_CASE("distribution D on the divisor") {
  CHECK(distribution_D(so3(), {1, 2, 3}).rank == 2);
  CHECK(distribution_D(so3(), {0, 0, 1}).rank == 2);
  CHECK(distribution_D(abelian(3), {1, 1, 1}).rank == 0);
  CHECK(distribution_D(heis3(), {0, 0, 1}).rank == 2);
  CHECK(distribution_D(heis3(), {1, 0, 0}).rank == 0);
  CHECK(distribution_D(sl2(), {1, 0, 0}).rank == 2);
  CHECK(distribution_D(sl2(), {1, 0, 1}).rank == 0);
  const auto s = distribution_D(so3(), {0, 3, 1});
  CHECK(s.chart == 1);
  CHECK(s.point == RationalVector{0, 0, Rational(1, 3)});
  for (const auto &b : s.basis)
    CHECK(is_zero(b[s.chart]));
  CHECK_THROWS_AS(distribution_D(so3(), {0, 0, 0}), DomainError);
  CHECK_THROWS_AS(distribution_D(so3(), {1, 0}), StructuralError);
}

TEST_CASE("rank conditions at sampled divisor points") {
  const auto so = rank_conditions_crosscheck(so3(), 100);
  CHECK(so.rows.size() == 100);
  CHECK(so.summary() == "constant k=1");
  const auto s = rank_conditions_crosscheck(sl2(), 100);
  CHECK(s.violations() == 0);
  CHECK(s.heights == std::set<int>{0, 1});
  CHECK(s.summary() == "pointwise-consistent, globally non-constant");
  CHECK(rank_conditions_crosscheck(abelian(4), 50).summary() == "constant k=0");
  CHECK(rank_conditions_crosscheck(diagonal_affine(3), 50).summary() == "constant k=0");
  CHECK_THROWS_AS(rank_conditions_crosscheck(so3(), 0), DomainError);
}

TEST_CASE("rank conditions hold pointwise across the catalog") {
  for (const auto &A : catalog_algebras()) {
    const auto r = rank_conditions_crosscheck(A, 200);
    CHECK_MESSAGE(r.violations() == 0, A.name());
    for (const auto &row : r.rows) {
      CHECK(row.rank_matches_height());
      CHECK(row.cartan_identity());
    }
  }
}

TEST_CASE("property: D rank is invariant under change of basis") {
  Gen gen(72);
  const std::vector<LieAlgebra> algebras{so3(), sl2(), heis3(), diagonal_affine(2)};
  for (int trial = 0; trial < 60; ++trial) {
    const auto &A = algebras[static_cast<std::size_t>(gen.integer(0, 3))];
    const auto Pm = gen.invertible(3);
    const auto B = A.change_basis(Pm);
    const auto xi = gen.nonzero_vector(3);
    CHECK(distribution_D(B, transform_covector(Pm, xi)).rank == distribution_D(A, xi).rank);
  }
}
