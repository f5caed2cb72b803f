#include "doctest.h"

#include "blowuplab/catalog.hpp"
#include "blowuplab/classify.hpp"
#include "blowuplab/errors.hpp"
#include "support.hpp"

using namespace blowuplab;
using namespace blowuplab::testing;

TEST_CASE("abelian and diagonal affine algebras have constant height 0") {
  for (int n = 1; n <= 6; ++n) {
    const auto v = classify_constant_height(abelian(n));
    CHECK(v.family == AlgebraFamily::Abelian);
    CHECK(v.parameter == n);
    CHECK(v.constant_height == 0);
  }
  for (int n = 1; n <= 5; ++n) {
    const auto v = classify_constant_height(diagonal_affine(n));
    CHECK(v.family == AlgebraFamily::DiagonalAffine);
    CHECK(v.parameter == n);
    CHECK(v.constant_height == 0);
    REQUIRE(v.diagonal);
    CHECK(v.diagonal->ideal_basis.size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("diagonal affine generator is normalised to eigenvalue 1") {
  // [X, e_i] = 2 e_i in a scrambled basis
  auto L = LieAlgebra::from_brackets("scaled", 3, {{0, 1, 1, Rational(2)}, {0, 2, 2, Rational(2)}});
  Gen gen(51);
  const auto P = gen.invertible(3);
  const auto B = L.change_basis(P);
  const auto data = is_diagonal_affine(B);
  REQUIRE(data);
  for (const auto &h : data->ideal_basis)
    CHECK(B.bracket(data->generator, h) == h);
}

TEST_CASE("unequal eigenvalues are not diagonal affine and have mixed heights") {
  auto L = LieAlgebra::from_brackets("R x| R^2 (1,2)", 3, {{0, 1, 1, Rational(1)}, {0, 2, 2, Rational(2)}});
  CHECK_FALSE(is_diagonal_affine(L));
  CHECK(height(L, {0, 1, 0}) == 0);
  CHECK(height(L, {0, 1, 1}) == 1);
  const auto v = classify_constant_height(L);
  CHECK(v.family == AlgebraFamily::NotConstantHeight);
  REQUIRE(v.witnesses);
  CHECK(v.witnesses->first.height == 0);
  CHECK(v.witnesses->second.height == 1);
}

TEST_CASE("so3 is recognised in any basis") {
  Gen gen(52);
  for (int trial = 0; trial < 10; ++trial) {
    const auto B = so3().change_basis(gen.invertible(3));
    const auto v = classify_constant_height(B);
    CHECK(v.family == AlgebraFamily::So3);
    CHECK(v.constant_height == 1);
  }
  CHECK(killing_negative_definite(so3()));
  CHECK_FALSE(killing_negative_definite(sl2()));
}

TEST_CASE("sl2 and heis3 are not of constant height") {
  for (const auto &L : {sl2(), heis3()}) {
    const auto v = classify_constant_height(L);
    CHECK(v.family == AlgebraFamily::NotConstantHeight);
    REQUIRE(v.witnesses);
    CHECK(v.witnesses->first.height == 0);
    CHECK(v.witnesses->second.height == 1);
    CHECK(height(L, v.witnesses->first.xi) == 0);
    CHECK(height(L, v.witnesses->second.xi) == 1);
    CHECK_FALSE(v.constant_height);
  }
}

TEST_CASE("so3 + R and heis3 + R are not of constant height") {
  auto s = LieAlgebra::from_brackets("so3+R", 4, {{0, 1, 2, Rational(1)}, {1, 2, 0, Rational(1)}, {0, 2, 1, Rational(-1)}});
  CHECK(classify_constant_height(s).family == AlgebraFamily::NotConstantHeight);
  auto h = LieAlgebra::from_brackets("heis3+R", 4, {{0, 1, 2, Rational(1)}});
  CHECK(classify_constant_height(h).family == AlgebraFamily::NotConstantHeight);
}

TEST_CASE("witness search cap is enforced") {
  WitnessSearchOptions options;
  options.cap = 1;
  CHECK_THROWS_AS(classify_constant_height(heis3(), options), WitnessNotFound);
}

TEST_CASE("height spectra") {
  CHECK(sample_height_spectrum(so3(), 500).heights() == std::vector<int>{1});
  CHECK(sample_height_spectrum(heis3(), 200).heights() == std::vector<int>{0, 1});
  CHECK(sample_height_spectrum(sl2(), 200).heights() == std::vector<int>{0, 1});
  CHECK(sample_height_spectrum(so3(), 500).samples == 500);
  CHECK_THROWS_AS(sample_height_spectrum(so3(), 0), DomainError);
}

TEST_CASE("seeded covectors are deterministic and start with the structured ones") {
  const auto a = seeded_covectors(3, 50, 1729);
  const auto b = seeded_covectors(3, 50, 1729);
  CHECK(a == b);
  CHECK(a.size() == 50);
  CHECK(a[0] == RationalVector{1, 0, 0});
  CHECK(seeded_covectors(3, 50, 7) != a);
  // sample s depends only on (seed, s)
  CovectorSampler s(99, 4);
  CHECK(s.sample(17) == CovectorSampler(99, 4).sample(17));
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto v = s.sample(i);
    CHECK_FALSE(is_zero_vector(v));
    for (const auto &x : v) {
      CHECK(abs(x) <= 20);
      CHECK(x.get_den() <= 3);
    }
  }
}
