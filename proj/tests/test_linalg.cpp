#include "doctest.h"

#include "blowuplab/errors.hpp"
#include "blowuplab/linalg.hpp"
#include "support.hpp"

using namespace blowuplab;
using blowuplab::testing::Gen;

TEST_CASE("rank, determinant and kernel on small matrices") {
  auto m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(rank(m) == 2);
  CHECK(determinant(m) == 0);
  const auto kernel = kernel_basis(m);
  REQUIRE(kernel.size() == 1);
  CHECK(is_zero_vector(m * kernel[0]));

  auto h = RationalMatrix::from_rows({{Rational(1, 2), Rational(1, 3)}, {Rational(1, 3), Rational(1, 4)}}, 2);
  CHECK(determinant(h) == Rational(1, 72));
  CHECK(inverse(h) * h == RationalMatrix::identity(2));
  CHECK_THROWS_AS(inverse(m), DomainError);
}

TEST_CASE("leading principal minors") {
  auto m = RationalMatrix::from_rows({{-2, 0, 0}, {0, -2, 0}, {0, 0, -2}}, 3);
  const auto minors = leading_principal_minors(m);
  CHECK(minors == std::vector<Rational>{-2, 4, -8});
}

TEST_CASE("column span membership") {
  auto m = RationalMatrix::from_rows({{1, 0}, {0, 1}, {0, 0}}, 2);
  CHECK(in_column_span(m, {3, 4, 0}));
  CHECK_FALSE(in_column_span(m, {0, 0, 1}));
}

TEST_CASE("property: rank and determinant identities") {
  Gen gen(31);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(gen.integer(1, 5));
    RationalMatrix a(n, n), b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        a(i, j) = gen.integer(0, 3) == 0 ? Rational(0) : gen.rational();
        b(i, j) = gen.rational();
      }
    CHECK(rank(a) == rank(a.transposed()));
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
    CHECK((determinant(a) == 0) == (rank(a) < static_cast<std::size_t>(n)));
    const auto kernel = kernel_basis(a);
    CHECK(kernel.size() + rank(a) == static_cast<std::size_t>(n));
    for (const auto &v : kernel)
      CHECK(is_zero_vector(a * v));
    if (!is_zero(determinant(a)))
      CHECK(a * inverse(a) == RationalMatrix::identity(n));
  }
}
