#include "doctest.h"

#include "blowuplab/errors.hpp"
#include "blowuplab/exterior.hpp"
#include "support.hpp"

using namespace blowuplab;
using blowuplab::testing::Gen;
using Form = GradedForm<Rational>;
using Vec = GradedVector<Rational>;

namespace {

Form dx(int n, int i) { return Form::basis(n, i, RationalContext{}); }
Vec e(int n, int i) { return Vec::basis(n, i, RationalContext{}); }

Vec bivector(int n, int i, int j) {
  Vec v(n, RationalContext{});
  v.add_term((Blade{1} << i) | (Blade{1} << j), Rational(1));
  return v;
}

} // namespace

TEST_CASE("blade encoding and order") {
  CHECK(blade_from_indices({0, 2}) == 0b101u);
  CHECK(blade_indices(0b1010u) == std::vector<int>{1, 3});
  BladeOrder order;
  CHECK(order(0b100u, 0b011u)); // degree first
  CHECK(order(0b011u, 0b101u)); // then lexicographic: (0,1) < (0,2)
}

TEST_CASE("wedge signs") {
  const int n = 3;
  CHECK(wedge(dx(n, 0), dx(n, 1)) == -wedge(dx(n, 1), dx(n, 0)));
  CHECK(wedge(dx(n, 0), dx(n, 0)).is_zero());
  auto vol = wedge(wedge(dx(n, 0), dx(n, 1)), dx(n, 2));
  CHECK(vol == Form::volume(n, RationalContext{}));
  CHECK(wedge(wedge(dx(n, 2), dx(n, 0)), dx(n, 1)) == vol); // cyclic permutation is even
  CHECK(wedge(dx(n, 0), dx(n, 1)).to_string() == "dx1^dx2");
}

TEST_CASE("interior products and multi-insertion order") {
  const int n = 3;
  auto vol = Form::volume(n, RationalContext{});
  CHECK(interior(e(n, 0), vol) == wedge(dx(n, 1), dx(n, 2)));
  CHECK(interior(e(n, 1), vol) == -wedge(dx(n, 0), dx(n, 2)));
  // i_{e1^e2} = i_{e2} i_{e1}
  CHECK(multi_interior(bivector(n, 0, 1), vol) == interior(e(n, 1), interior(e(n, 0), vol)));
  CHECK(multi_interior(bivector(n, 0, 1), vol) == dx(n, 2));
  CHECK_THROWS_AS(interior(bivector(n, 0, 1), vol), DomainError);
}

TEST_CASE("exp_interior keeps factorial denominators exact") {
  // pi = e1^e2 + e3^e4 on R^4: e^{i_pi} vol = vol + dx3^dx4 + dx1^dx2 + (1/2)(1 + 1)
  const int n = 4;
  auto pi = bivector(n, 0, 1) + bivector(n, 2, 3);
  auto phi = exp_interior(pi, Form::volume(n, RationalContext{}));
  CHECK(phi.coefficient(0) == 1);
  CHECK(phi.coefficient(blade_from_indices({2, 3})) == 1);
  CHECK(phi.coefficient(blade_from_indices({0, 1})) == 1);
  CHECK(phi.coefficient(Form::full_blade(n)) == 1);
  CHECK(phi.terms().size() == 4);

  auto doubled = exp_interior(pi.scaled(Rational(2)), Form::volume(n, RationalContext{}));
  CHECK(doubled.coefficient(0) == 4); // (1/2) * 2 * 2 * 2
  CHECK_THROWS_AS(exp_interior(e(n, 0), Form::volume(n, RationalContext{})), DomainError);
}

TEST_CASE("dimension limits and mismatches") {
  CHECK_THROWS_AS(Form(33, RationalContext{}), StructuralError);
  CHECK_NOTHROW(Form(32, RationalContext{}));
  CHECK_THROWS_AS(wedge(dx(2, 0), dx(3, 0)), StructuralError);
  CHECK_THROWS_AS(Form::basis(3, 3, RationalContext{}), DomainError);
  auto r1 = make_ring({"a"});
  auto r2 = make_ring({"b"});
  CHECK_THROWS_AS(GradedForm<Polynomial>::volume(2, r1) + GradedForm<Polynomial>::volume(2, r2), StructuralError);
}

TEST_CASE("polynomial-coefficient forms print non-atomic coefficients in parentheses") {
  auto ring = make_ring({"x~1", "x~2"});
  GradedForm<Polynomial> f(2, ring);
  f.add_term(0b01, parse_polynomial("1 + x~2^2", ring));
  f.add_term(0b10, parse_polynomial("-x~1", ring));
  CHECK(f.to_string("x~") == "(1 + x~2^2)*dx~1 - x~1*dx~2");
}

TEST_CASE("property: wedge is associative and graded commutative") {
  Gen gen(21);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(gen.integer(2, 6));
    const int p = static_cast<int>(gen.integer(0, n));
    const int q = static_cast<int>(gen.integer(0, n));
    auto a = gen.rational_form(n, p);
    auto b = gen.rational_form(n, q);
    auto c = gen.mixed_rational_form(n);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    CHECK(wedge(a, b) == ((p * q) % 2 == 0 ? wedge(b, a) : -wedge(b, a)));
    CHECK(wedge(a, b + c) == wedge(a, b) + wedge(a, c));
  }
}

TEST_CASE("property: interior product is an antiderivation of square zero") {
  Gen gen(22);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(gen.integer(2, 6));
    const int p = static_cast<int>(gen.integer(0, n));
    auto a = gen.rational_form(n, p);
    auto b = gen.mixed_rational_form(n);
    auto v = gen.rational_vector_field(n);
    auto w = gen.rational_vector_field(n);
    const auto lhs = interior(v, wedge(a, b));
    const auto rhs = wedge(interior(v, a), b) + (p % 2 == 0 ? wedge(a, interior(v, b)) : -wedge(a, interior(v, b)));
    CHECK(lhs == rhs);
    CHECK(interior(v, interior(v, b)).is_zero());
    CHECK(interior(v, interior(w, b)) == -interior(w, interior(v, b)));
  }
}

TEST_CASE("property: multi-insertion of a blade equals ordered single insertions") {
  Gen gen(23);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = static_cast<int>(gen.integer(2, 6));
    const int k = static_cast<int>(gen.integer(1, n));
    const Blade blade = gen.blade(n, k);
    Vec w(n, RationalContext{});
    w.add_term(blade, Rational(1));
    auto a = gen.mixed_rational_form(n, 5);
    auto expected = a;
    for (int j : blade_indices(blade))
      expected = interior(e(n, j), expected);
    CHECK(multi_interior(w, a) == expected);
  }
}
