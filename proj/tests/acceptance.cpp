// Acceptance suite: one [PASS]/[FAIL] line per criterion.
// Usage: acceptance PATH_TO_BLOWUPLAB_CLI

#include "blowuplab/blowup_geometry.hpp"
#include "blowuplab/catalog.hpp"
#include "blowuplab/classify.hpp"
#include "blowuplab/errors.hpp"
#include "blowuplab/lie_algebra.hpp"
#include "blowuplab/poisson_spinor.hpp"
#include "support.hpp"

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <sys/wait.h>

using namespace blowuplab;
using namespace blowuplab::testing;

namespace {

std::string cli_path;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool condition, const std::string &what) {
    if (!condition) {
      if (pass)
        detail << what;
      else
        detail << "; " << what;
      pass = false;
    }
  }
};

struct Captured {
  int status = -1;
  std::string out;
};

Captured run(const std::string &args) {
  Captured c;
  const std::string command = "\"" + cli_path + "\" " + args + " 2>/dev/null";
  FILE *pipe = popen(command.c_str(), "r");
  if (!pipe)
    return c;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    c.out.append(buffer.data(), n);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

PolyForm so3_leading(int chart) {
  const auto ring = chart_ring(3);
  auto coeff = Polynomial(ring, 1);
  for (int j = 0; j < 3; ++j)
    if (j != chart)
      coeff += Polynomial::variable(ring, j) * Polynomial::variable(ring, j);
  PolyForm f(3, ring);
  f.add_term(Blade{1} << chart, coeff);
  return f;
}

void criterion1(Outcome &o) {
  const auto v = lift_verdict(so3());
  o.require(v.kind == LiftKind::LiftsAsDiracOnly, "verdict " + to_string(v.kind));
  o.require(v.height == std::optional<int>(1), "height is not 1");
  o.require(v.all_agree(), "cross-checks disagree");
  o.require(v.charts.size() == 3, "expected three charts");
  for (const auto &c : v.charts) {
    const auto expected = so3_leading(c.chart);
    o.require(c.order == 1, "chart " + std::to_string(c.chart + 1) + " order " + std::to_string(c.order));
    o.require(c.status == Nonvanishing::Certified, "chart " + std::to_string(c.chart + 1) + " not certified");
    o.require(c.leading_form == expected || c.leading_form == -expected,
              "chart " + std::to_string(c.chart + 1) + " leading form " + c.leading_form.to_string("x~"));
  }
  const auto spectrum = sample_height_spectrum(so3(), 200, kDefaultSeed);
  o.require(spectrum.heights() == std::vector<int>{1}, "sampled heights not {1}");
  const auto cli = run("analyze --catalog so3");
  o.require(cli.status == 0, "CLI exit " + std::to_string(cli.status));
  o.require(cli.out.find("LiftsAsDiracOnly (k=1)") != std::string::npos, "CLI verdict line missing");
  if (o.pass)
    o.detail << "k=1, LiftsAsDiracOnly, order 1 Certified in charts 1-3, leading (1 + sum x~j^2) dx~i";
}

void criterion2(Outcome &o) {
  const auto v = lift_verdict(sl2());
  o.require(v.kind == LiftKind::DoesNotLift, "verdict " + to_string(v.kind));
  o.require(v.witnesses.has_value(), "no witness pair");
  if (v.witnesses) {
    const std::set<int> hs{v.witnesses->first.height, v.witnesses->second.height};
    o.require(hs == std::set<int>{0, 1}, "witness heights not {0,1}");
    o.require(height(sl2(), v.witnesses->first.xi) == v.witnesses->first.height, "witness 1 height not reproduced");
    o.require(height(sl2(), v.witnesses->second.xi) == v.witnesses->second.height, "witness 2 height not reproduced");
  }
  const auto form = symbolic_xi_wedge_dxi(sl2());
  const auto ring = form.context();
  const auto expected = parse_polynomial("-xi1^2 - xi2^2 + xi3^2", ring);
  const auto coeff = form.coefficient(0b111);
  o.require(form.terms().size() == 1, "xi^dxi has more than one component");
  o.require(coeff == expected || coeff == -expected, "coefficient " + coeff.to_string());
  if (o.pass)
    o.detail << "DoesNotLift, witness heights {0,1}, xi^dxi = (" << coeff.to_string() << ") vol";
}

void criterion3(Outcome &o) {
  std::vector<std::pair<LieAlgebra, int>> cases;
  for (int n = 1; n <= 6; ++n)
    cases.emplace_back(abelian(n), 0);
  for (int n = 1; n <= 5; ++n)
    cases.emplace_back(diagonal_affine(n), 0);
  cases.emplace_back(so3(), 1);
  for (const auto &[A, k] : cases) {
    const auto c = classify_constant_height(A);
    o.require(c.constant_height == std::optional<int>(k), A.name() + " classified height differs");
    const auto s = sample_height_spectrum(A, 500, kDefaultSeed);
    o.require(s.heights() == std::vector<int>{k}, A.name() + " 500-sample spectrum differs");
  }
  if (o.pass)
    o.detail << cases.size() << " algebras, 500-sample spectra match";
}

void criterion4(Outcome &o) {
  std::size_t rows = 0;
  for (const auto &A : {so3(), sl2(), heis3(), abelian(4), diagonal_affine(3)}) {
    const auto d = line_order_dictionary(A, 200, kDefaultSeed);
    o.require(d.size() == 200, A.name() + " produced " + std::to_string(d.size()) + " rows");
    for (const auto &r : d) {
      ++rows;
      o.require(r.ok(), A.name() + " at " + to_string(r.xi));
    }
  }
  if (o.pass)
    o.detail << rows << " covectors, 0 violations";
}

void criterion5(Outcome &o) {
  std::size_t points = 0;
  for (const auto &A : catalog_algebras()) {
    const auto r = rank_conditions_crosscheck(A, 100, kDefaultSeed);
    points += r.rows.size();
    o.require(r.rows.size() == 100, A.name() + " sampled " + std::to_string(r.rows.size()));
    o.require(r.violations() == 0, A.name() + ": " + r.summary());
  }
  if (o.pass)
    o.detail << points << " points over " << catalog_algebras().size() << " algebras, 0 violations";
}

void criterion6(Outcome &o) {
  const auto base = bundle_base_ring();
  const auto one = bundle_lift_verdict(scaled_so3_bundle(parse_polynomial("1", base)));
  o.require(one.kind == std::optional<LiftKind>(LiftKind::LiftsAsDiracOnly), "f=1 verdict");
  for (const auto &c : one.charts)
    o.require(c.order == 1 && c.status == Nonvanishing::Certified, "f=1 chart order");
  const auto zero = bundle_lift_verdict(scaled_so3_bundle(parse_polynomial("0", base)));
  o.require(zero.kind == std::optional<LiftKind>(LiftKind::LiftsAsPoisson), "f=0 verdict");
  for (const auto &c : zero.charts)
    o.require(c.order == 2 && c.status == Nonvanishing::Certified, "f=0 chart order");
  const auto bundle = scaled_so3_bundle(parse_polynomial("y1", base));
  const auto y = bundle_lift_verdict(bundle);
  o.require(y.kind == std::optional<LiftKind>(LiftKind::DoesNotLift), "f=y1 verdict");
  std::string point;
  for (const auto &c : y.charts) {
    o.require(c.status == Nonvanishing::Falsified && c.falsifying_point.has_value(), "f=y1 chart not falsified");
    if (!c.falsifying_point)
      continue;
    const auto &p = *c.falsifying_point;
    o.require(is_zero(p[c.chart]), "falsifying point off the divisor");
    for (const auto &[b, coeff] : c.leading_form.terms())
      o.require(is_zero(coeff.evaluate(p)), "leading form nonzero at falsifying point");
    if (point.empty())
      point = to_string(p);
  }
  o.require(one.all_agree() && zero.all_agree() && y.all_agree(), "bundle cross-checks disagree");
  if (o.pass)
    o.detail << "f=1 order 1, f=0 order 2, f=y1 Falsified at " << point;
}

void criterion7(Outcome &o) {
  Gen gen(1729);
  const std::vector<LieAlgebra> lie{so3(), sl2(), heis3(), diagonal_affine(2), abelian(3)};
  auto pick = [&]() -> const LieAlgebra & { return lie[static_cast<std::size_t>(gen.integer(0, 4))]; };

  int valid = 0, broken = 0;
  for (int t = 0; t < 120; ++t) {
    const auto B = pick().change_basis(gen.invertible(3));
    const bool d2 = d_squared_vanishes(B, {gen.mixed_rational_form(3)});
    o.require(d2 && jacobi_check(B).empty(), "Lie table with d^2 != 0");
    ++valid;
  }
  for (int t = 0; broken < 20 || t < 100; ++t) {
    const auto P = perturbed(pick(), gen);
    const bool jacobi = jacobi_check(P).empty();
    o.require(jacobi == d_squared_vanishes(P), "d^2 = 0 and Jacobi disagree on " + P.name());
    broken += jacobi ? 0 : 1;
  }

  for (int t = 0; t < 100; ++t) {
    const auto &A = pick();
    const auto xi = gen.nonzero_vector(3);
    auto scaled = xi;
    const auto s = gen.nonzero_rational();
    for (auto &x : scaled)
      x *= s;
    o.require(height(A, xi) == height(A, scaled), "height not scale invariant");
  }

  for (int t = 0; t < 100; ++t) {
    const int n = static_cast<int>(gen.integer(2, 5));
    const int p = static_cast<int>(gen.integer(0, n)), q = static_cast<int>(gen.integer(0, n));
    const auto a = gen.rational_form(n, p), b = gen.rational_form(n, q), c = gen.mixed_rational_form(n);
    o.require(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)), "wedge not associative");
    o.require(wedge(a, b) == ((p * q) % 2 == 0 ? wedge(b, a) : -wedge(b, a)), "wedge not graded commutative");
    const auto v = gen.rational_vector_field(n);
    o.require(interior(v, wedge(a, c)) == wedge(interior(v, a), c) + (p % 2 == 0 ? wedge(a, interior(v, c))
                                                                             : -wedge(a, interior(v, c))),
              "interior not an antiderivation");
    o.require(interior(v, interior(v, c)).is_zero(), "interior does not square to zero");
  }

  for (int t = 0; t < 100; ++t) {
    const int m = static_cast<int>(gen.integer(2, 4));
    const auto ring = ambient_ring(m);
    const int chart = static_cast<int>(gen.integer(0, m - 1));
    const auto a = gen.poly_form(ring, m, 2), b = gen.poly_form(ring, m, 2);
    o.require(blowup_pullback(wedge(a, b), chart).form ==
                  wedge(blowup_pullback(a, chart).form, blowup_pullback(b, chart).form),
              "pullback not wedge-functorial");
  }

  for (int t = 0; t < 100; ++t) {
    const int m = static_cast<int>(gen.integer(2, 4));
    const auto ring = ambient_ring(m);
    VectorField X{ring, {}};
    for (int k = 0; k < m; ++k)
      X.components.push_back(gen.ideal_polynomial(ring, m, 3, 3));
    const int chart = static_cast<int>(gen.integer(0, m - 1));
    const auto L = lift_vector_field(X, chart);
    const auto f = gen.polynomial(ring, 3, 3);
    o.require(L.apply(pullback_function(f, chart, m)) == pullback_function(X.apply(f), chart, m),
              "lifted field not p-related");
    o.require(L.tangent_to_divisor(), "lifted field not tangent to the divisor");
  }
  if (o.pass)
    o.detail << valid << " Lie tables, " << broken << " broken perturbed tables, 100 cases each for height "
             << "scaling, wedge/interior laws, pullback and lifted fields";
}

void criterion8(Outcome &o) {
  std::size_t entries = 0;
  auto check = [&](const std::string &name, std::optional<LiftKind> kind, const std::vector<OrderCertificate> &charts,
                   int m) {
    bool full = true;
    for (const auto &c : charts)
      full = full && c.status == Nonvanishing::Certified && c.order == m - 1;
    o.require(kind.has_value(), name + " undetermined");
    o.require((kind == std::optional<LiftKind>(LiftKind::LiftsAsPoisson)) == full, name + ": Poisson vs order m-1");
    ++entries;
  };
  for (const auto &e : catalog()) {
    if (e.is_bundle) {
      for (const std::string f : {"1", "0", "y1"}) {
        const auto v = bundle_lift_verdict(scaled_so3_bundle(parse_polynomial(f, bundle_base_ring())));
        check(e.name + " f=" + f, v.kind, v.charts, 3);
      }
      continue;
    }
    const auto A = e.build();
    const auto v = lift_verdict(A);
    check(e.name, v.kind, v.charts, A.dimension());
  }
  if (o.pass)
    o.detail << entries << " catalog cases";
}

void criterion9(Outcome &o) {
  const std::string args = "analyze --catalog heis3 --format machine --seed 1729";
  const auto a = run(args);
  const auto b = run(args);
  o.require(a.status == 0 && b.status == 0, "CLI exit " + std::to_string(a.status) + "/" + std::to_string(b.status));
  o.require(!a.out.empty(), "empty output");
  o.require(a.out == b.out, "outputs differ");
  if (o.pass)
    o.detail << a.out.size() << " bytes, identical";
}

} // namespace

int main(int argc, char **argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance PATH_TO_BLOWUPLAB_CLI\n";
    return 64;
  }
  cli_path = argv[1];
  const std::vector<std::pair<std::string, std::function<void(Outcome &)>>> criteria{
      {"so3 pipeline", criterion1},
      {"sl2 non-constant height", criterion2},
      {"classification table", criterion3},
      {"line-order dictionary", criterion4},
      {"rank conditions on the divisor", criterion5},
      {"scaled so3 bundle trichotomy", criterion6},
      {"property suites", criterion7},
      {"Poisson iff order m-1", criterion8},
      {"determinism", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception &e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].first << ": " << o.detail.str()
              << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
