#include "blowuplab/catalog.hpp"

#include "blowuplab/errors.hpp"

#include <regex>

namespace blowuplab {

namespace {

/// so(3) with each cyclic bracket scaled: [e2,e3] = c1 e1, [e3,e1] = c2 e2,
/// [e1,e2] = c3 e3.
LieAlgebra cyclic_algebra(std::string name, const Rational &c1, const Rational &c2, const Rational &c3) {
  return LieAlgebra::from_brackets(std::move(name), 3,
                                   {
                                       {0, 1, 2, c3},
                                       {1, 2, 0, c1},
                                       {0, 2, 1, -c2}, // [e1,e3] = -[e3,e1]
                                   });
}

} // namespace

LieAlgebra so3() { return cyclic_algebra("so3", 1, 1, 1); }

LieAlgebra sl2() { return cyclic_algebra("sl2", 1, 1, -1); }

LieAlgebra heis3() { return LieAlgebra::from_brackets("heis3", 3, {{0, 1, 2, Rational(1)}}); }

LieAlgebra abelian(int n) { return LieAlgebra::abelian("abelian" + std::to_string(n), n); }

LieAlgebra diagonal_affine(int n) {
  if (n < 1)
    throw DomainError("diagonal_affine(n) needs n >= 1");
  std::vector<BracketEntry> entries;
  for (int i = 1; i <= n; ++i)
    entries.push_back({0, i, i, Rational(1)});
  return LieAlgebra::from_brackets("diagonal_affine" + std::to_string(n), n + 1, entries);
}

RingPtr bundle_base_ring() {
  static const RingPtr ring = make_ring({"y1", "y2"});
  return ring;
}

LieAlgebra ScaledSo3Bundle::fibre_at(const RationalVector &y) const {
  const Rational value = f.evaluate(y);
  return cyclic_algebra("so3_scaled", value, value, value);
}

bool ScaledSo3Bundle::jacobi_holds() const {
  // Structure constants are f * eps_ijk; the cyclic Jacobi sum is f^2 times
  // the so(3) sum, expanded here with polynomial coefficients.
  const int n = 3;
  auto eps = [](int i, int j, int k) -> int {
    if (i == j || j == k || i == k)
      return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
  };
  auto c = [&](int i, int j, int k) { return f * Rational(eps(i, j, k)); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int out = 0; out < n; ++out) {
          Polynomial sum(f.ring());
          for (int m = 0; m < n; ++m) {
            sum += c(i, j, m) * c(m, k, out);
            sum += c(j, k, m) * c(m, i, out);
            sum += c(k, i, m) * c(m, j, out);
          }
          if (!sum.is_zero())
            return false;
        }
  return true;
}

ScaledSo3Bundle scaled_so3_bundle(Polynomial f) {
  if (!same_ring(f.ring(), bundle_base_ring()))
    f = f.rename(bundle_base_ring());
  return ScaledSo3Bundle{std::move(f)};
}

const std::vector<CatalogEntry> &catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (int n = 1; n <= 6; ++n)
      out.push_back({"abelian" + std::to_string(n), n, {"LiftsAsPoisson", 0, "abelian R^n, height 0"}, "abelian",
                     false, [n] { return abelian(n); }});
    for (int n = 1; n <= 5; ++n)
      out.push_back({"diagonal_affine" + std::to_string(n),
                     n + 1,
                     {"LiftsAsPoisson", 0, "R x| R^n with lambda -> lambda id, height 0"},
                     "diagonal_affine",
                     false,
                     [n] { return diagonal_affine(n); }});
    out.push_back({"so3", 3, {"LiftsAsDiracOnly", 1, "compact so(3), height 1"}, "so3", false, [] { return so3(); }});
    out.push_back({"sl2", 3, {"DoesNotLift", std::nullopt, "sl2(R): heights 0 on the null cone, 1 elsewhere"}, "sl2",
                   false, [] { return sl2(); }});
    out.push_back({"heis3", 3, {"DoesNotLift", std::nullopt, "Heisenberg: heights 0 and 1"}, "heis3", false,
                   [] { return heis3(); }});
    out.push_back({"scaled_so3_bundle",
                   3,
                   {"LiftsAsDiracOnly", 1, "so(3) fibres scaled by f(y1,y2); default f = 1"},
                   "scaled_so3_bundle",
                   true,
                   [] { return so3().renamed("scaled_so3_bundle"); }});
    return out;
  }();
  return entries;
}

std::optional<CatalogEntry> find_catalog_entry(const std::string &name) {
  for (const auto &e : catalog())
    if (e.name == name)
      return e;
  if (name == "scaled_so3")
    return find_catalog_entry("scaled_so3_bundle");

  static const std::regex parametrised(R"((abelian|diagonal_affine)\(?(\d+)\)?)");
  std::smatch m;
  if (!std::regex_match(name, m, parametrised))
    return std::nullopt;
  const int n = std::stoi(m[2].str());
  if (n < 1 || n > 11)
    return std::nullopt;
  if (m[1] == "abelian")
    return CatalogEntry{"abelian" + std::to_string(n),       n,    {"LiftsAsPoisson", 0, "abelian R^n, height 0"},
                        "abelian",
                        false, [n] { return abelian(n); }};
  return CatalogEntry{"diagonal_affine" + std::to_string(n),
                      n + 1,
                      {"LiftsAsPoisson", 0, "R x| R^n with lambda -> lambda id, height 0"},
                      "diagonal_affine",
                      false,
                      [n] { return diagonal_affine(n); }};
}

} // namespace blowuplab
