#pragma once

// Seeded generators shared by the unit tests and the acceptance suite.

#include "blowuplab/catalog.hpp"
#include "blowuplab/exterior.hpp"
#include "blowuplab/lie_algebra.hpp"
#include "blowuplab/linalg.hpp"
#include "blowuplab/poisson_spinor.hpp"
#include "blowuplab/sampling.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace blowuplab::testing {

class Gen {
public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) { return uniform_int(engine_, lo, hi); }

  Rational rational(std::int64_t range = 5) {
    Rational q(integer(-range, range), integer(1, 3));
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational(std::int64_t range = 5) {
    for (;;) {
      auto q = rational(range);
      if (!is_zero(q))
        return q;
    }
  }

  RationalVector vector(int n, std::int64_t range = 5) {
    RationalVector v(n);
    for (auto &x : v)
      x = rational(range);
    return v;
  }

  RationalVector nonzero_vector(int n, std::int64_t range = 5) {
    for (;;) {
      auto v = vector(n, range);
      if (!is_zero_vector(v))
        return v;
    }
  }

  RationalMatrix invertible(int n, std::int64_t range = 3) {
    for (;;) {
      RationalMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          m(i, j) = integer(-range, range);
      if (!is_zero(determinant(m)))
        return m;
    }
  }

  /// Sparse polynomial with at most `terms` monomials of degree <= max_degree.
  Polynomial polynomial(const RingPtr &ring, int terms = 3, int max_degree = 2) {
    Polynomial p(ring);
    const int count = static_cast<int>(integer(0, terms));
    for (int t = 0; t < count; ++t) {
      Exponents e(ring->size());
      int budget = static_cast<int>(integer(0, max_degree));
      while (budget-- > 0)
        ++e[integer(0, static_cast<std::int64_t>(ring->size()) - 1)];
      p += Polynomial::monomial(ring, e, rational());
    }
    return p;
  }

  /// Polynomial in the ideal generated by the first m variables.
  Polynomial ideal_polynomial(const RingPtr &ring, int m, int terms = 3, int max_degree = 2) {
    Polynomial p(ring);
    const int count = static_cast<int>(integer(1, terms));
    for (int t = 0; t < count; ++t) {
      Exponents e(ring->size());
      ++e[integer(0, m - 1)];
      int budget = static_cast<int>(integer(0, max_degree - 1));
      while (budget-- > 0)
        ++e[integer(0, static_cast<std::int64_t>(ring->size()) - 1)];
      p += Polynomial::monomial(ring, e, rational());
    }
    return p;
  }

  Blade blade(int n, int degree) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i)
      idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), engine_);
    idx.resize(degree);
    std::sort(idx.begin(), idx.end());
    return blade_from_indices(idx);
  }

  GradedForm<Rational> rational_form(int n, int degree, int terms = 3) {
    GradedForm<Rational> f(n, RationalContext{});
    for (int t = 0; t < terms; ++t)
      f.add_term(blade(n, degree), rational());
    return f;
  }

  GradedForm<Rational> mixed_rational_form(int n, int terms = 4) {
    GradedForm<Rational> f(n, RationalContext{});
    for (int t = 0; t < terms; ++t)
      f.add_term(blade(n, static_cast<int>(integer(0, n))), rational());
    return f;
  }

  GradedVector<Rational> rational_vector_field(int n) {
    GradedVector<Rational> v(n, RationalContext{});
    for (int i = 0; i < n; ++i)
      v.add_term(Blade{1} << i, rational());
    return v;
  }

  PolyForm poly_form(const RingPtr &ring, int n, int terms = 3) {
    PolyForm f(n, ring);
    for (int t = 0; t < terms; ++t)
      f.add_term(blade(n, static_cast<int>(integer(0, n))), polynomial(ring, 2, 2));
    return f;
  }

  std::mt19937_64 &engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

/// Catalog algebras that are not bundles.
inline std::vector<LieAlgebra> catalog_algebras() {
  std::vector<LieAlgebra> out;
  for (const auto &e : catalog())
    if (!e.is_bundle)
      out.push_back(e.build());
  return out;
}

/// Covector in the new basis: xi'(b'_j) = sum_a P(a, j) xi_a.
inline RationalVector transform_covector(const RationalMatrix &basis, const RationalVector &xi) {
  return basis.transposed() * xi;
}

/// Jacobi sum of the polynomial Poisson bracket {f, g} = sum pi_ij f_i g_j on
/// coordinate functions.
inline bool poisson_jacobi_holds(const PolyBivector &pi) {
  const int m = pi.dimension();
  auto bracket = [&](const Polynomial &f, const Polynomial &g) {
    Polynomial out(pi.ring());
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        out += pi.get(i, j) * f.derivative(i) * g.derivative(j);
    return out;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        const auto xi = Polynomial::variable(pi.ring(), i);
        const auto xj = Polynomial::variable(pi.ring(), j);
        const auto xk = Polynomial::variable(pi.ring(), k);
        const auto sum = bracket(xi, bracket(xj, xk)) + bracket(xj, bracket(xk, xi)) + bracket(xk, bracket(xi, xj));
        if (!sum.is_zero())
          return false;
      }
  return true;
}

/// d^2 = 0 on every generator theta^k and on the given extra forms.
inline bool d_squared_vanishes(const LieAlgebra &algebra, const std::vector<GradedForm<Rational>> &extra = {}) {
  const int n = algebra.dimension();
  for (int k = 0; k < n; ++k) {
    const auto theta = GradedForm<Rational>::basis(n, k, RationalContext{});
    if (!ce_differential(algebra, ce_differential(algebra, theta)).is_zero())
      return false;
  }
  for (const auto &f : extra)
    if (!ce_differential(algebra, ce_differential(algebra, f)).is_zero())
      return false;
  return true;
}

/// Random antisymmetric perturbation of one structure constant.
inline LieAlgebra perturbed(const LieAlgebra &algebra, Gen &gen) {
  const int n = algebra.dimension();
  std::vector<Rational> c(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        c[(static_cast<std::size_t>(i) * n + j) * n + k] = algebra.constant(i, j, k);
  const int i = static_cast<int>(gen.integer(0, n - 2));
  const int j = static_cast<int>(gen.integer(i + 1, n - 1));
  const int k = static_cast<int>(gen.integer(0, n - 1));
  const Rational delta = gen.nonzero_rational(3);
  c[(static_cast<std::size_t>(i) * n + j) * n + k] += delta;
  c[(static_cast<std::size_t>(j) * n + i) * n + k] -= delta;
  return LieAlgebra(algebra.name() + "_perturbed", n, std::move(c));
}

} // namespace blowuplab::testing
