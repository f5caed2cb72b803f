#pragma once

#include "blowuplab/lie_algebra.hpp"
#include "blowuplab/polynomial.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace blowuplab {

/// Outcome recorded alongside a fixture, used by the data-driven tests.
struct AlgebraMetadata {
  std::optional<std::string> expected_verdict; // LiftsAsPoisson | LiftsAsDiracOnly | DoesNotLift
  std::optional<int> expected_height;          // constant height, when there is one
  std::string source;

  friend bool operator==(const AlgebraMetadata &, const AlgebraMetadata &) = default;
};

/// so(3): [X1,X2] = X3, [X2,X3] = X1, [X3,X1] = X2.
LieAlgebra so3();

/// sl2(R) in the basis [e2,e3] = e1, [e3,e1] = e2, [e1,e2] = -e3, so that
/// xi ^ d xi = (-xi1^2 - xi2^2 + xi3^2) e1*^e2*^e3*.
LieAlgebra sl2();

/// Heisenberg algebra [X, Y] = Z with basis (X, Y, Z).
LieAlgebra heis3();

LieAlgebra abelian(int n);

/// R x| R^n with [X, e_i] = e_i; basis (X, e_1, ..., e_n), dimension n + 1.
LieAlgebra diagonal_affine(int n);

/// Base coordinates (y1, y2) of the scaled so(3) bundle.
RingPtr bundle_base_ring();

/// Bundle of Lie algebras over R^2 with fibre bracket
/// [e_i, e_j] = f(y1, y2) sum_k eps_ijk e_k.
struct ScaledSo3Bundle {
  Polynomial f;

  /// Fibre over a base point; so(3) scaled by f(y), abelian where f(y) = 0.
  LieAlgebra fibre_at(const RationalVector &y) const;

  /// Jacobi check with polynomial structure constants; empty iff the
  /// identity holds for every y.
  bool jacobi_holds() const;
};

ScaledSo3Bundle scaled_so3_bundle(Polynomial f);

struct CatalogEntry {
  std::string name;
  int dimension;
  AlgebraMetadata metadata;
  std::string family; // abelian, diagonal_affine, so3, sl2, heis3, scaled_so3_bundle
  bool is_bundle = false;
  std::function<LieAlgebra()> build;
};

/// Listing order is stable.
const std::vector<CatalogEntry> &catalog();

/// Resolves listed names plus parametrised forms: "abelianN", "abelian(N)",
/// "diagonal_affineN", "diagonal_affine(N)" (N up to 11), "scaled_so3".
std::optional<CatalogEntry> find_catalog_entry(const std::string &name);

} // namespace blowuplab
