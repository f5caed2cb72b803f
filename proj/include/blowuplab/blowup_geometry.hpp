#pragma once

// Lifts of vector fields through the blowdown and the distribution
// D_[v] = {(lifted pi^sharp alpha)_[v] : alpha(v) = 0} on the exceptional
// divisor, computed from the linear Poisson structure with constant 1-forms.

#include "blowuplab/lie_algebra.hpp"
#include "blowuplab/poisson_spinor.hpp"

#include <set>
#include <string>
#include <vector>

namespace blowuplab {

/// Polynomial vector field sum_k components[k] d/dx_k on the fibre
/// coordinates; the ring may carry base variables after the first m.
struct VectorField {
  RingPtr ring;
  std::vector<Polynomial> components;

  int dimension() const noexcept { return static_cast<int>(components.size()); }

  /// X(f) = sum_k X_k df/dx_k.
  Polynomial apply(const Polynomial &f) const;
};

struct LiftedVectorField {
  int chart = 0;
  RingPtr ring; // chart_ring
  std::vector<Polynomial> components;

  int dimension() const noexcept { return static_cast<int>(components.size()); }

  Polynomial apply(const Polynomial &f) const;

  /// The d/dx~_chart component is divisible by x~_chart.
  bool tangent_to_divisor() const;

  /// Components at a chart point (one value per chart-ring variable).
  RationalVector evaluate(const RationalVector &point) const;
};

/// The unique field p-related to X on chart `chart`:
///   X~_chart = p*X_chart,  X~_j = (p*X_j - x~_j p*X_chart) / x~_chart.
/// Every component of X must vanish along x = 0.
LiftedVectorField lift_vector_field(const VectorField &field, int chart);

/// Chart coordinates of the divisor point [v] in chart `chart`.
RationalVector divisor_point(const RationalVector &v, int chart);

struct DistributionSample {
  RationalVector point;
  int chart = 0;
  /// Row-reduced spanning set, components along d/dx~_j.
  std::vector<RationalVector> basis;
  int rank = 0;
};

DistributionSample distribution_D(const LieAlgebra &algebra, const RationalVector &v);

struct RankConditionRow {
  RationalVector v;
  int height = 0;
  ElementType type = ElementType::One;
  int cartan_class = 0;
  int orbit_dim = 0;
  bool radial_in_orbit = false;
  int rank_D = 0;

  bool rank_matches_height() const noexcept { return rank_D == 2 * height; }
  bool orbit_case_split() const noexcept { return orbit_dim == 2 * height + (radial_in_orbit ? 2 : 0); }
  bool distribution_vs_orbit() const noexcept { return rank_D == orbit_dim - (radial_in_orbit ? 2 : 0); }
  bool cartan_identity() const noexcept { return cartan_class == 2 * height + static_cast<int>(type); }
  bool ok() const noexcept {
    return rank_matches_height() && orbit_case_split() && distribution_vs_orbit() && cartan_identity();
  }
};

struct RankConditionReport {
  std::vector<RankConditionRow> rows;
  std::set<int> heights;
  std::set<int> ranks;

  std::size_t violations() const;
  bool constant() const noexcept { return heights.size() == 1 && ranks.size() == 1; }
  /// "constant k=K", "pointwise-consistent, globally non-constant" or
  /// "violations: N".
  std::string summary() const;
};

/// rank D = 2 height, the orbit-dimension case split, rank D vs. orbit
/// dimension and the Cartan-class identity at seeded points.
RankConditionReport rank_conditions_crosscheck(const LieAlgebra &algebra, std::size_t samples,
                                     std::uint64_t seed = kDefaultSeed);

} // namespace blowuplab
