#pragma once

// Spinors of linear Poisson structures pulled back to the real projective
// blowup of g* at the origin.
//
// Coordinates: the ambient ring is (x1..xm, base...) and chart i of the
// blowup uses (x~1..x~m, base...) with blowdown x_i = x~_i and
// x_j = x~_i x~_j for j != i; base variables are left fixed. The exceptional
// divisor in chart i is {x~_i = 0}. Chart indices are 0-based in this API.

#include "blowuplab/catalog.hpp"
#include "blowuplab/classify.hpp"
#include "blowuplab/exterior.hpp"
#include "blowuplab/lie_algebra.hpp"
#include "blowuplab/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace blowuplab {

using PolyForm = GradedForm<Polynomial>;
using PolyMultivector = GradedVector<Polynomial>;

RingPtr ambient_ring(int m, const std::vector<std::string> &base = {});
RingPtr chart_ring(int m, const std::vector<std::string> &base = {});
RingPtr line_ring(const std::vector<std::string> &base = {});

/// Names of the variables after the first m (the base variables).
std::vector<std::string> base_variables(const RingPtr &ring, int m);

/// Bivector field on R^m with polynomial coefficients, antisymmetric by
/// construction (only i < j is stored).
class PolyBivector {
public:
  PolyBivector(int dimension, RingPtr ring);

  int dimension() const noexcept { return m_; }
  const RingPtr &ring() const noexcept { return ring_; }

  /// pi_ij; get(j, i) = -get(i, j), get(i, i) = 0.
  Polynomial get(int i, int j) const;
  void set(int i, int j, Polynomial value);

  PolyMultivector as_multivector() const;

  /// Components of pi^sharp(alpha) = sum_{i,j} alpha_i pi_ij d/dx_j.
  std::vector<Polynomial> sharp(const std::vector<Polynomial> &alpha) const;
  std::vector<Polynomial> sharp(const RationalVector &alpha) const;

  PolyBivector operator+(const PolyBivector &other) const;

  bool is_zero() const;

private:
  int m_;
  RingPtr ring_;
  std::map<std::pair<int, int>, Polynomial> coeffs_;
};

/// pi_ij = sum_k c(i,j,k) x_k over ambient_ring(n). With `scale` (a
/// polynomial in the same ring) every coefficient is multiplied by it.
PolyBivector linear_poisson(const LieAlgebra &algebra);
PolyBivector linear_poisson(const LieAlgebra &algebra, const RingPtr &ring, const std::optional<Polynomial> &scale);

/// Bundle case: fibre so(3) scaled by f(y1, y2), ring (x1, x2, x3, y1, y2).
PolyBivector linear_poisson(const ScaledSo3Bundle &bundle);

/// e^{i_pi} lambda, lambda = dx1^...^dxm by default.
PolyForm spinor(const PolyBivector &pi);
PolyForm spinor(const PolyBivector &pi, const PolyForm &lambda);

/// A form written in the coordinates of blowup chart `chart`.
struct ChartForm {
  int chart;
  PolyForm form;
};

/// p* on functions for chart `chart`: the ring map into chart_ring.
Polynomial pullback_function(const Polynomial &f, int chart, int m);

/// p*(dx_j) in chart coordinates.
PolyForm pullback_differential(int j, int chart, int m, const RingPtr &target);

ChartForm blowup_pullback(const PolyForm &form, int chart);

enum class Nonvanishing { Certified, Falsified, Undetermined };

std::string to_string(Nonvanishing status);

struct OrderCertificate {
  int chart = 0;
  int order = 0;
  /// (x~_chart^{-order} form) restricted to x~_chart = 0.
  PolyForm leading_form;
  Nonvanishing status = Nonvanishing::Undetermined;
  /// Certified: which coefficient certifies and how.
  std::string certificate;
  /// Falsified: a point of the chart ring with x~_chart = 0 at which every
  /// coefficient of the leading form vanishes.
  std::optional<RationalVector> falsifying_point;

  /// Order 0 cannot arise from an invariant point; kept representable and
  /// flagged instead of rejected.
  bool transverse_like() const noexcept { return order == 0; }
};

struct CertificateOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t random_points = 200;
};

OrderCertificate vanishing_order(const ChartForm &form, const CertificateOptions &options = {});

/// Divisor points tried by the falsifier: full chart-ring coordinates with
/// x~_chart = 0. Dual-basis directions and pairwise combinations first, then
/// seeded random directions; base coordinates cycle through 0, dual basis,
/// pairwise combinations and random points.
std::vector<RationalVector> divisor_sample_points(int chart, int m, int base_count, std::size_t random_points,
                                                  std::uint64_t seed);

/// Chart with the largest |v_i|, ties to the smallest index.
int preferred_chart(const RationalVector &v);

/// Substitutes x~_j = xi_j / xi_chart (j != chart) and x~_chart = t. The
/// result lives in line_ring(base): t first, base variables after.
PolyForm restrict_to_line(const ChartForm &form, const RationalVector &xi);

/// t-adic order of a form from restrict_to_line.
int t_order(const PolyForm &line_form);

/// Order at [xi] of the line restriction of the pulled-back spinor of pi_lin.
int line_order(const LieAlgebra &algebra, const RationalVector &xi);

enum class LiftKind { LiftsAsPoisson, LiftsAsDiracOnly, DoesNotLift };

std::string to_string(LiftKind kind);

struct CrossCheck {
  std::string name;
  bool agreed = true;
  std::string detail;
};

struct LiftVerdict {
  LiftKind kind = LiftKind::DoesNotLift;
  std::optional<int> height;
  std::optional<std::pair<HeightWitness, HeightWitness>> witnesses;
  ClassificationVerdict classification;
  std::vector<OrderCertificate> charts;
  std::vector<CrossCheck> cross_checks;

  bool all_agree() const;
};

/// Structural classification mapped to a lift verdict, with the spinor
/// oracle run in every chart and recorded as cross-checks.
LiftVerdict lift_verdict(const LieAlgebra &algebra, const WitnessSearchOptions &options = {});

/// Bundle version: decided from the chart certificates (fibrewise the fibre
/// is so(3) where f != 0 and abelian where f = 0).
struct BundleVerdict {
  std::optional<LiftKind> kind; // empty when some chart is Undetermined
  std::optional<int> height;
  std::vector<OrderCertificate> charts;
  /// For DoesNotLift: base points with f = 0 (abelian fibre, height 0) and
  /// f != 0 (so(3) fibre, height 1).
  std::optional<std::pair<RationalVector, RationalVector>> base_witnesses;
  std::vector<CrossCheck> cross_checks;

  bool all_agree() const;
};

BundleVerdict bundle_lift_verdict(const ScaledSo3Bundle &bundle, const CertificateOptions &options = {});

struct DictionaryRow {
  RationalVector xi;
  int chart = 0;
  int line_order = 0;
  int height = 0;
  int expected = 0; // dim g - 1 - height
  bool ok() const noexcept { return line_order == expected; }
};

/// Line-restricted order vs. dim g - 1 - height(xi) on seeded covectors.
std::vector<DictionaryRow> line_order_dictionary(const LieAlgebra &algebra, std::size_t samples, std::uint64_t seed);

struct PerturbationReport {
  int chart = 0;
  int order_unperturbed = 0;
  int order_perturbed = 0;
  std::size_t points_checked = 0;
  std::vector<RationalVector> mismatch_points;

  bool agree() const noexcept { return order_unperturbed == order_perturbed && mismatch_points.empty(); }
};

/// Compares the pulled-back spinors of pi_lin and pi_lin + w in one chart:
/// equal order, and leading forms vanishing at the same sampled divisor
/// points. Every coefficient of w must lie in (x1..xm)^2.
PerturbationReport perturbation_invariance_check(const LieAlgebra &algebra, const PolyBivector &w, int chart,
                                                 std::size_t samples, std::uint64_t seed = kDefaultSeed);

} // namespace blowuplab
