#include "blowuplab/blowup_geometry.hpp"

#include "blowuplab/classify.hpp"
#include "blowuplab/errors.hpp"

#include <algorithm>

namespace blowuplab {

Polynomial VectorField::apply(const Polynomial &f) const {
  if (!same_ring(f.ring(), ring))
    throw StructuralError("function and vector field live in different rings");
  Polynomial out(ring);
  for (int k = 0; k < dimension(); ++k)
    out += components[k] * f.derivative(k);
  return out;
}

Polynomial LiftedVectorField::apply(const Polynomial &f) const {
  if (!same_ring(f.ring(), ring))
    throw StructuralError("function and lifted field live in different rings");
  Polynomial out(ring);
  for (int k = 0; k < dimension(); ++k)
    out += components[k] * f.derivative(k);
  return out;
}

bool LiftedVectorField::tangent_to_divisor() const {
  return components[chart].is_zero() || components[chart].valuation(chart) >= 1;
}

RationalVector LiftedVectorField::evaluate(const RationalVector &point) const {
  RationalVector out;
  for (const auto &c : components)
    out.push_back(c.evaluate(point));
  return out;
}

LiftedVectorField lift_vector_field(const VectorField &field, int chart) {
  const int m = field.dimension();
  if (chart < 0 || chart >= m)
    throw DomainError("chart index " + std::to_string(chart + 1) + " out of range 1.." + std::to_string(m));
  for (int k = 0; k < m; ++k) {
    if (!same_ring(field.components[k].ring(), field.ring))
      throw StructuralError("vector field components live in different rings");
    for (const auto &[e, c] : field.components[k].terms()) {
      std::uint32_t fibre = 0;
      for (int i = 0; i < m; ++i)
        fibre += e[i];
      if (fibre == 0)
        throw DomainError("vector field component " + std::to_string(k + 1) + " does not vanish at the origin");
    }
  }

  LiftedVectorField out;
  out.chart = chart;
  out.ring = chart_ring(m, base_variables(field.ring, m));
  std::vector<Polynomial> pulled;
  for (const auto &c : field.components)
    pulled.push_back(pullback_function(c, chart, m));
  for (int j = 0; j < m; ++j) {
    if (j == chart) {
      out.components.push_back(pulled[chart]);
      continue;
    }
    const Polynomial numerator = pulled[j] - Polynomial::variable(out.ring, j) * pulled[chart];
    auto quotient = numerator.divide_by_power(chart, 1);
    if (!quotient)
      throw InternalError("lifted component " + std::to_string(j + 1) + " is not polynomial in chart " +
                          std::to_string(chart + 1));
    out.components.push_back(std::move(*quotient));
  }
  return out;
}

RationalVector divisor_point(const RationalVector &v, int chart) {
  const int m = static_cast<int>(v.size());
  if (chart < 0 || chart >= m)
    throw DomainError("chart index out of range");
  if (is_zero(v[chart]))
    throw DomainError("[v] does not lie in chart " + std::to_string(chart + 1));
  RationalVector p(m);
  for (int j = 0; j < m; ++j)
    if (j != chart)
      p[j] = v[j] / v[chart];
  return p;
}

DistributionSample distribution_D(const LieAlgebra &algebra, const RationalVector &v) {
  const int m = algebra.dimension();
  if (static_cast<int>(v.size()) != m)
    throw StructuralError("point length does not match algebra dimension");
  if (is_zero_vector(v))
    throw DomainError("D_[v] needs v != 0");

  DistributionSample sample;
  sample.chart = preferred_chart(v);
  sample.point = divisor_point(v, sample.chart);

  const auto pi = linear_poisson(algebra);
  RationalMatrix row(1, m);
  for (int j = 0; j < m; ++j)
    row(0, j) = v[j];

  std::vector<RationalVector> vectors;
  for (const auto &alpha : kernel_basis(row)) {
    const auto lifted = lift_vector_field(VectorField{pi.ring(), pi.sharp(alpha)}, sample.chart);
    auto value = lifted.evaluate(sample.point);
    if (!is_zero(value[sample.chart]))
      throw InternalError("lifted field is transverse to the divisor at " + to_string(v));
    vectors.push_back(std::move(value));
  }
  sample.basis = row_space_basis(vectors, m);
  sample.rank = static_cast<int>(sample.basis.size());
  return sample;
}

std::size_t RankConditionReport::violations() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const RankConditionRow &r) { return !r.ok(); }));
}

std::string RankConditionReport::summary() const {
  if (const auto n = violations())
    return "violations: " + std::to_string(n);
  if (constant())
    return "constant k=" + std::to_string(*heights.begin());
  return "pointwise-consistent, globally non-constant";
}

RankConditionReport rank_conditions_crosscheck(const LieAlgebra &algebra, std::size_t samples, std::uint64_t seed) {
  if (samples == 0)
    throw DomainError("rank-condition cross-check needs at least one sample");
  RankConditionReport report;
  for (const auto &v : seeded_covectors(algebra.dimension(), samples, seed)) {
    if (report.rows.size() == samples)
      break;
    const auto hr = height_report(algebra, v);
    RankConditionRow row;
    row.v = v;
    row.height = hr.height;
    row.type = hr.type;
    row.cartan_class = cartan_class(algebra, v);
    row.orbit_dim = hr.orbit_dim;
    row.radial_in_orbit = hr.radial_in_orbit;
    row.rank_D = distribution_D(algebra, v).rank;
    report.heights.insert(row.height);
    report.ranks.insert(row.rank_D);
    report.rows.push_back(std::move(row));
  }
  return report;
}

} // namespace blowuplab
