#include "blowuplab/poisson_spinor.hpp"

#include "blowuplab/errors.hpp"
#include "blowuplab/sampling.hpp"

#include <algorithm>
#include <limits>
#include <mutex>

namespace blowuplab {

namespace {

RingPtr cached_ring(std::vector<std::string> names) {
  static std::mutex mutex;
  static std::map<std::vector<std::string>, RingPtr> rings;
  std::lock_guard lock(mutex);
  auto it = rings.find(names);
  if (it == rings.end())
    it = rings.emplace(names, make_ring(names)).first;
  return it->second;
}

std::vector<std::string> numbered(const std::string &stem, int m, const std::vector<std::string> &base) {
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i)
    names.push_back(stem + std::to_string(i));
  names.insert(names.end(), base.begin(), base.end());
  return names;
}

void check_chart(int chart, int m) {
  if (chart < 0 || chart >= m)
    throw DomainError("chart index " + std::to_string(chart + 1) + " out of range 1.." + std::to_string(m));
}

std::string blade_name(Blade b, const std::string &stem) {
  if (b == 0)
    return "1";
  std::string out;
  for (int i : blade_indices(b)) {
    if (!out.empty())
      out += "^";
    out += "d" + stem + std::to_string(i + 1);
  }
  return out;
}

/// Every coefficient of `form` vanishes at `point`.
bool vanishes_at(const PolyForm &form, const RationalVector &point) {
  for (const auto &[b, c] : form.terms())
    if (!is_zero(c.evaluate(point)))
      return false;
  return true;
}

std::optional<std::string> syntactic_certificate(const PolyForm &leading) {
  for (const auto &[b, c] : leading.terms())
    if (c.is_constant())
      return "constant coefficient " + c.to_string() + " of " + blade_name(b, "x~");

  for (const auto &[b, c] : leading.terms()) {
    const int s = sgn(c.constant_term());
    if (s == 0)
      continue;
    bool ok = true;
    for (const auto &[e, coeff] : c.terms()) {
      if (sgn(coeff) != s || std::any_of(e.begin(), e.end(), [](std::uint32_t x) { return x % 2 != 0; })) {
        ok = false;
        break;
      }
    }
    if (ok)
      return "coefficient of " + blade_name(b, "x~") + " is " + c.to_string() + ": nonzero constant plus even monomials of the same sign";
  }
  return std::nullopt;
}

int fibre_degree(const Exponents &e, int m) {
  int d = 0;
  for (int i = 0; i < m; ++i)
    d += static_cast<int>(e[i]);
  return d;
}

} // namespace

RingPtr ambient_ring(int m, const std::vector<std::string> &base) { return cached_ring(numbered("x", m, base)); }

RingPtr chart_ring(int m, const std::vector<std::string> &base) { return cached_ring(numbered("x~", m, base)); }

RingPtr line_ring(const std::vector<std::string> &base) {
  std::vector<std::string> names{"t"};
  names.insert(names.end(), base.begin(), base.end());
  return cached_ring(std::move(names));
}

std::vector<std::string> base_variables(const RingPtr &ring, int m) {
  if (static_cast<int>(ring->size()) < m)
    throw StructuralError("ring has fewer than " + std::to_string(m) + " variables");
  return {ring->names().begin() + m, ring->names().end()};
}

// ---------------------------------------------------------------------------

PolyBivector::PolyBivector(int dimension, RingPtr ring) : m_(dimension), ring_(std::move(ring)) {
  if (dimension < 1 || dimension > 32)
    throw StructuralError("bivector dimension must lie in [1, 32]");
  if (static_cast<int>(ring_->size()) < dimension)
    throw StructuralError("coefficient ring must contain the fibre coordinates");
}

Polynomial PolyBivector::get(int i, int j) const {
  if (i < 0 || j < 0 || i >= m_ || j >= m_)
    throw DomainError("bivector index out of range");
  if (i == j)
    return Polynomial(ring_);
  const bool swap = i > j;
  auto it = coeffs_.find(swap ? std::pair{j, i} : std::pair{i, j});
  if (it == coeffs_.end())
    return Polynomial(ring_);
  return swap ? -it->second : it->second;
}

void PolyBivector::set(int i, int j, Polynomial value) {
  if (i < 0 || j < 0 || i >= m_ || j >= m_ || i == j)
    throw DomainError("bivector index out of range or diagonal");
  if (!same_ring(value.ring(), ring_))
    throw StructuralError("bivector coefficient belongs to a different ring");
  if (i > j) {
    std::swap(i, j);
    value = -value;
  }
  if (value.is_zero())
    coeffs_.erase({i, j});
  else
    coeffs_.insert_or_assign({i, j}, std::move(value));
}

PolyMultivector PolyBivector::as_multivector() const {
  PolyMultivector out(m_, ring_);
  for (const auto &[ij, c] : coeffs_)
    out.add_term((Blade{1} << ij.first) | (Blade{1} << ij.second), c);
  return out;
}

std::vector<Polynomial> PolyBivector::sharp(const std::vector<Polynomial> &alpha) const {
  if (static_cast<int>(alpha.size()) != m_)
    throw StructuralError("covector length does not match bivector dimension");
  std::vector<Polynomial> out(m_, Polynomial(ring_));
  for (const auto &[ij, c] : coeffs_) {
    const auto [i, j] = ij;
    out[j] += alpha[i] * c;
    out[i] -= alpha[j] * c;
  }
  return out;
}

std::vector<Polynomial> PolyBivector::sharp(const RationalVector &alpha) const {
  std::vector<Polynomial> lifted;
  for (const auto &a : alpha)
    lifted.emplace_back(ring_, a);
  return sharp(lifted);
}

PolyBivector PolyBivector::operator+(const PolyBivector &other) const {
  if (m_ != other.m_ || !same_ring(ring_, other.ring_))
    throw StructuralError("bivector dimension or ring mismatch");
  PolyBivector out = *this;
  for (const auto &[ij, c] : other.coeffs_)
    out.set(ij.first, ij.second, out.get(ij.first, ij.second) + c);
  return out;
}

bool PolyBivector::is_zero() const { return coeffs_.empty(); }

PolyBivector linear_poisson(const LieAlgebra &algebra) {
  return linear_poisson(algebra, ambient_ring(algebra.dimension()), std::nullopt);
}

PolyBivector linear_poisson(const LieAlgebra &algebra, const RingPtr &ring, const std::optional<Polynomial> &scale) {
  algebra.validate();
  const int n = algebra.dimension();
  PolyBivector pi(n, ring);
  if (scale && !same_ring(scale->ring(), ring))
    throw StructuralError("scale factor must live in the bivector's ring");
  for (const auto &e : algebra.brackets()) {
    Polynomial term = Polynomial::variable(ring, e.k) * e.value;
    if (scale)
      term = term * *scale;
    pi.set(e.i, e.j, pi.get(e.i, e.j) + term);
  }
  return pi;
}

PolyBivector linear_poisson(const ScaledSo3Bundle &bundle) {
  const auto base = bundle_base_ring()->names();
  const auto ring = ambient_ring(3, base);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < base.size(); ++i)
    images.push_back(Polynomial::variable(ring, 3 + i));
  const Polynomial f = bundle.f.substitute(images, ring);
  return linear_poisson(so3(), ring, f);
}

PolyForm spinor(const PolyBivector &pi) { return spinor(pi, PolyForm::volume(pi.dimension(), pi.ring())); }

PolyForm spinor(const PolyBivector &pi, const PolyForm &lambda) {
  if (lambda.dimension() != pi.dimension())
    throw StructuralError("volume form dimension does not match bivector");
  return exp_interior(pi.as_multivector(), lambda);
}

// ---------------------------------------------------------------------------

Polynomial pullback_function(const Polynomial &f, int chart, int m) {
  check_chart(chart, m);
  const auto base = base_variables(f.ring(), m);
  const auto target = chart_ring(m, base);
  std::vector<Polynomial> images;
  const auto xc = Polynomial::variable(target, chart);
  for (int k = 0; k < m; ++k)
    images.push_back(k == chart ? xc : xc * Polynomial::variable(target, k));
  for (std::size_t b = 0; b < base.size(); ++b)
    images.push_back(Polynomial::variable(target, m + b));
  return f.substitute(images, target);
}

PolyForm pullback_differential(int j, int chart, int m, const RingPtr &target) {
  check_chart(chart, m);
  check_chart(j, m);
  if (j == chart)
    return PolyForm::basis(m, j, target);
  auto out = PolyForm::basis(m, j, target).scaled(Polynomial::variable(target, chart));
  out += PolyForm::basis(m, chart, target).scaled(Polynomial::variable(target, j));
  return out;
}

ChartForm blowup_pullback(const PolyForm &form, int chart) {
  const int m = form.dimension();
  check_chart(chart, m);
  const auto target = chart_ring(m, base_variables(form.context(), m));
  std::vector<PolyForm> differentials;
  for (int j = 0; j < m; ++j)
    differentials.push_back(pullback_differential(j, chart, m, target));

  PolyForm out(m, target);
  for (const auto &[b, c] : form.terms()) {
    auto piece = PolyForm::scalar(m, pullback_function(c, chart, m));
    for (int j : blade_indices(b))
      piece = wedge(piece, differentials[j]);
    out += piece;
  }
  return ChartForm{chart, std::move(out)};
}

std::string to_string(Nonvanishing status) {
  switch (status) {
  case Nonvanishing::Certified:
    return "Certified";
  case Nonvanishing::Falsified:
    return "Falsified";
  case Nonvanishing::Undetermined:
    return "Undetermined";
  }
  return "?";
}

std::vector<RationalVector> divisor_sample_points(int chart, int m, int base_count, std::size_t random_points,
                                                  std::uint64_t seed) {
  check_chart(chart, m);
  auto fibre_point = [&](const RationalVector &v) {
    RationalVector p(m + base_count);
    for (int j = 0; j < m; ++j)
      if (j != chart)
        p[j] = v[j] / v[chart];
    return p;
  };

  std::vector<RationalVector> fibres;
  for (const auto &v : structured_covectors(m))
    if (!is_zero(v[chart]))
      fibres.push_back(fibre_point(v));
  const std::size_t structured_fibres = fibres.size();
  const CovectorSampler fibre_sampler(mix_seed(seed, 0xd1b54a32d192ed03ULL), m);
  for (std::uint64_t s = 0; fibres.size() < structured_fibres + random_points; ++s) {
    const auto v = fibre_sampler.sample(s);
    if (!is_zero(v[chart]))
      fibres.push_back(fibre_point(v));
  }

  if (base_count == 0)
    return fibres;

  std::vector<RationalVector> bases{RationalVector(base_count)};
  for (const auto &y : structured_covectors(base_count))
    bases.push_back(y);
  const std::size_t structured_bases = bases.size();
  const CovectorSampler base_sampler(mix_seed(seed, 0x8cb92ba72f3d8dd7ULL), base_count);
  for (std::uint64_t s = 0; s < random_points; ++s)
    bases.push_back(base_sampler.sample(s));

  auto combine = [&](RationalVector p, const RationalVector &y) {
    for (int b = 0; b < base_count; ++b)
      p[m + b] = y[b];
    return p;
  };
  std::vector<RationalVector> out;
  for (std::size_t f = 0; f < structured_fibres; ++f)
    for (std::size_t b = 0; b < structured_bases; ++b)
      out.push_back(combine(fibres[f], bases[b]));
  for (std::size_t s = 0; s < random_points; ++s) {
    out.push_back(combine(fibres[structured_fibres + s], bases[structured_bases + s]));
    out.push_back(combine(fibres[structured_fibres + s], bases[s % structured_bases]));
  }
  return out;
}

OrderCertificate vanishing_order(const ChartForm &chart_form, const CertificateOptions &options) {
  const auto &form = chart_form.form;
  const int m = form.dimension();
  check_chart(chart_form.chart, m);
  if (form.is_zero())
    throw DomainError("vanishing order of the zero form is undefined");

  OrderCertificate cert{chart_form.chart, 0, PolyForm(m, form.context()), Nonvanishing::Undetermined, {}, {}};
  std::uint32_t order = std::numeric_limits<std::uint32_t>::max();
  for (const auto &[b, c] : form.terms())
    order = std::min(order, c.valuation(chart_form.chart));
  cert.order = static_cast<int>(order);
  for (const auto &[b, c] : form.terms())
    cert.leading_form.add_term(b, c.coefficient_of_power(chart_form.chart, order));

  if (auto text = syntactic_certificate(cert.leading_form)) {
    cert.status = Nonvanishing::Certified;
    cert.certificate = std::move(*text);
    return cert;
  }

  const int base_count = static_cast<int>(form.context()->size()) - m;
  for (auto &point : divisor_sample_points(chart_form.chart, m, base_count, options.random_points, options.seed)) {
    if (vanishes_at(cert.leading_form, point)) {
      cert.status = Nonvanishing::Falsified;
      cert.falsifying_point = std::move(point);
      return cert;
    }
  }
  return cert;
}

int preferred_chart(const RationalVector &v) {
  if (v.empty() || is_zero_vector(v))
    throw DomainError("chart choice needs a nonzero vector");
  int best = 0;
  for (int i = 1; i < static_cast<int>(v.size()); ++i)
    if (abs(v[i]) > abs(v[best]))
      best = i;
  return best;
}

PolyForm restrict_to_line(const ChartForm &chart_form, const RationalVector &xi) {
  const auto &form = chart_form.form;
  const int m = form.dimension();
  const int chart = chart_form.chart;
  check_chart(chart, m);
  if (static_cast<int>(xi.size()) != m)
    throw StructuralError("covector length does not match form dimension");
  if (is_zero(xi[chart]))
    throw DomainError("[xi] does not lie in chart " + std::to_string(chart + 1) + " (xi_" +
                      std::to_string(chart + 1) + " = 0)");
  const auto base = base_variables(form.context(), m);
  const auto target = line_ring(base);
  std::vector<Polynomial> images;
  for (int j = 0; j < m; ++j)
    images.push_back(j == chart ? Polynomial::variable(target, 0) : Polynomial(target, xi[j] / xi[chart]));
  for (std::size_t b = 0; b < base.size(); ++b)
    images.push_back(Polynomial::variable(target, 1 + b));
  return form.map_coefficients([&](const Polynomial &c) { return c.substitute(images, target); }, target);
}

int t_order(const PolyForm &line_form) {
  if (line_form.is_zero())
    throw DomainError("line restriction vanishes identically");
  std::uint32_t order = std::numeric_limits<std::uint32_t>::max();
  for (const auto &[b, c] : line_form.terms())
    order = std::min(order, c.valuation(0));
  return static_cast<int>(order);
}

int line_order(const LieAlgebra &algebra, const RationalVector &xi) {
  const int chart = preferred_chart(xi);
  return t_order(restrict_to_line(blowup_pullback(spinor(linear_poisson(algebra)), chart), xi));
}

std::string to_string(LiftKind kind) {
  switch (kind) {
  case LiftKind::LiftsAsPoisson:
    return "LiftsAsPoisson";
  case LiftKind::LiftsAsDiracOnly:
    return "LiftsAsDiracOnly";
  case LiftKind::DoesNotLift:
    return "DoesNotLift";
  }
  return "?";
}

bool LiftVerdict::all_agree() const {
  return std::all_of(cross_checks.begin(), cross_checks.end(), [](const CrossCheck &c) { return c.agreed; });
}

bool BundleVerdict::all_agree() const {
  return std::all_of(cross_checks.begin(), cross_checks.end(), [](const CrossCheck &c) { return c.agreed; });
}

namespace {

std::string orders_text(const std::vector<OrderCertificate> &charts) {
  std::string out;
  for (const auto &c : charts) {
    if (!out.empty())
      out += ", ";
    out += "chart " + std::to_string(c.chart + 1) + ": " + std::to_string(c.order) + " " + to_string(c.status);
  }
  return out;
}

bool all_certified_with(const std::vector<OrderCertificate> &charts, int order) {
  return std::all_of(charts.begin(), charts.end(),
                     [&](const OrderCertificate &c) { return c.status == Nonvanishing::Certified && c.order == order; });
}

} // namespace

LiftVerdict lift_verdict(const LieAlgebra &algebra, const WitnessSearchOptions &options) {
  LiftVerdict v;
  v.classification = classify_constant_height(algebra, options);
  const int m = algebra.dimension();
  switch (v.classification.family) {
  case AlgebraFamily::Abelian:
  case AlgebraFamily::DiagonalAffine:
    v.kind = LiftKind::LiftsAsPoisson;
    break;
  case AlgebraFamily::So3:
    v.kind = LiftKind::LiftsAsDiracOnly;
    break;
  case AlgebraFamily::NotConstantHeight:
    v.kind = LiftKind::DoesNotLift;
    break;
  }
  v.height = v.classification.constant_height;
  v.witnesses = v.classification.witnesses;

  const auto pi = linear_poisson(algebra);
  const auto phi = spinor(pi);
  {
    const bool ok = phi.component(m) == PolyForm::volume(m, pi.ring());
    v.cross_checks.push_back({"spinor_top_component", ok, ok ? "top component is dx1^...^dxm" : "top component differs from the volume form"});
  }

  std::vector<ChartForm> pulled;
  const CertificateOptions cert_options{options.seed, 200};
  for (int i = 0; i < m; ++i) {
    pulled.push_back(blowup_pullback(phi, i));
    v.charts.push_back(vanishing_order(pulled.back(), cert_options));
  }

  if (v.height) {
    const int expected = m - 1 - *v.height;
    const bool ok = all_certified_with(v.charts, expected);
    v.cross_checks.push_back({"constant_order_matches_height", ok,
                              "expected certified order " + std::to_string(expected) + " in every chart; " +
                                  orders_text(v.charts)});
  } else {
    const auto &[low, high] = *v.witnesses;
    {
      const int hl = height(algebra, low.xi);
      const int hh = height(algebra, high.xi);
      const bool ok = hl == low.height && hh == high.height && hl != hh;
      v.cross_checks.push_back({"witness_heights_recomputed", ok,
                                "heights " + std::to_string(hl) + " at " + to_string(low.xi) + " and " +
                                    std::to_string(hh) + " at " + to_string(high.xi)});
    }
    {
      const int ol = line_order(algebra, low.xi);
      const int oh = line_order(algebra, high.xi);
      const bool ok = ol == m - 1 - low.height && oh == m - 1 - high.height;
      v.cross_checks.push_back({"witness_line_orders", ok,
                                "line orders " + std::to_string(ol) + " and " + std::to_string(oh) + ", expected " +
                                    std::to_string(m - 1 - low.height) + " and " +
                                    std::to_string(m - 1 - high.height)});
    }
    {
      // At the lower-height witness the line order exceeds the chart order,
      // so the chart's leading form must vanish there.
      const int c = preferred_chart(low.xi);
      RationalVector point(m);
      for (int j = 0; j < m; ++j)
        if (j != c)
          point[j] = low.xi[j] / low.xi[c];
      const bool chart_below = v.charts[c].order < m - 1 - low.height;
      const bool ok = chart_below && vanishes_at(v.charts[c].leading_form, point);
      v.cross_checks.push_back({"leading_form_vanishes_at_low_witness", ok,
                                "chart " + std::to_string(c + 1) + " order " + std::to_string(v.charts[c].order) +
                                    ", divisor point " + to_string(point)});
    }
    {
      // A certified constant order in every chart would make every line
      // order equal; single charts may still certify.
      const bool ok = !all_certified_with(v.charts, v.charts.front().order);
      v.cross_checks.push_back({"charts_not_uniformly_certified", ok, orders_text(v.charts)});
    }
  }

  {
    const bool poisson = v.kind == LiftKind::LiftsAsPoisson;
    const bool order_full = all_certified_with(v.charts, m - 1);
    v.cross_checks.push_back({"poisson_iff_order_m_minus_1", poisson == order_full,
                              std::string("verdict ") + (poisson ? "is" : "is not") + " Poisson; certified order " +
                                  (order_full ? "equals " : "differs from ") + std::to_string(m - 1)});
  }
  return v;
}

BundleVerdict bundle_lift_verdict(const ScaledSo3Bundle &bundle, const CertificateOptions &options) {
  BundleVerdict v;
  const int m = 3;
  const auto phi = spinor(linear_poisson(bundle));
  for (int i = 0; i < m; ++i)
    v.charts.push_back(vanishing_order(blowup_pullback(phi, i), options));

  const bool any_falsified = std::any_of(v.charts.begin(), v.charts.end(),
                                         [](const OrderCertificate &c) { return c.status == Nonvanishing::Falsified; });
  const bool any_undetermined = std::any_of(
      v.charts.begin(), v.charts.end(), [](const OrderCertificate &c) { return c.status == Nonvanishing::Undetermined; });

  if (any_falsified) {
    v.kind = LiftKind::DoesNotLift;
    const auto it = std::find_if(v.charts.begin(), v.charts.end(),
                                 [](const OrderCertificate &c) { return c.status == Nonvanishing::Falsified; });
    const RationalVector y0(it->falsifying_point->begin() + m, it->falsifying_point->end());
    std::optional<RationalVector> y1;
    for (const auto &p : divisor_sample_points(0, m, 2, options.random_points, options.seed)) {
      RationalVector y(p.begin() + m, p.end());
      if (!is_zero(bundle.f.evaluate(y))) {
        y1 = std::move(y);
        break;
      }
    }
    const bool f_zero = is_zero(bundle.f.evaluate(y0));
    v.cross_checks.push_back(
        {"falsifying_point_has_f_zero", f_zero, "f(" + to_string(y0) + ") = " + to_string(bundle.f.evaluate(y0))});
    if (y1) {
      const RationalVector probe{1, 0, 0};
      const int h0 = height(bundle.fibre_at(y0), probe);
      const int h1 = height(bundle.fibre_at(*y1), probe);
      v.cross_checks.push_back({"fibre_heights_differ", h0 == 0 && h1 == 1,
                                "fibre height " + std::to_string(h0) + " over " + to_string(y0) + ", " +
                                    std::to_string(h1) + " over " + to_string(*y1)});
      v.base_witnesses = std::pair{y0, *y1};
    } else {
      v.cross_checks.push_back({"fibre_heights_differ", false, "no base point with f != 0 among the samples"});
    }
  } else if (!any_undetermined) {
    const int order = v.charts.front().order;
    const bool constant = all_certified_with(v.charts, order);
    v.cross_checks.push_back({"constant_order_across_charts", constant, orders_text(v.charts)});
    if (constant && (order == 1 || order == 2)) {
      v.kind = order == m - 1 ? LiftKind::LiftsAsPoisson : LiftKind::LiftsAsDiracOnly;
      v.height = m - 1 - order;
      const bool f_zero = bundle.f.is_zero();
      v.cross_checks.push_back({"order_two_iff_f_zero", f_zero == (order == 2),
                                "f = " + bundle.f.to_string() + ", order " + std::to_string(order)});
    }
  }
  return v;
}

std::vector<DictionaryRow> line_order_dictionary(const LieAlgebra &algebra, std::size_t samples, std::uint64_t seed) {
  const int m = algebra.dimension();
  const auto phi = spinor(linear_poisson(algebra));
  std::vector<std::optional<ChartForm>> pulled(m);
  std::vector<DictionaryRow> rows;
  for (const auto &xi : seeded_covectors(m, samples, seed)) {
    DictionaryRow row;
    row.xi = xi;
    row.chart = preferred_chart(xi);
    if (!pulled[row.chart])
      pulled[row.chart] = blowup_pullback(phi, row.chart);
    row.line_order = t_order(restrict_to_line(*pulled[row.chart], xi));
    row.height = height(algebra, xi);
    row.expected = m - 1 - row.height;
    rows.push_back(std::move(row));
  }
  return rows;
}

PerturbationReport perturbation_invariance_check(const LieAlgebra &algebra, const PolyBivector &w, int chart,
                                                 std::size_t samples, std::uint64_t seed) {
  const int m = algebra.dimension();
  check_chart(chart, m);
  const auto lin = linear_poisson(algebra);
  if (w.dimension() != m || !same_ring(w.ring(), lin.ring()))
    throw StructuralError("perturbation must live on the same coordinates as the linear structure");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto wij = w.get(i, j);
      for (const auto &[e, c] : wij.terms())
        if (fibre_degree(e, m) < 2)
          throw DomainError("perturbation coefficient w_" + std::to_string(i + 1) + std::to_string(j + 1) +
                            " is not in the square of the maximal ideal at 0");
    }

  const auto a = vanishing_order(blowup_pullback(spinor(lin), chart), {seed, 0});
  const auto b = vanishing_order(blowup_pullback(spinor(lin + w), chart), {seed, 0});
  PerturbationReport report;
  report.chart = chart;
  report.order_unperturbed = a.order;
  report.order_perturbed = b.order;
  auto points = divisor_sample_points(chart, m, 0, samples, seed);
  if (points.size() > samples)
    points.resize(samples);
  for (const auto &p : points) {
    ++report.points_checked;
    if (vanishes_at(a.leading_form, p) != vanishes_at(b.leading_form, p))
      report.mismatch_points.push_back(p);
  }
  return report;
}

} // namespace blowuplab
