#include "blowuplab/classify.hpp"

#include "blowuplab/errors.hpp"

namespace blowuplab {

std::string to_string(AlgebraFamily family) {
  switch (family) {
  case AlgebraFamily::Abelian:
    return "Abelian";
  case AlgebraFamily::DiagonalAffine:
    return "DiagonalAffine";
  case AlgebraFamily::So3:
    return "So3";
  case AlgebraFamily::NotConstantHeight:
    return "NotConstantHeight";
  }
  return "?";
}

std::vector<int> HeightSpectrum::heights() const {
  std::vector<int> out;
  for (const auto &[h, xi] : representatives)
    out.push_back(h);
  return out;
}

std::optional<DiagonalAffineData> is_diagonal_affine(const LieAlgebra &algebra) {
  algebra.validate();
  const int n = algebra.dimension();
  if (n < 2)
    return std::nullopt;
  const auto ideal = derived_algebra(algebra);
  if (static_cast<int>(ideal.size()) != n - 1)
    return std::nullopt;
  for (std::size_t a = 0; a < ideal.size(); ++a)
    for (std::size_t b = a + 1; b < ideal.size(); ++b)
      if (!is_zero_vector(algebra.bracket(ideal[a], ideal[b])))
        return std::nullopt;

  // Quotient representative: the first standard basis vector outside g'.
  RationalVector generator;
  for (int i = 0; i < n && generator.empty(); ++i) {
    RationalVector e(n);
    e[i] = 1;
    auto rows = ideal;
    rows.push_back(e);
    if (row_space_basis(rows, n).size() == ideal.size() + 1)
      generator = e;
  }
  if (generator.empty())
    throw InternalError("no basis vector outside a codimension-one derived algebra");

  std::optional<Rational> scalar;
  for (const auto &h : ideal) {
    const auto image = algebra.bracket(generator, h);
    // image must equal lambda * h with one common lambda
    std::size_t pivot = 0;
    while (is_zero(h[pivot]))
      ++pivot;
    const Rational lambda = image[pivot] / h[pivot];
    for (int k = 0; k < n; ++k)
      if (image[k] != lambda * h[k])
        return std::nullopt;
    if (scalar && *scalar != lambda)
      return std::nullopt;
    scalar = lambda;
  }
  if (!scalar || is_zero(*scalar))
    return std::nullopt;

  for (auto &x : generator)
    x /= *scalar;
  return DiagonalAffineData{std::move(generator), ideal};
}

bool killing_negative_definite(const LieAlgebra &algebra) {
  const auto minors = leading_principal_minors(killing_form(algebra));
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const int expected = (k % 2 == 0) ? -1 : 1;
    if (sgn(minors[k]) != expected)
      return false;
  }
  return true;
}

std::vector<RationalVector> seeded_covectors(std::size_t dimension, std::size_t samples, std::uint64_t seed) {
  auto out = structured_covectors(dimension);
  const CovectorSampler sampler(seed, dimension);
  for (std::uint64_t s = 0; out.size() < samples; ++s)
    out.push_back(sampler.sample(s));
  return out;
}

HeightSpectrum sample_height_spectrum(const LieAlgebra &algebra, std::size_t samples, std::uint64_t seed) {
  if (samples == 0)
    throw DomainError("sample count must be positive");
  HeightSpectrum spectrum;
  for (const auto &xi : seeded_covectors(algebra.dimension(), samples, seed)) {
    const int h = height(algebra, xi);
    spectrum.representatives.try_emplace(h, xi);
    ++spectrum.counts[h];
    ++spectrum.samples;
  }
  return spectrum;
}

namespace {

class WitnessSearch {
public:
  WitnessSearch(const LieAlgebra &algebra, const WitnessSearchOptions &options)
      : algebra_(algebra), options_(options) {}

  std::optional<std::pair<HeightWitness, HeightWitness>> run() {
    const int n = algebra_.dimension();
    for (const auto &xi : structured_covectors(n))
      if (offer(xi))
        return result();

    // Covectors killing [g, g] have d xi = 0 and hence height 0.
    const auto derived = derived_algebra(algebra_);
    if (!derived.empty())
      for (const auto &xi : kernel_basis(RationalMatrix::from_rows(derived, n)))
        if (offer(xi))
          return result();

    const auto killing = killing_form(algebra_);
    for (int i = 0; i < n; ++i) {
      const auto row = killing.row(i);
      if (!is_zero_vector(row) && offer(row))
        return result();
    }

    const CovectorSampler sparse(options_.seed, n);
    for (std::uint64_t s = 0; s < 200; ++s)
      if (offer(sparse.sparse_sample(s)))
        return result();

    std::int64_t range = options_.initial_range;
    std::uint64_t stream = 0;
    while (used_ < options_.cap) {
      const CovectorSampler random(options_.seed, n, range);
      for (std::size_t i = 0; i < options_.doubling_interval && used_ < options_.cap; ++i)
        if (offer(random.sample(stream++)))
          return result();
      range *= 2;
    }
    return std::nullopt;
  }

  std::size_t used() const noexcept { return used_; }

private:
  bool offer(const RationalVector &xi) {
    if (used_ >= options_.cap || is_zero_vector(xi))
      return false;
    ++used_;
    const int h = height(algebra_, xi);
    seen_.try_emplace(h, xi);
    return seen_.size() >= 2;
  }

  std::pair<HeightWitness, HeightWitness> result() const {
    auto low = seen_.begin();
    auto high = std::prev(seen_.end());
    return {HeightWitness{low->second, low->first}, HeightWitness{high->second, high->first}};
  }

  const LieAlgebra &algebra_;
  WitnessSearchOptions options_;
  std::map<int, RationalVector> seen_;
  std::size_t used_ = 0;
};

} // namespace

ClassificationVerdict classify_constant_height(const LieAlgebra &algebra, const WitnessSearchOptions &options) {
  algebra.validate();
  const int n = algebra.dimension();
  ClassificationVerdict v;
  v.killing_minors = leading_principal_minors(killing_form(algebra));

  if (algebra.is_abelian()) {
    v.family = AlgebraFamily::Abelian;
    v.parameter = n;
    v.constant_height = 0;
    return v;
  }
  if (auto diag = is_diagonal_affine(algebra)) {
    v.family = AlgebraFamily::DiagonalAffine;
    v.parameter = n - 1;
    v.constant_height = 0;
    v.diagonal = std::move(diag);
    return v;
  }
  if (n == 3 && killing_negative_definite(algebra)) {
    v.family = AlgebraFamily::So3;
    v.parameter = 3;
    v.constant_height = 1;
    return v;
  }

  WitnessSearch search(algebra, options);
  auto pair = search.run();
  v.witness_samples_used = search.used();
  if (!pair)
    throw WitnessNotFound("no pair of covectors with different heights found in " + std::to_string(search.used()) +
                          " samples for '" + algebra.name() +
                          "', although no constant-height family matched; raise the cap or inspect the algebra");
  v.family = AlgebraFamily::NotConstantHeight;
  v.parameter = n;
  v.witnesses = std::move(pair);
  return v;
}

} // namespace blowuplab
