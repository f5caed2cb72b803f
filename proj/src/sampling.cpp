#include "blowuplab/sampling.hpp"

namespace blowuplab {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t uniform_int(std::mt19937_64 &engine, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // rejection sampling keeps the draw exactly uniform
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

RationalVector CovectorSampler::sample(std::uint64_t index) const {
  std::mt19937_64 engine(mix_seed(seed_, index));
  RationalVector v(dim_);
  do {
    for (auto &x : v) {
      const auto num = uniform_int(engine, -range_, range_);
      const auto den = uniform_int(engine, 1, 3);
      x = Rational(static_cast<long>(num), static_cast<unsigned long>(den));
      x.canonicalize();
    }
  } while (is_zero_vector(v));
  return v;
}

RationalVector CovectorSampler::sparse_sample(std::uint64_t index) const {
  std::mt19937_64 engine(mix_seed(seed_ ^ 0x5bd1e995ULL, index));
  RationalVector v(dim_);
  do {
    for (auto &x : v)
      x = static_cast<long>(uniform_int(engine, -1, 1));
  } while (is_zero_vector(v));
  return v;
}

std::vector<RationalVector> structured_covectors(std::size_t dimension) {
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < dimension; ++i) {
    RationalVector v(dimension);
    v[i] = 1;
    out.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < dimension; ++i)
    for (std::size_t j = i + 1; j < dimension; ++j) {
      RationalVector plus(dimension), minus(dimension);
      plus[i] = minus[i] = 1;
      plus[j] = 1;
      minus[j] = -1;
      out.push_back(std::move(plus));
      out.push_back(std::move(minus));
    }
  return out;
}

} // namespace blowuplab
