#pragma once

#include "blowuplab/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace blowuplab {

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// splitmix64 finalizer; used to derive independent per-sample streams so that
/// sample s depends only on (seed, s), never on evaluation order.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic generator of random rational covectors: numerators uniform in
/// [-range, range], denominators in {1, 2, 3}; the zero vector is redrawn.
class CovectorSampler {
public:
  CovectorSampler(std::uint64_t seed, std::size_t dimension, std::int64_t range = 20)
      : seed_(seed), dim_(dimension), range_(range) {}

  /// The s-th sample of the stream.
  RationalVector sample(std::uint64_t index) const;

  /// Sparse sample with entries in {-1, 0, 1}, nonzero.
  RationalVector sparse_sample(std::uint64_t index) const;

  std::size_t dimension() const noexcept { return dim_; }

private:
  std::uint64_t seed_;
  std::size_t dim_;
  std::int64_t range_;
};

/// Uniform integer in [lo, hi] from a 64-bit engine, independent of the
/// standard library's distribution implementation.
std::int64_t uniform_int(std::mt19937_64 &engine, std::int64_t lo, std::int64_t hi);

/// Dual-basis vectors, then e_i + e_j and e_i - e_j for i < j.
std::vector<RationalVector> structured_covectors(std::size_t dimension);

} // namespace blowuplab
