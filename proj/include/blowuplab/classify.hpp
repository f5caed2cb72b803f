#pragma once

#include "blowuplab/lie_algebra.hpp"
#include "blowuplab/sampling.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace blowuplab {

struct HeightWitness {
  RationalVector xi;
  int height;
};

/// Normalised scaling generator X with ad_X = id on the abelian ideal.
struct DiagonalAffineData {
  RationalVector generator;
  std::vector<RationalVector> ideal_basis;
};

enum class AlgebraFamily { Abelian, DiagonalAffine, So3, NotConstantHeight };

std::string to_string(AlgebraFamily family);

struct ClassificationVerdict {
  AlgebraFamily family = AlgebraFamily::NotConstantHeight;
  /// Abelian(n): n = dim g. DiagonalAffine(n): n = dim g - 1. Otherwise dim g.
  int parameter = 0;
  std::optional<int> constant_height;
  /// Lower height first. Present iff NotConstantHeight.
  std::optional<std::pair<HeightWitness, HeightWitness>> witnesses;
  std::optional<DiagonalAffineData> diagonal;
  /// Leading principal minors of the Killing form (recorded for every input).
  std::vector<Rational> killing_minors;
  std::size_t witness_samples_used = 0;
};

struct WitnessSearchOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t cap = 10000;
  std::size_t doubling_interval = 2000;
  std::int64_t initial_range = 20;
};

/// Decides constant height through the three structural tests, falling back
/// to a witness search that must succeed (WitnessNotFound otherwise).
ClassificationVerdict classify_constant_height(const LieAlgebra &algebra, const WitnessSearchOptions &options = {});

std::optional<DiagonalAffineData> is_diagonal_affine(const LieAlgebra &algebra);

/// Leading principal minors alternate in sign starting negative.
bool killing_negative_definite(const LieAlgebra &algebra);

struct HeightSpectrum {
  std::map<int, RationalVector> representatives;
  std::map<int, std::size_t> counts;
  std::size_t samples = 0;

  std::vector<int> heights() const;
};

/// Dual basis, pairwise sums and differences, then seeded random covectors
/// until `samples` covectors have been evaluated (at least the structured
/// ones are always included).
HeightSpectrum sample_height_spectrum(const LieAlgebra &algebra, std::size_t samples, std::uint64_t seed = kDefaultSeed);

/// Deterministic covector sequence shared by the spectrum and the cross-check
/// suites: structured covectors first, then random ones.
std::vector<RationalVector> seeded_covectors(std::size_t dimension, std::size_t samples, std::uint64_t seed);

} // namespace blowuplab
