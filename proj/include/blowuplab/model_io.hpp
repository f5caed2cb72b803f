#pragma once

// Document format for Lie algebras and bivectors (JSON, rationals as "p/q"
// strings or integers, floats rejected) and the report emitters used by the
// command-line tool. See docs/document-format.md for the grammar.

#include "blowuplab/blowup_geometry.hpp"
#include "blowuplab/catalog.hpp"
#include "blowuplab/classify.hpp"
#include "blowuplab/lie_algebra.hpp"
#include "blowuplab/poisson_spinor.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace blowuplab {

inline constexpr int kSchemaVersion = 1;

struct AlgebraDocument {
  LieAlgebra algebra;
  AlgebraMetadata metadata;
};

/// Parses and validates (antisymmetry, index range, Jacobi). Throws
/// ParseError with line/column for malformed text, floats and bad indices,
/// JacobiError for tables violating the Jacobi identity.
AlgebraDocument parse_algebra(std::string_view text);

std::string serialize_algebra(const LieAlgebra &algebra, const AlgebraMetadata &metadata = {});

/// {"schema_version": 1, "dimension": m, "coefficients": [{"i", "j", "value"}]}
/// with polynomial values over x1..xm.
PolyBivector parse_bivector(std::string_view text);
std::string serialize_bivector(const PolyBivector &pi);

enum class ReportFormat { Human, Machine };

struct AnalysisReport {
  std::string algebra;
  int dimension = 0;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 0;
  std::optional<AlgebraMetadata> metadata;
  std::optional<LiftVerdict> verdict;
  std::optional<HeightSpectrum> spectrum;
  std::optional<RankConditionReport> rank_conditions;
  /// Bundle fixture only.
  std::optional<std::string> bundle_f;
  std::optional<BundleVerdict> bundle;

  bool all_agree() const;
};

struct SpinorReport {
  std::string algebra;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::string> bundle_f;
  PolyForm ambient_spinor;
  std::vector<ChartForm> pullbacks;
  std::vector<OrderCertificate> certificates;
};

struct CrosscheckReport {
  std::string algebra;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 0;
  std::vector<DictionaryRow> dictionary;
  RankConditionReport rank_conditions;

  std::size_t dictionary_violations() const;
  bool all_hold() const { return dictionary_violations() == 0 && rank_conditions.violations() == 0; }
};

std::string emit_report(const AnalysisReport &report, ReportFormat format);
std::string emit_report(const SpinorReport &report, ReportFormat format);
std::string emit_report(const CrosscheckReport &report, ReportFormat format);
std::string emit_catalog(const std::vector<CatalogEntry> &entries, ReportFormat format);

} // namespace blowuplab
