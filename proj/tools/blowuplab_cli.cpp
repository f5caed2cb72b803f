// blowuplab: does the linear Poisson structure on g* lift to the blowup of
// the origin?
//
// Exit codes: 0 ok, 1 parse/input, 2 Jacobi violation, 3 internal
// disagreement between oracles, 64 usage.

#include "blowuplab/blowup_geometry.hpp"
#include "blowuplab/catalog.hpp"
#include "blowuplab/classify.hpp"
#include "blowuplab/errors.hpp"
#include "blowuplab/model_io.hpp"
#include "blowuplab/poisson_spinor.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace blowuplab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitJacobi = 2;
constexpr int kExitInternal = 3;
constexpr int kExitUsage = 64;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string catalog_name;
  std::string input_path;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 200;
  int chart = 0; // 1-based, 0 = all
  std::string format = "human";
  std::string filter;
  std::string f_text;
  bool seed_given = false;
};

struct Input {
  std::string name;
  LieAlgebra algebra;
  std::optional<AlgebraMetadata> metadata;
  std::optional<ScaledSo3Bundle> bundle;
};

ReportFormat report_format(const RunConfig &config) {
  return config.format == "machine" ? ReportFormat::Machine : ReportFormat::Human;
}

Input resolve(const RunConfig &config) {
  if (config.catalog_name.empty() == config.input_path.empty())
    throw UsageError("exactly one of --catalog NAME or --input PATH is required");
  if (!config.input_path.empty()) {
    if (!config.f_text.empty())
      throw UsageError("--f applies only to --catalog scaled_so3_bundle");
    std::ifstream in(config.input_path);
    if (!in)
      throw ParseError("cannot read " + config.input_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto doc = parse_algebra(buffer.str());
    return {doc.algebra.name(), std::move(doc.algebra), std::move(doc.metadata), std::nullopt};
  }
  auto entry = find_catalog_entry(config.catalog_name);
  if (!entry)
    throw UsageError("unknown catalog entry '" + config.catalog_name + "' (see `blowuplab catalog`)");
  Input input{entry->name, entry->build(), entry->metadata, std::nullopt};
  if (entry->is_bundle) {
    const std::string f = config.f_text.empty() ? "1" : config.f_text;
    input.bundle = scaled_so3_bundle(parse_polynomial(f, bundle_base_ring()));
    // catalog expectations describe the default f = 1
    if (!config.f_text.empty())
      input.metadata.reset();
  } else if (!config.f_text.empty()) {
    throw UsageError("--f applies only to scaled_so3_bundle");
  }
  return input;
}

void check_samples(const RunConfig &config) {
  if (config.samples == 0)
    throw UsageError("--samples must be positive");
}

int chart_index(const RunConfig &config, int m) {
  if (config.chart < 0 || config.chart > m)
    throw UsageError("--chart must lie in 1.." + std::to_string(m));
  return config.chart - 1;
}

int cmd_analyze(const RunConfig &config) {
  check_samples(config);
  const auto input = resolve(config);
  AnalysisReport report;
  report.algebra = input.name;
  report.dimension = input.algebra.dimension();
  report.seed = config.seed;
  report.samples = config.samples;
  report.metadata = input.metadata;
  if (input.bundle) {
    report.bundle_f = input.bundle->f.to_string();
    report.bundle = bundle_lift_verdict(*input.bundle, {config.seed, config.samples});
  } else {
    WitnessSearchOptions options;
    options.seed = config.seed;
    report.verdict = lift_verdict(input.algebra, options);
    report.spectrum = sample_height_spectrum(input.algebra, config.samples, config.seed);
    report.rank_conditions = rank_conditions_crosscheck(input.algebra, config.samples, config.seed);
  }
  std::cout << emit_report(report, report_format(config));
  if (!report.all_agree()) {
    std::cerr << "error: internal disagreement between oracles\n";
    return kExitInternal;
  }
  return kExitOk;
}

int cmd_spinor(const RunConfig &config) {
  const auto input = resolve(config);
  const int m = input.algebra.dimension();
  const int chart = chart_index(config, m);
  const auto phi = input.bundle ? spinor(linear_poisson(*input.bundle)) : spinor(linear_poisson(input.algebra));
  SpinorReport report{input.name, config.seed, std::nullopt, phi, {}, {}};
  if (input.bundle)
    report.bundle_f = input.bundle->f.to_string();
  for (int i = 0; i < m; ++i) {
    if (chart >= 0 && i != chart)
      continue;
    report.pullbacks.push_back(blowup_pullback(phi, i));
    report.certificates.push_back(vanishing_order(report.pullbacks.back(), {config.seed, config.samples}));
  }
  std::cout << emit_report(report, report_format(config));
  return kExitOk;
}

int cmd_crosscheck(const RunConfig &config) {
  check_samples(config);
  const auto input = resolve(config);
  CrosscheckReport report;
  report.algebra = input.name;
  report.seed = config.seed;
  report.samples = config.samples;
  report.dictionary = line_order_dictionary(input.algebra, config.samples, config.seed);
  report.rank_conditions = rank_conditions_crosscheck(input.algebra, config.samples, config.seed);
  std::cout << emit_report(report, report_format(config));
  if (!report.all_hold()) {
    std::cerr << "error: identity violated at some sample\n";
    return kExitInternal;
  }
  return kExitOk;
}

int cmd_catalog(const RunConfig &config) {
  std::vector<CatalogEntry> entries;
  std::optional<int> dim;
  std::optional<std::string> family;
  if (!config.filter.empty()) {
    const auto eq = config.filter.find('=');
    if (eq == std::string::npos)
      throw UsageError("--filter expects KEY=VALUE (dim=N or family=NAME)");
    const auto key = config.filter.substr(0, eq);
    const auto value = config.filter.substr(eq + 1);
    if (key == "dim") {
      try {
        std::size_t used = 0;
        dim = std::stoi(value, &used);
        if (used != value.size())
          throw std::invalid_argument(value);
      } catch (const std::exception &) {
        throw UsageError("--filter dim=N needs an integer");
      }
    } else if (key == "family") {
      family = value;
    } else {
      throw UsageError("unknown filter key '" + key + "' (use dim or family)");
    }
  }
  for (const auto &e : catalog())
    if ((!dim || e.dimension == *dim) && (!family || e.family == *family))
      entries.push_back(e);
  std::cout << emit_catalog(entries, report_format(config));
  return kExitOk;
}

void add_input_options(CLI::App *cmd, RunConfig &config) {
  cmd->add_option("--catalog", config.catalog_name, "Catalog entry, e.g. so3, abelian(4), scaled_so3_bundle");
  cmd->add_option("--input", config.input_path, "Algebra document (JSON)");
  cmd->add_option("--seed", config.seed, "Seed for sampled covectors and divisor points")
      ->each([&](const std::string &) { config.seed_given = true; });
  cmd->add_option("--samples", config.samples, "Number of sampled covectors / points");
  cmd->add_option("--format", config.format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
  cmd->add_option("--f", config.f_text, "f(y1, y2) for scaled_so3_bundle");
}

} // namespace

int main(int argc, char **argv) {
  RunConfig config;
  CLI::App app{"blowuplab: lifting linear Poisson structures to the blowup of the origin"};
  app.require_subcommand(1);

  auto *analyze = app.add_subcommand("analyze", "Classify, decide liftability and cross-check all oracles");
  add_input_options(analyze, config);

  auto *spinor_cmd = app.add_subcommand("spinor", "Pulled-back spinor and order certificate per chart");
  add_input_options(spinor_cmd, config);
  spinor_cmd->add_option("--chart", config.chart, "Chart index (1-based); all charts when omitted");

  auto *crosscheck = app.add_subcommand("crosscheck", "Line-order dictionary and rank equivalences per sample");
  add_input_options(crosscheck, config);

  auto *catalog_cmd = app.add_subcommand("catalog", "List built-in algebras");
  catalog_cmd->add_option("--format", config.format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
  catalog_cmd->add_option("--filter", config.filter, "dim=N or family=NAME");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  if (!config.seed_given) {
    if (const char *env = std::getenv("BLOWUPLAB_SEED")) {
      try {
        std::size_t used = 0;
        config.seed = std::stoull(env, &used);
        if (used != std::string(env).size())
          throw std::invalid_argument(env);
      } catch (const std::exception &) {
        std::cerr << "error: BLOWUPLAB_SEED must be a nonnegative integer\n";
        return kExitUsage;
      }
    }
  }

  try {
    if (analyze->parsed())
      return cmd_analyze(config);
    if (spinor_cmd->parsed())
      return cmd_spinor(config);
    if (crosscheck->parsed())
      return cmd_crosscheck(config);
    return cmd_catalog(config);
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const JacobiError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitJacobi;
  } catch (const InternalError &e) {
    std::cerr << "internal disagreement: " << e.what() << "\n";
    return kExitInternal;
  } catch (const WitnessNotFound &e) {
    std::cerr << "internal disagreement: " << e.what() << "\n";
    return kExitInternal;
  } catch (const DomainError &e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const StructuralError &e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  }
}
