#ifndef PCTS_HARNESS_HPP
#define PCTS_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcts/engine.hpp"
#include "pcts/mfpoo.hpp"

namespace pcts {

enum class Algorithm { Pcts, Mfpoo, WaitAndAct, Random };
std::string to_string(Algorithm algo);
std::optional<Algorithm> parse_algorithm(std::string_view text);

struct ExperimentSpec {
  RunConfig base;
  Algorithm algorithm = Algorithm::Pcts;
  std::vector<std::uint64_t> seeds;  // sorted, unique
  std::vector<double> checkpoints;   // rounds, or cost values under a cost budget
  std::filesystem::path out_dir = "pcts_out";
  double nu_max = 1.0;
  double rho_max = 0.95;
  bool append_rho_max = false;
  unsigned jobs = 1;

  bool checkpoints_by_cost() const { return std::holds_alternative<CostBudget>(base.budget); }
};

enum class ConfigErrorKind {
  UnknownBenchmark,
  RhoOutOfRange,
  MissingSigma,
  MissingB,
  EmptySeeds,
  BadCheckpoints,
  BadValue,
  UnknownKey,
  UnknownPreset,
  Io,
};
std::string to_string(ConfigErrorKind kind);

class ConfigError : public std::runtime_error {
 public:
  ConfigError(ConfigErrorKind kind, const std::string& what)
      : std::runtime_error(to_string(kind) + ": " + what), kind_(kind) {}
  ConfigErrorKind kind() const { return kind_; }

 private:
  ConfigErrorKind kind_;
};

/// Option name (CLI flag without the leading dashes) -> raw value.
using OptionMap = std::map<std::string, std::string>;

/// Every recognised option name.
std::span<const std::string_view> option_names();

/// Named reproduction presets, applied underneath explicit options.
const std::map<std::string, OptionMap, std::less<>>& presets();

/// "key = value" lines with optional [section] headers and '#' comments, or
/// a JSON object (sections may be nested objects). Keys accept '_' for '-'.
OptionMap parse_config_text(std::string_view text);
OptionMap load_config_file(const std::filesystem::path& path);

/// Resolves presets, registry defaults and explicit options into a spec.
/// `out_override` (PCTS_OUT_DIR) wins over the out option.
ExperimentSpec resolve_spec(const OptionMap& options, std::optional<std::string> out_override = std::nullopt);

/// load_config_file + resolve_spec.
ExperimentSpec parse_config(const std::filesystem::path& path,
                            std::optional<std::string> out_override = std::nullopt);

struct SummaryRow {
  std::string algorithm;
  std::string benchmark;
  std::string delay;
  std::size_t seeds = 0;
  double max_final = 0.0;
  double median_final = 0.0;
  double std_final = 0.0;
  double median_height = 0.0;
  double median_node_count = 0.0;
};

struct CurvePoint {
  double checkpoint = 0.0;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/// What a regret curve needs from one round.
struct TraceSample {
  std::uint64_t round = 0;
  double cumulative_cost = 0.0;
  double simple_regret = 0.0;
};
std::vector<TraceSample> samples_of(const RunTrace& trace);

struct SuiteResult {
  std::vector<RunTrace> traces;  // ordered by seed
  SummaryRow summary;
  std::vector<CurvePoint> curve;
};

double median(std::vector<double> values);
/// Population standard deviation.
double stddev(std::span<const double> values);

/// Simple regret of the last sample with round (or cost) <= checkpoint; NaN
/// if there is none.
double sample_at(std::span<const TraceSample> trace, double checkpoint, bool by_cost);

/// Median with min/max envelope per checkpoint; NaN samples are skipped.
std::vector<CurvePoint> median_curve(std::span<const std::vector<TraceSample>> traces,
                                     std::span<const double> checkpoints, bool by_cost);

SummaryRow summarize(const ExperimentSpec& spec, std::span<const RunTrace> traces);

/// One run of the configured algorithm for one seed (the best instance for
/// mfpoo).
RunTrace run_single(const ExperimentSpec& spec, std::uint64_t seed);

/// Runs every seed (on up to spec.jobs threads) and aggregates.
SuiteResult run_suite(const ExperimentSpec& spec);

// ---- CSV ------------------------------------------------------------------

/// Shortest round-trip decimal.
std::string format_number(double value);

std::string trace_csv(const RunTrace& trace);
std::string summary_csv(std::span<const SummaryRow> rows);
std::string curve_csv(std::span<const CurvePoint> curve);

void emit_trace_csv(const RunTrace& trace, const std::filesystem::path& path);
void emit_summary_csv(std::span<const SummaryRow> rows, const std::filesystem::path& path);
void emit_curve_csv(std::span<const CurvePoint> curve, const std::filesystem::path& path);

struct TraceCsvRow {
  std::uint64_t round = 0;
  double cumulative_cost = 0.0;
  std::optional<std::uint32_t> depth_selected;
  double fidelity = 1.0;
  std::size_t feedbacks_received = 0;
  double best_value = 0.0;
  double simple_regret = 0.0;
  std::uint32_t tree_height = 0;
  std::size_t node_count = 0;
};
std::vector<TraceCsvRow> parse_trace_csv(std::string_view text);
std::vector<TraceCsvRow> read_trace_csv(const std::filesystem::path& path);
std::vector<TraceSample> samples_of(std::span<const TraceCsvRow> rows);

/// summary.csv, curve.csv and traces/seed_<n>.csv under spec.out_dir.
void write_suite_outputs(const ExperimentSpec& spec, const SuiteResult& result);

}  // namespace pcts

#endif  // PCTS_HARNESS_HPP
