#ifndef PCTS_FEEDBACK_SIMULATOR_HPP
#define PCTS_FEEDBACK_SIMULATOR_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pcts/benchmarks.hpp"
#include "pcts/partition_tree.hpp"

namespace pcts {

// ---- delays ---------------------------------------------------------------
// Delays are counted in selection rounds: a query issued at round s with
// delay tau is observed by the collect() call of round s + tau.

struct NoDelay {
  friend bool operator==(NoDelay, NoDelay) = default;
};
struct ConstantDelay {
  std::uint64_t rounds = 0;
  friend bool operator==(ConstantDelay, ConstantDelay) = default;
};
/// Geometric on {1, 2, ...} with success probability 1 / mean.
struct GeometricDelay {
  double mean = 1.0;
  friend bool operator==(GeometricDelay, GeometricDelay) = default;
};
using DelayModel = std::variant<NoDelay, ConstantDelay, GeometricDelay>;

std::uint64_t sample_delay(const DelayModel& model, Rng& rng);
/// "none", "const:N", "geo:MEAN"
std::optional<DelayModel> parse_delay(std::string_view text);
std::string to_string(const DelayModel& model);
void validate(const DelayModel& model);

// ---- fidelity -------------------------------------------------------------

/// Linear bias zeta(z) = zeta0 (1 - z).
struct FidelityModel {
  bool enabled = false;
  double zeta0 = 0.1;

  double bias(double z) const { return enabled ? zeta0 * (1.0 - z) : 0.0; }
};

/// z_h = zeta^{-1}(nu1 rho^h) clamped to [0,1]; 1 when disabled or zeta0 = 0.
double fidelity_for_depth(const FidelityModel& fm, double nu1, double rho, std::uint32_t depth);

// ---- cost -----------------------------------------------------------------

struct BenchmarkCost {};
struct LinearGrowthCost { double beta; };   // min(beta h, lambda1)
struct ConstantCost { double beta; };       // min(beta, lambda1)
struct PolyDecayCost { double beta; };      // min(h^-beta, lambda1)
struct ExpDecayCost { double beta; };       // min(beta^-h, lambda1)
using CostModel = std::variant<BenchmarkCost, LinearGrowthCost, ConstantCost, PolyDecayCost, ExpDecayCost>;

/// Per-step cost at step/depth index h >= 1. BenchmarkCost ignores h and
/// returns `benchmark_cost_at_z`; the rest are capped at lambda1.
double step_cost(const CostModel& cm, std::uint64_t h, double lambda1, double benchmark_cost_at_z);

/// Closed-form H(Lambda) estimate for the abstract cost models.
/// Throws std::invalid_argument for BenchmarkCost, PolyDecay with beta = 1,
/// or Lambda < lambda1.
double horizon_lower_bound(const CostModel& cm, double budget, double lambda1);

/// max{H : sum_{h=1..H} cost_h <= Lambda}, summed step by step. BenchmarkCost
/// is treated as lambda1 per step. Saturates at kHorizonCap.
std::uint64_t horizon_exact(const CostModel& cm, double budget, double lambda1);
inline constexpr std::uint64_t kHorizonCap = 100'000'000;

/// "benchmark", "linear:B", "constant:B", "poly:B", "exp:B"
std::optional<CostModel> parse_cost_model(std::string_view text);
std::string to_string(const CostModel& cm);

// ---- noise ----------------------------------------------------------------

enum class NoiseKind { Gaussian, Laplace, Uniform };
std::optional<NoiseKind> parse_noise_kind(std::string_view text);
std::string to_string(NoiseKind kind);
/// Zero-mean draw with standard deviation `sigma`.
double sample_noise(NoiseKind kind, double sigma, Rng& rng);

// ---- environment ----------------------------------------------------------

struct QueryRecord {
  std::uint64_t id = 0;
  std::uint64_t origin_round = 0;
  std::uint64_t arrival_round = 0;
  std::vector<NodeId> path;
  Eigen::VectorXd point;
  double fidelity = 1.0;
  double value = 0.0;  // hidden until arrival
};

struct SimConfig {
  DelayModel delay = NoDelay{};
  FidelityModel fidelity;
  CostModel cost_model = BenchmarkCost{};
  double noise_sigma = 0.0;
  NoiseKind noise = NoiseKind::Gaussian;
};

/// Discrete-event oracle: noisy multi-fidelity evaluation, delayed arrivals,
/// and the cost ledger.
class SimEnvironment {
 public:
  SimEnvironment(const Benchmark& benchmark, SimConfig config, std::uint64_t seed);

  /// Evaluates f_z(point) + noise now, schedules its arrival, charges the
  /// step cost and returns the query id. Throws std::out_of_range when the
  /// point is outside the benchmark domain.
  std::uint64_t invoke(const Eigen::VectorXd& point, double z, std::uint32_t depth,
                       std::uint64_t round, std::vector<NodeId> path);

  /// Removes and returns every pending record with arrival_round <= round,
  /// ordered by (arrival_round, id).
  std::vector<QueryRecord> collect(std::uint64_t round);

  /// Everything still pending, in arrival order.
  std::vector<QueryRecord> drain();

  double step_cost(std::uint32_t depth, double z) const;
  double cumulative_cost() const { return cumulative_cost_; }
  std::size_t pending_count() const { return pending_.size(); }
  std::span<const QueryRecord> pending() const { return pending_; }
  const Benchmark& benchmark() const { return *benchmark_; }
  const SimConfig& config() const { return config_; }

 private:
  const Benchmark* benchmark_;
  SimConfig config_;
  Rng rng_;
  std::vector<QueryRecord> pending_;  // min-heap on (arrival_round, id)
  std::uint64_t next_id_ = 0;
  double cumulative_cost_ = 0.0;
};

}  // namespace pcts

#endif  // PCTS_FEEDBACK_SIMULATOR_HPP
