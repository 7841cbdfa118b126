#ifndef PCTS_ENGINE_HPP
#define PCTS_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pcts/bandit_policy.hpp"
#include "pcts/benchmarks.hpp"
#include "pcts/feedback_simulator.hpp"
#include "pcts/partition_tree.hpp"

namespace pcts {

struct CostBudget {
  double total = 0.0;
};
struct RoundBudget {
  std::uint64_t rounds = 0;
};
using Budget = std::variant<CostBudget, RoundBudget>;

struct RunConfig {
  Benchmark benchmark;
  PolicyParams policy;
  double nu1 = 1.0;
  double rho = 0.5;
  DelayModel delay = NoDelay{};
  double noise_sigma2 = 0.0;
  NoiseKind noise = NoiseKind::Gaussian;
  FidelityModel fidelity;
  CostModel cost_model = BenchmarkCost{};
  Budget budget = RoundBudget{100};
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on rho outside (0,1), nu1 <= 0, a bad
  /// policy, negative noise or a non-positive budget.
  void validate() const;
  SimConfig sim_config() const;
  bool uses_fidelity() const { return fidelity.enabled && benchmark.multi_fidelity; }
};

/// Independent stream seed for one consumer of a run's randomness.
std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t stream);
inline constexpr std::uint64_t kTreeStream = 1;
inline constexpr std::uint64_t kOracleStream = 2;

struct NodeKey {
  std::uint32_t depth = 0;
  NodeIndex index;
  friend bool operator==(const NodeKey&, const NodeKey&) = default;
};

struct RoundRecord {
  std::uint64_t round = 0;
  double cumulative_cost = 0.0;
  std::optional<NodeKey> selected;  // empty on idle rounds (wait-and-act)
  Eigen::VectorXd point;
  double fidelity = 1.0;
  std::size_t feedbacks_received = 0;
  double best_value = -kInf;    // largest observed feedback so far
  double simple_regret = std::numeric_limits<double>::quiet_NaN();  // NaN before any feedback
  std::uint32_t tree_height = 0;
  std::size_t node_count = 1;
};

struct Recommendation {
  Eigen::VectorXd point;
  double observed_value = -kInf;
  double true_value = 0.0;  // noiseless f_1(point)
  double regret = 0.0;
  bool has_data = false;
};

/// Running argmax of observed feedback.
class BestObserved {
 public:
  /// True when the recommendation changed.
  bool update(const Eigen::VectorXd& point, double value);
  bool has_data() const { return has_data_; }
  double value() const { return value_; }
  const Eigen::VectorXd& point() const { return point_; }

 private:
  bool has_data_ = false;
  double value_ = -kInf;
  Eigen::VectorXd point_;
};

/// Best observed point, scored with noiseless full fidelity. Without data,
/// the domain center with has_data = false.
Recommendation recommend(const BestObserved& best, const Benchmark& benchmark);

struct RunTrace {
  RunConfig config;
  std::string algorithm;
  std::vector<RoundRecord> rounds;
  Recommendation final;
  TreeStatistics tree;
  bool budget_exhausted_before_first_query = false;
  std::size_t drained_feedbacks = 0;

  std::size_t selections() const;
};

struct RoundView {
  const PartitionTree* tree;  // null for random search
  const SimEnvironment& env;
  const RoundRecord& record;
};

struct RunHooks {
  /// Called at the end of every round, after feedback and expansion.
  std::function<void(const RoundView&)> on_round;
  /// Called once after the remaining feedback has been drained into the tree
  /// (null for random search).
  std::function<void(const PartitionTree*)> on_finish;
};

/// Procrastinated tree search: HOO driven by delay-aware confidence bounds.
RunTrace run_pcts(const RunConfig& config, const RunHooks& hooks = {});

/// HOO that only selects once every outstanding feedback has arrived.
/// Requires NoDelay or ConstantDelay.
RunTrace run_wait_and_act(const RunConfig& config, const RunHooks& hooks = {});

/// Uniform sampling over the whole domain at full fidelity.
RunTrace run_random_search(const RunConfig& config, const RunHooks& hooks = {});

}  // namespace pcts

#endif  // PCTS_ENGINE_HPP
