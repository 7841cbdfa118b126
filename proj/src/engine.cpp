#include "pcts/engine.hpp"

#include <cmath>
#include <stdexcept>

namespace pcts {

void RunConfig::validate() const {
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("rho must lie strictly inside (0,1)");
  if (!(nu1 > 0.0) || !std::isfinite(nu1)) throw std::invalid_argument("nu1 must be positive");
  if (!(noise_sigma2 >= 0.0) || !std::isfinite(noise_sigma2)) {
    throw std::invalid_argument("noise variance must be finite and >= 0");
  }
  if (fidelity.enabled && !(fidelity.zeta0 >= 0.0)) throw std::invalid_argument("zeta0 must be >= 0");
  policy.validate();
  pcts::validate(delay);
  if (auto* c = std::get_if<CostBudget>(&budget); c && !(c->total > 0.0)) {
    throw std::invalid_argument("cost budget must be positive");
  }
}

SimConfig RunConfig::sim_config() const {
  FidelityModel fm = fidelity;
  fm.enabled = uses_fidelity();
  return {delay, fm, cost_model, std::sqrt(noise_sigma2), noise};
}

std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t stream) {
  // splitmix64 finalizer over (master, stream)
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool BestObserved::update(const Eigen::VectorXd& point, double value) {
  if (has_data_ && !(value > value_)) return false;
  has_data_ = true;
  value_ = value;
  point_ = point;
  return true;
}

Recommendation recommend(const BestObserved& best, const Benchmark& benchmark) {
  Recommendation rec;
  rec.has_data = best.has_data();
  rec.point = rec.has_data ? best.point() : benchmark.domain.center();
  rec.observed_value = best.value();
  rec.true_value = benchmark.evaluate(rec.point, 1.0);
  rec.regret = benchmark.f_star - rec.true_value;
  return rec;
}

std::size_t RunTrace::selections() const {
  std::size_t n = 0;
  for (const auto& r : rounds) n += r.selected.has_value();
  return n;
}

namespace {

const RunConfig& validated(const RunConfig& config) {
  config.validate();
  return config;
}

class Runner {
 public:
  Runner(const RunConfig& config, std::string algorithm, const RunHooks& hooks)
      : config_(validated(config)),
        hooks_(hooks),
        tree_(config.benchmark.domain),
        env_(config_.benchmark, config.sim_config(), derive_stream_seed(config.seed, kOracleStream)),
        rng_(derive_stream_seed(config.seed, kTreeStream)) {
    trace_.config = config_;
    trace_.algorithm = std::move(algorithm);
  }

  bool budget_allows(std::uint64_t round) const {
    if (auto* r = std::get_if<RoundBudget>(&config_.budget)) return round <= r->rounds;
    return env_.cumulative_cost() <= std::get<CostBudget>(config_.budget).total;
  }

  /// True (and marks the trace) when not even the first query is affordable.
  bool first_query_unaffordable(std::uint32_t depth, double z) {
    auto* c = std::get_if<CostBudget>(&config_.budget);
    if (c && env_.step_cost(depth, z) > c->total) {
      trace_.budget_exhausted_before_first_query = true;
      return true;
    }
    return false;
  }

  double fidelity_at(std::uint32_t depth) const {
    return config_.uses_fidelity() ? fidelity_for_depth(env_.config().fidelity, config_.nu1, config_.rho, depth) : 1.0;
  }

  /// Bounds, B^min backup, optimistic descent, sampling and the oracle query.
  /// `bound_round` is the t in log t.
  NodeId select_and_invoke(std::uint64_t round, std::uint64_t bound_round, RoundRecord& rec) {
    bounds_.resize(tree_.size());
    for (NodeId id = 0; id < tree_.size(); ++id) {
      const PartitionNode& n = tree_.node(id);
      double b = confidence_bound(config_.policy, n.stats, bound_round);
      if (config_.uses_fidelity()) b = apply_fidelity_bias(b, env_.config().fidelity.bias(fidelity_at(n.depth)));
      bounds_[id] = b;
    }
    tree_.backup_bmin(bounds_, config_.nu1, config_.rho);
    const NodeId leaf = tree_.select_optimistic_path(rng_);
    const PartitionNode& node = tree_.node(leaf);
    const double z = fidelity_at(node.depth);
    Eigen::VectorXd x = tree_.sample_point(leaf, rng_);
    std::vector<NodeId> path = tree_.path_to(leaf);
    tree_.record_invocation(path);
    env_.invoke(x, z, node.depth, round, std::move(path));

    rec.selected = NodeKey{node.depth, node.index};
    rec.point = std::move(x);
    rec.fidelity = z;
    return leaf;
  }

  void invoke_root_domain(std::uint64_t round, RoundRecord& rec) {
    Eigen::VectorXd x = sample_uniform(config_.benchmark.domain, rng_);
    env_.invoke(x, 1.0, 0, round, {});
    rec.selected = NodeKey{};
    rec.point = std::move(x);
    rec.fidelity = 1.0;
  }

  std::size_t collect(std::uint64_t round, bool credit_tree) {
    auto arrived = env_.collect(round);
    for (auto& q : arrived) {
      if (credit_tree) tree_.record_feedback(q.path, q.value);
      if (best_.update(q.point, q.value)) current_ = recommend(best_, config_.benchmark);
    }
    return arrived.size();
  }

  void expand(NodeId leaf) { tree_.expand(leaf); }

  void finish_round(RoundRecord& rec, bool with_tree) {
    rec.cumulative_cost = env_.cumulative_cost();
    rec.best_value = best_.value();
    if (best_.has_data()) rec.simple_regret = current_.regret;
    const TreeStatistics ts = with_tree ? tree_.statistics() : TreeStatistics{0, 1};
    rec.tree_height = ts.height;
    rec.node_count = ts.node_count;
    trace_.rounds.push_back(std::move(rec));
    if (hooks_.on_round) hooks_.on_round(RoundView{with_tree ? &tree_ : nullptr, env_, trace_.rounds.back()});
  }

  RunTrace finish(bool with_tree) {
    // late feedback only updates node statistics, never the recommendation
    auto late = env_.drain();
    if (with_tree) {
      for (auto& q : late) tree_.record_feedback(q.path, q.value);
    }
    trace_.drained_feedbacks = late.size();
    if (hooks_.on_finish) hooks_.on_finish(with_tree ? &tree_ : nullptr);
    trace_.final = recommend(best_, config_.benchmark);
    trace_.tree = with_tree ? tree_.statistics() : TreeStatistics{0, 1};
    return std::move(trace_);
  }

  const SimEnvironment& env() const { return env_; }
  const PartitionTree& tree() const { return tree_; }

 private:
  RunConfig config_;
  const RunHooks& hooks_;
  PartitionTree tree_;
  SimEnvironment env_;
  Rng rng_;
  BestObserved best_;
  Recommendation current_;
  std::vector<double> bounds_;
  RunTrace trace_;
};

}  // namespace

RunTrace run_pcts(const RunConfig& config, const RunHooks& hooks) {
  Runner run(config, "pcts", hooks);
  if (run.first_query_unaffordable(0, run.fidelity_at(0))) return run.finish(true);
  for (std::uint64_t t = 1; run.budget_allows(t); ++t) {
    RoundRecord rec;
    rec.round = t;
    const NodeId leaf = run.select_and_invoke(t, t, rec);
    rec.feedbacks_received = run.collect(t, true);
    run.expand(leaf);
    run.finish_round(rec, true);
  }
  return run.finish(true);
}

RunTrace run_wait_and_act(const RunConfig& config, const RunHooks& hooks) {
  if (std::holds_alternative<GeometricDelay>(config.delay)) {
    throw std::invalid_argument("wait-and-act requires a constant (or zero) delay");
  }
  Runner run(config, "wait_and_act", hooks);
  if (run.first_query_unaffordable(0, run.fidelity_at(0))) return run.finish(true);
  std::uint64_t selections = 0;
  for (std::uint64_t t = 1; run.budget_allows(t); ++t) {
    RoundRecord rec;
    rec.round = t;
    rec.feedbacks_received = run.collect(t, true);
    if (run.env().pending_count() == 0) {
      const NodeId leaf = run.select_and_invoke(t, ++selections, rec);
      rec.feedbacks_received += run.collect(t, true);
      run.expand(leaf);
    }
    run.finish_round(rec, true);
  }
  return run.finish(true);
}

RunTrace run_random_search(const RunConfig& config, const RunHooks& hooks) {
  Runner run(config, "random", hooks);
  if (run.first_query_unaffordable(0, 1.0)) return run.finish(false);
  for (std::uint64_t t = 1; run.budget_allows(t); ++t) {
    RoundRecord rec;
    rec.round = t;
    run.invoke_root_domain(t, rec);
    rec.feedbacks_received = run.collect(t, false);
    run.finish_round(rec, false);
  }
  return run.finish(false);
}

}  // namespace pcts
