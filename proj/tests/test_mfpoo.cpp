#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "pcts/mfpoo.hpp"

using namespace pcts;

namespace {

RunConfig base(const char* bench, std::uint64_t rounds) {
  RunConfig c;
  c.benchmark = benchmark_by_name(bench);
  c.policy = PolicyParams::ucb1();
  c.budget = RoundBudget{rounds};
  return c;
}

std::size_t expected_n(double rho_max, double horizon) {
  if (horizon < 3.0) return 1;
  const double raw = 0.5 * std::log(2.0) / std::log(1.0 / rho_max) * std::log(horizon / std::log(horizon));
  return static_cast<std::size_t>(std::max(1.0, std::ceil(raw)));
}

}  // namespace

TEST_CASE("grid for three instances at rho_max = 0.95") {
  auto g = rho_grid(0.95, 3);
  REQUIRE(g.size() == 3);
  CHECK(g[0] == doctest::Approx(0.857375).epsilon(1e-12));
  CHECK(g[1] == doctest::Approx(0.9025).epsilon(1e-12));
  CHECK(g[2] == doctest::Approx(0.9259454628).epsilon(1e-9));
  CHECK(rho_grid(0.7, 1) == std::vector<double>{0.7});
}

TEST_CASE("short horizons get a single instance at rho_max") {
  for (std::uint64_t t : {0, 1, 2}) {
    auto plan = plan_instances(1.0, 0.95, RoundBudget{t}, ConstantCost{1}, 1.0);
    CHECK(plan.instances == 1);
    CHECK(plan.rho_grid == std::vector<double>{0.95});
  }
  // T = 3 already lands on seven instances with rho_max = 0.95
  CHECK(plan_instances(1.0, 0.95, RoundBudget{3}, ConstantCost{1}, 1.0).instances == 7);
}

TEST_CASE("append_rho_max adds one grid point") {
  auto plain = plan_instances(1.0, 0.9, RoundBudget{500}, ConstantCost{1}, 1.0);
  auto extra = plan_instances(1.0, 0.9, RoundBudget{500}, ConstantCost{1}, 1.0, true);
  CHECK(extra.instances == plain.instances + 1);
  CHECK(extra.rho_grid.back() == 0.9);
  auto single = plan_instances(1.0, 0.9, RoundBudget{2}, ConstantCost{1}, 1.0, true);
  CHECK(single.instances == 1);
}

TEST_CASE("planner rejects bad inputs") {
  CHECK_THROWS(plan_instances(1.0, 1.0, RoundBudget{10}, ConstantCost{1}, 1.0));
  CHECK_THROWS(plan_instances(0.0, 0.5, RoundBudget{10}, ConstantCost{1}, 1.0));
  CHECK_THROWS(plan_instances(1.0, 0.5, CostBudget{0.5}, ConstantCost{1}, 1.0));
}

TEST_CASE("cost budgets plan on the exact horizon") {
  // constant 0.5 per step with lambda1 = 1: 20 steps fit in 10
  auto plan = plan_instances(1.0, 0.8, CostBudget{10}, ConstantCost{0.5}, 1.0);
  CHECK(plan.instances == expected_n(0.8, 20));
  CHECK(std::get<CostBudget>(plan.per_instance_budget).total * static_cast<double>(plan.instances) ==
        doctest::Approx(10.0));
}

TEST_CASE("a single instance is plain PCTS") {
  RunConfig c = base("hartmann3", 2);
  c.seed = 42;
  c.noise_sigma2 = 0.01;
  MfpooResult r = run_mfpoo(c, 0.7, 0.6);
  REQUIRE(r.traces.size() == 1);
  RunConfig p = c;
  p.nu1 = 0.7;
  p.rho = 0.6;
  RunTrace direct = run_pcts(p);
  REQUIRE(direct.rounds.size() == r.best_trace().rounds.size());
  for (std::size_t i = 0; i < direct.rounds.size(); ++i) {
    CHECK(direct.rounds[i].selected == r.best_trace().rounds[i].selected);
    CHECK(direct.rounds[i].best_value == r.best_trace().rounds[i].best_value);
  }
}

TEST_CASE("instance seeds") {
  CHECK(instance_seed(9, 0) == 9);
  std::set<std::uint64_t> seen;
  for (std::size_t i = 0; i < 50; ++i) seen.insert(instance_seed(9, i));
  CHECK(seen.size() == 50);
}

// ---- properties -------------------------------------------------------------

TEST_CASE("property: grid law and instance count") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> rho(0.05, 0.99);
  std::uniform_int_distribution<std::uint64_t> rounds(0, 100000);
  for (int c = 0; c < 1000; ++c) {
    const double rm = rho(rng);
    const std::uint64_t t = rounds(rng);
    auto plan = plan_instances(1.0, rm, RoundBudget{t}, ConstantCost{1}, 1.0);
    const std::size_t n = expected_n(rm, static_cast<double>(t));
    REQUIRE(plan.instances == n);
    REQUIRE(plan.rho_grid.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      const double want = std::pow(rm, 2.0 * static_cast<double>(n) / static_cast<double>(i + 2));
      CHECK(std::abs(plan.rho_grid[i] - want) <= 1e-12);
      CHECK(plan.rho_grid[i] > 0.0);
      CHECK(plan.rho_grid[i] <= rm);
      if (i > 0) CHECK(plan.rho_grid[i] > plan.rho_grid[i - 1]);
    }
    CHECK(std::get<RoundBudget>(plan.per_instance_budget).rounds == t / n);
  }
}

TEST_CASE("property: the chosen instance dominates and budgets are conserved") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RunConfig c = base("branin", 300);
    c.seed = seed;
    c.noise_sigma2 = 0.05;
    c.delay = ConstantDelay{3};
    c.fidelity.enabled = true;
    c.policy = PolicyParams::ucbv(2.0);
    c.budget = CostBudget{150};
    MfpooResult r = run_mfpoo(c, 1.0, 0.9);
    REQUIRE(r.traces.size() == r.plan.instances);
    double spent = 0;
    const double share = std::get<CostBudget>(r.plan.per_instance_budget).total;
    for (std::size_t i = 0; i < r.traces.size(); ++i) {
      const auto& t = r.traces[i];
      CHECK(r.best_trace().final.observed_value >= t.final.observed_value);
      REQUIRE_FALSE(t.rounds.empty());
      CHECK(t.rounds.back().cumulative_cost <= share + c.benchmark.full_cost());
      spent += t.rounds.back().cumulative_cost;
    }
    CHECK(spent <= 150.0 + static_cast<double>(r.plan.instances) * c.benchmark.full_cost());
    const double best_rho = r.plan.rho_grid[r.best];
    CHECK(std::find(r.plan.rho_grid.begin(), r.plan.rho_grid.end(), best_rho) != r.plan.rho_grid.end());
  }
}

TEST_CASE("property: instances do not share random state") {
  // instance i of a run equals a standalone PCTS run with the same derived seed
  RunConfig c = base("currin", 200);
  c.seed = 5;
  c.noise_sigma2 = 0.05;
  c.policy = PolicyParams::ucb1_sigma(std::sqrt(0.05));
  MfpooResult r = run_mfpoo(c, 1.0, 0.9);
  for (std::size_t i = 0; i < r.traces.size(); ++i) {
    RunConfig p = c;
    p.nu1 = 1.0;
    p.rho = r.plan.rho_grid[i];
    p.budget = r.plan.per_instance_budget;
    p.seed = instance_seed(c.seed, i);
    RunTrace alone = run_pcts(p);
    REQUIRE(alone.rounds.size() == r.traces[i].rounds.size());
    CHECK(alone.final.observed_value == r.traces[i].final.observed_value);
    CHECK(alone.tree.node_count == r.traces[i].tree.node_count);
  }
}
