#include "pcts/mfpoo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pcts {

std::vector<double> rho_grid(double rho_max, std::size_t n) {
  std::vector<double> grid;
  for (std::size_t i = 1; i <= n; ++i) {
    grid.push_back(std::pow(rho_max, 2.0 * static_cast<double>(n) / static_cast<double>(i + 1)));
  }
  return grid;
}

MfpooPlan plan_instances(double nu_max, double rho_max, const Budget& budget, const CostModel& cost_model,
                         double lambda1, bool append_rho_max) {
  if (!(rho_max > 0.0 && rho_max < 1.0)) throw std::invalid_argument("rho_max must lie strictly inside (0,1)");
  if (!(nu_max > 0.0)) throw std::invalid_argument("nu_max must be positive");

  double horizon = 0.0;
  if (auto* r = std::get_if<RoundBudget>(&budget)) {
    horizon = static_cast<double>(r->rounds);
  } else {
    const double total = std::get<CostBudget>(budget).total;
    if (!(total > lambda1)) throw std::invalid_argument("mfpoo: budget must exceed one full-fidelity step");
    horizon = static_cast<double>(horizon_exact(cost_model, total, lambda1));
  }

  MfpooPlan plan;
  plan.nu_max = nu_max;
  plan.rho_max = rho_max;
  std::size_t n = 1;
  // ln(T / ln T) is only meaningful once T / ln T > 1
  if (horizon >= 3.0) {
    const double raw = 0.5 * std::log(2.0) / std::log(1.0 / rho_max) * std::log(horizon / std::log(horizon));
    n = static_cast<std::size_t>(std::max(1.0, std::ceil(raw)));
  }
  plan.instances = n;
  plan.rho_grid = rho_grid(rho_max, n);
  if (append_rho_max && plan.rho_grid.back() != rho_max) {
    plan.rho_grid.push_back(rho_max);
    plan.instances = plan.rho_grid.size();
  }

  if (auto* r = std::get_if<RoundBudget>(&budget)) {
    plan.per_instance_budget = RoundBudget{r->rounds / plan.instances};
  } else {
    plan.per_instance_budget = CostBudget{std::get<CostBudget>(budget).total / static_cast<double>(plan.instances)};
  }
  return plan;
}

std::uint64_t instance_seed(std::uint64_t master, std::size_t i) {
  return master + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(i);
}

MfpooResult run_mfpoo(const RunConfig& base, double nu_max, double rho_max, bool append_rho_max) {
  MfpooResult result;
  result.plan = plan_instances(nu_max, rho_max, base.budget, base.cost_model, base.benchmark.full_cost(),
                               append_rho_max);
  for (std::size_t i = 0; i < result.plan.rho_grid.size(); ++i) {
    RunConfig cfg = base;
    cfg.nu1 = nu_max;
    cfg.rho = result.plan.rho_grid[i];
    cfg.budget = result.plan.per_instance_budget;
    cfg.seed = instance_seed(base.seed, i);
    result.traces.push_back(run_pcts(cfg));
  }
  for (std::size_t i = 1; i < result.traces.size(); ++i) {
    if (result.traces[i].final.observed_value > result.traces[result.best].final.observed_value) result.best = i;
  }
  return result;
}

}  // namespace pcts
