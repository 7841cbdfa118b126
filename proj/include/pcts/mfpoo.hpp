#ifndef PCTS_MFPOO_HPP
#define PCTS_MFPOO_HPP

#include <cstdint>
#include <vector>

#include "pcts/engine.hpp"

namespace pcts {

/// Geometric grid of smoothness candidates for unknown-smoothness search.
struct MfpooPlan {
  double nu_max = 1.0;
  double rho_max = 0.95;
  std::size_t instances = 1;  // N
  std::vector<double> rho_grid;  // ascending
  Budget per_instance_budget;
};

/// rho_i = rho_max^(2n/(i+1)) for i = 1..n, ascending.
std::vector<double> rho_grid(double rho_max, std::size_t n);

/// N = max(1, ceil(0.5 ln 2 / ln(1/rho_max) * ln(T / ln T))) with T the
/// horizon of the whole budget, rho_i = rho_max^(2N/(i+1)) for i = 1..N and
/// an equal budget split. `append_rho_max` adds rho_max itself when it is not
/// already on the grid (the instance count then grows by one).
MfpooPlan plan_instances(double nu_max, double rho_max, const Budget& budget, const CostModel& cost_model,
                         double lambda1, bool append_rho_max = false);

/// Seed of instance i (zero-based); instance 0 reuses the master seed.
std::uint64_t instance_seed(std::uint64_t master, std::size_t i);

struct MfpooResult {
  MfpooPlan plan;
  std::vector<RunTrace> traces;  // one per grid value, in grid order
  std::size_t best = 0;          // highest observed recommendation value
  const RunTrace& best_trace() const { return traces.at(best); }
};

/// Runs one PCTS instance per grid value with nu1 = nu_max. The base
/// config's nu1, rho and budget are replaced by the plan.
MfpooResult run_mfpoo(const RunConfig& base, double nu_max, double rho_max, bool append_rho_max = false);

}  // namespace pcts

#endif  // PCTS_MFPOO_HPP
