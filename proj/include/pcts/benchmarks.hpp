#ifndef PCTS_BENCHMARKS_HPP
#define PCTS_BENCHMARKS_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "pcts/box.hpp"

namespace pcts {

using PointRef = Eigen::Ref<const Eigen::VectorXd>;

// Multi-fidelity synthetic objectives f_z(x), z in [0,1]; z = 1 is exact.
// All of them are maximized and throw std::out_of_range outside the domain.

double hartmann3(const PointRef& x, double z);
double hartmann6(const PointRef& x, double z);
double currin_exp(const PointRef& x, double z);
/// x = [r_w, r, T_u, H_u, T_l, H_l, L, K_w]
double borehole(const PointRef& x, double z);
/// Negated Branin, so the maximum is -0.397887.
double branin(const PointRef& x, double z);
/// 20-dimensional, single fidelity.
double schwefel(const PointRef& x);
/// 1 - (x - 0.3)^2 on [0,1], single fidelity.
double quadratic1d(const PointRef& x);

struct Benchmark {
  std::string name;
  Box domain;
  std::function<double(const PointRef&, double)> evaluate;
  /// lambda(z), strictly positive on [0,1]
  std::function<double(double)> cost;
  std::optional<double> default_sigma2;
  /// UCB-V range proxy default
  std::optional<double> default_b;
  double f_star = 0.0;
  std::optional<Eigen::VectorXd> maximizer_hint;
  bool multi_fidelity = true;

  Eigen::Index dim() const { return domain.dim(); }
  double full_cost() const { return cost(1.0); }
};

/// Registry lookup; throws std::out_of_range for unknown names.
const Benchmark& benchmark_by_name(std::string_view name);
std::optional<std::reference_wrapper<const Benchmark>> find_benchmark(std::string_view name);
std::vector<std::string> benchmark_names();

}  // namespace pcts

#endif  // PCTS_BENCHMARKS_HPP
