#include "pcts/benchmarks.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pcts {
namespace {

void require_in(const Box& domain, const PointRef& x, const char* name) {
  if (!domain.contains(x)) throw std::out_of_range(std::string(name) + ": point outside domain");
}

template <int D>
double hartmann(const PointRef& x, double z, const double (&a)[4][D], const double (&p)[4][D]) {
  static constexpr std::array<double, 4> alpha{1.0, 1.2, 3.0, 3.2};
  const double shift = 0.1 * (1.0 - z);
  double total = 0.0;
  for (int i = 0; i < 4; ++i) {
    double inner = 0.0;
    for (int j = 0; j < D; ++j) {
      const double d = x[j] - p[i][j];
      inner += a[i][j] * d * d;
    }
    total += (alpha[i] - shift) * std::exp(-inner);
  }
  return total;
}

constexpr double kA3[4][3] = {{3, 10, 30}, {0.1, 10, 35}, {3, 10, 30}, {0.1, 10, 35}};
constexpr double kP3[4][3] = {{0.3689, 0.1170, 0.2673},
                              {0.4699, 0.4387, 0.7470},
                              {0.1091, 0.8732, 0.5547},
                              {0.0381, 0.5743, 0.8828}};
constexpr double kA6[4][6] = {{10, 3, 17, 3.5, 1.7, 8},
                              {0.05, 10, 17, 0.1, 8, 14},
                              {3, 3.5, 1.7, 10, 17, 8},
                              {17, 8, 0.05, 10, 0.1, 14}};
constexpr double kP6[4][6] = {{0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
                              {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
                              {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
                              {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}};

Box borehole_domain() {
  Eigen::VectorXd lo(8), hi(8);
  lo << 0.05, 100, 63070, 990, 63.1, 700, 1120, 9855;
  hi << 0.15, 50000, 115600, 1110, 116, 820, 1680, 12045;
  return Box(lo, hi);
}

Box branin_domain() {
  Eigen::VectorXd lo(2), hi(2);
  lo << -5, 0;
  hi << 10, 15;
  return Box(lo, hi);
}

const Box kUnit3 = Box::cube(3, 0, 1);
const Box kUnit6 = Box::cube(6, 0, 1);
const Box kUnit2 = Box::cube(2, 0, 1);
const Box kUnit1 = Box::cube(1, 0, 1);
const Box kBorehole = borehole_domain();
const Box kBranin = branin_domain();
const Box kSchwefel = Box::cube(20, 0, 500);

Eigen::VectorXd vec(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

std::vector<Benchmark> make_registry() {
  std::vector<Benchmark> out;
  // f_star values are the maxima located by tests/oracles/benchmark_oracle.py
  out.push_back({"hartmann3", kUnit3, hartmann3, [](double z) { return 0.05 + 0.95 * z * z * z; },
                 0.01, 5.0, 3.862779787332663,
                 vec({0.11458886752332709, 0.5556488945904771, 0.8525469850399127}), true});
  out.push_back({"hartmann6", kUnit6, hartmann6, [](double z) { return 0.05 + 0.95 * z * z * z; },
                 0.05, 5.0, 3.322368011415515,
                 vec({0.20168951138537505, 0.1500106928003017, 0.47687397118891944,
                      0.2753324302883223, 0.3116516167715188, 0.6573005337429142}),
                 true});
  out.push_back({"currin", kUnit2, currin_exp, [](double z) { return 0.1 + z * z; }, 0.05, 5.0,
                 13.79872204472844, vec({0.2166666668966813, 0.5}), true});
  out.push_back({"borehole", kBorehole, borehole, [](double z) { return 0.1 + std::pow(z, 1.5); },
                 0.01, 5.0, 309.5755876604079,
                 vec({0.15, 100, 115600, 1110, 116, 700, 1120, 12045}), true});
  out.push_back({"branin", kBranin, branin, [](double z) { return 0.05 + z * z * z; }, 0.05, 5.0,
                 -0.39788735772973816, vec({std::numbers::pi, 2.275}), true});
  out.push_back({"schwefel", kSchwefel, [](const PointRef& x, double) { return schwefel(x); },
                 [](double) { return 1.0; }, 0.1, 5.0, -0.00025455132890783716,
                 Eigen::VectorXd::Constant(20, 420.9687478562073), false});
  out.push_back({"quadratic1d", kUnit1, [](const PointRef& x, double) { return quadratic1d(x); },
                 [](double) { return 1.0; }, std::nullopt, std::nullopt, 1.0, vec({0.3}), false});
  return out;
}

const std::vector<Benchmark>& registry() {
  static const std::vector<Benchmark> reg = make_registry();
  return reg;
}

}  // namespace

double hartmann3(const PointRef& x, double z) {
  require_in(kUnit3, x, "hartmann3");
  return hartmann<3>(x, z, kA3, kP3);
}

double hartmann6(const PointRef& x, double z) {
  require_in(kUnit6, x, "hartmann6");
  return hartmann<6>(x, z, kA6, kP6);
}

double currin_exp(const PointRef& x, double z) {
  require_in(kUnit2, x, "currin");
  const double x1 = x[0];
  const double x2 = x[1];
  // exp(-1/(2 x2)) -> 0 as x2 -> 0+
  const double decay = x2 > 0.0 ? std::exp(-1.0 / (2.0 * x2)) : 0.0;
  const double num = ((2300.0 * x1 + 1900.0) * x1 + 2092.0) * x1 + 60.0;
  const double den = ((100.0 * x1 + 500.0) * x1 + 4.0) * x1 + 20.0;
  return (1.0 - 0.1 * (1.0 - z) * decay) * (num / den);
}

double borehole(const PointRef& x, double z) {
  require_in(kBorehole, x, "borehole");
  const double rw = x[0], r = x[1], tu = x[2], hu = x[3], tl = x[4], hl = x[5], len = x[6], kw = x[7];
  if (r <= rw) throw std::out_of_range("borehole: requires r > r_w");
  const double lg = std::log(r / rw);
  const double leak = 2.0 * len * tu / (lg * rw * rw * kw) + tu / tl;
  const double exact = 2.0 * std::numbers::pi * tu * (hu - hl) / (lg * (1.0 + leak));
  const double coarse = 5.0 * tu * (hu - hl) / (lg * (1.5 + leak));
  return z * exact + (1.0 - z) * coarse;
}

double branin(const PointRef& x, double z) {
  require_in(kBranin, x, "branin");
  constexpr double pi = std::numbers::pi;
  const double b = 5.1 / (4.0 * pi * pi) - 0.01 * (1.0 - z);
  const double c = 5.0 / pi - 0.1 * (1.0 - z);
  const double t = 1.0 / (8.0 * pi) + 0.05 * (1.0 - z);
  const double q = x[1] - b * x[0] * x[0] + c * x[0] - 6.0;
  return -(q * q + 10.0 * (1.0 - t) * std::cos(x[0]) + 10.0);
}

double schwefel(const PointRef& x) {
  require_in(kSchwefel, x, "schwefel");
  double total = -418.9829 * static_cast<double>(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) total += x[i] * std::sin(std::sqrt(std::abs(x[i])));
  return total;
}

double quadratic1d(const PointRef& x) {
  require_in(kUnit1, x, "quadratic1d");
  const double d = x[0] - 0.3;
  return 1.0 - d * d;
}

const Benchmark& benchmark_by_name(std::string_view name) {
  if (auto found = find_benchmark(name)) return found->get();
  throw std::out_of_range("unknown benchmark: " + std::string(name));
}

std::optional<std::reference_wrapper<const Benchmark>> find_benchmark(std::string_view name) {
  for (const auto& b : registry()) {
    if (b.name == name) return std::cref(b);
  }
  return std::nullopt;
}

std::vector<std::string> benchmark_names() {
  std::vector<std::string> names;
  for (const auto& b : registry()) names.push_back(b.name);
  return names;
}

}  // namespace pcts
