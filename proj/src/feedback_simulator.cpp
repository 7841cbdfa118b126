#include "pcts/feedback_simulator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace pcts {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string fmt(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

bool heap_later(const QueryRecord& a, const QueryRecord& b) {
  return a.arrival_round != b.arrival_round ? a.arrival_round > b.arrival_round : a.id > b.id;
}

}  // namespace

std::uint64_t sample_delay(const DelayModel& model, Rng& rng) {
  return std::visit(overloaded{
                        [](NoDelay) -> std::uint64_t { return 0; },
                        [](ConstantDelay d) -> std::uint64_t { return d.rounds; },
                        [&](GeometricDelay d) -> std::uint64_t {
                          // std::geometric_distribution counts failures; shift onto {1,2,...}
                          std::geometric_distribution<std::uint64_t> geo(1.0 / d.mean);
                          return geo(rng) + 1;
                        },
                    },
                    model);
}

std::optional<DelayModel> parse_delay(std::string_view text) {
  if (text == "none") return NoDelay{};
  if (text.starts_with("const:")) {
    std::uint64_t n = 0;
    auto rest = text.substr(6);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) return std::nullopt;
    return ConstantDelay{n};
  }
  if (text.starts_with("geo:")) {
    auto mean = parse_double(text.substr(4));
    if (!mean || !(*mean >= 1.0) || !std::isfinite(*mean)) return std::nullopt;
    return GeometricDelay{*mean};
  }
  return std::nullopt;
}

std::string to_string(const DelayModel& model) {
  return std::visit(overloaded{
                        [](NoDelay) { return std::string("none"); },
                        [](ConstantDelay d) { return "const:" + std::to_string(d.rounds); },
                        [](GeometricDelay d) { return "geo:" + fmt(d.mean); },
                    },
                    model);
}

void validate(const DelayModel& model) {
  if (auto* g = std::get_if<GeometricDelay>(&model); g && !(g->mean >= 1.0 && std::isfinite(g->mean))) {
    throw std::invalid_argument("geometric delay mean must be >= 1");
  }
}

double fidelity_for_depth(const FidelityModel& fm, double nu1, double rho, std::uint32_t depth) {
  if (!fm.enabled || fm.zeta0 <= 0.0) return 1.0;
  const double target_bias = nu1 * std::pow(rho, static_cast<double>(depth));
  return std::clamp(1.0 - target_bias / fm.zeta0, 0.0, 1.0);
}

double step_cost(const CostModel& cm, std::uint64_t h, double lambda1, double benchmark_cost_at_z) {
  const double hd = static_cast<double>(std::max<std::uint64_t>(h, 1));
  return std::visit(overloaded{
                        [&](BenchmarkCost) { return benchmark_cost_at_z; },
                        [&](LinearGrowthCost c) { return std::min(c.beta * hd, lambda1); },
                        [&](ConstantCost c) { return std::min(c.beta, lambda1); },
                        [&](PolyDecayCost c) { return std::min(std::pow(hd, -c.beta), lambda1); },
                        [&](ExpDecayCost c) { return std::min(std::pow(c.beta, -hd), lambda1); },
                    },
                    cm);
}

double horizon_lower_bound(const CostModel& cm, double budget, double lambda1) {
  if (!(lambda1 > 0.0) || budget < lambda1) {
    throw std::invalid_argument("horizon_lower_bound: requires budget >= lambda1 > 0");
  }
  const double spend = 2.0 * budget - lambda1;
  return std::visit(
      overloaded{
          [](BenchmarkCost) -> double {
            throw std::invalid_argument("horizon_lower_bound: no closed form for benchmark cost");
          },
          [&](LinearGrowthCost c) { return std::sqrt(2.0 * spend / c.beta); },
          [&](ConstantCost c) { return spend / c.beta; },
          [&](PolyDecayCost c) {
            if (c.beta == 1.0) throw std::invalid_argument("horizon_lower_bound: poly decay needs beta != 1");
            return std::pow(1.0 + (1.0 - c.beta) * spend, 1.0 / (1.0 - c.beta));
          },
          [&](ExpDecayCost c) { return std::log(1.0 + (1.0 - c.beta) * spend) / std::log(1.0 / c.beta); },
      },
      cm);
}

std::uint64_t horizon_exact(const CostModel& cm, double budget, double lambda1) {
  double spent = 0.0;
  std::uint64_t h = 0;
  while (h < kHorizonCap) {
    const double c = std::holds_alternative<BenchmarkCost>(cm) ? lambda1 : step_cost(cm, h + 1, lambda1, lambda1);
    if (spent + c > budget) break;
    spent += c;
    ++h;
  }
  return h;
}

std::optional<CostModel> parse_cost_model(std::string_view text) {
  if (text == "benchmark") return BenchmarkCost{};
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto kind = text.substr(0, colon);
  const auto beta = parse_double(text.substr(colon + 1));
  if (!beta || !(*beta > 0.0) || !std::isfinite(*beta)) return std::nullopt;
  if (kind == "linear") return LinearGrowthCost{*beta};
  if (kind == "constant") return ConstantCost{*beta};
  if (kind == "poly" && *beta != 1.0) return PolyDecayCost{*beta};
  if (kind == "exp" && *beta <= 1.0) return ExpDecayCost{*beta};
  return std::nullopt;
}

std::string to_string(const CostModel& cm) {
  return std::visit(overloaded{
                        [](BenchmarkCost) { return std::string("benchmark"); },
                        [](LinearGrowthCost c) { return "linear:" + fmt(c.beta); },
                        [](ConstantCost c) { return "constant:" + fmt(c.beta); },
                        [](PolyDecayCost c) { return "poly:" + fmt(c.beta); },
                        [](ExpDecayCost c) { return "exp:" + fmt(c.beta); },
                    },
                    cm);
}

std::optional<NoiseKind> parse_noise_kind(std::string_view text) {
  if (text == "gaussian") return NoiseKind::Gaussian;
  if (text == "laplace") return NoiseKind::Laplace;
  if (text == "uniform") return NoiseKind::Uniform;
  return std::nullopt;
}

std::string to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::Gaussian: return "gaussian";
    case NoiseKind::Laplace: return "laplace";
    case NoiseKind::Uniform: return "uniform";
  }
  return "?";
}

double sample_noise(NoiseKind kind, double sigma, Rng& rng) {
  if (sigma == 0.0) return 0.0;
  switch (kind) {
    case NoiseKind::Gaussian:
      return std::normal_distribution<double>(0.0, sigma)(rng);
    case NoiseKind::Laplace: {
      // variance 2 s^2
      const double scale = sigma / std::sqrt(2.0);
      std::exponential_distribution<double> expo(1.0);
      const double a = expo(rng);
      const double b = expo(rng);
      return scale * (a - b);
    }
    case NoiseKind::Uniform: {
      const double half = std::sqrt(3.0) * sigma;
      return std::uniform_real_distribution<double>(-half, half)(rng);
    }
  }
  return 0.0;
}

SimEnvironment::SimEnvironment(const Benchmark& benchmark, SimConfig config, std::uint64_t seed)
    : benchmark_(&benchmark), config_(std::move(config)), rng_(seed) {
  validate(config_.delay);
  if (!(config_.noise_sigma >= 0.0) || !std::isfinite(config_.noise_sigma)) {
    throw std::invalid_argument("noise sigma must be finite and >= 0");
  }
}

double SimEnvironment::step_cost(std::uint32_t depth, double z) const {
  return pcts::step_cost(config_.cost_model, depth, benchmark_->full_cost(), benchmark_->cost(z));
}

std::uint64_t SimEnvironment::invoke(const Eigen::VectorXd& point, double z, std::uint32_t depth,
                                     std::uint64_t round, std::vector<NodeId> path) {
  if (!benchmark_->domain.contains(point)) throw std::out_of_range("invoke: point outside domain");
  if (!(z >= 0.0 && z <= 1.0)) throw std::out_of_range("invoke: fidelity outside [0,1]");

  QueryRecord rec;
  rec.id = next_id_++;
  rec.origin_round = round;
  rec.path = std::move(path);
  rec.point = point;
  rec.fidelity = z;
  // noise first, then delay: the delay draw never sees the value
  rec.value = benchmark_->evaluate(point, z) + sample_noise(config_.noise, config_.noise_sigma, rng_);
  rec.arrival_round = round + sample_delay(config_.delay, rng_);
  cumulative_cost_ += step_cost(depth, z);

  pending_.push_back(std::move(rec));
  std::push_heap(pending_.begin(), pending_.end(), heap_later);
  return next_id_ - 1;
}

std::vector<QueryRecord> SimEnvironment::collect(std::uint64_t round) {
  std::vector<QueryRecord> out;
  while (!pending_.empty() && pending_.front().arrival_round <= round) {
    std::pop_heap(pending_.begin(), pending_.end(), heap_later);
    out.push_back(std::move(pending_.back()));
    pending_.pop_back();
  }
  return out;
}

std::vector<QueryRecord> SimEnvironment::drain() {
  return collect(std::numeric_limits<std::uint64_t>::max());
}

}  // namespace pcts
