#include "pcts/bandit_policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pcts {

void PolicyParams::validate() const {
  switch (kind) {
    case PolicyKind::UCB1:
      break;
    case PolicyKind::UCB1Sigma:
      if (!std::isfinite(sigma) || sigma < 0.0) {
        throw std::invalid_argument("UCB1-sigma requires a finite sigma >= 0");
      }
      break;
    case PolicyKind::UCBV:
      if (!std::isfinite(b) || b <= 0.0) throw std::invalid_argument("UCB-V requires a finite b > 0");
      if (!std::isfinite(c) || c <= 0.0) throw std::invalid_argument("UCB-V requires c > 0");
      break;
  }
}

std::string to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::UCB1: return "ucb1";
    case PolicyKind::UCB1Sigma: return "ucb1-sigma";
    case PolicyKind::UCBV: return "ucbv";
  }
  return "?";
}

std::optional<PolicyKind> parse_policy_kind(std::string_view name) {
  if (name == "ucb1" || name == "ducb1") return PolicyKind::UCB1;
  if (name == "ucb1-sigma" || name == "ducb1-sigma") return PolicyKind::UCB1Sigma;
  if (name == "ucbv" || name == "ducbv") return PolicyKind::UCBV;
  return std::nullopt;
}

std::optional<double> empirical_mean(const NodeStats& stats) {
  if (stats.observed == 0) return std::nullopt;
  return stats.sum / static_cast<double>(stats.observed);
}

std::optional<double> empirical_variance(const NodeStats& stats) {
  if (stats.observed == 0) return std::nullopt;
  const double n = static_cast<double>(stats.observed);
  const double mean = stats.sum / n;
  return std::max(0.0, stats.sum_sq / n - mean * mean);
}

double confidence_bound(const PolicyParams& params, const NodeStats& stats, std::uint64_t round) {
  if (round == 0) throw std::invalid_argument("confidence_bound: round index starts at 1");
  if (stats.observed == 0) return kInf;

  const double s = static_cast<double>(stats.observed);
  const double log_t = std::log(static_cast<double>(round));
  const double mean = stats.sum / s;
  switch (params.kind) {
    case PolicyKind::UCB1:
      return mean + std::sqrt(2.0 * log_t / s);
    case PolicyKind::UCB1Sigma:
      return mean + std::sqrt(2.0 * params.sigma * params.sigma * log_t / s);
    case PolicyKind::UCBV: {
      const double var = *empirical_variance(stats);
      return mean + std::sqrt(2.0 * var * log_t / s) + params.c * 3.0 * params.b * log_t / s;
    }
  }
  return kInf;
}

}  // namespace pcts
