#ifndef PCTS_BANDIT_POLICY_HPP
#define PCTS_BANDIT_POLICY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pcts/partition_tree.hpp"

namespace pcts {

enum class PolicyKind { UCB1, UCB1Sigma, UCBV };

/// Selects the confidence-bound family. All three are delay-aware: they are
/// fed the observed count S rather than the invoked count T.
struct PolicyParams {
  PolicyKind kind = PolicyKind::UCB1;
  double sigma = 0.0;  // known noise std, UCB1Sigma
  double b = 1.0;      // range proxy, UCBV
  double c = 1.0;      // UCBV exploration scale

  static PolicyParams ucb1() { return {}; }
  static PolicyParams ucb1_sigma(double sigma) { return {PolicyKind::UCB1Sigma, sigma, 1.0, 1.0}; }
  static PolicyParams ucbv(double b, double c = 1.0) { return {PolicyKind::UCBV, 0.0, b, c}; }

  /// Throws std::invalid_argument on a non-finite/negative sigma or b <= 0.
  void validate() const;
};

std::string to_string(PolicyKind kind);
/// Accepts ucb1, ucb1-sigma, ucbv (also the D-prefixed names).
std::optional<PolicyKind> parse_policy_kind(std::string_view name);

/// sum / S, or nullopt with no observations.
std::optional<double> empirical_mean(const NodeStats& stats);

/// Population variance sum_sq/S - mean^2, clamped at zero.
std::optional<double> empirical_variance(const NodeStats& stats);

/// B_{i,s,t} for the policy with s = observed feedbacks; +inf when s = 0.
/// `round` is the current selection round t >= 1.
double confidence_bound(const PolicyParams& params, const NodeStats& stats, std::uint64_t round);

/// Multi-fidelity shift: bound + zeta, +inf stays +inf.
inline double apply_fidelity_bias(double bound, double zeta) { return bound + zeta; }

}  // namespace pcts

#endif  // PCTS_BANDIT_POLICY_HPP
