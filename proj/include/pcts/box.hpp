#ifndef PCTS_BOX_HPP
#define PCTS_BOX_HPP

#include <cstddef>
#include <random>
#include <utility>

#include <Eigen/Core>

namespace pcts {

using Rng = std::mt19937_64;

/// Axis-aligned closed box [lower, upper] in R^D.
class Box {
 public:
  Box() = default;
  Box(Eigen::VectorXd lower, Eigen::VectorXd upper);

  /// [lo, hi]^dim
  static Box cube(Eigen::Index dim, double lo, double hi);

  Eigen::Index dim() const { return lower_.size(); }
  const Eigen::VectorXd& lower() const { return lower_; }
  const Eigen::VectorXd& upper() const { return upper_; }
  Eigen::VectorXd sides() const { return upper_ - lower_; }
  Eigen::VectorXd center() const { return 0.5 * (lower_ + upper_); }

  bool contains(const Eigen::Ref<const Eigen::VectorXd>& x) const;

  /// Halves the box along `axis`; first is the lower half.
  std::pair<Box, Box> bisect(Eigen::Index axis) const;

  friend bool operator==(const Box& a, const Box& b) {
    return a.lower_ == b.lower_ && a.upper_ == b.upper_;
  }

 private:
  Eigen::VectorXd lower_;
  Eigen::VectorXd upper_;
};

/// Axis with the largest side relative to `reference`; lowest index wins ties.
Eigen::Index widest_normalized_axis(const Box& box, const Box& reference);

/// Uniform point in `box`, one independent draw per coordinate.
Eigen::VectorXd sample_uniform(const Box& box, Rng& rng);

}  // namespace pcts

#endif  // PCTS_BOX_HPP
