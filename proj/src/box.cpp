#include "pcts/box.hpp"

#include <stdexcept>

namespace pcts {

Box::Box(Eigen::VectorXd lower, Eigen::VectorXd upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size()) {
    throw std::invalid_argument("box bounds differ in dimension");
  }
  if ((lower_.array() > upper_.array()).any()) {
    throw std::invalid_argument("box lower bound exceeds upper bound");
  }
}

Box Box::cube(Eigen::Index dim, double lo, double hi) {
  return Box(Eigen::VectorXd::Constant(dim, lo), Eigen::VectorXd::Constant(dim, hi));
}

bool Box::contains(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  return x.size() == dim() && (x.array() >= lower_.array()).all() &&
         (x.array() <= upper_.array()).all();
}

std::pair<Box, Box> Box::bisect(Eigen::Index axis) const {
  const double mid = 0.5 * (lower_[axis] + upper_[axis]);
  Eigen::VectorXd left_upper = upper_;
  Eigen::VectorXd right_lower = lower_;
  left_upper[axis] = mid;
  right_lower[axis] = mid;
  return {Box(lower_, std::move(left_upper)), Box(std::move(right_lower), upper_)};
}

Eigen::Index widest_normalized_axis(const Box& box, const Box& reference) {
  const Eigen::VectorXd ref_sides = reference.sides();
  const Eigen::VectorXd sides = box.sides();
  Eigen::Index best = 0;
  double best_len = -1.0;
  for (Eigen::Index i = 0; i < box.dim(); ++i) {
    // zero-width reference axes never get split
    const double len = ref_sides[i] > 0.0 ? sides[i] / ref_sides[i] : 0.0;
    if (len > best_len) {
      best_len = len;
      best = i;
    }
  }
  return best;
}

Eigen::VectorXd sample_uniform(const Box& box, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::VectorXd x(box.dim());
  for (Eigen::Index i = 0; i < box.dim(); ++i) {
    const double u = unit(rng);
    x[i] = box.lower()[i] + u * (box.upper()[i] - box.lower()[i]);
  }
  return x;
}

}  // namespace pcts
