#include "pcts/partition_tree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pcts {

NodeIndex NodeIndex::child(bool upper_half) const {
  // (l - 1) -> 2 (l - 1) + bit
  NodeIndex out;
  out.limbs_.assign(limbs_.size() + 1, 0);
  std::uint64_t carry = upper_half ? 1 : 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    out.limbs_[i] = (limbs_[i] << 1) | carry;
    carry = limbs_[i] >> 63;
  }
  out.limbs_.back() = carry;
  while (out.limbs_.size() > 1 && out.limbs_.back() == 0) out.limbs_.pop_back();
  return out;
}

std::optional<std::uint64_t> NodeIndex::as_u64() const {
  if (limbs_.size() > 1 || limbs_[0] == std::numeric_limits<std::uint64_t>::max()) {
    return std::nullopt;
  }
  return limbs_[0] + 1;
}

std::string NodeIndex::to_string() const {
  // decimal of (l - 1) + 1 by repeated division on 32-bit halves
  std::vector<std::uint32_t> digits;
  for (auto limb : limbs_) {
    digits.push_back(static_cast<std::uint32_t>(limb));
    digits.push_back(static_cast<std::uint32_t>(limb >> 32));
  }
  // add one
  for (auto& d : digits) {
    if (++d != 0) break;
  }
  if (digits.back() == 0 && std::all_of(digits.begin(), digits.end(), [](auto d) { return d == 0; })) {
    digits.push_back(1);
  }
  std::string out;
  auto nonzero = [&] { return std::any_of(digits.begin(), digits.end(), [](auto d) { return d != 0; }); };
  while (nonzero()) {
    std::uint64_t rem = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
      const std::uint64_t cur = (rem << 32) | *it;
      *it = static_cast<std::uint32_t>(cur / 10);
      rem = cur % 10;
    }
    out.push_back(static_cast<char>('0' + rem));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

PartitionTree::PartitionTree(Box domain) {
  PartitionNode root;
  root.box = std::move(domain);
  nodes_.push_back(std::move(root));
}

std::pair<NodeId, NodeId> PartitionTree::expand(NodeId leaf) {
  if (!nodes_.at(leaf).is_leaf()) {
    throw std::logic_error("expand: node already has children");
  }
  const Eigen::Index axis = widest_normalized_axis(nodes_[leaf].box, domain());
  auto [lo_box, hi_box] = nodes_[leaf].box.bisect(axis);

  PartitionNode lo;
  lo.depth = nodes_[leaf].depth + 1;
  lo.index = nodes_[leaf].index.child(false);
  lo.box = std::move(lo_box);
  lo.parent = leaf;
  PartitionNode hi;
  hi.depth = lo.depth;
  hi.index = nodes_[leaf].index.child(true);
  hi.box = std::move(hi_box);
  hi.parent = leaf;

  const NodeId lo_id = nodes_.size();
  nodes_.push_back(std::move(lo));
  nodes_.push_back(std::move(hi));
  nodes_[leaf].left = lo_id;
  nodes_[leaf].right = lo_id + 1;
  height_ = std::max(height_, nodes_[lo_id].depth);
  return {lo_id, lo_id + 1};
}

void PartitionTree::backup_bmin(std::span<const double> bounds, double nu1, double rho) {
  if (bounds.size() != nodes_.size()) {
    throw std::invalid_argument("backup_bmin: one bound per node required");
  }
  for (NodeId id = nodes_.size(); id-- > 0;) {
    PartitionNode& n = nodes_[id];
    n.b_value = bounds[id];
    // +inf absorbs the finite diameter term
    const double own = n.b_value + nu1 * std::pow(rho, static_cast<double>(n.depth));
    if (n.is_leaf()) {
      n.b_min = own;
    } else {
      n.b_min = std::min(own, std::max(nodes_[n.left].b_min, nodes_[n.right].b_min));
    }
  }
}

NodeId PartitionTree::select_optimistic_path(Rng& rng) const {
  std::bernoulli_distribution coin(0.5);
  NodeId cur = root();
  while (!nodes_[cur].is_leaf()) {
    const PartitionNode& n = nodes_[cur];
    const double bl = nodes_[n.left].b_min;
    const double br = nodes_[n.right].b_min;
    if (bl > br) {
      cur = n.left;
    } else if (br > bl) {
      cur = n.right;
    } else {
      cur = coin(rng) ? n.right : n.left;
    }
  }
  return cur;
}

std::vector<NodeId> PartitionTree::path_to(NodeId id) const {
  std::vector<NodeId> path;
  for (NodeId cur = id; cur != kNoNode; cur = nodes_.at(cur).parent) path.push_back(cur);
  std::reverse(path.begin(), path.end());
  return path;
}

NodeId PartitionTree::locate(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (!domain().contains(x)) throw std::out_of_range("locate: point outside domain");
  NodeId cur = root();
  while (!nodes_[cur].is_leaf()) {
    const NodeId lo = nodes_[cur].left;
    cur = nodes_[lo].box.contains(x) ? lo : nodes_[cur].right;
  }
  return cur;
}

void PartitionTree::record_invocation(std::span<const NodeId> path) {
  for (NodeId id : path) ++nodes_.at(id).stats.invoked;
}

void PartitionTree::record_feedback(std::span<const NodeId> path, double value) {
  for (NodeId id : path) {
    NodeStats& s = nodes_.at(id).stats;
    if (s.observed >= s.invoked) {
      throw std::logic_error("record_feedback: more feedbacks than invocations");
    }
    ++s.observed;
    s.sum += value;
    s.sum_sq += value * value;
  }
}

}  // namespace pcts
