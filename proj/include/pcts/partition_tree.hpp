#ifndef PCTS_PARTITION_TREE_HPP
#define PCTS_PARTITION_TREE_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcts/box.hpp"

namespace pcts {

using NodeId = std::size_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Position l of a node within its depth, 1-based (l in [1, 2^h]).
///
/// Stored as the root-to-node branch bits so it stays exact at any depth;
/// the children of l are 2l-1 and 2l.
class NodeIndex {
 public:
  NodeIndex() = default;

  NodeIndex child(bool upper_half) const;

  /// Value of l when it fits in 64 bits.
  std::optional<std::uint64_t> as_u64() const;
  std::string to_string() const;

  friend bool operator==(const NodeIndex&, const NodeIndex&) = default;

 private:
  // little-endian limbs of l - 1
  std::vector<std::uint64_t> limbs_{0};
};

/// Delayed per-node statistics: T (invoked), S (observed), G = T - S missing.
struct NodeStats {
  std::uint64_t invoked = 0;
  std::uint64_t observed = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  std::uint64_t missing() const { return invoked - observed; }
};

struct PartitionNode {
  std::uint32_t depth = 0;
  NodeIndex index;
  Box box;
  NodeId parent = kNoNode;
  NodeId left = kNoNode;
  NodeId right = kNoNode;
  NodeStats stats;
  double b_value = kInf;
  double b_min = kInf;

  bool is_leaf() const { return left == kNoNode; }
};

struct TreeStatistics {
  std::uint32_t height = 0;
  std::size_t node_count = 0;
};

/// Binary hierarchical partition of a box domain.
///
/// Nodes live in an arena and are addressed by NodeId; a child always has a
/// larger id than its parent, so a reverse sweep over ids visits children
/// before parents.
class PartitionTree {
 public:
  explicit PartitionTree(Box domain);

  NodeId root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const PartitionNode& node(NodeId id) const { return nodes_.at(id); }
  const Box& domain() const { return nodes_.front().box; }

  /// Splits a leaf in half along its widest domain-normalized side.
  /// Throws std::logic_error if `leaf` already has children.
  std::pair<NodeId, NodeId> expand(NodeId leaf);

  /// Bottom-up B^min pass: leaves get bound + nu1 rho^h, internal nodes
  /// min(bound + nu1 rho^h, max child b_min). `bounds` is indexed by NodeId.
  void backup_bmin(std::span<const double> bounds, double nu1, double rho);

  /// Descends from the root to the child with the larger b_min; exact ties
  /// (including +inf vs +inf) go to a fair coin flip drawn from `rng`.
  NodeId select_optimistic_path(Rng& rng) const;

  Eigen::VectorXd sample_point(NodeId id, Rng& rng) const {
    return sample_uniform(node(id).box, rng);
  }

  /// Root-to-node id sequence.
  std::vector<NodeId> path_to(NodeId id) const;

  /// Leaf whose box contains x, following lower halves on shared faces.
  NodeId locate(const Eigen::Ref<const Eigen::VectorXd>& x) const;

  TreeStatistics statistics() const { return {height_, nodes_.size()}; }

  void record_invocation(std::span<const NodeId> path);
  void record_feedback(std::span<const NodeId> path, double value);

 private:
  std::vector<PartitionNode> nodes_;
  std::uint32_t height_ = 0;
};

}  // namespace pcts

#endif  // PCTS_PARTITION_TREE_HPP
