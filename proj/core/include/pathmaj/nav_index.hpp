#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pathmaj/labeled_tree.hpp"
#include "pathmaj/types.hpp"

namespace pathmaj {

/// A query path described as two vertical legs: u up to z, and v up to
/// z_prime. For an ordinary tree path z = lca(u, v) and z_prime is the child
/// of z towards v (kNoNode when v == z). Multi-label expansions produce legs
/// where z sits above parent(z_prime); everything downstream only relies on
/// z being an ancestor-or-self of u and z_prime an ancestor-or-self of v.
struct PathDescriptor {
  NodeId u = kNoNode;
  NodeId v = kNoNode;
  NodeId z = kNoNode;
  NodeId z_prime = kNoNode;
  std::uint64_t length = 0;

  bool has_v_leg() const { return z_prime != kNoNode; }
  friend bool operator==(const PathDescriptor&, const PathDescriptor&) = default;
};

/// Navigation tables over a LabeledTree: depths, traversal ranks, subtree sizes,
/// heavy-path decomposition, LCA and level ancestors.
///
/// LCA is a sparse table over the preorder sequence (min-depth node in the
/// preorder range (pre(u), pre(v)] is a child of the LCA). Level ancestor jumps
/// heavy-path heads, O(log n).
class NavIndex {
 public:
  explicit NavIndex(const LabeledTree& tree);

  std::size_t size() const { return parent_.size() - 1; }
  NodeId root() const { return root_; }
  NodeId parent(NodeId u) const { return parent_[u]; }
  std::uint32_t depth(NodeId u) const { return depth_[u]; }
  std::uint32_t preorder(NodeId u) const { return pre_[u]; }
  std::uint32_t postorder(NodeId u) const { return post_[u]; }
  std::uint32_t subtree_size(NodeId u) const { return size_[u]; }
  std::uint32_t height(NodeId u) const { return height_[u]; }
  NodeId node_at_preorder(std::uint32_t rank) const { return by_pre_[rank]; }

  // Heavy-path decomposition. Paths are stored contiguously, head first.
  NodeId heavy_child(NodeId u) const { return heavy_[u]; }
  NodeId head(NodeId u) const { return head_[u]; }
  std::uint32_t path_id(NodeId u) const { return path_of_[u]; }
  std::size_t path_count() const { return path_begin_.size() - 1; }
  std::span<const NodeId> path_nodes(std::uint32_t p) const {
    return {flat_.data() + path_begin_[p], flat_.data() + path_begin_[p + 1]};
  }
  std::uint32_t path_begin(std::uint32_t p) const { return path_begin_[p]; }
  std::uint32_t path_end(std::uint32_t p) const { return path_begin_[p + 1]; }
  /// 0-based position of u in the concatenation of all heavy paths.
  std::uint32_t flat_position(NodeId u) const { return flat_pos_[u]; }
  NodeId node_at_flat(std::uint32_t pos) const { return flat_[pos]; }

  /// True iff a is an ancestor of u or a == u.
  bool is_ancestor(NodeId a, NodeId u) const { return pre_[a] <= pre_[u] && pre_[u] < pre_[a] + size_[a]; }

  NodeId lca(NodeId u, NodeId v) const;
  /// Ancestor-or-self of u at depth d. Throws std::out_of_range if d > depth(u).
  NodeId level_anc(NodeId u, std::uint32_t d) const;
  PathDescriptor describe_path(NodeId u, NodeId v) const;

 private:
  NodeId root_ = kNoNode;
  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> depth_, pre_, post_, size_, height_;
  std::vector<NodeId> by_pre_;  // [rank] -> node, rank 1..n
  std::vector<NodeId> heavy_, head_;
  std::vector<std::uint32_t> path_of_, path_begin_, flat_pos_;
  std::vector<NodeId> flat_;
  // sparse_[k * (n + 1) + r]: node of minimum depth among preorder ranks [r, r + 2^k)
  std::vector<NodeId> sparse_;
  std::size_t stride_ = 0;
};

}  // namespace pathmaj
