#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pathmaj/indexed_tree.hpp"
#include "pathmaj/query_stats.hpp"
#include "pathmaj/threshold.hpp"

namespace pathmaj {

/// Argmin of prevlabel over tree paths. One sparse table over the heavy-path
/// order (each heavy path is a contiguous block, head first), so a vertical
/// path costs O(log n) table lookups. Ties go to the smaller preorder rank.
class PathMinIndex {
 public:
  explicit PathMinIndex(const IndexedTree& ctx);

  NodeId path_min(NodeId a, NodeId b) const;
  /// Argmin on bottom..top, top an ancestor-or-self of bottom.
  NodeId vertical_min(NodeId bottom, NodeId top) const;

 private:
  bool less(NodeId a, NodeId b) const;
  NodeId range_min(std::uint32_t lo, std::uint32_t hi) const;  // flat positions, inclusive

  const IndexedTree* ctx_;
  std::size_t width_;
  std::vector<NodeId> table_;  // table_[k * width_ + i]: argmin of flat positions [i, i + 2^k)
};

/// Path tau-minority queries.
class MinorityIndex {
 public:
  MinorityIndex(std::shared_ptr<const IndexedTree> ctx, const Threshold& tau);

  /// Up to `limit` distinct labels of the vertical path u..z (all of them if
  /// fewer exist), each reported once at its topmost occurrence.
  std::vector<Label> distinct_on_path(NodeId u, NodeId z, std::size_t limit) const;

  /// Some label with 1 <= count <= tau |P_uv|, or none.
  MinorityResult query(NodeId u, NodeId v) const;

  /// 1 + floor(1/tau): among that many distinct labels at least one is a minority.
  std::size_t probe_count() const { return probes_; }
  const Threshold& tau() const { return tau_; }
  const PathMinIndex& path_min() const { return pmin_; }

 private:
  std::shared_ptr<const IndexedTree> ctx_;
  Threshold tau_;
  std::size_t probes_;
  PathMinIndex pmin_;
};

}  // namespace pathmaj
