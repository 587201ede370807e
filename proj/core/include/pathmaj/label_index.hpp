#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pathmaj/labeled_tree.hpp"
#include "pathmaj/nav_index.hpp"
#include "pathmaj/types.hpp"

namespace pathmaj {

/// Label-aware primitives: count fields, prevlabel weights, nearest labeled
/// ancestor and exact path counting.
///
/// Holds a pointer to the NavIndex it was built from; the NavIndex must
/// outlive it (IndexedTree bundles both).
class LabelIndex {
 public:
  struct Occurrence {
    Label label;
    std::uint32_t depth;
    NodeId node;
  };

  LabelIndex(const LabeledTree& tree, const NavIndex& nav);

  /// Occurrences of label(u) on the path u..root. count(kNoNode) == 0.
  std::uint32_t count(NodeId u) const { return count_[u]; }
  /// Depth of the nearest proper ancestor with label(u), or -1.
  std::int32_t prevlabel(NodeId u) const { return prevlabel_[u]; }

  /// Deepest ancestor-or-self of u labeled l, or kNoNode.
  NodeId labelanc(NodeId u, Label l) const;

  /// Occurrences of l on the vertical path bottom..top (top an ancestor-or-self of bottom).
  std::uint64_t count_on_vertical(Label l, NodeId bottom, NodeId top) const;
  /// Occurrences of l on both legs of the path.
  std::uint64_t count_on_path(Label l, const PathDescriptor& path) const;

  /// Occurrences of l on u..root from rank counts over the preorder and
  /// postorder label sequences: ranks up to the opening of u minus ranks among
  /// the nodes already closed when u opens.
  std::uint64_t count_on_root_path_rank_based(Label l, NodeId u) const;

  /// Sorted preorder (resp. postorder) ranks of the nodes labeled l.
  std::span<const std::uint32_t> preorder_ranks(Label l) const;
  std::span<const std::uint32_t> postorder_ranks(Label l) const;

  /// Occurrences of l on heavy path p, sorted by depth.
  std::span<const Occurrence> occurrences_on_heavy_path(Label l, std::uint32_t p) const;

  std::size_t sigma() const { return sigma_; }

 private:
  const NavIndex* nav_;
  std::size_t sigma_;
  std::vector<std::uint32_t> count_;
  std::vector<std::int32_t> prevlabel_;
  // Per heavy path p, entries [nav.path_begin(p), nav.path_end(p)) sorted by (label, depth).
  std::vector<Occurrence> by_path_;
  std::vector<std::uint32_t> label_begin_;  // CSR over labels 1..sigma
  std::vector<std::uint32_t> pre_ranks_, post_ranks_;
};

}  // namespace pathmaj
