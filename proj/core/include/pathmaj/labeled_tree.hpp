#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathmaj/types.hpp"

namespace pathmaj {

/// Validation failure while building a tree. `node()` names the offending
/// node (kNoNode when the failure is not attributable to one node).
class TreeError : public std::runtime_error {
 public:
  TreeError(const std::string& what, NodeId node) : std::runtime_error(what), node_(node) {}
  NodeId node() const { return node_; }

 private:
  NodeId node_;
};

/// Raw tree description as read from a file or produced by a generator.
/// `parents[i]` is the parent of node i+1 (0 marks the root) and `labels[i]`
/// its original, not yet remapped, label.
struct TreeInput {
  std::vector<NodeId> parents;
  std::vector<std::int64_t> labels;
};

/// Rooted ordinal tree with dense labels. Immutable once built.
class LabeledTree {
 public:
  LabeledTree() = default;

  std::size_t size() const { return parent_.empty() ? 0 : parent_.size() - 1; }
  NodeId root() const { return root_; }
  NodeId parent(NodeId u) const { return parent_[u]; }
  std::span<const NodeId> children(NodeId u) const {
    return {child_list_.data() + child_begin_[u], child_list_.data() + child_begin_[u + 1]};
  }
  Label label(NodeId u) const { return label_[u]; }
  std::size_t sigma() const { return original_.size(); }

  /// Original label for a dense label in [1..sigma].
  std::int64_t original_label(Label l) const { return original_[l - 1]; }
  std::int64_t original_label_of(NodeId u) const { return original_[label_[u] - 1]; }

  /// Reconstructs the input form (original labels) of this tree.
  TreeInput to_input() const;

 private:
  friend LabeledTree build_tree(std::span<const NodeId>, std::span<const std::int64_t>);

  NodeId root_ = kNoNode;
  std::vector<NodeId> parent_;            // [0] unused
  std::vector<std::uint32_t> child_begin_;  // n + 2 entries, CSR into child_list_
  std::vector<NodeId> child_list_;
  std::vector<Label> label_;              // [0] unused
  std::vector<std::int64_t> original_;    // dense label l -> original_[l - 1], ascending
};

/// Validates the parent list and remaps labels to [1..sigma] preserving order.
/// Throws TreeError on: length mismatch or empty input, no root, multiple
/// roots, dangling parent id, cycle, nonpositive label.
LabeledTree build_tree(std::span<const NodeId> parents, std::span<const std::int64_t> labels);

inline LabeledTree build_tree(const TreeInput& input) { return build_tree(input.parents, input.labels); }

}  // namespace pathmaj
