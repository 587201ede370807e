#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pathmaj/labeled_tree.hpp"
#include "pathmaj/nav_index.hpp"

namespace pathmaj {

struct MultiTreeInput {
  std::vector<NodeId> parents;                   // parents[i] is the parent of node i+1, 0 = root
  std::vector<std::vector<std::int64_t>> labels;  // labels of node i+1, in order l_1..l_m
};

/// A multi-labeled tree expanded into a single-labeled one. Node u with labels
/// l_1..l_m becomes the upward chain u_1..u_m (u_i holds l_i and is the only
/// child of u_{i+1}); u_m hangs below the bottom node of the parent's chain.
struct ExpandedTree {
  LabeledTree tree;
  std::vector<NodeId> bottom;  // original u -> u_1
  std::vector<NodeId> top;     // original u -> u_m
  std::vector<NodeId> origin;  // expanded node -> original node
};

/// Throws TreeError for a node with no labels or an invalid parent list.
ExpandedTree chain_expand(const MultiTreeInput& input);

/// Maps the original query (u, v) to a path on the expanded tree whose label
/// multiset equals the union of the label lists on the original path.
///
/// Endpoints map to u_1/v_1, with u_m (v_m) substituted when u (v) is an
/// ancestor-or-self of the other endpoint. When the original LCA w is a
/// proper ancestor of both endpoints, the expanded path only touches w_1, so
/// the u-leg is extended up to w_m to include w's remaining labels.
PathDescriptor map_query(const ExpandedTree& expanded, const NavIndex& nav, NodeId u, NodeId v);

}  // namespace pathmaj
