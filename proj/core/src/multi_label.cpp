#include "pathmaj/multi_label.hpp"

#include <string>

namespace pathmaj {

ExpandedTree chain_expand(const MultiTreeInput& input) {
  const std::size_t n = input.parents.size();
  if (n == 0 || input.labels.size() != n) {
    throw TreeError("multi-labeled tree needs one label list per node", kNoNode);
  }
  ExpandedTree out;
  out.bottom.assign(n + 1, kNoNode);
  out.top.assign(n + 1, kNoNode);
  out.origin.push_back(kNoNode);

  // Chains are numbered bottom-up per original node: u_1 gets the smallest id.
  NodeId next = 1;
  for (NodeId u = 1; u <= n; ++u) {
    const auto m = input.labels[u - 1].size();
    if (m == 0) throw TreeError("node " + std::to_string(u) + " has no labels", u);
    out.bottom[u] = next;
    out.top[u] = next + static_cast<NodeId>(m) - 1;
    for (std::size_t i = 0; i < m; ++i) out.origin.push_back(u);
    next += static_cast<NodeId>(m);
  }

  TreeInput expanded;
  expanded.parents.resize(next - 1);
  expanded.labels.resize(next - 1);
  for (NodeId u = 1; u <= n; ++u) {
    const auto& ls = input.labels[u - 1];
    for (std::size_t i = 0; i < ls.size(); ++i) {
      const NodeId node = out.bottom[u] + static_cast<NodeId>(i);
      expanded.labels[node - 1] = ls[i];
      if (node != out.top[u]) {
        expanded.parents[node - 1] = node + 1;
        continue;
      }
      const NodeId p = input.parents[u - 1];
      if (p > n) throw TreeError("node " + std::to_string(u) + " has dangling parent id " + std::to_string(p), u);
      expanded.parents[node - 1] = p == kNoNode ? kNoNode : out.bottom[p];
    }
  }
  out.tree = build_tree(expanded);
  return out;
}

PathDescriptor map_query(const ExpandedTree& expanded, const NavIndex& nav, NodeId u, NodeId v) {
  const NodeId ub = expanded.bottom[u];
  const NodeId vb = expanded.bottom[v];
  // The top of u's chain is an ancestor of v_1 exactly when u is an ancestor-or-self of v.
  if (nav.is_ancestor(expanded.top[u], vb)) return nav.describe_path(expanded.top[u], vb);
  if (nav.is_ancestor(expanded.top[v], ub)) return nav.describe_path(ub, expanded.top[v]);
  PathDescriptor path = nav.describe_path(ub, vb);
  const NodeId w_top = expanded.top[expanded.origin[path.z]];
  path.length += nav.depth(path.z) - nav.depth(w_top);
  path.z = w_top;
  return path;
}

}  // namespace pathmaj
