#include "pathmaj/labeled_tree.hpp"

#include <algorithm>

namespace pathmaj {

LabeledTree build_tree(std::span<const NodeId> parents, std::span<const std::int64_t> labels) {
  if (parents.empty()) throw TreeError("tree must have at least one node", kNoNode);
  if (parents.size() != labels.size()) {
    throw TreeError("parent list has " + std::to_string(parents.size()) + " entries but label list has " +
                        std::to_string(labels.size()),
                    kNoNode);
  }
  if (parents.size() >= static_cast<std::size_t>(UINT32_MAX)) throw TreeError("tree too large", kNoNode);
  const auto n = static_cast<NodeId>(parents.size());

  LabeledTree t;
  t.parent_.assign(n + 1, kNoNode);
  std::vector<std::uint32_t> child_count(n + 2, 0);
  for (NodeId u = 1; u <= n; ++u) {
    const NodeId p = parents[u - 1];
    if (labels[u - 1] <= 0) {
      throw TreeError("node " + std::to_string(u) + " has nonpositive label " + std::to_string(labels[u - 1]), u);
    }
    if (p == kNoNode) {
      if (t.root_ != kNoNode) {
        throw TreeError("multiple roots: nodes " + std::to_string(t.root_) + " and " + std::to_string(u), u);
      }
      t.root_ = u;
      continue;
    }
    if (p > n) throw TreeError("node " + std::to_string(u) + " has dangling parent id " + std::to_string(p), u);
    if (p == u) throw TreeError("cycle detected: node " + std::to_string(u) + " is its own parent", u);
    t.parent_[u] = p;
    ++child_count[p];
  }
  if (t.root_ == kNoNode) throw TreeError("no root: every node has a parent (cycle)", 1);

  t.child_begin_.assign(n + 2, 0);
  for (NodeId u = 1; u <= n; ++u) t.child_begin_[u + 1] = t.child_begin_[u] + child_count[u];
  t.child_list_.assign(n > 0 ? n - 1 : 0, kNoNode);
  std::vector<std::uint32_t> fill(t.child_begin_.begin(), t.child_begin_.end() - 1);
  for (NodeId u = 1; u <= n; ++u) {
    if (u != t.root_) t.child_list_[fill[t.parent_[u]]++] = u;
  }

  // Every node must be reachable from the root; anything else sits on a cycle.
  std::vector<char> seen(n + 1, 0);
  std::vector<NodeId> stack{t.root_};
  seen[t.root_] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    ++reached;
    for (NodeId c : t.children(u)) {
      if (!seen[c]) {
        seen[c] = 1;
        stack.push_back(c);
      }
    }
  }
  if (reached != n) {
    const auto it = std::find(seen.begin() + 1, seen.end(), 0);
    const auto bad = static_cast<NodeId>(it - seen.begin());
    throw TreeError("cycle detected: node " + std::to_string(bad) + " is not reachable from the root", bad);
  }

  t.original_.assign(labels.begin(), labels.end());
  std::sort(t.original_.begin(), t.original_.end());
  t.original_.erase(std::unique(t.original_.begin(), t.original_.end()), t.original_.end());
  t.label_.assign(n + 1, 0);
  for (NodeId u = 1; u <= n; ++u) {
    const auto it = std::lower_bound(t.original_.begin(), t.original_.end(), labels[u - 1]);
    t.label_[u] = static_cast<Label>(it - t.original_.begin()) + 1;
  }
  return t;
}

TreeInput LabeledTree::to_input() const {
  TreeInput in;
  const std::size_t n = size();
  in.parents.reserve(n);
  in.labels.reserve(n);
  for (NodeId u = 1; u <= n; ++u) {
    in.parents.push_back(parent_[u]);
    in.labels.push_back(original_label_of(u));
  }
  return in;
}

}  // namespace pathmaj
