#include "pathmaj/nav_index.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace pathmaj {

NavIndex::NavIndex(const LabeledTree& tree) : root_(tree.root()) {
  const std::size_t n = tree.size();
  parent_.assign(n + 1, kNoNode);
  depth_.assign(n + 1, 0);
  pre_.assign(n + 1, 0);
  post_.assign(n + 1, 0);
  size_.assign(n + 1, 1);
  height_.assign(n + 1, 0);
  by_pre_.assign(n + 1, kNoNode);
  heavy_.assign(n + 1, kNoNode);
  head_.assign(n + 1, kNoNode);
  path_of_.assign(n + 1, 0);
  flat_pos_.assign(n + 1, 0);
  for (NodeId u = 1; u <= n; ++u) parent_[u] = tree.parent(u);

  // Iterative DFS; children visited in input order.
  std::uint32_t next_pre = 0;
  std::uint32_t next_post = 0;
  std::vector<std::pair<NodeId, std::uint32_t>> stack;
  stack.reserve(64);
  stack.emplace_back(root_, 0);
  pre_[root_] = ++next_pre;
  by_pre_[next_pre] = root_;
  while (!stack.empty()) {
    auto& [u, child_idx] = stack.back();
    const auto kids = tree.children(u);
    if (child_idx < kids.size()) {
      const NodeId c = kids[child_idx++];
      depth_[c] = depth_[u] + 1;
      pre_[c] = ++next_pre;
      by_pre_[next_pre] = c;
      stack.emplace_back(c, 0);
      continue;
    }
    post_[u] = ++next_post;
    const NodeId done = u;
    stack.pop_back();
    if (const NodeId p = parent_[done]; p != kNoNode) {
      size_[p] += size_[done];
      height_[p] = std::max(height_[p], height_[done] + 1);
    }
  }

  // Heavy child: maximum subtree size, ties to the smaller preorder rank
  // (children are scanned in preorder, so the first maximum wins).
  for (NodeId u = 1; u <= n; ++u) {
    std::uint32_t best = 0;
    for (NodeId c : tree.children(u)) {
      if (size_[c] > best) {
        best = size_[c];
        heavy_[u] = c;
      }
    }
  }

  // Lay out paths contiguously in preorder of their heads.
  flat_.reserve(n);
  path_begin_.push_back(0);
  for (std::uint32_t r = 1; r <= n; ++r) {
    const NodeId h = by_pre_[r];
    if (h != root_ && heavy_[parent_[h]] == h) continue;
    const auto p = static_cast<std::uint32_t>(path_begin_.size() - 1);
    for (NodeId u = h; u != kNoNode; u = heavy_[u]) {
      head_[u] = h;
      path_of_[u] = p;
      flat_pos_[u] = static_cast<std::uint32_t>(flat_.size());
      flat_.push_back(u);
    }
    path_begin_.push_back(static_cast<std::uint32_t>(flat_.size()));
  }

  // Sparse table over preorder ranks 1..n.
  stride_ = n + 1;
  const int levels = std::bit_width(n);
  sparse_.assign(static_cast<std::size_t>(levels) * stride_, kNoNode);
  for (std::uint32_t r = 1; r <= n; ++r) sparse_[r] = by_pre_[r];
  for (int k = 1; k < levels; ++k) {
    const std::size_t half = std::size_t{1} << (k - 1);
    NodeId* row = sparse_.data() + k * stride_;
    const NodeId* prev = sparse_.data() + (k - 1) * stride_;
    for (std::size_t r = 1; r + (std::size_t{1} << k) <= n + 1; ++r) {
      const NodeId a = prev[r];
      const NodeId b = prev[r + half];
      row[r] = depth_[b] < depth_[a] ? b : a;
    }
  }
}

NodeId NavIndex::lca(NodeId u, NodeId v) const {
  if (u == v) return u;
  std::uint32_t lo = pre_[u];
  std::uint32_t hi = pre_[v];
  if (lo > hi) std::swap(lo, hi);
  // Candidates are preorder ranks (lo, hi].
  const std::uint32_t from = lo + 1;
  const std::uint32_t len = hi - lo;
  const int k = std::bit_width(len) - 1;
  const NodeId a = sparse_[k * stride_ + from];
  const NodeId b = sparse_[k * stride_ + hi + 1 - (std::uint32_t{1} << k)];
  const NodeId shallowest = depth_[b] < depth_[a] ? b : a;
  // If u is an ancestor of v, the range starts inside u's subtree.
  return parent_[shallowest];
}

NodeId NavIndex::level_anc(NodeId u, std::uint32_t d) const {
  if (d > depth_[u]) {
    throw std::out_of_range("level_anc: depth " + std::to_string(d) + " exceeds depth(" + std::to_string(u) +
                            ") = " + std::to_string(depth_[u]));
  }
  while (depth_[head_[u]] > d) u = parent_[head_[u]];
  const NodeId h = head_[u];
  return flat_[flat_pos_[h] + (d - depth_[h])];
}

PathDescriptor NavIndex::describe_path(NodeId u, NodeId v) const {
  PathDescriptor p;
  p.u = u;
  p.v = v;
  p.z = lca(u, v);
  p.z_prime = v == p.z ? kNoNode : level_anc(v, depth_[p.z] + 1);
  p.length = std::uint64_t{depth_[u]} + depth_[v] - 2ull * depth_[p.z] + 1;
  return p;
}

}  // namespace pathmaj
