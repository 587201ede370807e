#include "pathmaj/label_index.hpp"

#include <algorithm>

namespace pathmaj {

namespace {

bool occurrence_less(const LabelIndex::Occurrence& a, const LabelIndex::Occurrence& b) {
  return a.label != b.label ? a.label < b.label : a.depth < b.depth;
}

}  // namespace

LabelIndex::LabelIndex(const LabeledTree& tree, const NavIndex& nav) : nav_(&nav), sigma_(tree.sigma()) {
  const std::size_t n = tree.size();
  count_.assign(n + 1, 0);
  prevlabel_.assign(n + 1, -1);

  // count/prevlabel in one DFS with a stack of open nodes per label.
  std::vector<std::vector<NodeId>> open(sigma_ + 1);
  std::vector<std::pair<NodeId, std::uint32_t>> stack;
  stack.emplace_back(tree.root(), 0);
  auto enter = [&](NodeId u) {
    auto& s = open[tree.label(u)];
    if (!s.empty()) {
      count_[u] = count_[s.back()] + 1;
      prevlabel_[u] = static_cast<std::int32_t>(nav.depth(s.back()));
    } else {
      count_[u] = 1;
    }
    s.push_back(u);
  };
  enter(tree.root());
  while (!stack.empty()) {
    auto& [u, idx] = stack.back();
    const auto kids = tree.children(u);
    if (idx < kids.size()) {
      const NodeId c = kids[idx++];
      enter(c);
      stack.emplace_back(c, 0);
    } else {
      open[tree.label(u)].pop_back();
      stack.pop_back();
    }
  }

  by_path_.resize(n);
  for (std::uint32_t pos = 0; pos < n; ++pos) {
    const NodeId u = nav.node_at_flat(pos);
    by_path_[pos] = Occurrence{tree.label(u), nav.depth(u), u};
  }
  for (std::uint32_t p = 0; p < nav.path_count(); ++p) {
    std::sort(by_path_.begin() + nav.path_begin(p), by_path_.begin() + nav.path_end(p), occurrence_less);
  }

  label_begin_.assign(sigma_ + 2, 0);
  for (NodeId u = 1; u <= n; ++u) ++label_begin_[tree.label(u) + 1];
  for (std::size_t l = 1; l <= sigma_ + 1; ++l) label_begin_[l] += label_begin_[l - 1];
  pre_ranks_.assign(n, 0);
  post_ranks_.assign(n, 0);
  std::vector<std::uint32_t> fill_pre(label_begin_.begin(), label_begin_.end() - 1);
  std::vector<std::uint32_t> fill_post = fill_pre;
  for (std::uint32_t r = 1; r <= n; ++r) {
    const NodeId u = nav.node_at_preorder(r);
    pre_ranks_[fill_pre[tree.label(u)]++] = r;
  }
  for (NodeId u = 1; u <= n; ++u) post_ranks_[fill_post[tree.label(u)]++] = nav.postorder(u);
  for (std::size_t l = 1; l <= sigma_; ++l) {
    std::sort(post_ranks_.begin() + label_begin_[l], post_ranks_.begin() + label_begin_[l + 1]);
  }
}

std::span<const LabelIndex::Occurrence> LabelIndex::occurrences_on_heavy_path(Label l, std::uint32_t p) const {
  const auto first = by_path_.begin() + nav_->path_begin(p);
  const auto last = by_path_.begin() + nav_->path_end(p);
  const auto lo = std::lower_bound(first, last, l, [](const Occurrence& o, Label x) { return o.label < x; });
  const auto hi = std::upper_bound(lo, last, l, [](Label x, const Occurrence& o) { return x < o.label; });
  return {by_path_.data() + (lo - by_path_.begin()), static_cast<std::size_t>(hi - lo)};
}

NodeId LabelIndex::labelanc(NodeId u, Label l) const {
  if (l == 0 || l > sigma_) return kNoNode;
  while (u != kNoNode) {
    const auto occ = occurrences_on_heavy_path(l, nav_->path_id(u));
    const std::uint32_t d = nav_->depth(u);
    // Deepest occurrence with depth <= d.
    const auto it = std::upper_bound(occ.begin(), occ.end(), d, [](std::uint32_t x, const Occurrence& o) {
      return x < o.depth;
    });
    if (it != occ.begin()) return std::prev(it)->node;
    u = nav_->parent(nav_->head(u));
  }
  return kNoNode;
}

std::uint64_t LabelIndex::count_on_vertical(Label l, NodeId bottom, NodeId top) const {
  const std::uint64_t below = count_[labelanc(bottom, l)];
  const std::uint64_t above = count_[labelanc(nav_->parent(top), l)];
  return below - above;
}

std::uint64_t LabelIndex::count_on_path(Label l, const PathDescriptor& path) const {
  std::uint64_t total = count_on_vertical(l, path.u, path.z);
  if (path.has_v_leg()) total += count_on_vertical(l, path.v, path.z_prime);
  return total;
}

std::uint64_t LabelIndex::count_on_root_path_rank_based(Label l, NodeId u) const {
  if (l == 0 || l > sigma_) return 0;
  const auto pre = preorder_ranks(l);
  const auto post = postorder_ranks(l);
  // Opening parentheses up to u: preorder ranks <= pre(u).
  // Closing parentheses before u opens: the first pre(u) - 1 - depth(u) postorder ranks.
  const std::uint32_t opened = nav_->preorder(u);
  const std::uint32_t closed = opened - 1 - nav_->depth(u);
  const auto o = std::upper_bound(pre.begin(), pre.end(), opened) - pre.begin();
  const auto c = std::upper_bound(post.begin(), post.end(), closed) - post.begin();
  return static_cast<std::uint64_t>(o - c);
}

std::span<const std::uint32_t> LabelIndex::preorder_ranks(Label l) const {
  if (l == 0 || l > sigma_) return {};
  return {pre_ranks_.data() + label_begin_[l], pre_ranks_.data() + label_begin_[l + 1]};
}

std::span<const std::uint32_t> LabelIndex::postorder_ranks(Label l) const {
  if (l == 0 || l > sigma_) return {};
  return {post_ranks_.data() + label_begin_[l], post_ranks_.data() + label_begin_[l + 1]};
}

}  // namespace pathmaj
