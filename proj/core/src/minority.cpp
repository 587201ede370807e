#include "pathmaj/minority.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace pathmaj {

PathMinIndex::PathMinIndex(const IndexedTree& ctx) : ctx_(&ctx), width_(ctx.size()) {
  const auto& nav = ctx.nav();
  const std::size_t n = width_;
  const unsigned levels = n == 0 ? 1 : static_cast<unsigned>(std::bit_width(n));
  table_.resize(levels * n);
  for (std::size_t i = 0; i < n; ++i) table_[i] = nav.node_at_flat(static_cast<std::uint32_t>(i));
  for (unsigned k = 1; k < levels; ++k) {
    const std::size_t half = std::size_t{1} << (k - 1);
    const NodeId* prev = table_.data() + (k - 1) * n;
    NodeId* row = table_.data() + k * n;
    for (std::size_t i = 0; i + (std::size_t{1} << k) <= n; ++i) {
      const NodeId a = prev[i];
      const NodeId b = prev[i + half];
      row[i] = less(b, a) ? b : a;
    }
  }
}

bool PathMinIndex::less(NodeId a, NodeId b) const {
  const auto& labels = ctx_->labels();
  const auto& nav = ctx_->nav();
  if (labels.prevlabel(a) != labels.prevlabel(b)) return labels.prevlabel(a) < labels.prevlabel(b);
  return nav.preorder(a) < nav.preorder(b);
}

NodeId PathMinIndex::range_min(std::uint32_t lo, std::uint32_t hi) const {
  const unsigned k = static_cast<unsigned>(std::bit_width(hi - lo + 1)) - 1;
  const NodeId a = table_[k * width_ + lo];
  const NodeId b = table_[k * width_ + hi + 1 - (std::size_t{1} << k)];
  return less(b, a) ? b : a;
}

NodeId PathMinIndex::vertical_min(NodeId bottom, NodeId top) const {
  const auto& nav = ctx_->nav();
  NodeId best = kNoNode;
  NodeId cur = bottom;
  while (true) {
    const NodeId h = nav.head(cur);
    const bool last = nav.path_id(h) == nav.path_id(top);
    const NodeId seg_top = last ? top : h;
    const NodeId m = range_min(nav.flat_position(seg_top), nav.flat_position(cur));
    if (best == kNoNode || less(m, best)) best = m;
    if (last) return best;
    cur = nav.parent(h);
  }
}

NodeId PathMinIndex::path_min(NodeId a, NodeId b) const {
  const auto& nav = ctx_->nav();
  const NodeId z = nav.lca(a, b);
  const NodeId m = vertical_min(a, z);
  if (b == z) return m;
  const NodeId zb = nav.level_anc(b, nav.depth(z) + 1);
  const NodeId m2 = vertical_min(b, zb);
  return less(m2, m) ? m2 : m;
}

MinorityIndex::MinorityIndex(std::shared_ptr<const IndexedTree> ctx, const Threshold& tau)
    : ctx_(std::move(ctx)), tau_(tau), probes_(1 + tau.floor_scaled_inverse(1)), pmin_(*ctx_) {}

std::vector<Label> MinorityIndex::distinct_on_path(NodeId u, NodeId z, std::size_t limit) const {
  const auto& nav = ctx_->nav();
  const auto& labels = ctx_->labels();
  // A node is the topmost occurrence of its label on u..z iff its prevlabel
  // points above z; if a segment's minimum fails that test, nothing in it passes.
  const std::int32_t cutoff = static_cast<std::int32_t>(nav.depth(z));
  std::vector<Label> out;
  std::vector<std::pair<NodeId, NodeId>> stack{{u, z}};
  while (!stack.empty() && out.size() < limit) {
    const auto [bottom, top] = stack.back();
    stack.pop_back();
    const NodeId m = pmin_.vertical_min(bottom, top);
    if (labels.prevlabel(m) >= cutoff) continue;
    out.push_back(ctx_->tree().label(m));
    if (m != bottom) stack.push_back({bottom, nav.level_anc(bottom, nav.depth(m) + 1)});
    if (m != top) stack.push_back({nav.parent(m), top});
  }
  return out;
}

MinorityResult MinorityIndex::query(NodeId u, NodeId v) const {
  const auto& nav = ctx_->nav();
  const PathDescriptor path = nav.describe_path(u, v);
  MinorityResult result;
  std::vector<Label> tried;
  auto probe = [&](NodeId bottom, NodeId top) {
    for (Label l : distinct_on_path(bottom, top, probes_)) {
      if (std::find(tried.begin(), tried.end(), l) != tried.end()) continue;
      tried.push_back(l);
      ++result.stats.candidates_inspected;
      ++result.stats.verifications;
      if (tau_.admits_minority(ctx_->labels().count_on_path(l, path), path.length)) {
        result.label = l;
        return true;
      }
    }
    return false;
  };
  if (probe(path.u, path.z)) return result;
  if (path.has_v_leg()) probe(path.v, path.z_prime);
  return result;
}

}  // namespace pathmaj
