#include "pathmaj/majority_stratified.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathmaj {

UnaryPathSequence::UnaryPathSequence(const IndexedTree& ctx, const Stratification& strat, const Threshold& tau) {
  const auto& nav = ctx.nav();
  const std::size_t n = nav.size();
  pos_.assign(n + 1, 0);
  run_top_.assign(n + 1, kNoNode);

  auto unary = [&](NodeId u) { return strat.level_of[u] <= strat.kappa && !strat.branching[u]; };
  std::vector<NodeId> bottoms;
  for (std::uint32_t r = 1; r <= n; ++r) {
    const NodeId u = nav.node_at_preorder(r);
    if (!unary(u)) continue;
    const NodeId p = nav.parent(u);
    run_top_[u] = (p != kNoNode && unary(p) && strat.level_of[p] == strat.level_of[u]) ? run_top_[p] : u;
    bool bottom = true;
    for (NodeId c : ctx.tree().children(u)) {
      if (unary(c) && strat.level_of[c] == strat.level_of[u]) bottom = false;
    }
    if (bottom) bottoms.push_back(u);
  }

  std::vector<Label> data;
  for (NodeId b : bottoms) {
    const NodeId top = run_top_[b];
    for (NodeId w = b;; w = nav.parent(w)) {
      data.push_back(ctx.tree().label(w));
      pos_[w] = static_cast<std::uint32_t>(data.size());
      if (w == top) break;
    }
  }
  run_count_ = bottoms.size();
  seq_ = Sequence(std::move(data));
  if (seq_.size() > 0) index_ = RangeMajorityIndex(seq_, tau);
}

StratifiedMajorityIndex::StratifiedMajorityIndex(std::shared_ptr<const IndexedTree> ctx, const Threshold& tau,
                                                 std::optional<unsigned> kappa, StratifiedMode mode)
    : ctx_(std::move(ctx)),
      tau_(tau),
      mode_(mode),
      strat_(stratify(ctx_->nav(), tau_, kappa.value_or(default_kappa(ctx_->size())))),
      unary_(*ctx_, strat_, tau_) {
  build_tables();
}

StratifiedMajorityIndex::StratifiedMajorityIndex(std::shared_ptr<const IndexedTree> ctx, const Threshold& tau,
                                                 unsigned kappa, StratifiedMode mode, CandidateTable branching_table,
                                                 CandidateTable smallest_table)
    : ctx_(std::move(ctx)),
      tau_(tau),
      mode_(mode),
      strat_(stratify(ctx_->nav(), tau_, kappa)),
      unary_(*ctx_, strat_, tau_),
      branching_(std::move(branching_table)) {
  const auto owners = branching_owners(1, strat_.kappa);
  const auto stored = branching_.owners();
  if (!std::equal(owners.begin(), owners.end(), stored.begin(), stored.end(),
                  [](const PrefixOwner& o, NodeId x) { return o.node == x; })) {
    throw std::invalid_argument("branching candidate table does not match the stratification");
  }
  std::vector<NodeId> region(ctx_->size() + 1, kNoNode);
  if (mode_ == StratifiedMode::kSuperlinear) {
    for (NodeId u = 1; u <= ctx_->size(); ++u) {
      if (strat_.in_smallest_tier(u)) region[u] = strat_.subtree_root_of[u];
    }
  }
  smallest_ = SampledPrefixIndex(select_marked_in_regions(ctx_->nav(), tau_, std::move(region)),
                                 std::move(smallest_table));
}

std::vector<PrefixOwner> StratifiedMajorityIndex::branching_owners(unsigned from_level, unsigned to_level) const {
  const auto& nav = ctx_->nav();
  std::vector<PrefixOwner> owners;
  for (std::uint32_t r = 1; r <= nav.size(); ++r) {
    const NodeId u = nav.node_at_preorder(r);
    const unsigned lv = strat_.level_of[u];
    if (strat_.branching[u] && lv >= from_level && lv <= to_level) owners.push_back({u, strat_.subtree_root_of[u]});
  }
  if (from_level == 1 && to_level > 1) {
    // Level 1 first, then deeper levels, matching the construction order.
    std::stable_partition(owners.begin(), owners.end(),
                          [&](const PrefixOwner& o) { return strat_.level_of[o.node] == 1; });
  }
  return owners;
}

void StratifiedMajorityIndex::build_tables() {
  const IndexedTree& ctx = *ctx_;
  branching_ = CandidateTable(ctx.size(), CandidateEncoding::kAncestorDepth);
  const auto top_owners = branching_owners(1, 1);
  if (!top_owners.empty()) {
    const HeavyPathSequences heavy(ctx, tau_.halved());
    append_candidates_heavy(ctx, heavy, top_owners, tau_, branching_);
  }
  if (strat_.kappa >= 2) append_candidates_quadratic(ctx, branching_owners(2, strat_.kappa), tau_, branching_);

  std::vector<NodeId> region(ctx.size() + 1, kNoNode);
  if (mode_ == StratifiedMode::kSuperlinear) {
    for (NodeId u = 1; u <= ctx.size(); ++u) {
      if (strat_.in_smallest_tier(u)) region[u] = strat_.subtree_root_of[u];
    }
  }
  MarkedSet marks = select_marked_in_regions(ctx.nav(), tau_, std::move(region));
  CandidateTable table = build_candidates_quadratic(ctx, marks.owners(), tau_, CandidateEncoding::kAncestorDepth);
  smallest_ = SampledPrefixIndex(std::move(marks), std::move(table));
}

std::size_t StratifiedMajorityIndex::collect_candidates_up(NodeId u, NodeId top, std::vector<Label>& out,
                                                           QueryStats& stats, std::vector<WalkSegment>* trace) const {
  const auto& nav = ctx_->nav();
  const auto& tree = ctx_->tree();
  const std::int64_t top_depth = nav.depth(top);
  const std::size_t before = out.size();
  auto record = [&](NodeId bottom, NodeId seg_top, WalkSegment::Kind kind) {
    ++stats.segments;
    if (trace) trace->push_back({bottom, seg_top, kind});
  };

  NodeId cur = u;
  while (cur != kNoNode && static_cast<std::int64_t>(nav.depth(cur)) >= top_depth) {
    const NodeId root = strat_.subtree_root_of[cur];
    const NodeId target = static_cast<std::int64_t>(nav.depth(root)) >= top_depth ? root : top;

    if (strat_.in_smallest_tier(cur)) {
      const std::size_t walk = nav.depth(cur) - nav.depth(target) + 1;
      bool sampled = false;
      if (mode_ == StratifiedMode::kSuperlinear) {
        const LegPlan plan = smallest_.plan_leg(*ctx_, cur, target);
        if (plan.has_sampled() && smallest_.plan_cost(*ctx_, plan) < walk) {
          smallest_.collect_leg(*ctx_, plan, out);
          record(cur, target, WalkSegment::Kind::kSampled);
          sampled = true;
        }
      }
      if (!sampled) {
        for (NodeId w = cur;; w = nav.parent(w)) {
          out.push_back(tree.label(w));
          if (w == target) break;
        }
        record(cur, target, WalkSegment::Kind::kEnumerated);
      }
      cur = nav.parent(target);
    } else if (strat_.branching[cur]) {
      const std::uint64_t d = nav.depth(cur) - nav.depth(target);
      if (d == 0) {
        out.push_back(tree.label(cur));
      } else {
        branching_.append_labels(cur, ceil_log2(d), *ctx_, out);
      }
      record(cur, target, WalkSegment::Kind::kBranching);
      cur = nav.parent(target);
    } else {
      const NodeId above_run = nav.parent(unary_.run_top(cur));
      std::int64_t x_depth = above_run == kNoNode ? -1 : static_cast<std::int64_t>(nav.depth(above_run));
      x_depth = std::max(x_depth, top_depth - 1);
      const std::size_t p = unary_.position(cur);
      const std::size_t len = static_cast<std::size_t>(nav.depth(cur) - x_depth);
      unary_.index().append_candidates(p, p + len - 1, out);
      const NodeId seg_top = nav.level_anc(cur, static_cast<std::uint32_t>(x_depth + 1));
      record(cur, seg_top, WalkSegment::Kind::kUnaryRun);
      cur = nav.parent(seg_top);
    }
  }
  const std::size_t added = out.size() - before;
  stats.candidates_inspected += added;
  return added;
}

MajorityResult StratifiedMajorityIndex::query(const PathDescriptor& path) const {
  std::vector<Label> cands;
  QueryStats stats;
  collect_candidates_up(path.u, path.z, cands, stats);
  if (path.has_v_leg()) collect_candidates_up(path.v, path.z_prime, cands, stats);
  return verify_majorities(*ctx_, tau_, path, std::move(cands), stats);
}

MajorityResult StratifiedMajorityIndex::query(NodeId u, NodeId v) const {
  return query(ctx_->nav().describe_path(u, v));
}

std::size_t StratifiedMajorityIndex::stored_candidate_entries() const {
  return branching_.total_entries() + smallest_.table().total_entries() + unary_.index().stored_entries();
}

double StratifiedMajorityIndex::candidate_bound(const Threshold& tau, unsigned kappa, std::uint64_t n) {
  const double inv = static_cast<double>(tau.den()) / static_cast<double>(tau.num());
  const double tail = kappa == 0 ? static_cast<double>(n) : log_iter(static_cast<double>(n), kappa);
  return 4.0 * kappa * static_cast<double>(tau.floor_scaled_inverse(8)) + 2.0 * inv * tail + 4.0;
}

double StratifiedMajorityIndex::candidate_bound() const {
  return candidate_bound(tau_, strat_.kappa, ctx_->size());
}

}  // namespace pathmaj
