#include "pathmaj/majority_basic.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathmaj {

std::vector<PrefixOwner> MarkedSet::owners() const {
  std::vector<PrefixOwner> out;
  out.reserve(marked.size());
  for (NodeId x : marked) out.push_back({x, region_root[x]});
  return out;
}

MarkedSet select_marked_in_regions(const NavIndex& nav, const Threshold& tau, std::vector<NodeId> region_root) {
  const std::size_t n = nav.size();
  MarkedSet m;
  m.step = tau.ceil_inverse();
  m.is_marked.assign(n + 1, 0);
  m.nearest_marked.assign(n + 1, kNoNode);
  m.region_root = std::move(region_root);
  for (std::uint32_t r = 1; r <= n; ++r) {
    const NodeId u = nav.node_at_preorder(r);
    const NodeId reg = m.region_root[u];
    if (reg == kNoNode) continue;
    const std::uint64_t rel_depth = nav.depth(u) - nav.depth(reg);
    if (nav.height(u) >= m.step && rel_depth % m.step == 0) {
      m.is_marked[u] = 1;
      m.marked.push_back(u);
      m.nearest_marked[u] = u;
    } else if (u != reg) {
      m.nearest_marked[u] = m.nearest_marked[nav.parent(u)];
    }
  }
  return m;
}

MarkedSet select_marked_basic(const NavIndex& nav, const Threshold& tau) {
  return select_marked_in_regions(nav, tau, std::vector<NodeId>(nav.size() + 1, nav.root()));
}

SampledPrefixIndex::SampledPrefixIndex(MarkedSet marks, CandidateTable table)
    : marks_(std::move(marks)), table_(std::move(table)) {
  const auto owners = table_.owners();
  if (!std::equal(owners.begin(), owners.end(), marks_.marked.begin(), marks_.marked.end())) {
    throw std::invalid_argument("candidate table owners do not match the marked nodes");
  }
}

LegPlan SampledPrefixIndex::plan_leg(const IndexedTree& ctx, NodeId bottom, NodeId top) const {
  const auto& nav = ctx.nav();
  LegPlan plan;
  const NodeId x = marks_.nearest_marked[bottom];
  const bool use_marked = x != kNoNode && nav.depth(x) >= nav.depth(top);
  const NodeId stop = use_marked ? x : nav.parent(top);
  for (NodeId w = bottom; w != stop; w = nav.parent(w)) plan.explicit_nodes.push_back(w);
  if (use_marked) {
    plan.sampled = x;
    plan.sampled_top = top;
  }
  return plan;
}

std::size_t SampledPrefixIndex::plan_cost(const IndexedTree& ctx, const LegPlan& plan) const {
  std::size_t cost = plan.explicit_nodes.size();
  if (plan.has_sampled()) {
    const std::uint64_t d = ctx.nav().depth(plan.sampled) - ctx.nav().depth(plan.sampled_top);
    cost += d == 0 ? 1 : table_.raw_set(plan.sampled, ceil_log2(d)).size();
  }
  return cost;
}

std::size_t SampledPrefixIndex::collect_leg(const IndexedTree& ctx, const LegPlan& plan,
                                            std::vector<Label>& out) const {
  const std::size_t before = out.size();
  for (NodeId w : plan.explicit_nodes) out.push_back(ctx.tree().label(w));
  if (plan.has_sampled()) {
    const std::uint64_t d = ctx.nav().depth(plan.sampled) - ctx.nav().depth(plan.sampled_top);
    if (d == 0) {
      out.push_back(ctx.tree().label(plan.sampled));
    } else {
      table_.append_labels(plan.sampled, ceil_log2(d), ctx, out);
    }
  }
  return out.size() - before;
}

MajorityResult verify_majorities(const IndexedTree& ctx, const Threshold& tau, const PathDescriptor& path,
                                 std::vector<Label> candidates, QueryStats stats) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  MajorityResult result;
  for (Label l : candidates) {
    ++stats.verifications;
    if (tau.exceeded_by(ctx.labels().count_on_path(l, path), path.length)) result.labels.push_back(l);
  }
  result.stats = stats;
  return result;
}

namespace {

SampledPrefixIndex build_sampled(const IndexedTree& ctx, const Threshold& tau, CandidateConstruction how) {
  MarkedSet marks = select_marked_basic(ctx.nav(), tau);
  const auto owners = marks.owners();
  CandidateTable table = how == CandidateConstruction::kHeavyPath
                             ? build_candidates_heavy(ctx, owners, tau, CandidateEncoding::kLabel)
                             : build_candidates_quadratic(ctx, owners, tau, CandidateEncoding::kLabel);
  return SampledPrefixIndex(std::move(marks), std::move(table));
}

}  // namespace

BasicMajorityIndex::BasicMajorityIndex(std::shared_ptr<const IndexedTree> ctx, const Threshold& tau,
                                       CandidateConstruction construction)
    : ctx_(std::move(ctx)), tau_(tau), sampled_(build_sampled(*ctx_, tau_, construction)) {}

BasicMajorityIndex::BasicMajorityIndex(std::shared_ptr<const IndexedTree> ctx, const Threshold& tau,
                                       CandidateTable table)
    : ctx_(std::move(ctx)), tau_(tau), sampled_(select_marked_basic(ctx_->nav(), tau_), std::move(table)) {}

QueryPlan BasicMajorityIndex::decompose(const PathDescriptor& path) const {
  QueryPlan plan;
  plan.u_leg = sampled_.plan_leg(*ctx_, path.u, path.z);
  if (path.has_v_leg()) plan.v_leg = sampled_.plan_leg(*ctx_, path.v, path.z_prime);
  return plan;
}

QueryPlan BasicMajorityIndex::decompose(NodeId u, NodeId v) const { return decompose(ctx_->nav().describe_path(u, v)); }

MajorityResult BasicMajorityIndex::query(const PathDescriptor& path) const {
  const QueryPlan plan = decompose(path);
  std::vector<Label> cands;
  QueryStats stats;
  for (const LegPlan* leg : {&plan.u_leg, &plan.v_leg}) {
    stats.subpaths_used += !leg->explicit_nodes.empty();
    stats.subpaths_used += leg->has_sampled();
    stats.candidates_inspected += sampled_.collect_leg(*ctx_, *leg, cands);
  }
  return verify_majorities(*ctx_, tau_, path, std::move(cands), stats);
}

MajorityResult BasicMajorityIndex::query(NodeId u, NodeId v) const { return query(ctx_->nav().describe_path(u, v)); }

}  // namespace pathmaj
