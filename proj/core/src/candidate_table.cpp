#include "pathmaj/candidate_table.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pathmaj {

namespace {

void sort_unique(std::vector<Label>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Keeps the (tau/2)-majorities of the vertical path x..top among `cands`.
std::vector<Label> verify_prefix(const IndexedTree& ctx, const Threshold& half, NodeId x, NodeId top,
                                 const std::vector<Label>& cands) {
  const std::uint64_t len = ctx.nav().depth(x) - ctx.nav().depth(top) + 1;
  std::vector<Label> kept;
  for (Label l : cands) {
    if (half.exceeded_by(ctx.labels().count_on_vertical(l, x, top), len)) kept.push_back(l);
  }
  return kept;
}

}  // namespace

CandidateTable::CandidateTable(std::size_t node_count, CandidateEncoding encoding)
    : encoding_(encoding), slot_of_(node_count + 1, kNoSlot) {}

void CandidateTable::add_owner(NodeId x, const std::vector<std::vector<Label>>& sets, const IndexedTree& ctx) {
  std::vector<std::vector<std::uint32_t>> encoded;
  encoded.reserve(sets.size());
  for (const auto& set : sets) {
    std::vector<std::uint32_t> e;
    e.reserve(set.size());
    for (Label l : set) {
      if (encoding_ == CandidateEncoding::kLabel) {
        e.push_back(l);
      } else {
        const NodeId a = ctx.labels().labelanc(x, l);
        if (a == kNoNode) throw std::logic_error("candidate label does not occur above its owner");
        e.push_back(ctx.nav().depth(a));
      }
    }
    std::sort(e.begin(), e.end());
    encoded.push_back(std::move(e));
  }
  add_owner_raw(x, encoded);
}

void CandidateTable::add_owner_raw(NodeId x, const std::vector<std::vector<std::uint32_t>>& sets) {
  if (x == kNoNode || x >= slot_of_.size()) throw std::out_of_range("candidate owner " + std::to_string(x));
  if (slot_of_[x] != kNoSlot) throw std::logic_error("duplicate candidate owner " + std::to_string(x));
  slot_of_[x] = static_cast<std::uint32_t>(owners_.size());
  owners_.push_back(x);
  for (const auto& set : sets) {
    entries_.insert(entries_.end(), set.begin(), set.end());
    set_begin_.push_back(entries_.size());
  }
  owner_sets_.push_back(set_begin_.size() - 1);
}

std::size_t CandidateTable::set_count(NodeId x) const {
  if (!has(x)) return 0;
  const auto s = slot_of_[x];
  return owner_sets_[s + 1] - owner_sets_[s];
}

std::span<const std::uint32_t> CandidateTable::raw_set(NodeId x, std::size_t i) const {
  if (i >= set_count(x)) {
    throw std::out_of_range("no candidate set " + std::to_string(i) + " for node " + std::to_string(x));
  }
  const auto idx = owner_sets_[slot_of_[x]] + i;
  return {entries_.data() + set_begin_[idx], entries_.data() + set_begin_[idx + 1]};
}

std::size_t CandidateTable::append_labels(NodeId x, std::size_t i, const IndexedTree& ctx,
                                          std::vector<Label>& out) const {
  const auto raw = raw_set(x, i);
  for (std::uint32_t e : raw) {
    out.push_back(encoding_ == CandidateEncoding::kLabel ? e : ctx.tree().label(ctx.nav().level_anc(x, e)));
  }
  return raw.size();
}

std::vector<Label> CandidateTable::labels(NodeId x, std::size_t i, const IndexedTree& ctx) const {
  std::vector<Label> out;
  append_labels(x, i, ctx, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t CandidateTable::max_set_size() const {
  std::size_t best = 0;
  for (std::size_t k = 0; k + 1 < set_begin_.size(); ++k) {
    best = std::max<std::size_t>(best, set_begin_[k + 1] - set_begin_[k]);
  }
  return best;
}

HeavyPathSequences::HeavyPathSequences(const IndexedTree& ctx, const Threshold& tau) : nav_(&ctx.nav()) {
  const auto& nav = ctx.nav();
  std::vector<Label> data(ctx.size());
  for (std::uint32_t p = 0; p < nav.path_count(); ++p) {
    const std::uint32_t b = nav.path_begin(p);
    const std::uint32_t e = nav.path_end(p);
    for (std::uint32_t k = b; k < e; ++k) data[b + (e - 1 - k)] = ctx.tree().label(nav.node_at_flat(k));
  }
  seq_ = Sequence(std::move(data));
  index_ = RangeMajorityIndex(seq_, tau);
}

std::size_t HeavyPathSequences::position(NodeId u) const {
  const std::uint32_t p = nav_->path_id(u);
  return std::size_t{nav_->path_begin(p)} + (nav_->path_end(p) - 1 - nav_->flat_position(u)) + 1;
}

void append_candidates_quadratic(const IndexedTree& ctx, std::span<const PrefixOwner> owners, const Threshold& tau,
                                 CandidateTable& out) {
  const auto& nav = ctx.nav();
  const Threshold half = tau.halved();
  MisraGries mg(misra_gries_counters(half));
  for (const auto& [x, clip] : owners) {
    const std::uint64_t reach = nav.depth(x) - nav.depth(clip);
    std::vector<std::vector<Label>> sets;
    if (reach > 0) {
      const unsigned imax = ceil_log2(reach);
      mg.clear();
      NodeId cur = x;
      NodeId last = kNoNode;
      std::uint64_t len = 0;
      for (unsigned i = 0; i <= imax; ++i) {
        const std::uint64_t target = std::min<std::uint64_t>(1 + (std::uint64_t{1} << i), reach + 1);
        while (len < target) {
          mg.add(ctx.tree().label(cur));
          ++len;
          last = cur;
          cur = nav.parent(cur);
        }
        sets.push_back(verify_prefix(ctx, half, x, last, mg.candidates()));
      }
    }
    out.add_owner(x, sets, ctx);
  }
}

void append_candidates_heavy(const IndexedTree& ctx, const HeavyPathSequences& heavy,
                             std::span<const PrefixOwner> owners, const Threshold& tau, CandidateTable& out) {
  const auto& nav = ctx.nav();
  const Threshold half = tau.halved();
  struct Segment {
    NodeId bottom;
    NodeId top;
  };
  std::vector<Segment> segs;
  std::vector<Label> cands;
  for (const auto& [x, clip] : owners) {
    const std::uint64_t reach = nav.depth(x) - nav.depth(clip);
    std::vector<std::vector<Label>> sets;
    if (reach > 0) {
      // Heavy-path segments pi_1..pi_k from x up to the clip node.
      segs.clear();
      for (NodeId cur = x;;) {
        if (nav.path_id(cur) == nav.path_id(clip)) {
          segs.push_back({cur, clip});
          break;
        }
        const NodeId h = nav.head(cur);
        segs.push_back({cur, h});
        cur = nav.parent(h);
      }

      // `exact` holds the (tau/2)-majorities of x..covered_top.
      std::vector<Label> exact;
      std::int64_t covered_depth = static_cast<std::int64_t>(nav.depth(x)) + 1;
      std::size_t next_seg = 0;
      const unsigned imax = ceil_log2(reach);
      for (unsigned i = 0; i <= imax; ++i) {
        const auto target_depth = static_cast<std::int64_t>(
            nav.depth(x) - std::min<std::uint64_t>(std::uint64_t{1} << i, reach));
        while (next_seg < segs.size() && static_cast<std::int64_t>(nav.depth(segs[next_seg].top)) >= target_depth) {
          const auto& seg = segs[next_seg++];
          cands = exact;
          heavy.index().append_candidates(heavy.position(seg.bottom), heavy.position(seg.top), cands);
          sort_unique(cands);
          exact = verify_prefix(ctx, half, x, seg.top, cands);
          covered_depth = nav.depth(seg.top);
        }
        if (covered_depth == target_depth) {
          sets.push_back(exact);
          continue;
        }
        // The prefix ends inside the next segment: take a proper prefix of it.
        const auto& seg = segs[next_seg];
        const NodeId h = nav.head(seg.bottom);
        const NodeId partial_top =
            nav.node_at_flat(nav.flat_position(h) + static_cast<std::uint32_t>(target_depth - nav.depth(h)));
        cands = exact;
        heavy.index().append_candidates(heavy.position(seg.bottom), heavy.position(partial_top), cands);
        sort_unique(cands);
        sets.push_back(verify_prefix(ctx, half, x, partial_top, cands));
      }
    }
    out.add_owner(x, sets, ctx);
  }
}

CandidateTable build_candidates_quadratic(const IndexedTree& ctx, std::span<const PrefixOwner> owners,
                                          const Threshold& tau, CandidateEncoding encoding) {
  CandidateTable table(ctx.size(), encoding);
  append_candidates_quadratic(ctx, owners, tau, table);
  return table;
}

CandidateTable build_candidates_heavy(const IndexedTree& ctx, std::span<const PrefixOwner> owners,
                                      const Threshold& tau, CandidateEncoding encoding) {
  CandidateTable table(ctx.size(), encoding);
  if (owners.empty()) return table;
  const HeavyPathSequences heavy(ctx, tau.halved());
  append_candidates_heavy(ctx, heavy, owners, tau, table);
  return table;
}

}  // namespace pathmaj
