#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "pathmaj/candidate_table.hpp"
#include "pathmaj/indexed_tree.hpp"
#include "pathmaj/query_stats.hpp"
#include "pathmaj/threshold.hpp"

namespace pathmaj {

/// Sampled nodes with the distance guarantees needed by the candidate sets.
struct MarkedSet {
  std::uint64_t step = 0;                // ceil(1/tau)
  std::vector<std::uint8_t> is_marked;   // [node]
  std::vector<NodeId> nearest_marked;    // nearest marked ancestor-or-self in the same region, or kNoNode
  std::vector<NodeId> marked;            // marked nodes in preorder
  std::vector<NodeId> region_root;       // [node] clip ancestor, kNoNode outside every region

  std::size_t size() const { return marked.size(); }
  std::vector<PrefixOwner> owners() const;
};

/// Marks u iff height(u) >= ceil(1/tau) and depth(u) is a multiple of ceil(1/tau).
MarkedSet select_marked_basic(const NavIndex& nav, const Threshold& tau);

/// Same rule applied independently inside each region, with depths measured
/// from the region root. `region_root[u]` must be constant on each region and
/// every region must be a complete subtree; kNoNode excludes u.
MarkedSet select_marked_in_regions(const NavIndex& nav, const Threshold& tau, std::vector<NodeId> region_root);

/// How one vertical leg (bottom up to top) is covered: explicit nodes below
/// the nearest marked ancestor, then the marked-prefix part `sampled`..`sampled_top`.
struct LegPlan {
  std::vector<NodeId> explicit_nodes;
  NodeId sampled = kNoNode;
  NodeId sampled_top = kNoNode;

  bool has_sampled() const { return sampled != kNoNode; }
};

/// The four subpaths of a query: u-side explicit (1), v-side explicit (2),
/// u-side marked prefix (3), v-side marked prefix (4).
struct QueryPlan {
  LegPlan u_leg;
  LegPlan v_leg;
};

/// Marked nodes plus their candidate table; answers candidate collection for
/// a vertical leg lying inside one region.
class SampledPrefixIndex {
 public:
  SampledPrefixIndex() = default;
  SampledPrefixIndex(MarkedSet marks, CandidateTable table);

  LegPlan plan_leg(const IndexedTree& ctx, NodeId bottom, NodeId top) const;
  /// Number of candidates collect_leg() would append.
  std::size_t plan_cost(const IndexedTree& ctx, const LegPlan& plan) const;
  /// Appends the candidate labels of `plan`; returns how many were appended.
  std::size_t collect_leg(const IndexedTree& ctx, const LegPlan& plan, std::vector<Label>& out) const;

  const MarkedSet& marks() const { return marks_; }
  const CandidateTable& table() const { return table_; }

 private:
  MarkedSet marks_;
  CandidateTable table_;
};

enum class CandidateConstruction { kQuadratic, kHeavyPath };

/// Deduplicates `candidates` and keeps the exact tau-majorities of `path`.
MajorityResult verify_majorities(const IndexedTree& ctx, const Threshold& tau, const PathDescriptor& path,
                                 std::vector<Label> candidates, QueryStats stats);

/// Marked-candidate index: O(n log n) space, O(1/tau) candidates per query.
class BasicMajorityIndex {
 public:
  BasicMajorityIndex(std::shared_ptr<const IndexedTree> ctx, const Threshold& tau,
                     CandidateConstruction construction = CandidateConstruction::kHeavyPath);
  /// Rebuilds the marks and adopts a previously built table. Throws
  /// std::invalid_argument if the table does not match the marks.
  BasicMajorityIndex(std::shared_ptr<const IndexedTree> ctx, const Threshold& tau, CandidateTable table);

  MajorityResult query(NodeId u, NodeId v) const;
  MajorityResult query(const PathDescriptor& path) const;
  QueryPlan decompose(NodeId u, NodeId v) const;
  QueryPlan decompose(const PathDescriptor& path) const;

  const Threshold& tau() const { return tau_; }
  const MarkedSet& marked() const { return sampled_.marks(); }
  const CandidateTable& candidates() const { return sampled_.table(); }
  const IndexedTree& context() const { return *ctx_; }
  std::shared_ptr<const IndexedTree> shared_context() const { return ctx_; }

 private:
  std::shared_ptr<const IndexedTree> ctx_;
  Threshold tau_;
  SampledPrefixIndex sampled_;
};

}  // namespace pathmaj
