#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "pathmaj/candidate_table.hpp"
#include "pathmaj/indexed_tree.hpp"
#include "pathmaj/majority_basic.hpp"
#include "pathmaj/query_stats.hpp"
#include "pathmaj/seq_majority.hpp"
#include "pathmaj/stratification.hpp"
#include "pathmaj/threshold.hpp"

namespace pathmaj {

enum class StratifiedMode : std::uint8_t {
  kLinear = 0,       // smallest tier enumerated node by node
  kSuperlinear = 1,  // smallest tier also gets marks and candidate tables
};

/// Labels of the unary runs of levels 1..kappa, each run written deepest node
/// first, runs concatenated. A run is a maximal chain of same-level nodes that
/// are not branching.
class UnaryPathSequence {
 public:
  UnaryPathSequence() = default;
  UnaryPathSequence(const IndexedTree& ctx, const Stratification& strat, const Threshold& tau);

  bool is_unary(NodeId u) const { return pos_[u] != 0; }
  /// 1-based position of u in S, 0 if u is not on a unary run.
  std::size_t position(NodeId u) const { return pos_[u]; }
  NodeId run_top(NodeId u) const { return run_top_[u]; }
  std::size_t run_count() const { return run_count_; }
  const Sequence& sequence() const { return seq_; }
  const RangeMajorityIndex& index() const { return index_; }

 private:
  std::vector<std::uint32_t> pos_;
  std::vector<NodeId> run_top_;
  std::size_t run_count_ = 0;
  Sequence seq_;
  RangeMajorityIndex index_;
};

/// One step of the upward walk, covering bottom..top.
struct WalkSegment {
  enum class Kind : std::uint8_t { kEnumerated, kSampled, kBranching, kUnaryRun };
  NodeId bottom;
  NodeId top;
  Kind kind;
};

/// Linear-space index built on a stratification of the tree. Queries walk up
/// each leg, taking one candidate-set pull per unary run and per branching
/// node, and enumerate (or sample, in superlinear mode) the smallest tier.
class StratifiedMajorityIndex {
 public:
  StratifiedMajorityIndex(std::shared_ptr<const IndexedTree> ctx, const Threshold& tau,
                          std::optional<unsigned> kappa = std::nullopt, StratifiedMode mode = StratifiedMode::kLinear);
  /// Rebuilds everything except the candidate tables, which are adopted and
  /// checked against the recomputed owners (std::invalid_argument on mismatch).
  StratifiedMajorityIndex(std::shared_ptr<const IndexedTree> ctx, const Threshold& tau, unsigned kappa,
                          StratifiedMode mode, CandidateTable branching_table, CandidateTable smallest_table);

  MajorityResult query(NodeId u, NodeId v) const;
  MajorityResult query(const PathDescriptor& path) const;

  /// Appends candidates covering the vertical path u..top (top an
  /// ancestor-or-self of u); returns how many were appended.
  std::size_t collect_candidates_up(NodeId u, NodeId top, std::vector<Label>& out, QueryStats& stats,
                                    std::vector<WalkSegment>* trace = nullptr) const;

  const Threshold& tau() const { return tau_; }
  StratifiedMode mode() const { return mode_; }
  unsigned kappa() const { return strat_.kappa; }
  unsigned requested_kappa() const { return strat_.requested_kappa; }
  const Stratification& stratification() const { return strat_; }
  const UnaryPathSequence& unary() const { return unary_; }
  const CandidateTable& branching_table() const { return branching_; }
  /// Candidate table of the smallest tier (empty in linear mode).
  const CandidateTable& smallest_table() const { return smallest_.table(); }
  const MarkedSet& smallest_marks() const { return smallest_.marks(); }
  const IndexedTree& context() const { return *ctx_; }

  /// Candidate-table entries plus the list entries of the range-majority index over S.
  std::size_t stored_candidate_entries() const;

  /// Per-query bound on candidates_inspected:
  /// 4 kappa floor(8/tau) + 2 c (1/tau) log^[kappa] n + 4 with c = 1 (log^[0] n = n).
  static double candidate_bound(const Threshold& tau, unsigned kappa, std::uint64_t n);
  double candidate_bound() const;

 private:
  void build_tables();
  std::vector<PrefixOwner> branching_owners(unsigned from_level, unsigned to_level) const;

  std::shared_ptr<const IndexedTree> ctx_;
  Threshold tau_;
  StratifiedMode mode_;
  Stratification strat_;
  UnaryPathSequence unary_;
  CandidateTable branching_;
  SampledPrefixIndex smallest_;
};

}  // namespace pathmaj
