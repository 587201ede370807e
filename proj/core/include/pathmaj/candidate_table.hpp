#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pathmaj/indexed_tree.hpp"
#include "pathmaj/seq_majority.hpp"
#include "pathmaj/threshold.hpp"

namespace pathmaj {

/// How candidate entries are stored: the label itself, or the depth of the
/// owner's nearest ancestor carrying that label (decoded through level_anc).
enum class CandidateEncoding : std::uint8_t { kLabel = 0, kAncestorDepth = 1 };

/// A node whose upward prefixes get candidate sets, clipped at `clip`
/// (an ancestor-or-self of `node`; the tree root when unclipped).
struct PrefixOwner {
  NodeId node;
  NodeId clip;
};

/// For each owner x and each 0 <= i <= ceil(lg d), d = depth(x) - depth(clip):
/// C_i(x), the exact (tau/2)-majorities of the 1 + 2^i labels on the way up
/// from x, truncated at the clip node.
class CandidateTable {
 public:
  CandidateTable() = default;
  CandidateTable(std::size_t node_count, CandidateEncoding encoding);

  /// Appends the sets of owner x; `sets[i]` holds labels in any order.
  void add_owner(NodeId x, const std::vector<std::vector<Label>>& sets, const IndexedTree& ctx);
  /// Appends already-encoded sets (used when loading from disk).
  void add_owner_raw(NodeId x, const std::vector<std::vector<std::uint32_t>>& sets);

  bool has(NodeId x) const { return x < slot_of_.size() && slot_of_[x] != kNoSlot; }
  std::size_t set_count(NodeId x) const;
  std::span<const std::uint32_t> raw_set(NodeId x, std::size_t i) const;
  /// Decoded labels of C_i(x), ascending.
  std::vector<Label> labels(NodeId x, std::size_t i, const IndexedTree& ctx) const;
  /// Appends decoded labels of C_i(x) and returns how many were appended.
  std::size_t append_labels(NodeId x, std::size_t i, const IndexedTree& ctx, std::vector<Label>& out) const;

  CandidateEncoding encoding() const { return encoding_; }
  std::size_t node_count() const { return slot_of_.empty() ? 0 : slot_of_.size() - 1; }
  std::span<const NodeId> owners() const { return owners_; }
  std::size_t total_entries() const { return entries_.size(); }
  std::size_t max_set_size() const;

  friend bool operator==(const CandidateTable&, const CandidateTable&) = default;

 private:
  static constexpr std::uint32_t kNoSlot = UINT32_MAX;

  CandidateEncoding encoding_ = CandidateEncoding::kLabel;
  std::vector<std::uint32_t> slot_of_;
  std::vector<NodeId> owners_;
  std::vector<std::uint64_t> owner_sets_{0};  // per slot, index into set_begin_
  std::vector<std::uint64_t> set_begin_{0};   // per set, index into entries_
  std::vector<std::uint32_t> entries_;
};

/// Labels of every heavy path written deepest node first and concatenated,
/// with a (tau/2) range-majority index on top. An upward run inside one heavy
/// path is a contiguous range.
class HeavyPathSequences {
 public:
  HeavyPathSequences(const IndexedTree& ctx, const Threshold& tau);

  /// 1-based position of u in the sequence.
  std::size_t position(NodeId u) const;
  const Sequence& sequence() const { return seq_; }
  const RangeMajorityIndex& index() const { return index_; }

 private:
  const NavIndex* nav_;
  Sequence seq_;
  RangeMajorityIndex index_;
};

/// Misra-Gries over each owner's upward walk, snapshotting at every doubling
/// length, followed by exact verification. O(sum of prefix lengths) scans.
void append_candidates_quadratic(const IndexedTree& ctx, std::span<const PrefixOwner> owners, const Threshold& tau,
                                 CandidateTable& out);

/// Candidate sets from range-majority queries over the heavy-path segments
/// crossed by each prefix: O(log n) range queries and O((1/tau) log n)
/// verifications per owner.
void append_candidates_heavy(const IndexedTree& ctx, const HeavyPathSequences& heavy,
                             std::span<const PrefixOwner> owners, const Threshold& tau, CandidateTable& out);

CandidateTable build_candidates_quadratic(const IndexedTree& ctx, std::span<const PrefixOwner> owners,
                                          const Threshold& tau, CandidateEncoding encoding);
CandidateTable build_candidates_heavy(const IndexedTree& ctx, std::span<const PrefixOwner> owners,
                                      const Threshold& tau, CandidateEncoding encoding);

}  // namespace pathmaj
