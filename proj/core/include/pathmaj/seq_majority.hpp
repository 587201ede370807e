#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pathmaj/threshold.hpp"
#include "pathmaj/types.hpp"

namespace pathmaj {

/// ceil(lg x); 0 for x <= 1.
inline unsigned ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : static_cast<unsigned>(std::bit_width(x - 1)); }

/// Misra-Gries frequent-elements summary with a fixed number of counters.
/// After n additions, every element occurring more than n / (counters + 1)
/// times holds a counter.
class MisraGries {
 public:
  explicit MisraGries(std::size_t counters);

  void add(Label l);
  void clear();
  /// Labels currently holding a counter, ascending.
  std::vector<Label> candidates() const;

 private:
  std::size_t capacity_;
  std::vector<Label> keys_;
  std::vector<std::uint32_t> counts_;
};

/// ceil(1/tau) - 1: enough counters to keep every tau-majority.
std::size_t misra_gries_counters(const Threshold& tau);

/// Superset of the tau-majorities of `slice`, at most ceil(1/tau) - 1 labels, ascending.
std::vector<Label> misra_gries(std::span<const Label> slice, const Threshold& tau);

/// Label sequence with per-label sorted positions for exact range counting.
/// Positions in the public interface are 1-based and inclusive.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::vector<Label> data);

  std::size_t size() const { return data_.size(); }
  Label at(std::size_t i) const { return data_[i - 1]; }
  std::span<const Label> data() const { return data_; }

  /// Occurrences of l in S[i..j].
  std::uint64_t exact_range_count(Label l, std::size_t i, std::size_t j) const;

 private:
  std::vector<Label> data_;
  std::vector<std::uint32_t> label_begin_;  // CSR over labels 0..max
  std::vector<std::uint32_t> positions_;    // 0-based, sorted within each label
};

/// Range tau-majority candidates.
///
/// Every position c stores, for each window length 2^s it can serve, a
/// Misra-Gries summary with ceil(2/tau) - 1 counters of the windows
/// [c - 2^s, c) and [c, c + 2^s). A query [i, j] of length L picks the
/// multiple c of 2^floor(lg L) in [i, j]; the part left of c is shorter than
/// 2^floor(lg L) and the part from c is shorter than 2^(floor(lg L) + 1), so c
/// has windows covering each part with less than twice its length. A
/// tau-majority of [i, j] is a tau-majority of one part and hence a
/// (tau/2)-majority of that part's window.
///
/// Space is O(n / tau) entries, build time O((n / tau) log n).
class RangeMajorityIndex {
 public:
  RangeMajorityIndex() = default;
  RangeMajorityIndex(const Sequence& seq, const Threshold& tau);

  /// Superset of the tau-majorities of S[i..j], ascending, at most floor(8/tau)
  /// labels. Throws std::out_of_range unless 1 <= i <= j <= size().
  std::vector<Label> candidates(std::size_t i, std::size_t j) const;
  /// Same as candidates() but appends (unsorted, possibly with duplicates of
  /// what `out` already holds) and returns the number of labels appended.
  std::size_t append_candidates(std::size_t i, std::size_t j, std::vector<Label>& out) const;

  std::size_t size() const { return n_; }
  std::size_t stored_entries() const { return entries_.size(); }
  std::size_t max_list_size() const;

 private:
  std::span<const Label> list(std::size_t c, bool left, unsigned s) const;

  std::size_t n_ = 0;
  std::vector<std::uint64_t> pos_begin_;  // n + 1 entries, index into list_begin_
  std::vector<std::uint8_t> left_lists_;  // number of left windows per position
  std::vector<std::uint64_t> list_begin_;
  std::vector<Label> entries_;
};

}  // namespace pathmaj
