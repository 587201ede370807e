#include "pathmaj/seq_majority.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace pathmaj {

MisraGries::MisraGries(std::size_t counters) : capacity_(counters) {
  keys_.reserve(counters);
  counts_.reserve(counters);
}

void MisraGries::add(Label l) {
  for (std::size_t k = 0; k < keys_.size(); ++k) {
    if (keys_[k] == l) {
      ++counts_[k];
      return;
    }
  }
  if (keys_.size() < capacity_) {
    keys_.push_back(l);
    counts_.push_back(1);
    return;
  }
  std::size_t kept = 0;
  for (std::size_t k = 0; k < keys_.size(); ++k) {
    if (--counts_[k] > 0) {
      keys_[kept] = keys_[k];
      counts_[kept] = counts_[k];
      ++kept;
    }
  }
  keys_.resize(kept);
  counts_.resize(kept);
}

void MisraGries::clear() {
  keys_.clear();
  counts_.clear();
}

std::vector<Label> MisraGries::candidates() const {
  std::vector<Label> out(keys_);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t misra_gries_counters(const Threshold& tau) { return tau.ceil_inverse() - 1; }

std::vector<Label> misra_gries(std::span<const Label> slice, const Threshold& tau) {
  MisraGries mg(misra_gries_counters(tau));
  for (Label l : slice) mg.add(l);
  return mg.candidates();
}

Sequence::Sequence(std::vector<Label> data) : data_(std::move(data)) {
  Label max_label = 0;
  for (Label l : data_) max_label = std::max(max_label, l);
  label_begin_.assign(std::size_t{max_label} + 2, 0);
  for (Label l : data_) ++label_begin_[l + 1];
  for (std::size_t l = 1; l < label_begin_.size(); ++l) label_begin_[l] += label_begin_[l - 1];
  positions_.assign(data_.size(), 0);
  std::vector<std::uint32_t> fill(label_begin_.begin(), label_begin_.end() - 1);
  for (std::uint32_t i = 0; i < data_.size(); ++i) positions_[fill[data_[i]]++] = i;
}

std::uint64_t Sequence::exact_range_count(Label l, std::size_t i, std::size_t j) const {
  if (i < 1 || j > data_.size() || i > j) {
    throw std::out_of_range("range [" + std::to_string(i) + ", " + std::to_string(j) + "] outside sequence of length " +
                            std::to_string(data_.size()));
  }
  if (std::size_t{l} + 1 >= label_begin_.size()) return 0;
  const auto first = positions_.begin() + label_begin_[l];
  const auto last = positions_.begin() + label_begin_[l + 1];
  const auto lo = std::lower_bound(first, last, static_cast<std::uint32_t>(i - 1));
  const auto hi = std::upper_bound(lo, last, static_cast<std::uint32_t>(j - 1));
  return static_cast<std::uint64_t>(hi - lo);
}

RangeMajorityIndex::RangeMajorityIndex(const Sequence& seq, const Threshold& tau) : n_(seq.size()) {
  const auto data = seq.data();
  MisraGries mg(misra_gries_counters(tau.halved()));
  pos_begin_.reserve(n_ + 1);
  left_lists_.assign(n_, 0);
  list_begin_.push_back(0);
  const unsigned top = static_cast<unsigned>(std::bit_width(n_));

  auto snapshot = [&] {
    const auto cands = mg.candidates();
    entries_.insert(entries_.end(), cands.begin(), cands.end());
    list_begin_.push_back(entries_.size());
  };

  for (std::size_t c = 0; c < n_; ++c) {
    pos_begin_.push_back(list_begin_.size() - 1);
    const unsigned valuation = c == 0 ? top : static_cast<unsigned>(std::countr_zero(c));

    // Left windows [c - 2^s, c), clipped at 0, for s <= min(v(c), ceil lg c).
    if (c > 0) {
      const unsigned smax = std::min(valuation, ceil_log2(c));
      mg.clear();
      std::size_t scanned = 0;
      for (unsigned s = 0; s <= smax; ++s) {
        const std::size_t want = std::min(std::size_t{1} << s, c);
        while (scanned < want) mg.add(data[c - 1 - scanned++]);
        snapshot();
      }
      left_lists_[c] = static_cast<std::uint8_t>(smax + 1);
    }

    // Right windows [c, c + 2^s), clipped at n, for s <= min(v(c) + 1, ceil lg (n - c)).
    const unsigned smax = std::min(valuation + 1, ceil_log2(n_ - c));
    mg.clear();
    std::size_t scanned = 0;
    for (unsigned s = 0; s <= smax; ++s) {
      const std::size_t want = std::min(std::size_t{1} << s, n_ - c);
      while (scanned < want) mg.add(data[c + scanned++]);
      snapshot();
    }
  }
  pos_begin_.push_back(list_begin_.size() - 1);
  entries_.shrink_to_fit();
}

std::span<const Label> RangeMajorityIndex::list(std::size_t c, bool left, unsigned s) const {
  const std::uint64_t idx = pos_begin_[c] + (left ? 0 : left_lists_[c]) + s;
  return {entries_.data() + list_begin_[idx], entries_.data() + list_begin_[idx + 1]};
}

std::size_t RangeMajorityIndex::append_candidates(std::size_t i, std::size_t j, std::vector<Label>& out) const {
  if (i < 1 || j > n_ || i > j) {
    throw std::out_of_range("range [" + std::to_string(i) + ", " + std::to_string(j) + "] outside sequence of length " +
                            std::to_string(n_));
  }
  const std::size_t lo = i - 1;
  const std::size_t hi = j - 1;
  const std::size_t len = hi - lo + 1;
  const unsigned t = static_cast<unsigned>(std::bit_width(len)) - 1;
  const std::size_t c = ((lo + (std::size_t{1} << t) - 1) >> t) << t;
  const std::size_t before = out.size();
  if (c > lo) {
    const auto l = list(c, true, ceil_log2(c - lo));
    out.insert(out.end(), l.begin(), l.end());
  }
  const auto r = list(c, false, ceil_log2(hi - c + 1));
  out.insert(out.end(), r.begin(), r.end());
  return out.size() - before;
}

std::vector<Label> RangeMajorityIndex::candidates(std::size_t i, std::size_t j) const {
  std::vector<Label> out;
  append_candidates(i, j, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t RangeMajorityIndex::max_list_size() const {
  std::size_t best = 0;
  for (std::size_t k = 0; k + 1 < list_begin_.size(); ++k) {
    best = std::max<std::size_t>(best, list_begin_[k + 1] - list_begin_[k]);
  }
  return best;
}

}  // namespace pathmaj
