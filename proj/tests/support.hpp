#pragma once

// Test-side helpers. Everything here walks parent pointers directly so the
// expectations never come from the structures under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "pathmaj/indexed_tree.hpp"
#include "pathmaj/labeled_tree.hpp"
#include "pathmaj/oracle.hpp"

namespace pathmaj::test {

inline TreeInput f1_input() {
  return {{0, 1, 2, 3, 4, 3, 6, 1, 8, 9, 9}, {1, 2, 1, 3, 1, 2, 2, 3, 3, 1, 3}};
}

inline std::shared_ptr<const IndexedTree> f1() { return IndexedTree::make(build_tree(f1_input())); }

inline std::shared_ptr<const IndexedTree> make_tree(Shape shape, std::uint64_t n, std::uint64_t sigma,
                                                    std::uint64_t seed) {
  return IndexedTree::make(generate(GeneratorSpec{shape, n, sigma, seed}));
}

inline std::uint32_t naive_depth(const LabeledTree& t, NodeId u) {
  std::uint32_t d = 0;
  for (NodeId p = t.parent(u); p != kNoNode; p = t.parent(p)) ++d;
  return d;
}

/// u, parent(u), ..., top (inclusive).
inline std::vector<NodeId> naive_up(const LabeledTree& t, NodeId u, NodeId top) {
  std::vector<NodeId> out;
  for (NodeId w = u;; w = t.parent(w)) {
    out.push_back(w);
    if (w == top) break;
  }
  return out;
}

inline bool naive_is_ancestor(const LabeledTree& t, NodeId a, NodeId u) {
  for (NodeId w = u; w != kNoNode; w = t.parent(w)) {
    if (w == a) return true;
  }
  return false;
}

inline NodeId naive_lca(const LabeledTree& t, NodeId u, NodeId v) {
  for (NodeId w = u; w != kNoNode; w = t.parent(w)) {
    if (naive_is_ancestor(t, w, v)) return w;
  }
  return kNoNode;
}

inline std::uint64_t naive_count(const LabeledTree& t, const std::vector<NodeId>& nodes, Label l) {
  return static_cast<std::uint64_t>(
      std::count_if(nodes.begin(), nodes.end(), [&](NodeId x) { return t.label(x) == l; }));
}

/// Exact tau-majorities of a label list.
inline std::vector<Label> naive_majorities(const std::vector<Label>& labels, const Threshold& tau) {
  std::map<Label, std::uint64_t> tally;
  for (Label l : labels) ++tally[l];
  std::vector<Label> out;
  for (const auto& [l, c] : tally) {
    if (tau.exceeded_by(c, labels.size())) out.push_back(l);
  }
  return out;
}

inline std::vector<Label> labels_of(const LabeledTree& t, const std::vector<NodeId>& nodes) {
  std::vector<Label> out;
  for (NodeId x : nodes) out.push_back(t.label(x));
  return out;
}

inline bool is_subset(const std::vector<Label>& small, std::vector<Label> big) {
  std::sort(big.begin(), big.end());
  return std::all_of(small.begin(), small.end(),
                     [&](Label l) { return std::binary_search(big.begin(), big.end(), l); });
}

/// A spread of small trees over every shape.
inline std::vector<GeneratorSpec> small_corpus(std::uint64_t max_n, std::size_t per_shape, std::uint64_t seed) {
  std::vector<GeneratorSpec> out;
  SplitMix64 rng(seed);
  for (Shape s : kAllShapes) {
    for (std::size_t i = 0; i < per_shape; ++i) {
      const std::uint64_t n = 1 + rng.bounded(max_n);
      const std::uint64_t sigma = 1 + rng.bounded(std::min<std::uint64_t>(n, 12));
      out.push_back({s, n, sigma, rng.next()});
    }
  }
  return out;
}

}  // namespace pathmaj::test
