#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathmaj/labeled_tree.hpp"
#include "pathmaj/multi_label.hpp"
#include "pathmaj/threshold.hpp"

namespace pathmaj {

// Brute-force reference answers. These only read parent pointers and labels,
// so they share no code with the indexes they check.

/// Nodes of P_uv in order u ... lca ... v.
std::vector<NodeId> oracle_path_nodes(const LabeledTree& tree, NodeId u, NodeId v);
/// Label -> occurrences on P_uv.
std::map<Label, std::uint64_t> oracle_tally(const LabeledTree& tree, NodeId u, NodeId v);
/// Dense labels occurring more than tau |P_uv| times, ascending.
std::vector<Label> oracle_majorities(const LabeledTree& tree, NodeId u, NodeId v, const Threshold& tau);
/// Smallest dense label occurring between 1 and tau |P_uv| times.
std::optional<Label> oracle_minority(const LabeledTree& tree, NodeId u, NodeId v, const Threshold& tau);

/// Original labels that are tau-majorities of the multiset union of the label
/// lists on the original path u..v, ascending.
std::vector<std::int64_t> oracle_multi_majorities(const MultiTreeInput& input, NodeId u, NodeId v,
                                                  const Threshold& tau);

/// SplitMix64 (Steele, Lea, Flood 2014):
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
/// bounded(m) maps a draw to [0, m) as (next() * m) >> 64 in 128-bit arithmetic.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t bounded(std::uint64_t m);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + bounded(hi - lo + 1); }

 private:
  std::uint64_t state_;
};

enum class Shape { kRandomAttachment, kChain, kCaterpillar, kCompleteBinary, kBroom };

inline constexpr Shape kAllShapes[] = {Shape::kRandomAttachment, Shape::kChain, Shape::kCaterpillar,
                                       Shape::kCompleteBinary, Shape::kBroom};

std::string_view shape_name(Shape s);
/// Accepts the names printed by shape_name(); throws std::invalid_argument otherwise.
Shape parse_shape(std::string_view name);

/// Deterministic tree description. With rng = SplitMix64(seed), all parents
/// are drawn first (nodes 2..n in order), then labels 1 + bounded(sigma) for
/// nodes 1..n:
///   random-attachment: parent(i) = 1 + bounded(i - 1)
///   chain:             parent(i) = i - 1
///   caterpillar:       spine 1..s with s = ceil(n/2); parent(i) = i - 1 on
///                      the spine, 1 + bounded(s) off it
///   complete-binary:   parent(i) = floor(i/2)
///   broom:             handle 1..h with h = ceil(n/2) as a chain, every
///                      other node a child of h
/// Only random-attachment and caterpillar consume parent draws.
struct GeneratorSpec {
  Shape shape = Shape::kRandomAttachment;
  std::uint64_t n = 0;
  std::uint64_t sigma = 1;
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument when n == 0 or sigma == 0.
TreeInput generate_input(const GeneratorSpec& spec);
LabeledTree generate(const GeneratorSpec& spec);

/// Random-attachment tree whose nodes carry 1..max_labels labels each
/// (count 1 + bounded(max_labels) per node, then each label 1 + bounded(sigma)),
/// with at most `label_budget` labels in total. n is first capped at the
/// budget; each count is then capped so every later node keeps one label.
MultiTreeInput generate_multi_input(std::uint64_t n, std::uint64_t max_labels, std::uint64_t sigma,
                                    std::uint64_t label_budget, std::uint64_t seed);

/// `count` node pairs drawn uniformly from [1, n]^2.
std::vector<std::pair<NodeId, NodeId>> generate_queries(std::uint64_t n, std::size_t count, SplitMix64& rng);

}  // namespace pathmaj
