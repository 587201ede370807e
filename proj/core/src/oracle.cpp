#include "pathmaj/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pathmaj {

namespace {

template <class ParentFn>
std::vector<NodeId> walk_path(NodeId u, NodeId v, ParentFn parent) {
  auto depth = [&](NodeId x) {
    std::uint64_t d = 0;
    for (NodeId p = parent(x); p != kNoNode; p = parent(p)) ++d;
    return d;
  };
  std::vector<NodeId> up, down;
  std::uint64_t du = depth(u), dv = depth(v);
  while (du > dv) {
    up.push_back(u);
    u = parent(u);
    --du;
  }
  while (dv > du) {
    down.push_back(v);
    v = parent(v);
    --dv;
  }
  while (u != v) {
    up.push_back(u);
    down.push_back(v);
    u = parent(u);
    v = parent(v);
  }
  up.push_back(u);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

}  // namespace

std::vector<NodeId> oracle_path_nodes(const LabeledTree& tree, NodeId u, NodeId v) {
  return walk_path(u, v, [&](NodeId x) { return tree.parent(x); });
}

std::map<Label, std::uint64_t> oracle_tally(const LabeledTree& tree, NodeId u, NodeId v) {
  std::map<Label, std::uint64_t> tally;
  for (NodeId x : oracle_path_nodes(tree, u, v)) ++tally[tree.label(x)];
  return tally;
}

std::vector<Label> oracle_majorities(const LabeledTree& tree, NodeId u, NodeId v, const Threshold& tau) {
  const auto nodes = oracle_path_nodes(tree, u, v);
  std::map<Label, std::uint64_t> tally;
  for (NodeId x : nodes) ++tally[tree.label(x)];
  std::vector<Label> out;
  for (const auto& [l, c] : tally) {
    if (tau.exceeded_by(c, nodes.size())) out.push_back(l);
  }
  return out;
}

std::optional<Label> oracle_minority(const LabeledTree& tree, NodeId u, NodeId v, const Threshold& tau) {
  const auto nodes = oracle_path_nodes(tree, u, v);
  std::map<Label, std::uint64_t> tally;
  for (NodeId x : nodes) ++tally[tree.label(x)];
  for (const auto& [l, c] : tally) {
    if (tau.admits_minority(c, nodes.size())) return l;
  }
  return std::nullopt;
}

std::vector<std::int64_t> oracle_multi_majorities(const MultiTreeInput& input, NodeId u, NodeId v,
                                                  const Threshold& tau) {
  const auto nodes = walk_path(u, v, [&](NodeId x) { return input.parents[x - 1]; });
  std::map<std::int64_t, std::uint64_t> tally;
  std::uint64_t total = 0;
  for (NodeId x : nodes) {
    for (std::int64_t l : input.labels[x - 1]) {
      ++tally[l];
      ++total;
    }
  }
  std::vector<std::int64_t> out;
  for (const auto& [l, c] : tally) {
    if (tau.exceeded_by(c, total)) out.push_back(l);
  }
  return out;
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::bounded(std::uint64_t m) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<u128>(next()) * m) >> 64);
}

std::string_view shape_name(Shape s) {
  switch (s) {
    case Shape::kRandomAttachment: return "random-attachment";
    case Shape::kChain: return "chain";
    case Shape::kCaterpillar: return "caterpillar";
    case Shape::kCompleteBinary: return "complete-binary";
    case Shape::kBroom: return "broom";
  }
  return "?";
}

Shape parse_shape(std::string_view name) {
  for (Shape s : kAllShapes) {
    if (shape_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown shape '" + std::string(name) + "'");
}

TreeInput generate_input(const GeneratorSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("n must be positive");
  if (spec.sigma == 0) throw std::invalid_argument("sigma must be positive");
  if (spec.n > UINT32_MAX - 1) throw std::invalid_argument("n too large");
  const std::uint64_t n = spec.n;
  SplitMix64 rng(spec.seed);
  TreeInput in;
  in.parents.assign(n, 0);
  const std::uint64_t half = (n + 1) / 2;
  for (std::uint64_t i = 2; i <= n; ++i) {
    std::uint64_t p = 0;
    switch (spec.shape) {
      case Shape::kRandomAttachment: p = 1 + rng.bounded(i - 1); break;
      case Shape::kChain: p = i - 1; break;
      case Shape::kCaterpillar: p = i <= half ? i - 1 : 1 + rng.bounded(half); break;
      case Shape::kCompleteBinary: p = i / 2; break;
      case Shape::kBroom: p = i <= half ? i - 1 : half; break;
    }
    in.parents[i - 1] = static_cast<NodeId>(p);
  }
  in.labels.resize(n);
  for (auto& l : in.labels) l = static_cast<std::int64_t>(1 + rng.bounded(spec.sigma));
  return in;
}

LabeledTree generate(const GeneratorSpec& spec) { return build_tree(generate_input(spec)); }

MultiTreeInput generate_multi_input(std::uint64_t n, std::uint64_t max_labels, std::uint64_t sigma,
                                    std::uint64_t label_budget, std::uint64_t seed) {
  if (n == 0 || max_labels == 0 || sigma == 0) throw std::invalid_argument("multi-label generator needs positive sizes");
  n = std::min(n, label_budget);
  SplitMix64 rng(seed);
  MultiTreeInput in;
  in.parents.assign(n, 0);
  for (std::uint64_t i = 2; i <= n; ++i) in.parents[i - 1] = static_cast<NodeId>(1 + rng.bounded(i - 1));
  in.labels.resize(n);
  std::uint64_t used = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t remaining_nodes = n - i - 1;
    std::uint64_t k = 1 + rng.bounded(max_labels);
    k = std::min(k, label_budget - used - remaining_nodes);
    for (std::uint64_t j = 0; j < k; ++j) in.labels[i].push_back(static_cast<std::int64_t>(1 + rng.bounded(sigma)));
    used += k;
  }
  return in;
}

std::vector<std::pair<NodeId, NodeId>> generate_queries(std::uint64_t n, std::size_t count, SplitMix64& rng) {
  std::vector<std::pair<NodeId, NodeId>> q;
  q.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto u = static_cast<NodeId>(1 + rng.bounded(n));
    const auto v = static_cast<NodeId>(1 + rng.bounded(n));
    q.emplace_back(u, v);
  }
  return q;
}

}  // namespace pathmaj
