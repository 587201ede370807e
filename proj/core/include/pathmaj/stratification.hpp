#pragma once

#include <cstdint>
#include <vector>

#include "pathmaj/nav_index.hpp"
#include "pathmaj/threshold.hpp"

namespace pathmaj {

/// log2 applied k times to x; log_iter(x, 0) == x. Returns a value <= 0 once
/// the iteration leaves the domain.
double log_iter(double x, unsigned k);

/// ceil(log* n), base 2.
unsigned log_star(std::uint64_t n);

/// Partition of the nodes by subtree size. Level k (1 <= k <= kappa) holds the
/// nodes whose subtree has more than threshold(k) = (1/tau) log^[k] n nodes
/// but not more than threshold(k - 1); everything else is the smallest tier,
/// level kappa + 1. Levels never increase towards the root, so every level
/// component is connected and every smallest-tier component is a complete
/// subtree of T.
struct Stratification {
  unsigned requested_kappa = 0;
  unsigned kappa = 0;                    // effective number of levels above the smallest tier
  std::vector<double> thresholds;        // thresholds[k - 1] = threshold(k)
  double smallest_size_bound = 0;        // threshold(kappa), or n when kappa == 0
  std::vector<std::uint8_t> level_of;    // [node] in 1..kappa + 1
  std::vector<NodeId> subtree_root_of;   // [node] top node of its level component
  std::vector<std::uint8_t> branching;   // [node] >= 2 children in the same level (levels 1..kappa only)
  std::vector<NodeId> nearest_branching; // [node] nearest branching ancestor-or-self in the same component

  unsigned smallest_level() const { return kappa + 1; }
  double threshold(unsigned k) const { return thresholds[k - 1]; }
  bool in_smallest_tier(NodeId u) const { return level_of[u] == smallest_level(); }
};

/// Default kappa: log* n - 1 branching levels, so the smallest tier is level
/// log* n. This is the largest k with log^[k] n > 1.
unsigned default_kappa(std::uint64_t n);

/// Stratifies with `kappa` requested levels, clamped to the largest k with
/// log^[k] n > 0 and threshold(k) > 1.
Stratification stratify(const NavIndex& nav, const Threshold& tau, unsigned kappa);

}  // namespace pathmaj
