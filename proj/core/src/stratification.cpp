#include "pathmaj/stratification.hpp"

#include <cmath>

namespace pathmaj {

double log_iter(double x, unsigned k) {
  for (unsigned i = 0; i < k; ++i) {
    if (x <= 0) return x;
    x = std::log2(x);
  }
  return x;
}

unsigned log_star(std::uint64_t n) {
  unsigned k = 0;
  double x = static_cast<double>(n);
  while (x > 1) {
    x = std::log2(x);
    ++k;
  }
  return k;
}

unsigned default_kappa(std::uint64_t n) {
  const unsigned k = log_star(n);
  return k == 0 ? 0 : k - 1;
}

Stratification stratify(const NavIndex& nav, const Threshold& tau, unsigned kappa) {
  const std::size_t n = nav.size();
  const double inv = static_cast<double>(tau.den()) / static_cast<double>(tau.num());
  Stratification s;
  s.requested_kappa = kappa;
  for (unsigned k = 1; k <= kappa; ++k) {
    const double lg = log_iter(static_cast<double>(n), k);
    if (!(lg > 0) || !(inv * lg > 1)) break;
    s.thresholds.push_back(inv * lg);
  }
  s.kappa = static_cast<unsigned>(s.thresholds.size());
  s.smallest_size_bound = s.kappa == 0 ? static_cast<double>(n) : s.thresholds.back();

  s.level_of.assign(n + 1, 0);
  s.subtree_root_of.assign(n + 1, kNoNode);
  s.branching.assign(n + 1, 0);
  s.nearest_branching.assign(n + 1, kNoNode);

  for (NodeId u = 1; u <= n; ++u) {
    const double size = nav.subtree_size(u);
    unsigned level = s.kappa + 1;
    for (unsigned k = 1; k <= s.kappa; ++k) {
      if (size > s.thresholds[k - 1]) {
        level = k;
        break;
      }
    }
    s.level_of[u] = static_cast<std::uint8_t>(level);
  }

  std::vector<std::uint32_t> same_level_children(n + 1, 0);
  for (NodeId u = 1; u <= n; ++u) {
    const NodeId p = nav.parent(u);
    if (p != kNoNode && s.level_of[p] == s.level_of[u]) ++same_level_children[p];
  }
  for (std::uint32_t r = 1; r <= n; ++r) {
    const NodeId u = nav.node_at_preorder(r);
    const NodeId p = nav.parent(u);
    const bool top = p == kNoNode || s.level_of[p] != s.level_of[u];
    s.subtree_root_of[u] = top ? u : s.subtree_root_of[p];
    s.branching[u] = s.level_of[u] <= s.kappa && same_level_children[u] >= 2;
    if (s.branching[u]) {
      s.nearest_branching[u] = u;
    } else if (!top) {
      s.nearest_branching[u] = s.nearest_branching[p];
    }
  }
  return s;
}

}  // namespace pathmaj
