#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pathmaj/types.hpp"

namespace pathmaj {

/// Per-query instrumentation.
struct QueryStats {
  std::size_t candidates_inspected = 0;  // candidate labels gathered, before deduplication
  std::size_t verifications = 0;         // exact path counts performed
  unsigned subpaths_used = 0;            // non-empty subpaths of the basic decomposition
  std::size_t segments = 0;              // upward steps taken by the stratified walk
};

struct MajorityResult {
  std::vector<Label> labels;  // ascending
  QueryStats stats;
};

struct MinorityResult {
  std::optional<Label> label;
  QueryStats stats;
};

}  // namespace pathmaj
