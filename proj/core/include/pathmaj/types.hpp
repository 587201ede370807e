#pragma once

#include <cstdint>

namespace pathmaj {

// Nodes are numbered 1..n; 0 is the null node.
using NodeId = std::uint32_t;

// Dense label in [1..sigma] after remapping.
using Label = std::uint32_t;

inline constexpr NodeId kNoNode = 0;

}  // namespace pathmaj
