#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string_view>

#include "pathmaj/majority_basic.hpp"
#include "pathmaj/majority_stratified.hpp"

namespace pathmaj {

enum class IndexKind : std::uint8_t { kBasic = 0, kStratified = 1, kStratifiedSuper = 2 };

std::string_view index_kind_name(IndexKind kind);
/// "basic", "stratified" or "stratified-super"; throws std::invalid_argument otherwise.
IndexKind parse_index_kind(std::string_view name);

class IndexFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint32_t kIndexFormatVersion = 1;

// Layout, all integers little-endian:
//   "PMAJIDX\0" | u32 version | u8 kind | u64 tau_num | u64 tau_den | u32 kappa | u64 n | u64 sigma
//   n x (u32 parent, i64 original label)
//   one candidate table (basic) or two (stratified: branching, smallest tier), each
//     u8 encoding | u64 owners | per owner: u32 node, u32 sets | per set: u32 size, size x u32
// Navigation and label tables are rebuilt on load.
void save_index(std::ostream& out, const BasicMajorityIndex& index);
void save_index(std::ostream& out, const StratifiedMajorityIndex& index);

struct LoadedIndex {
  IndexKind kind = IndexKind::kBasic;
  std::shared_ptr<const IndexedTree> ctx;
  std::unique_ptr<BasicMajorityIndex> basic;
  std::unique_ptr<StratifiedMajorityIndex> stratified;

  const Threshold& tau() const;
  MajorityResult query(NodeId u, NodeId v) const;
};

/// Throws IndexFormatError on a bad magic, unknown version or kind,
/// truncated data, or tables that do not fit the tree.
LoadedIndex load_index(std::istream& in);

}  // namespace pathmaj
