#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pathmaj/labeled_tree.hpp"
#include "pathmaj/multi_label.hpp"

namespace pathmaj {

/// Malformed text input. what() reads "line N: reason".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// ".lt":  first line n, then n lines "parent label".
// ".mlt": first line n, then n lines "parent k l_1 ... l_k".
// Query files: one "u v" pair per line.
// Blank lines are ignored everywhere; node ids are 1-based and parent 0 marks the root.

TreeInput read_tree(std::istream& in);
void write_tree(std::ostream& out, const TreeInput& tree);
MultiTreeInput read_multi_tree(std::istream& in);
void write_multi_tree(std::ostream& out, const MultiTreeInput& tree);
std::vector<std::pair<NodeId, NodeId>> read_queries(std::istream& in);

/// File wrappers; "-" means standard input. Throw std::runtime_error when the file cannot be opened.
TreeInput read_tree_file(const std::filesystem::path& path);
MultiTreeInput read_multi_tree_file(const std::filesystem::path& path);
std::vector<std::pair<NodeId, NodeId>> read_queries_file(const std::filesystem::path& path);

}  // namespace pathmaj
