#include "pathmaj/tree_file.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string_view>

namespace pathmaj {

ParseError::ParseError(std::size_t line, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}

namespace {

/// Splits lines into integer tokens and tracks the line number.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line's tokens; false at end of input.
  bool next(std::vector<std::string_view>& tokens) {
    while (std::getline(in_, text_)) {
      ++line_;
      if (!text_.empty() && text_.back() == '\r') text_.pop_back();
      tokens.clear();
      std::size_t i = 0;
      while (i < text_.size()) {
        while (i < text_.size() && (text_[i] == ' ' || text_[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < text_.size() && text_[i] != ' ' && text_[i] != '\t') ++i;
        if (i > start) tokens.emplace_back(text_.data() + start, i - start);
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  template <class Int>
  Int integer(std::string_view tok, const char* what) const {
    Int value{};
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail(std::string("invalid ") + what + " '" + std::string(tok) + "'");
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& reason) const { throw ParseError(line_, reason); }
  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::string text_;
  std::size_t line_ = 0;
};

std::size_t read_count(LineReader& r, std::vector<std::string_view>& tok) {
  if (!r.next(tok)) throw ParseError(r.line() + 1, "missing node count");
  if (tok.size() != 1) r.fail("expected the node count alone on the first line");
  const auto n = r.integer<std::uint64_t>(tok[0], "node count");
  if (n == 0) r.fail("node count must be positive");
  if (n >= std::numeric_limits<NodeId>::max()) r.fail("node count too large");
  return static_cast<std::size_t>(n);
}

void expect_end(LineReader& r, std::vector<std::string_view>& tok, std::size_t n) {
  if (r.next(tok)) r.fail("unexpected line after " + std::to_string(n) + " nodes");
}

template <class Source>
auto open_and_read(const std::filesystem::path& path, Source read) {
  if (path == "-") return read(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return read(in);
}

}  // namespace

TreeInput read_tree(std::istream& in) {
  LineReader r(in);
  std::vector<std::string_view> tok;
  const std::size_t n = read_count(r, tok);
  TreeInput t;
  t.parents.reserve(n);
  t.labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!r.next(tok)) throw ParseError(r.line() + 1, "expected " + std::to_string(n) + " node lines, got " + std::to_string(i));
    if (tok.size() != 2) r.fail("expected 'parent label'");
    t.parents.push_back(r.integer<NodeId>(tok[0], "parent"));
    t.labels.push_back(r.integer<std::int64_t>(tok[1], "label"));
  }
  expect_end(r, tok, n);
  return t;
}

void write_tree(std::ostream& out, const TreeInput& tree) {
  out << tree.parents.size() << '\n';
  for (std::size_t i = 0; i < tree.parents.size(); ++i) out << tree.parents[i] << ' ' << tree.labels[i] << '\n';
}

MultiTreeInput read_multi_tree(std::istream& in) {
  LineReader r(in);
  std::vector<std::string_view> tok;
  const std::size_t n = read_count(r, tok);
  MultiTreeInput t;
  t.parents.reserve(n);
  t.labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!r.next(tok)) throw ParseError(r.line() + 1, "expected " + std::to_string(n) + " node lines, got " + std::to_string(i));
    if (tok.size() < 2) r.fail("expected 'parent k l_1 ... l_k'");
    t.parents.push_back(r.integer<NodeId>(tok[0], "parent"));
    const auto k = r.integer<std::uint64_t>(tok[1], "label count");
    if (k == 0) r.fail("label count must be positive");
    if (tok.size() != k + 2) r.fail("expected " + std::to_string(k) + " labels, got " + std::to_string(tok.size() - 2));
    std::vector<std::int64_t> labels;
    for (std::size_t j = 2; j < tok.size(); ++j) labels.push_back(r.integer<std::int64_t>(tok[j], "label"));
    t.labels.push_back(std::move(labels));
  }
  expect_end(r, tok, n);
  return t;
}

void write_multi_tree(std::ostream& out, const MultiTreeInput& tree) {
  out << tree.parents.size() << '\n';
  for (std::size_t i = 0; i < tree.parents.size(); ++i) {
    out << tree.parents[i] << ' ' << tree.labels[i].size();
    for (std::int64_t l : tree.labels[i]) out << ' ' << l;
    out << '\n';
  }
}

std::vector<std::pair<NodeId, NodeId>> read_queries(std::istream& in) {
  LineReader r(in);
  std::vector<std::string_view> tok;
  std::vector<std::pair<NodeId, NodeId>> q;
  while (r.next(tok)) {
    if (tok.size() != 2) r.fail("expected 'u v'");
    q.emplace_back(r.integer<NodeId>(tok[0], "node"), r.integer<NodeId>(tok[1], "node"));
  }
  return q;
}

TreeInput read_tree_file(const std::filesystem::path& path) {
  return open_and_read(path, [](std::istream& in) { return read_tree(in); });
}

MultiTreeInput read_multi_tree_file(const std::filesystem::path& path) {
  return open_and_read(path, [](std::istream& in) { return read_multi_tree(in); });
}

std::vector<std::pair<NodeId, NodeId>> read_queries_file(const std::filesystem::path& path) {
  return open_and_read(path, [](std::istream& in) { return read_queries(in); });
}

}  // namespace pathmaj
