#include <doctest.h>

#include <sstream>

#include "pathmaj/index_file.hpp"
#include "pathmaj/tree_file.hpp"
#include "support.hpp"

using namespace pathmaj;
using namespace pathmaj::test;

namespace {

std::size_t parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    (void)read_tree(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string serialize_basic(const std::shared_ptr<const IndexedTree>& ctx, const Threshold& tau) {
  std::ostringstream out;
  save_index(out, BasicMajorityIndex(ctx, tau));
  return out.str();
}

}  // namespace

TEST_SUITE("files") {
  TEST_CASE("tree text round trip") {
    const auto in = generate_input({Shape::kCaterpillar, 50, 9, 3});
    std::stringstream buf;
    write_tree(buf, in);
    const auto back = read_tree(buf);
    CHECK(back.parents == in.parents);
    CHECK(back.labels == in.labels);
  }

  TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_line("") == 1);
    CHECK(parse_error_line("x\n") == 1);
    CHECK(parse_error_line("2 3\n") == 1);
    CHECK(parse_error_line("2\n0 1\n") == 3);
    CHECK(parse_error_line("2\n0 1\n1 a\n") == 3);
    CHECK(parse_error_line("2\n0 1\n\n1 2 3\n") == 4);
    CHECK(parse_error_line("1\n0 1\n1 1\n") == 3);
    std::istringstream ok("\n2\n0 5\n\n1 6\n\n");
    CHECK(read_tree(ok).labels == std::vector<std::int64_t>{5, 6});
  }

  TEST_CASE("multi-label text round trip and errors") {
    const auto in = generate_multi_input(30, 3, 4, 60, 2);
    std::stringstream buf;
    write_multi_tree(buf, in);
    const auto back = read_multi_tree(buf);
    CHECK(back.parents == in.parents);
    CHECK(back.labels == in.labels);
    std::istringstream bad("2\n0 2 1 2\n1 3 4 5\n");
    CHECK_THROWS_AS(read_multi_tree(bad), ParseError);
    std::istringstream zero("1\n0 0\n");
    CHECK_THROWS_AS(read_multi_tree(zero), ParseError);
  }

  TEST_CASE("query files") {
    std::istringstream in("5 7\n\n1 1\n");
    const auto q = read_queries(in);
    CHECK(q == std::vector<std::pair<NodeId, NodeId>>{{5, 7}, {1, 1}});
    std::istringstream bad("5 7\n1\n");
    CHECK_THROWS_AS(read_queries(bad), ParseError);
  }

  TEST_CASE("index files round trip for every kind") {
    const auto ctx = make_tree(Shape::kRandomAttachment, 700, 5, 8);
    const Threshold tau(1, 5);
    const BasicMajorityIndex basic(ctx, tau);
    const StratifiedMajorityIndex lin(ctx, tau, 2u, StratifiedMode::kLinear);
    const StratifiedMajorityIndex sup(ctx, tau, 2u, StratifiedMode::kSuperlinear);
    std::stringstream b, l, s;
    save_index(b, basic);
    save_index(l, lin);
    save_index(s, sup);
    const auto lb = load_index(b);
    const auto ll = load_index(l);
    const auto ls = load_index(s);
    CHECK(lb.kind == IndexKind::kBasic);
    CHECK(ll.kind == IndexKind::kStratified);
    CHECK(ls.kind == IndexKind::kStratifiedSuper);
    CHECK(lb.basic->candidates() == basic.candidates());
    CHECK(ll.stratified->branching_table() == lin.branching_table());
    CHECK(ls.stratified->smallest_table() == sup.smallest_table());
    CHECK(ll.stratified->kappa() == lin.kappa());
    SplitMix64 rng(1);
    for (const auto& [u, v] : generate_queries(ctx->size(), 300, rng)) {
      REQUIRE(lb.query(u, v).labels == basic.query(u, v).labels);
      REQUIRE(ll.query(u, v).labels == lin.query(u, v).labels);
      REQUIRE(ls.query(u, v).labels == sup.query(u, v).labels);
    }
  }

  TEST_CASE("index bytes are deterministic") {
    const auto a = make_tree(Shape::kBroom, 300, 4, 5);
    const auto b = make_tree(Shape::kBroom, 300, 4, 5);
    CHECK(serialize_basic(a, Threshold(1, 4)) == serialize_basic(b, Threshold(1, 4)));
  }

  TEST_CASE("bad index files are rejected") {
    const auto bytes = serialize_basic(f1(), Threshold(1, 2));
    auto load = [](std::string data) {
      std::istringstream in(data);
      return load_index(in);
    };
    CHECK_NOTHROW(load(bytes));

    std::string version = bytes;
    version[8] = 2;
    CHECK_THROWS_WITH_AS(load(version), doctest::Contains("version 2"), IndexFormatError);

    std::string magic = bytes;
    magic[0] = 'X';
    CHECK_THROWS_AS(load(magic), IndexFormatError);

    CHECK_THROWS_AS(load(bytes.substr(0, bytes.size() - 3)), IndexFormatError);
    CHECK_THROWS_AS(load(bytes.substr(0, 20)), IndexFormatError);

    std::string kind = bytes;
    kind[12] = 9;
    CHECK_THROWS_AS(load(kind), IndexFormatError);

    // Swap in a table built for another threshold: owners no longer match the marks.
    const auto other = serialize_basic(f1(), Threshold(1, 3));
    std::string mixed = bytes.substr(0, 13) + other.substr(13, 16) + bytes.substr(29);
    CHECK_THROWS_AS(load(mixed), IndexFormatError);
  }
}
