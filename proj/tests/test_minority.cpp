#include <doctest.h>

#include <set>

#include "pathmaj/minority.hpp"
#include "support.hpp"

using namespace pathmaj;
using namespace pathmaj::test;

TEST_SUITE("minority") {
  TEST_CASE("F1 path minimum") {
    const auto ctx = f1();
    const PathMinIndex pm(*ctx);
    CHECK(pm.path_min(5, 3) == 4);
    for (NodeId u = 1; u <= 11; ++u) CHECK(pm.path_min(u, u) == u);
  }

  TEST_CASE("path minimum equals the walked argmin") {
    for (const auto& spec : small_corpus(300, 2, 111)) {
      const auto ctx = IndexedTree::make(generate(spec));
      const auto& t = ctx->tree();
      const PathMinIndex pm(*ctx);
      const auto n = static_cast<NodeId>(t.size());
      for (NodeId u = 1; u <= n; u += 1 + n / 40) {
        for (NodeId v = 1; v <= n; ++v) {
          NodeId best = kNoNode;
          for (NodeId x : oracle_path_nodes(t, u, v)) {
            const auto wx = ctx->labels().prevlabel(x);
            if (best == kNoNode || wx < ctx->labels().prevlabel(best) ||
                (wx == ctx->labels().prevlabel(best) && ctx->nav().preorder(x) < ctx->nav().preorder(best))) {
              best = x;
            }
          }
          REQUIRE(pm.path_min(u, v) == best);
        }
      }
    }
  }

  TEST_CASE("F1 distinct labels") {
    const MinorityIndex idx(f1(), Threshold(1, 2));
    const auto got = idx.distinct_on_path(5, 3, 3);
    CHECK(std::set<Label>(got.begin(), got.end()) == std::set<Label>{1, 3});
    CHECK(got.size() == 2);
    CHECK(idx.distinct_on_path(7, 7, 4) == std::vector<Label>{2});
  }

  TEST_CASE("distinct labels are distinct, present, and as many as allowed") {
    SplitMix64 rng(12);
    for (const auto& spec : small_corpus(300, 3, 121)) {
      const auto ctx = IndexedTree::make(generate(spec));
      const auto& t = ctx->tree();
      const MinorityIndex idx(ctx, Threshold(1, 2));
      for (int q = 0; q < 150; ++q) {
        const auto u = static_cast<NodeId>(1 + rng.bounded(t.size()));
        const auto up = naive_up(t, u, t.root());
        const NodeId z = up[rng.bounded(up.size())];
        const std::size_t limit = 1 + rng.bounded(8);
        const auto path = labels_of(t, naive_up(t, u, z));
        const std::set<Label> all(path.begin(), path.end());
        const auto got = idx.distinct_on_path(u, z, limit);
        const std::set<Label> uniq(got.begin(), got.end());
        REQUIRE(uniq.size() == got.size());
        REQUIRE(got.size() == std::min(limit, all.size()));
        for (Label l : got) REQUIRE(all.count(l) == 1);
      }
    }
  }

  TEST_CASE("F1 minority queries") {
    const auto ctx = f1();
    const auto r = MinorityIndex(ctx, Threshold(1, 5)).query(5, 7);
    REQUIRE(r.label.has_value());
    CHECK(*r.label == 3);
    CHECK(oracle_minority(ctx->tree(), 5, 7, Threshold(1, 5)) == std::optional<Label>{3});
  }

  TEST_CASE("a path of one repeated label has no minority") {
    const auto ctx = make_tree(Shape::kChain, 6, 1, 3);
    const MinorityIndex idx(ctx, Threshold(1, 2));
    CHECK_FALSE(idx.query(1, 6).label.has_value());
    CHECK_FALSE(idx.query(2, 4).label.has_value());
  }

  TEST_CASE("valid answers, existence agreement, bounded verifications") {
    SplitMix64 rng(13);
    for (const Threshold tau : {Threshold(9, 10), Threshold(1, 2), Threshold(3, 10), Threshold(1, 10), Threshold(1, 20)}) {
      for (const auto& spec : small_corpus(1000, 2, 131)) {
        const auto ctx = IndexedTree::make(generate(spec));
        const auto& t = ctx->tree();
        const MinorityIndex idx(ctx, tau);
        for (int q = 0; q < 100; ++q) {
          const auto u = static_cast<NodeId>(1 + rng.bounded(t.size()));
          const auto v = static_cast<NodeId>(1 + rng.bounded(t.size()));
          const auto r = idx.query(u, v);
          const auto path = oracle_path_nodes(t, u, v);
          REQUIRE(r.label.has_value() == oracle_minority(t, u, v, tau).has_value());
          if (r.label) REQUIRE(tau.admits_minority(naive_count(t, path, *r.label), path.size()));
          REQUIRE(r.stats.verifications <= 2 * idx.probe_count());
        }
      }
    }
  }
}
