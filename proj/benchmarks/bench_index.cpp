#include <map>
#include <memory>
#include <string>
#include <tuple>

#include <benchmark/benchmark.h>

#include "pathmaj/majority_basic.hpp"
#include "pathmaj/majority_stratified.hpp"
#include "pathmaj/minority.hpp"
#include "pathmaj/oracle.hpp"

using namespace pathmaj;

namespace {

// Trees are shared across benchmarks with the same shape and size.
std::shared_ptr<const IndexedTree> tree_for(Shape shape, std::uint64_t n) {
  static std::map<std::pair<Shape, std::uint64_t>, std::shared_ptr<const IndexedTree>> cache;
  auto& slot = cache[{shape, n}];
  if (!slot) slot = IndexedTree::make(generate({shape, n, 64, 7}));
  return slot;
}

const Threshold kTau(1, 10);

std::vector<std::pair<NodeId, NodeId>> queries_for(std::uint64_t n) {
  SplitMix64 rng(n);
  return generate_queries(n, 4096, rng);
}

void BM_BuildTree(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto tree = generate({Shape::kRandomAttachment, n, 64, 7});
  for (auto _ : state) benchmark::DoNotOptimize(IndexedTree::make(tree));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_BuildBasic(benchmark::State& state) {
  const auto ctx = tree_for(Shape::kRandomAttachment, static_cast<std::uint64_t>(state.range(0)));
  const auto construction = state.range(1) == 0 ? CandidateConstruction::kHeavyPath : CandidateConstruction::kQuadratic;
  for (auto _ : state) benchmark::DoNotOptimize(BasicMajorityIndex(ctx, kTau, construction));
  state.SetLabel(state.range(1) == 0 ? "heavy-path" : "quadratic");
}

void BM_BuildStratified(benchmark::State& state) {
  const auto ctx = tree_for(Shape::kRandomAttachment, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(StratifiedMajorityIndex(ctx, kTau));
}

template <class Index>
void run_queries(benchmark::State& state, const Index& index, std::uint64_t n) {
  const auto qs = queries_for(n);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [u, v] = qs[i++ % qs.size()];
    benchmark::DoNotOptimize(index.query(u, v));
  }
}

void BM_QueryBasic(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const BasicMajorityIndex index(tree_for(kAllShapes[state.range(1)], n), kTau);
  state.SetLabel(std::string(shape_name(kAllShapes[state.range(1)])));
  run_queries(state, index, n);
}

void BM_QueryStratified(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const StratifiedMajorityIndex index(tree_for(kAllShapes[state.range(1)], n), kTau);
  state.SetLabel(std::string(shape_name(kAllShapes[state.range(1)])));
  run_queries(state, index, n);
}

void BM_QueryMinority(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const MinorityIndex index(tree_for(Shape::kRandomAttachment, n), kTau);
  run_queries(state, index, n);
}

void BM_QueryOracle(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto ctx = tree_for(Shape::kRandomAttachment, n);
  const auto qs = queries_for(n);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [u, v] = qs[i++ % qs.size()];
    benchmark::DoNotOptimize(oracle_majorities(ctx->tree(), u, v, kTau));
  }
}

}  // namespace

BENCHMARK(BM_BuildTree)->Arg(1 << 14)->Arg(1 << 17)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildBasic)->ArgsProduct({{1 << 12}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildBasic)->ArgsProduct({{1 << 17}, {0}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildStratified)->Arg(1 << 14)->Arg(1 << 17)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QueryBasic)->ArgsProduct({{1 << 17}, {0, 1, 2, 3, 4}});
BENCHMARK(BM_QueryStratified)->ArgsProduct({{1 << 17}, {0, 1, 2, 3, 4}});
BENCHMARK(BM_QueryMinority)->Arg(1 << 17);
BENCHMARK(BM_QueryOracle)->Arg(1 << 17);
BENCHMARK_MAIN();
