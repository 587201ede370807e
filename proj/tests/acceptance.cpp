// Acceptance suite: one PASS/FAIL line per criterion. Exits 1 if any
// criterion not listed in --allow-fail fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <algorithm>

#include <CLI11.hpp>

#include "pathmaj/majority_basic.hpp"
#include "pathmaj/majority_stratified.hpp"
#include "pathmaj/minority.hpp"
#include "pathmaj/multi_label.hpp"
#include "pathmaj/oracle.hpp"

using namespace pathmaj;

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<Threshold>& suite_taus() {
  static const std::vector<Threshold> taus = {Threshold::parse_decimal("0.9"), Threshold::parse_decimal("0.5"),
                                              Threshold::parse_decimal("0.3"), Threshold::parse_decimal("0.1"),
                                              Threshold::parse_decimal("0.05")};
  return taus;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// 200 trees cycling through shape x n x sigma.
std::vector<GeneratorSpec> suite_corpus() {
  const std::uint64_t sizes[] = {10, 100, 1000, 2000};
  std::vector<GeneratorSpec> out;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::uint64_t combo = i % 80;
    const Shape shape = kAllShapes[combo / 16];
    const std::uint64_t n = sizes[(combo / 4) % 4];
    const std::uint64_t sigmas[] = {2, 8, 64, n};
    out.push_back({shape, n, sigmas[combo % 4], 1000 + i});
  }
  return out;
}

std::string describe(const GeneratorSpec& s, const Threshold& tau) {
  return std::string(shape_name(s.shape)) + " n=" + std::to_string(s.n) + " sigma=" + std::to_string(s.sigma) +
         " seed=" + std::to_string(s.seed) + " tau=" + tau.to_string();
}

// Criteria 1, 3, 4 and 7 share the suite-1 corpus; run it once.
struct SuiteResults {
  std::size_t queries = 0;
  std::size_t trees = 0;
  std::size_t exact_mismatch = 0;
  std::size_t basic_bound_violations = 0;
  std::size_t strat_bound_violations = 0;
  std::size_t marking_violations = 0;
  std::size_t minority_violations = 0;
  std::size_t max_basic = 0;
  std::size_t max_strat = 0;
  std::size_t max_minority_verifications = 0;
  std::string first_problem;
  double seconds = 0;
};

void note(SuiteResults& r, const std::string& what) {
  if (r.first_problem.empty()) r.first_problem = what;
}

SuiteResults run_suite() {
  SuiteResults r;
  const auto start = Clock::now();
  for (const auto& spec : suite_corpus()) {
    const auto ctx = IndexedTree::make(generate(spec));
    const auto& tree = ctx->tree();
    ++r.trees;
    for (std::size_t ti = 0; ti < suite_taus().size(); ++ti) {
      const Threshold& tau = suite_taus()[ti];
      const BasicMajorityIndex basic(ctx, tau);
      const StratifiedMajorityIndex linear(ctx, tau, std::nullopt, StratifiedMode::kLinear);
      const StratifiedMajorityIndex super(ctx, tau, std::nullopt, StratifiedMode::kSuperlinear);
      const MinorityIndex minority(ctx, tau);

      // Criterion 4: marking bounds on this tree.
      const auto& marks = basic.marked();
      if (tau.exceeded_by(marks.size(), tree.size())) {
        ++r.marking_violations;
        note(r, "too many marked nodes: " + describe(spec, tau));
      }
      for (NodeId u = 1; u <= tree.size(); ++u) {
        std::uint64_t dist = 0;
        NodeId w = u;
        while (w != kNoNode && !marks.is_marked[w]) {
          w = tree.parent(w);
          ++dist;
        }
        if (w != kNoNode && dist > 2 * marks.step - 1) {
          ++r.marking_violations;
          note(r, "marked ancestor too far from node " + std::to_string(u) + ": " + describe(spec, tau));
        }
      }

      const std::uint64_t basic_bound = 2 * (2 * tau.ceil_inverse() - 1) + 2 * tau.floor_scaled_inverse(2) + 2;
      const double strat_bound = linear.candidate_bound();
      SplitMix64 rng(spec.seed * 31 + ti);
      for (const auto& [u, v] : generate_queries(tree.size(), 100, rng)) {
        ++r.queries;
        const auto expected = oracle_majorities(tree, u, v, tau);
        const auto rb = basic.query(u, v);
        const auto rl = linear.query(u, v);
        const auto rs = super.query(u, v);
        if (rb.labels != expected || rl.labels != expected || rs.labels != expected) {
          ++r.exact_mismatch;
          note(r, "majority mismatch at (" + std::to_string(u) + "," + std::to_string(v) + "): " + describe(spec, tau));
        }
        r.max_basic = std::max(r.max_basic, rb.stats.candidates_inspected);
        r.max_strat = std::max({r.max_strat, rl.stats.candidates_inspected, rs.stats.candidates_inspected});
        if (rb.stats.candidates_inspected > basic_bound) {
          ++r.basic_bound_violations;
          note(r, "basic candidate bound exceeded: " + describe(spec, tau));
        }
        for (const auto* res : {&rl, &rs}) {
          if (static_cast<double>(res->stats.candidates_inspected) > strat_bound) {
            ++r.strat_bound_violations;
            note(r, "stratified candidate bound exceeded: " + describe(spec, tau));
          }
        }

        const auto mr = minority.query(u, v);
        const auto want = oracle_minority(tree, u, v, tau);
        bool ok = mr.label.has_value() == want.has_value();
        if (ok && mr.label) {
          const auto tally = oracle_tally(tree, u, v);
          const auto it = tally.find(*mr.label);
          ok = it != tally.end() && tau.admits_minority(it->second, oracle_path_nodes(tree, u, v).size());
        }
        ok = ok && mr.stats.verifications <= 2 * (1 + tau.floor_scaled_inverse(1));
        r.max_minority_verifications = std::max(r.max_minority_verifications, mr.stats.verifications);
        if (!ok) {
          ++r.minority_violations;
          note(r, "minority check failed at (" + std::to_string(u) + "," + std::to_string(v) + "): " + describe(spec, tau));
        }
      }
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

Outcome criterion2() {
  std::size_t checks = 0, violations = 0;
  std::string first;
  std::uint64_t seed = 1;
  for (Shape shape : kAllShapes) {
    for (std::uint64_t n : {10, 50, 120, 200}) {
      for (std::uint64_t sigma : {2, 8}) {
        const auto ctx = IndexedTree::make(generate({shape, n, sigma, seed++}));
        const auto& tree = ctx->tree();
        for (const Threshold& tau : suite_taus()) {
          const BasicMajorityIndex idx(ctx, tau);
          for (NodeId x : idx.marked().marked) {
            std::uint32_t d = 0;
            for (NodeId z = tree.parent(x); z != kNoNode; z = tree.parent(z)) {
              ++d;
              ++checks;
              const auto maj = oracle_majorities(tree, x, z, tau);
              const auto set = idx.candidates().labels(x, ceil_log2(d), *ctx);
              for (Label l : maj) {
                if (!std::binary_search(set.begin(), set.end(), l)) {
                  ++violations;
                  if (first.empty()) first = "x=" + std::to_string(x) + " z=" + std::to_string(z);
                }
              }
            }
          }
        }
      }
    }
  }
  return {violations == 0, std::to_string(checks) + " (x, z) pairs, " + std::to_string(violations) + " violations" +
                               (first.empty() ? "" : ", first " + first)};
}

Outcome criterion5() {
  std::size_t tables = 0, differ = 0;
  SplitMix64 rng(55);
  for (const Threshold& tau : suite_taus()) {
    for (int i = 0; i < 20; ++i) {
      const GeneratorSpec spec{kAllShapes[rng.bounded(5)], 1 + rng.bounded(500), 1 + rng.bounded(16), rng.next()};
      const auto ctx = IndexedTree::make(generate(spec));
      const auto owners = select_marked_basic(ctx->nav(), tau).owners();
      for (auto enc : {CandidateEncoding::kLabel, CandidateEncoding::kAncestorDepth}) {
        ++tables;
        differ += build_candidates_quadratic(*ctx, owners, tau, enc) != build_candidates_heavy(*ctx, owners, tau, enc);
      }
    }
  }
  return {differ == 0, std::to_string(tables) + " table pairs compared, " + std::to_string(differ) + " differ"};
}

Outcome criterion6() {
  std::size_t checks = 0, violations = 0;
  std::uint64_t seed = 600;
  for (Shape shape : kAllShapes) {
    for (std::uint64_t n : {1, 10, 60, 200}) {
      for (std::uint64_t sigma : {std::uint64_t{2}, std::uint64_t{8}, n}) {
        const auto ctx = IndexedTree::make(generate({shape, n, sigma, seed++}));
        const auto& tree = ctx->tree();
        for (NodeId u = 1; u <= tree.size(); ++u) {
          const auto path = ctx->nav().describe_path(u, tree.root());
          const auto tally = oracle_tally(tree, u, tree.root());
          for (Label l = 1; l <= tree.sigma(); ++l) {
            ++checks;
            const auto it = tally.find(l);
            const std::uint64_t expected = it == tally.end() ? 0 : it->second;
            if (ctx->labels().count_on_path(l, path) != expected ||
                ctx->labels().count_on_root_path_rank_based(l, u) != expected) {
              ++violations;
            }
          }
        }
      }
    }
  }
  return {violations == 0, std::to_string(checks) + " (u, label) pairs, " + std::to_string(violations) + " disagreements"};
}

Outcome criterion8() {
  std::size_t queries = 0, mismatches = 0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    const auto input = generate_multi_input(40 + 8 * t, 1 + t % 5, 2 + t % 7, 500, 800 + t);
    const auto expanded = chain_expand(input);
    const auto ctx = IndexedTree::make(LabeledTree(expanded.tree));
    const std::uint64_t n = input.parents.size();
    for (const Threshold& tau : suite_taus()) {
      const BasicMajorityIndex basic(ctx, tau);
      const StratifiedMajorityIndex strat(ctx, tau);
      SplitMix64 rng(t * 7 + 1);
      for (const auto& [u, v] : generate_queries(n, 100, rng)) {
        ++queries;
        const auto expected = oracle_multi_majorities(input, u, v, tau);
        const auto path = map_query(expanded, ctx->nav(), u, v);
        for (const auto& labels : {basic.query(path).labels, strat.query(path).labels}) {
          std::vector<std::int64_t> got;
          for (Label l : labels) got.push_back(ctx->tree().original_label(l));
          mismatches += got != expected;
        }
      }
    }
  }
  return {mismatches == 0, "50 trees, " + std::to_string(queries) + " queries, " + std::to_string(mismatches) + " mismatches"};
}

struct ScalePoint {
  double path_mean = 0;
  double basic_mean = 0;
  double strat_mean = 0;
  double strat_entries_per_node = 0;
  double basic_build_s = 0;
  double strat_build_s = 0;
};

ScalePoint measure(std::uint64_t n, const Threshold& tau, std::size_t queries) {
  const auto ctx = IndexedTree::make(generate({Shape::kRandomAttachment, n, 64, 4242 + n}));
  SplitMix64 rng(n);
  const auto qs = generate_queries(n, queries, rng);
  ScalePoint p;
  for (const auto& [u, v] : qs) p.path_mean += static_cast<double>(ctx->nav().describe_path(u, v).length);
  p.path_mean /= static_cast<double>(qs.size());
  {
    const auto t0 = Clock::now();
    const BasicMajorityIndex basic(ctx, tau);
    p.basic_build_s = std::chrono::duration<double>(Clock::now() - t0).count();
    double sum = 0;
    for (const auto& [u, v] : qs) sum += static_cast<double>(basic.query(u, v).stats.candidates_inspected);
    p.basic_mean = sum / static_cast<double>(qs.size());
  }
  {
    const auto t0 = Clock::now();
    const StratifiedMajorityIndex strat(ctx, tau, std::nullopt, StratifiedMode::kLinear);
    p.strat_build_s = std::chrono::duration<double>(Clock::now() - t0).count();
    double sum = 0;
    for (const auto& [u, v] : qs) sum += static_cast<double>(strat.query(u, v).stats.candidates_inspected);
    p.strat_mean = sum / static_cast<double>(qs.size());
    p.strat_entries_per_node = static_cast<double>(strat.stored_candidate_entries()) / static_cast<double>(n);
  }
  return p;
}

Outcome criterion9() {
  const Threshold tau = Threshold::parse_decimal("0.1");
  const auto small = measure(10'000, tau, 20'000);
  const auto mid = measure(100'000, tau, 20'000);
  const auto large = measure(1'000'000, tau, 20'000);
  auto spread = [](double a, double b) { return std::max(a, b) / std::min(a, b); };
  const double basic_ratio = spread(small.basic_mean, large.basic_mean);
  const double strat_ratio = spread(small.strat_mean, large.strat_mean);
  const double entry_ratio = large.strat_entries_per_node / mid.strat_entries_per_node;
  const double build = std::max(large.basic_build_s, large.strat_build_s);
  const bool pass = basic_ratio <= 1.5 && strat_ratio <= 1.5 && entry_ratio >= 0.2 && entry_ratio <= 2.0 && build < 120;
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "mean path length %.2f -> %.2f; mean candidates basic %.2f -> %.2f (x%.3f), "
                "stratified %.2f -> %.2f (x%.3f); entries/n %.2f -> %.2f (x%.3f); "
                "build at 1e6 basic %.1fs, stratified %.1fs",
                small.path_mean, large.path_mean, small.basic_mean, large.basic_mean, basic_ratio, small.strat_mean, large.strat_mean, strat_ratio,
                mid.strat_entries_per_node, large.strat_entries_per_node, entry_ratio, large.basic_build_s,
                large.strat_build_s);
  return {pass, buf};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pathmaj acceptance suite"};
  std::vector<int> only;
  std::vector<int> allowed;
  app.add_option("criteria", only, "Run only these criteria (1-9)")->check(CLI::Range(1, 9));
  app.add_option("--allow-fail", allowed, "Criteria whose failure does not affect the exit status")
      ->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);
  auto wanted = [&](int c) { return only.empty() || std::find(only.begin(), only.end(), c) != only.end(); };

  int failed = 0;
  auto report = [&](int id, const char* name, const Outcome& o) {
    const bool tolerated = std::find(allowed.begin(), allowed.end(), id) != allowed.end();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << o.detail
              << (!o.pass && tolerated ? " [failure tolerated by --allow-fail]" : "") << std::endl;
    failed += !o.pass && !tolerated;
  };

  if (wanted(1) || wanted(3) || wanted(4) || wanted(7)) {
    const auto r = run_suite();
    const std::string base = std::to_string(r.trees) + " trees, " + std::to_string(r.queries) + " queries";
    const std::string problem = r.first_problem.empty() ? "" : "; first problem: " + r.first_problem;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.1fs", r.seconds);
    if (wanted(1)) {
      report(1, "exactness", {r.exact_mismatch == 0, base + ", " + std::to_string(r.exact_mismatch) +
                                                         " mismatches, " + secs + problem});
    }
    if (wanted(3)) {
      report(3, "candidate bounds",
             {r.basic_bound_violations == 0 && r.strat_bound_violations == 0,
              "violations basic " + std::to_string(r.basic_bound_violations) + ", stratified " +
                  std::to_string(r.strat_bound_violations) + "; max inspected basic " + std::to_string(r.max_basic) +
                  ", stratified " + std::to_string(r.max_strat) + " (c = 1)"});
    }
    if (wanted(4)) {
      report(4, "marking bounds", {r.marking_violations == 0, std::to_string(r.marking_violations) + " violations"});
    }
    if (wanted(7)) {
      report(7, "minority", {r.minority_violations == 0, base + ", " + std::to_string(r.minority_violations) +
                                                             " violations, max verifications " +
                                                             std::to_string(r.max_minority_verifications)});
    }
  }
  if (wanted(2)) report(2, "candidate coverage", criterion2());
  if (wanted(5)) report(5, "construction equivalence", criterion5());
  if (wanted(6)) report(6, "counting identities", criterion6());
  if (wanted(8)) report(8, "multi-label transform", criterion8());
  if (wanted(9)) report(9, "scaling", criterion9());
  return failed == 0 ? 0 : 1;
}
