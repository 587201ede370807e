#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathmaj/index_file.hpp"
#include "pathmaj/majority_basic.hpp"
#include "pathmaj/majority_stratified.hpp"
#include "pathmaj/minority.hpp"
#include "pathmaj/multi_label.hpp"
#include "pathmaj/oracle.hpp"
#include "pathmaj/tree_file.hpp"

namespace pathmaj::cli {

namespace {

/// A failure that should end the command with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TauFlags {
  std::string decimal;
  std::string rational;

  void attach(CLI::App* cmd, bool list = false) {
    auto* d = cmd->add_option("--tau", decimal,
                              list ? "Thresholds as exact decimals, comma separated" : "Threshold as an exact decimal");
    auto* r = cmd->add_option("--tau-rational", rational,
                              list ? "Thresholds as p/q, comma separated" : "Threshold as p/q");
    d->excludes(r);
  }

  std::vector<Threshold> parse_list() const {
    if (decimal.empty() == rational.empty()) throw UsageError("exactly one of --tau and --tau-rational is required");
    std::vector<Threshold> out;
    std::stringstream ss(decimal.empty() ? rational : decimal);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        out.push_back(decimal.empty() ? Threshold::parse_rational(item) : Threshold::parse_decimal(item));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (out.empty()) throw UsageError("no threshold given");
    return out;
  }

  Threshold parse_one() const {
    auto all = parse_list();
    if (all.size() != 1) throw UsageError("a single threshold is expected");
    return all.front();
  }
};

std::shared_ptr<const IndexedTree> load_tree(const std::string& path) {
  try {
    return IndexedTree::make(build_tree(read_tree_file(path)));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const TreeError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::vector<std::pair<NodeId, NodeId>> load_queries(const std::string& path, std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> q;
  try {
    q = read_queries_file(path);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (NodeId x : {q[i].first, q[i].second}) {
      if (x == 0 || x > n) {
        throw UsageError(path + ": query " + std::to_string(i + 1) + ": node " + std::to_string(x) + " out of range");
      }
    }
  }
  return q;
}

std::string format_labels(const LabeledTree& tree, const std::vector<Label>& labels) {
  if (labels.empty()) return "-";
  std::string s;
  for (Label l : labels) {
    if (!s.empty()) s += ' ';
    s += std::to_string(tree.original_label(l));
  }
  return s;
}

std::string format_labels(const std::vector<std::int64_t>& labels) {
  if (labels.empty()) return "-";
  std::string s;
  for (auto l : labels) {
    if (!s.empty()) s += ' ';
    s += std::to_string(l);
  }
  return s;
}

/// Runs fn(i) for i in [0, count) on `threads` workers; fn writes its own slot.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

StratifiedMode mode_of(IndexKind kind) {
  return kind == IndexKind::kStratifiedSuper ? StratifiedMode::kSuperlinear : StratifiedMode::kLinear;
}

// ---- build ----

struct BuildArgs {
  std::string tree;
  std::string out;
  std::string index = "basic";
  std::string mode;
  std::optional<unsigned> kappa;
  TauFlags tau;
};

int cmd_build(const BuildArgs& a, std::ostream& out) {
  const Threshold tau = a.tau.parse_one();
  IndexKind kind;
  try {
    kind = parse_index_kind(a.index);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!a.mode.empty()) {
    if (kind == IndexKind::kBasic) throw UsageError("--mode applies to the stratified index only");
    kind = a.mode == "superlinear" ? IndexKind::kStratifiedSuper : IndexKind::kStratified;
  }
  const auto ctx = load_tree(a.tree);
  std::ofstream file;
  std::ostream* sink = &out;
  if (a.out != "-") {
    file.open(a.out, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + a.out + "'");
    sink = &file;
  }
  if (kind == IndexKind::kBasic) {
    save_index(*sink, BasicMajorityIndex(ctx, tau));
  } else {
    save_index(*sink, StratifiedMajorityIndex(ctx, tau, a.kappa, mode_of(kind)));
  }
  sink->flush();
  if (!*sink) throw std::runtime_error("failed writing the index");
  return kOk;
}

// ---- query ----

struct QueryArgs {
  std::string index;
  std::string queries = "-";
  std::string flavor = "majority";
  unsigned threads = 1;
};

int cmd_query(const QueryArgs& a, std::ostream& out) {
  std::ifstream in(a.index, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + a.index + "'");
  LoadedIndex idx;
  try {
    idx = load_index(in);
  } catch (const IndexFormatError& e) {
    throw UsageError(a.index + ": " + e.what());
  }
  const auto& tree = idx.ctx->tree();
  const auto queries = load_queries(a.queries, tree.size());
  std::vector<std::string> lines(queries.size());
  if (a.flavor == "majority") {
    parallel_for(queries.size(), a.threads, [&](std::size_t i) {
      lines[i] = format_labels(tree, idx.query(queries[i].first, queries[i].second).labels);
    });
  } else {
    const MinorityIndex minority(idx.ctx, idx.tau());
    parallel_for(queries.size(), a.threads, [&](std::size_t i) {
      const auto r = minority.query(queries[i].first, queries[i].second);
      lines[i] = r.label ? std::to_string(tree.original_label(*r.label)) : "-";
    });
  }
  for (const auto& l : lines) out << l << '\n';
  return kOk;
}

// ---- verify ----

struct VerifyArgs {
  std::string tree;
  std::string queries;
  std::optional<unsigned> kappa;
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  TauFlags tau;
};

bool is_multi_file(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".mlt") == 0;
}

int verify_multi(const VerifyArgs& a, const Threshold& tau, std::ostream& out, std::ostream& err) {
  MultiTreeInput input;
  ExpandedTree expanded;
  try {
    input = read_multi_tree_file(a.tree);
    expanded = chain_expand(input);
  } catch (const ParseError& e) {
    throw UsageError(a.tree + ": " + e.what());
  } catch (const TreeError& e) {
    throw UsageError(a.tree + ": " + e.what());
  }
  const auto ctx = IndexedTree::make(std::move(expanded.tree));
  const std::size_t n = input.parents.size();
  std::vector<std::pair<NodeId, NodeId>> queries;
  if (a.queries.empty()) {
    SplitMix64 rng(a.seed);
    queries = generate_queries(n, a.count, rng);
  } else {
    queries = load_queries(a.queries, n);
  }
  const BasicMajorityIndex basic(ctx, tau);
  const StratifiedMajorityIndex strat(ctx, tau, a.kappa);
  for (const auto& [u, v] : queries) {
    const auto expected = oracle_multi_majorities(input, u, v, tau);
    const auto path = map_query(expanded, ctx->nav(), u, v);
    for (const auto& [name, got] : {std::pair{"basic", basic.query(path).labels},
                                    std::pair{"stratified", strat.query(path).labels}}) {
      std::vector<std::int64_t> originals;
      for (Label l : got) originals.push_back(ctx->tree().original_label(l));
      if (originals != expected) {
        err << "mismatch (" << name << ") u=" << u << " v=" << v << " expected: " << format_labels(expected)
            << " got: " << format_labels(originals) << '\n';
        return kMismatch;
      }
    }
  }
  out << "ok: " << queries.size() << " multi-label queries agree with the oracle\n";
  return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const Threshold tau = a.tau.parse_one();
  if (is_multi_file(a.tree)) return verify_multi(a, tau, out, err);

  const auto ctx = load_tree(a.tree);
  const auto& tree = ctx->tree();
  std::vector<std::pair<NodeId, NodeId>> queries;
  if (a.queries.empty()) {
    SplitMix64 rng(a.seed);
    queries = generate_queries(tree.size(), a.count, rng);
  } else {
    queries = load_queries(a.queries, tree.size());
  }

  const BasicMajorityIndex basic(ctx, tau);
  const StratifiedMajorityIndex linear(ctx, tau, a.kappa, StratifiedMode::kLinear);
  const StratifiedMajorityIndex super(ctx, tau, a.kappa, StratifiedMode::kSuperlinear);
  const MinorityIndex minority(ctx, tau);

  for (const auto& [u, v] : queries) {
    const auto expected = oracle_majorities(tree, u, v, tau);
    const std::pair<const char*, std::vector<Label>> got[] = {
        {"basic", basic.query(u, v).labels},
        {"stratified", linear.query(u, v).labels},
        {"stratified-super", super.query(u, v).labels},
    };
    for (const auto& [name, labels] : got) {
      if (labels != expected) {
        err << "mismatch (" << name << ") u=" << u << " v=" << v << " expected: " << format_labels(tree, expected)
            << " got: " << format_labels(tree, labels) << '\n';
        return kMismatch;
      }
    }
    const auto want = oracle_minority(tree, u, v, tau);
    const auto have = minority.query(u, v).label;
    bool ok = want.has_value() == have.has_value();
    if (ok && have) {
      const auto tally = oracle_tally(tree, u, v);
      const auto it = tally.find(*have);
      std::uint64_t len = 0;
      for (const auto& kv : tally) len += kv.second;
      ok = it != tally.end() && tau.admits_minority(it->second, len);
    }
    if (!ok) {
      err << "mismatch (minority) u=" << u << " v=" << v
          << " expected: " << (want ? std::to_string(tree.original_label(*want)) : "-")
          << " got: " << (have ? std::to_string(tree.original_label(*have)) : "-") << '\n';
      return kMismatch;
    }
  }
  out << "ok: " << queries.size() << " queries agree with the oracle\n";
  return kOk;
}

// ---- gen ----

struct GenArgs {
  std::string shape = "random-attachment";
  std::uint64_t n = 0;
  std::uint64_t sigma = 0;
  std::uint64_t seed = 1;
  std::uint64_t labels_per_node = 0;
  std::uint64_t label_budget = 0;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  try {
    if (a.labels_per_node > 0) {
      if (a.shape != "random-attachment") throw UsageError("multi-label trees use the random-attachment shape");
      const std::uint64_t budget = a.label_budget ? a.label_budget : a.n * a.labels_per_node;
      write_multi_tree(out, generate_multi_input(a.n, a.labels_per_node, a.sigma ? a.sigma : a.n, budget, a.seed));
      return kOk;
    }
    GeneratorSpec spec{parse_shape(a.shape), a.n, a.sigma ? a.sigma : a.n, a.seed};
    write_tree(out, generate_input(spec));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

// ---- bench ----

struct BenchArgs {
  std::string tree;
  std::string index = "all";
  std::size_t queries = 10000;
  std::uint64_t seed = 1;
  std::optional<unsigned> kappa;
  TauFlags tau;
};

nlohmann::json summarize(const std::vector<QueryStats>& stats, std::vector<double> latency_us) {
  nlohmann::json j;
  std::size_t max_c = 0, max_v = 0;
  double sum_c = 0, sum_v = 0;
  for (const auto& s : stats) {
    sum_c += static_cast<double>(s.candidates_inspected);
    sum_v += static_cast<double>(s.verifications);
    max_c = std::max(max_c, s.candidates_inspected);
    max_v = std::max(max_v, s.verifications);
  }
  const double q = stats.empty() ? 1.0 : static_cast<double>(stats.size());
  j["query_count"] = stats.size();
  j["candidates_inspected"] = {{"mean", sum_c / q}, {"max", max_c}};
  j["verifications"] = {{"mean", sum_v / q}, {"max", max_v}};
  std::sort(latency_us.begin(), latency_us.end());
  auto pct = [&](double p) {
    if (latency_us.empty()) return 0.0;
    const auto k = static_cast<std::size_t>(p * static_cast<double>(latency_us.size() - 1) + 0.5);
    return latency_us[k];
  };
  j["latency_us"] = {{"p50", pct(0.50)}, {"p90", pct(0.90)}, {"p99", pct(0.99)}, {"max", pct(1.0)}};
  return j;
}

template <class Fn>
nlohmann::json time_queries(const std::vector<std::pair<NodeId, NodeId>>& queries, Fn query) {
  using clock = std::chrono::steady_clock;
  std::vector<QueryStats> stats;
  std::vector<double> latency;
  stats.reserve(queries.size());
  latency.reserve(queries.size());
  for (const auto& [u, v] : queries) {
    const auto t0 = clock::now();
    stats.push_back(query(u, v));
    latency.push_back(std::chrono::duration<double, std::micro>(clock::now() - t0).count());
  }
  return summarize(stats, std::move(latency));
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  const auto taus = a.tau.parse_list();
  const auto ctx = load_tree(a.tree);
  const std::size_t n = ctx->size();
  SplitMix64 rng(a.seed);
  const auto queries = generate_queries(n, a.queries, rng);

  std::vector<std::string> kinds;
  if (a.index == "all") {
    kinds = {"basic", "stratified", "stratified-super", "minority"};
  } else {
    kinds = {a.index};
  }

  nlohmann::json doc;
  doc["n"] = n;
  doc["sigma"] = ctx->tree().sigma();
  doc["seed"] = a.seed;
  doc["runs"] = nlohmann::json::array();
  for (const Threshold& tau : taus) {
    for (const auto& kind : kinds) {
      nlohmann::json run;
      run["tau"] = tau.to_string();
      run["index"] = kind;
      const auto t0 = clock::now();
      if (kind == "basic") {
        const BasicMajorityIndex idx(ctx, tau);
        run["build_ms"] = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        run["stored_entries"] = idx.candidates().total_entries();
        run.update(time_queries(queries, [&](NodeId u, NodeId v) { return idx.query(u, v).stats; }));
      } else if (kind == "stratified" || kind == "stratified-super") {
        const StratifiedMajorityIndex idx(ctx, tau, a.kappa, mode_of(parse_index_kind(kind)));
        run["build_ms"] = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        run["kappa"] = idx.kappa();
        run["stored_entries"] = idx.stored_candidate_entries();
        run.update(time_queries(queries, [&](NodeId u, NodeId v) { return idx.query(u, v).stats; }));
      } else if (kind == "minority") {
        const MinorityIndex idx(ctx, tau);
        run["build_ms"] = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        run.update(time_queries(queries, [&](NodeId u, NodeId v) { return idx.query(u, v).stats; }));
      } else {
        throw UsageError("unknown index kind '" + kind + "'");
      }
      doc["runs"].push_back(std::move(run));
    }
  }
  out << doc.dump(2) << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Path tau-majority and tau-minority queries on labeled trees"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build an index file from a .lt tree");
  b->add_option("tree", build.tree, "Tree file (.lt), '-' for stdin")->required();
  b->add_option("-o,--out", build.out, "Index file to write, '-' for stdout")->required();
  b->add_option("--index", build.index, "basic, stratified or stratified-super")
      ->check(CLI::IsMember({"basic", "stratified", "stratified-super"}));
  b->add_option("--mode", build.mode, "Stratified mode: linear or superlinear")
      ->check(CLI::IsMember({"linear", "superlinear"}));
  b->add_option("--kappa", build.kappa, "Branching levels (default log* n - 1)");
  build.tau.attach(b);

  QueryArgs query;
  auto* q = app.add_subcommand("query", "Answer queries from an index file");
  q->add_option("--index", query.index, "Index file from 'build'")->required();
  q->add_option("queries", query.queries, "Query file of 'u v' lines, '-' for stdin");
  q->add_option("--flavor", query.flavor, "majority or minority")->check(CLI::IsMember({"majority", "minority"}));
  q->add_option("--threads", query.threads, "Worker threads")->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check every index against the brute-force oracle");
  v->add_option("tree", verify.tree, "Tree file (.lt, or .mlt for multi-label)")->required();
  v->add_option("queries", verify.queries, "Query file; random pairs when omitted");
  v->add_option("--count", verify.count, "Number of random queries");
  v->add_option("--seed", verify.seed, "Seed for random queries");
  v->add_option("--kappa", verify.kappa, "Stratification levels");
  verify.tau.attach(v);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Write a generated tree to stdout");
  g->add_option("--shape", gen.shape, "random-attachment, chain, caterpillar, complete-binary, broom");
  g->add_option("--n", gen.n, "Number of nodes")->required();
  g->add_option("--sigma", gen.sigma, "Label alphabet size (default n)");
  g->add_option("--seed", gen.seed, "SplitMix64 seed");
  g->add_option("--labels-per-node", gen.labels_per_node, "Emit a .mlt tree with up to this many labels per node");
  g->add_option("--label-budget", gen.label_budget, "Cap on total labels for .mlt output");

  BenchArgs bench;
  auto* be = app.add_subcommand("bench", "Build and query timings as a JSON report");
  be->add_option("tree", bench.tree, "Tree file (.lt)")->required();
  be->add_option("--index", bench.index, "all, basic, stratified, stratified-super or minority");
  be->add_option("--queries", bench.queries, "Random queries per run");
  be->add_option("--seed", bench.seed, "Seed for random queries");
  be->add_option("--kappa", bench.kappa, "Stratification levels");
  bench.tau.attach(be, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*b) return cmd_build(build, out);
    if (*q) return cmd_query(query, out);
    if (*v) return cmd_verify(verify, out, err);
    if (*g) return cmd_gen(gen, out);
    if (*be) return cmd_bench(bench, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pathmaj::cli
