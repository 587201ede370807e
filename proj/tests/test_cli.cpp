#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "pathmaj/tree_file.hpp"
#include "support.hpp"

using namespace pathmaj;
using namespace pathmaj::test;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<std::string> args) {
  std::vector<std::string> store{"pathmaj"};
  store.insert(store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : store) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("pathmaj-cli-" + std::to_string(std::random_device{}()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content = {}) const {
    const auto p = path_ / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }

 private:
  fs::path path_;
};

std::string f1_text() {
  std::ostringstream s;
  write_tree(s, f1_input());
  return s.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("build then query on F1") {
    TempDir dir;
    const auto tree = dir.file("f1.lt", f1_text());
    const auto queries = dir.file("q.txt", "5 7\n1 1\n10 11\n");
    for (const char* kind : {"basic", "stratified", "stratified-super"}) {
      const auto idx = dir.file(std::string(kind) + ".idx");
      CAPTURE(kind);
      REQUIRE(run({"build", tree, "--tau", "0.35", "--index", kind, "-o", idx}).code == 0);
      const auto r = run({"query", "--index", idx, queries});
      CHECK(r.code == 0);
      CHECK(r.out == "1 2\n1\n3\n");
      CHECK(run({"query", "--index", idx, queries, "--threads", "3"}).out == r.out);
    }
  }

  TEST_CASE("rational threshold and minority flavor") {
    TempDir dir;
    const auto tree = dir.file("f1.lt", f1_text());
    const auto idx = dir.file("f1.idx");
    REQUIRE(run({"build", tree, "--tau-rational", "1/5", "-o", idx}).code == 0);
    const auto r = run({"query", "--index", idx, "--flavor", "minority", dir.file("q.txt", "5 7\n")});
    CHECK(r.out == "3\n");
  }

  TEST_CASE("original labels are printed") {
    TempDir dir;
    const auto tree = dir.file("t.lt", "3\n0 100\n1 7\n1 100\n");
    const auto idx = dir.file("t.idx");
    REQUIRE(run({"build", tree, "--tau", "0.5", "-o", idx}).code == 0);
    CHECK(run({"query", "--index", idx, dir.file("q.txt", "2 3\n2 2\n")}).out == "100\n7\n");
  }

  TEST_CASE("gen output is a valid tree and verify accepts it") {
    TempDir dir;
    const auto r = run({"gen", "--shape", "caterpillar", "--n", "400", "--sigma", "6", "--seed", "4"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    const auto input = read_tree(in);
    CHECK(input.parents.size() == 400);
    const auto tree = dir.file("g.lt", r.out);
    const auto v = run({"verify", tree, "--tau", "0.3", "--count", "300"});
    CHECK(v.code == 0);
    CHECK(v.out.find("ok") == 0);
    CHECK(run({"gen", "--n", "400", "--sigma", "6", "--seed", "4", "--shape", "caterpillar"}).out == r.out);
  }

  TEST_CASE("verify on a multi-label file") {
    TempDir dir;
    const auto g = run({"gen", "--n", "80", "--labels-per-node", "3", "--sigma", "4", "--seed", "2"});
    REQUIRE(g.code == 0);
    const auto tree = dir.file("m.mlt", g.out);
    CHECK(run({"verify", tree, "--tau", "0.25", "--count", "400"}).code == 0);
  }

  TEST_CASE("verify with an explicit query file") {
    TempDir dir;
    const auto tree = dir.file("f1.lt", f1_text());
    CHECK(run({"verify", tree, "--tau", "0.35", dir.file("q.txt", "5 7\n9 6\n")}).out == "ok: 2 queries agree with the oracle\n");
  }

  TEST_CASE("bench emits a report") {
    TempDir dir;
    const auto tree = dir.file("b.lt", run({"gen", "--n", "300", "--sigma", "5"}).out);
    const auto r = run({"bench", tree, "--tau", "0.5,0.1", "--queries", "50"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["n"] == 300);
    CHECK(doc["runs"].size() == 8);
    CHECK(doc["runs"][0]["tau"] == "1/2");
    CHECK(doc["runs"][0]["query_count"] == 50);
    CHECK(doc["runs"][0].contains("latency_us"));
  }

  TEST_CASE("usage and input errors exit with 2") {
    TempDir dir;
    const auto tree = dir.file("f1.lt", f1_text());
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"build", tree, "-o", dir.file("x.idx")}).code == 2);  // no tau
    CHECK(run({"build", tree, "--tau", "1.5", "-o", dir.file("x.idx")}).code == 2);
    CHECK(run({"build", tree, "--tau", "0.5", "--tau-rational", "1/2", "-o", dir.file("x.idx")}).code == 2);
    CHECK(run({"build", dir.file("bad.lt", "2\n0 1\n"), "--tau", "0.5", "-o", dir.file("x.idx")}).code == 2);
    const auto bad = run({"build", dir.file("cyc.lt", "2\n2 1\n1 1\n"), "--tau", "0.5", "-o", dir.file("x.idx")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("error") != std::string::npos);
    CHECK(run({"query", "--index", dir.file("none.idx"), dir.file("q.txt", "1 1\n")}).code == 2);
    CHECK(run({"query", "--index", dir.file("junk.idx", "not an index"), dir.file("q.txt", "1 1\n")}).code == 2);
    const auto idx = dir.file("ok.idx");
    REQUIRE(run({"build", tree, "--tau", "0.5", "-o", idx}).code == 0);
    CHECK(run({"query", "--index", idx, dir.file("q2.txt", "1 12\n")}).code == 2);
    CHECK(run({"gen", "--n", "0"}).code == 2);
    CHECK(run({"gen", "--n", "5", "--shape", "star"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }
}
