#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dot_reader.hpp"
#include "hog/cli.hpp"

using namespace hog::testing;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "hogtool");
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = hog::cli::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kTattatt = "tattatt,ctattat,gtattat,cctat";

}  // namespace

TEST_CASE("build-hog DOT on the aabaa words") {
  Result r = run({"build-hog", "--words", "aabaa,aacd,cdb"});
  REQUIRE(r.code == 0);
  DotGraph g = read_dot(r.out);
  std::set<std::string> internal;
  for (const auto& [id, attrs] : g.nodes)
    if (!attrs.count("shape")) internal.insert(attrs.at("label"));
  CHECK(internal == std::set<std::string>{"ε", "aa", "cd"});
}

TEST_CASE("og-matrix routes are byte-identical") {
  Result hog = run({"og-matrix", "--via", "hog", "--words", kTattatt});
  Result oracle = run({"og-matrix", "--via", "oracle", "--words", kTattatt});
  REQUIRE(hog.code == 0);
  CHECK(hog.out == oracle.out);
  CHECK(hog.out ==
        "(x,y)\t1\t2\t3\t4\n1\t4\t0\t0\t0\n2\t6\t0\t0\t0\n3\t6\t0\t0\t0\n4\t3\t4\t0\t0\n");
  Result hj = run({"og-matrix", "--via", "hog", "--emit", "json", "--words", kTattatt});
  Result oj = run({"og-matrix", "--via", "oracle", "--emit", "json", "--words", kTattatt});
  CHECK(hj.out == oj.out);
}

TEST_CASE("verify on an instance without overlaps") {
  Result r = run({"verify", "--words", "ab,cd"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS hog_labels") != std::string::npos);
  Result dot = run({"build-hog", "--words", "ab,cd"});
  DotGraph g = read_dot(dot.out);
  CHECK(g.nodes.size() == 3);
}

TEST_CASE("input from stdin and files") {
  Result r = run({"og-matrix"}, "aaa\n");
  CHECK(r.code == 0);
  CHECK(r.out == "(x,y)\t1\n1\t2\n");

  auto path = std::filesystem::temp_directory_path() / "hogtool_test_input.fa";
  {
    std::ofstream f(path);
    f << ">r1\nTATTATT\n>r2\nCTATTAT\n>r3\nGTATTAT\n>r4\nCCTAT\n";
  }
  Result fa = run({"og-matrix", "--input", path.string(), "--format", "fasta"});
  CHECK(fa.code == 0);
  CHECK(fa.out == run({"og-matrix", "--words", kTattatt}).out);
  std::filesystem::remove(path);
}

TEST_CASE("--out writes a file") {
  auto path = std::filesystem::temp_directory_path() / "hogtool_test_out.tsv";
  Result r = run({"trace", "--words", kTattatt, "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().rfind("node\trl\tc_before", 0) == 0);
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run({"build-hog", "--words", "abc,b"}).code == 1);
  CHECK(run({"build-hog", "--words", "abc,b", "--containment", "filter"}).code == 0);
  CHECK(run({"build-hog", "--input", "/nonexistent/words.txt"}).code == 1);
  CHECK(run({"build-hog", "--emit", "tsv", "--words", "ab"}).code == 1);
  CHECK(run({"trace", "--emit", "dot", "--words", "ab"}).code == 1);
  CHECK(run({"build-hog", "--input", "x", "--words", "ab"}).code == 1);
  CHECK(run({"no-such-command"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"gen-pz", "--alphabet", "aa"}).code == 1);
  CHECK(run({"build-hog", "--format", "fastq", "--words", "ab"}).code == 1);
  Result bad = run({"build-hog"}, "a\xff\n");
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 1") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("--verify and --debug-invariants pass on golden words") {
  for (const char* words : {"aabaa,aacd,cdb", kTattatt, "bcbcb,baba,abcba,abab"}) {
    CHECK(run({"build-hog", "--verify", "--debug-invariants", "--words", words}).code == 0);
    CHECK(run({"build-ehog", "--verify", "--words", words}).code == 0);
  }
}

TEST_CASE("gen-pz, stats and sweep") {
  Result gen = run({"gen-pz", "--alphabet", "acgt", "--z", "1"});
  CHECK(gen.out == "acgt\ncgta\ngtac\ntacg\n");

  Result stats = run({"stats", "--alphabet", "acgt", "--z", "16"});
  CHECK(stats.code == 0);
  CHECK(stats.out.find("\"num\": 64") != std::string::npos);
  CHECK(stats.out.find("\"den\": 5") != std::string::npos);

  Result tsv = run({"stats", "--emit", "tsv", "--words", "abab,baba"});
  CHECK(tsv.out ==
        "words\tnorm\tehog_nodes_total\thog_nodes_total\tehog_nodes_noroot\t"
        "hog_nodes_noroot\tratio\n2\t8\t9\t7\t8\t6\t4/3\n");

  Result sweep = run({"sweep", "--alphabet", "ab", "--z-max", "4"});
  CHECK(sweep.code == 0);
  CHECK(std::count(sweep.out.begin(), sweep.out.end(), '\n') == 4);
  CHECK(run({"sweep", "--z-max", "4"}).code == 1);
}

TEST_CASE("repeated runs are byte-identical") {
  for (const char* cmd : {"build-trie", "build-ehog", "build-hog", "trace", "og-matrix"}) {
    Result a = run({cmd, "--words", kTattatt});
    Result b = run({cmd, "--words", kTattatt});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  Result a = run({"build-hog", "--emit", "json", "--words", kTattatt});
  Result b = run({"build-hog", "--emit", "json", "--words", kTattatt});
  CHECK(a.out == b.out);
}
