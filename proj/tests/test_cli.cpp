#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "helpers.hpp"
#include "roughrel/cli.hpp"

using namespace roughrel;
using test::rel;
using test::set_of;

namespace {

const char* kExampleText = "universe: 1 2 3\npair: 1 2\npair: 3 3\n";

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return CliResult{code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("roughrel_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
             ".rel");
    std::ofstream f(path_);
    f << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("relation files parse into relations", "[cli]") {
  Relation r = io::parse_relation(kExampleText);
  auto u = r.universe();
  CHECK(u->labels() == std::vector<std::string>{"1", "2", "3"});
  CHECK(r == rel(u, {{1, 2}, {3, 3}}));

  Relation single = io::parse_relation("universe: a\n");
  CHECK(single.size() == 1);
  CHECK(single.pair_count() == 0);

  // order-independent, idempotent duplicates, comments and blank lines
  Relation shuffled = io::parse_relation(
      "# header comment\npair: 3 3\n\npair: 1 2  # trailing comment\npair: 1 2\n"
      "universe: 1 2 3\n");
  CHECK(shuffled == r);
}

TEST_CASE("parse errors carry line and column positions", "[cli]") {
  auto expect_error = [](const std::string& text, std::size_t line, std::size_t column,
                         const std::string& fragment) {
    try {
      io::parse_relation(text);
      FAIL("expected a parse error for: " << text);
    } catch (const io::ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
      CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring(fragment));
    }
  };

  expect_error("pair: 1 2\n", 0, 0, "missing universe");
  expect_error("universe:\n", 1, 1, "no elements");
  expect_error("universe: a b a\n", 1, 15, "duplicate label 'a'");
  expect_error("universe: 1 2\nuniverse: 3\n", 2, 1, "duplicate universe");
  expect_error("universe: 1 2\npair: 1\n", 2, 1, "exactly two labels");
  expect_error("universe: 1 2\npair: 1 2 2\n", 2, 1, "exactly two labels");
  expect_error("universe: 1 2 3\npair: 1 4\n", 2, 9, "unknown label '4'");
  expect_error("universe: 1 2\nedge: 1 2\n", 2, 1, "unrecognized directive");
}

TEST_CASE("serialization is canonical and round-trips", "[cli]") {
  Relation r = io::parse_relation(kExampleText);
  std::string canonical = io::serialize_relation(r);
  CHECK(canonical == kExampleText);
  CHECK(io::parse_relation(canonical) == r);

  oracle::SplitMix64 rng(61);
  for (int t = 0; t < 60; ++t) {
    auto u = make_universe(1 + t % 8);
    Relation q = oracle::random_relation(u, 0.4, rng);
    std::string text = io::serialize_relation(q);
    CHECK(io::parse_relation(text) == q);
    CHECK(io::serialize_relation(io::parse_relation(text)) == text);
  }
}

TEST_CASE("relation JSON round-trips with sorted pairs", "[cli]") {
  Relation r = io::parse_relation("universe: 1 2 3\npair: 3 3\npair: 1 2\npair: 1 1\n");
  io::json j = io::relation_to_json(r);
  CHECK(j["universe"] == io::json({"1", "2", "3"}));
  io::json expected_pairs = io::json::array(
      {io::json::array({"1", "1"}), io::json::array({"1", "2"}), io::json::array({"3", "3"})});
  CHECK(j["pairs"] == expected_pairs);
  CHECK(io::relation_from_json(j) == r);
}

TEST_CASE("props reports honest matrix-derived properties", "[cli]") {
  TempFile file(kExampleText);
  CliResult result = run_cli({"props", file.path()});
  CHECK(result.code == 0);
  CHECK(result.out ==
        "reflexive=false\nsymmetric=false\ntransitive=true\nserial=false\n"
        "equivalence=false\n");

  CliResult json = run_cli({"--json", "props", file.path()});
  auto j = io::json::parse(json.out);
  CHECK(j["transitive"] == true);
  CHECK(j["serial"] == false);
}

TEST_CASE("closure subcommand emits canonical, re-parseable text", "[cli]") {
  TempFile file(kExampleText);
  CliResult result = run_cli({"closure", "--kind", "ts", file.path()});
  REQUIRE(result.code == 0);
  CHECK(result.out ==
        "universe: 1 2 3\npair: 1 1\npair: 1 2\npair: 2 1\npair: 2 2\npair: 3 3\n");

  Relation parsed = io::parse_relation(result.out);
  CHECK(parsed == ts_closure(io::parse_relation(kExampleText)));

  CliResult rst = run_cli({"closure", "--kind", "rst", file.path()});
  CHECK(rst.code == 0);
  CliResult bad = run_cli({"closure", "--kind", "zz", file.path()});
  CHECK(bad.code != 0);
}

TEST_CASE("approx and neigh subcommands", "[cli]") {
  TempFile file("universe: 1 2 3\npair: 1 1\npair: 1 2\npair: 2 1\npair: 3 2\n");

  CliResult succ = run_cli({"neigh", "--succ", "--set", "1,2", file.path()});
  CHECK(succ.code == 0);
  CHECK(succ.out == "{1,2}\n");

  CliResult pred = run_cli({"neigh", "--pred", "--set", "1,2", file.path()});
  CHECK(pred.out == "{1,2,3}\n");

  CliResult v = run_cli({"--json", "neigh", "--v", "--set", "1,2", file.path()});
  auto jv = io::json::parse(v.out);
  CHECK(jv["set"] == io::json({"1", "2", "3"}));

  TempFile file40c(kExampleText);
  CliResult lower = run_cli({"approx", "--lower", "--set", "", file40c.path()});
  CHECK(lower.out == "{2}\n");
  CliResult upper = run_cli({"approx", "--upper", "--set", "3", file40c.path()});
  CHECK(upper.out == "{3}\n");

  CHECK(run_cli({"approx", "--set", "1", file40c.path()}).code != 0);
  CHECK(run_cli({"approx", "--lower", "--upper", "--set", "1", file40c.path()}).code != 0);
  CHECK(run_cli({"neigh", "--succ", "--set", "9", file40c.path()}).code != 0);
}

TEST_CASE("definable subcommand enumerates families", "[cli]") {
  TempFile nonserial(kExampleText);
  CliResult empty = run_cli({"definable", "--both", "--method", "naive", nonserial.path()});
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());

  TempFile ts_file("universe: 1 2 3\npair: 1 1\npair: 1 2\npair: 2 1\npair: 2 2\npair: 3 3\n");
  CliResult family = run_cli({"definable", "--both", "--method", "naive", ts_file.path()});
  CHECK(family.out == "{}\n{1,2}\n{3}\n{1,2,3}\n");

  CliResult fast = run_cli({"--json", "definable", "--both", "--method", "fast", ts_file.path()});
  auto j = io::json::parse(fast.out);
  CHECK(j["sets"] == io::json({io::json::array(), {"1", "2"}, {"3"}, {"1", "2", "3"}}));

  TempFile witness("universe: 1 2 3\npair: 1 1\npair: 1 2\npair: 2 1\npair: 3 2\n");
  CHECK(run_cli({"definable", "--inner", witness.path()}).out == "{}\n{1,2,3}\n");
  CHECK(run_cli({"definable", "--outer", witness.path()}).out == "{}\n{1,2,3}\n");

  CHECK(run_cli({"definable", "--inner", "--method", "fast", witness.path()}).code != 0);
  CHECK(run_cli({"definable", witness.path()}).code != 0);
  CHECK(run_cli({"definable", "--inner", "--both", witness.path()}).code != 0);

  // family JSON is byte-identical across runs
  CliResult again = run_cli({"--json", "definable", "--both", "--method", "fast",
                             ts_file.path()});
  CHECK(again.out == fast.out);
}

TEST_CASE("the powerset cap is configurable by flag and environment", "[cli]") {
  TempFile file(kExampleText);  // three elements

  CliResult capped = run_cli({"--max-powerset", "2", "definable", "--both", file.path()});
  CHECK(capped.code == 1);
  CHECK_THAT(capped.err, Catch::Matchers::ContainsSubstring("powerset too large"));

  ::setenv("ROUGHREL_MAX_POWERSET", "2", 1);
  CliResult env_capped = run_cli({"definable", "--both", file.path()});
  CHECK(env_capped.code == 1);

  // an explicit flag overrides the environment
  CliResult flag_wins = run_cli({"--max-powerset", "10", "definable", "--both", file.path()});
  CHECK(flag_wins.code == 0);

  ::setenv("ROUGHREL_MAX_POWERSET", "banana", 1);
  CHECK(run_cli({"definable", "--both", file.path()}).code == 1);
  ::unsetenv("ROUGHREL_MAX_POWERSET");

  CliResult ok = run_cli({"definable", "--both", file.path()});
  CHECK(ok.code == 0);
}

TEST_CASE("check-equal reports the verdict in the output, not the exit code", "[cli]") {
  TempFile r_file(kExampleText);
  TempFile ts_file("universe: 1 2 3\npair: 1 1\npair: 1 2\npair: 2 1\npair: 2 2\npair: 3 3\n");

  CliResult text = run_cli({"check-equal", r_file.path(), ts_file.path()});
  CHECK(text.code == 0);  // unequal families still exit 0
  CHECK(text.out == "equal=false\nreason=serial-mismatch\n");

  CliResult json = run_cli({"--json", "check-equal", r_file.path(), ts_file.path()});
  auto j = io::json::parse(json.out);
  CHECK(j["equal"] == false);
  CHECK(j["reason"] == "serial-mismatch");
  CHECK_FALSE(j.contains("witness"));

  TempFile e1("universe: 1 2 3\npair: 1 1\npair: 2 2\npair: 3 3\npair: 1 2\npair: 2 1\n");
  TempFile e2("universe: 1 2 3\npair: 1 1\npair: 2 2\npair: 3 3\npair: 2 3\npair: 3 2\n");
  CliResult diff = run_cli({"--json", "check-equal", e1.path(), e2.path()});
  auto jd = io::json::parse(diff.out);
  CHECK(jd["equal"] == false);
  CHECK(jd["reason"] == "ts-closures-differ");
  REQUIRE(jd.contains("witness"));
  CHECK(jd["witness"] == io::json({"1", "2"}));

  CliResult same = run_cli({"check-equal", r_file.path(), r_file.path()});
  CHECK(same.out == "equal=true\nreason=both-non-serial\n");
}

TEST_CASE("classes subcommand needs an equivalence relation", "[cli]") {
  TempFile eq("universe: 1 2 3\npair: 1 1\npair: 1 2\npair: 2 1\npair: 2 2\npair: 3 3\n");
  CliResult ok = run_cli({"classes", eq.path()});
  CHECK(ok.code == 0);
  CHECK(ok.out == "{1,2}\n{3}\n");

  CliResult json = run_cli({"--json", "classes", eq.path()});
  auto j = io::json::parse(json.out);
  CHECK(j["blocks"] ==
        io::json::array({io::json::array({"1", "2"}), io::json::array({"3"})}));

  TempFile non_equivalence(kExampleText);
  CliResult bad = run_cli({"classes", non_equivalence.path()});
  CHECK(bad.code == 1);
  CHECK_THAT(bad.err, Catch::Matchers::ContainsSubstring("equivalence"));
}

TEST_CASE("verify subcommand drives the sweep harness", "[cli]") {
  CliResult text = run_cli({"verify", "--claim", "thm-32A", "--n", "3",
                            "--mode", "exhaustive"});
  CHECK(text.code == 0);
  CHECK_THAT(text.out, Catch::Matchers::ContainsSubstring("trials: 512"));
  CHECK_THAT(text.out, Catch::Matchers::ContainsSubstring("failures: 0"));
  CHECK_THAT(text.out, Catch::Matchers::ContainsSubstring("result: PASS"));

  CliResult json = run_cli({"--json", "verify", "--claim", "prop-8B7", "--n", "2",
                            "--mode", "exhaustive"});
  auto j = io::json::parse(json.out);
  CHECK(j["claim_id"] == "prop-8B7");
  CHECK(j["mode"] == "exhaustive");
  CHECK(j["universe_size"] == 2);
  CHECK(j["trials"] == 16);
  CHECK(j["failures"].empty());
  CHECK(j.contains("elapsed_ms"));

  CliResult listing = run_cli({"verify", "--list"});
  CHECK(listing.code == 0);
  CHECK_THAT(listing.out, Catch::Matchers::ContainsSubstring("thm-40B2"));

  CHECK(run_cli({"verify", "--claim", "no-such", "--n", "2"}).code == 1);
  CHECK(run_cli({"verify", "--n", "2"}).code == 1);
}

TEST_CASE("verify JSON output is byte-stable under a fixed seed", "[cli]") {
  const std::vector<std::string> args{"--json", "verify", "--claim", "thm-40B2", "--n", "4",
                                      "--mode", "random", "--trials", "500",
                                      "--seed", "42"};
  auto strip_elapsed = [](const std::string& text) {
    auto j = io::json::parse(text);
    j.erase("elapsed_ms");
    return j.dump();
  };
  CliResult a = run_cli(args);
  CliResult b = run_cli(args);
  REQUIRE(a.code == 0);
  CHECK(strip_elapsed(a.out) == strip_elapsed(b.out));
}

TEST_CASE("dot subcommand clusters the ts blocks", "[cli]") {
  TempFile file(kExampleText);
  CliResult plain = run_cli({"dot", file.path()});
  REQUIRE(plain.code == 0);
  CHECK_THAT(plain.out, Catch::Matchers::StartsWith("digraph relation {"));
  CHECK_THAT(plain.out, Catch::Matchers::ContainsSubstring("subgraph cluster_0"));
  CHECK_THAT(plain.out, Catch::Matchers::ContainsSubstring("subgraph cluster_1"));
  CHECK_THAT(plain.out, Catch::Matchers::ContainsSubstring("\"1\" -> \"2\";"));
  CHECK_THAT(plain.out, Catch::Matchers::ContainsSubstring("\"3\" -> \"3\";"));

  CliResult closed = run_cli({"dot", "--kind", "ts", file.path()});
  CHECK_THAT(closed.out, Catch::Matchers::ContainsSubstring("\"2\" -> \"1\";"));

  TempFile quoted("universe: a\"b c\npair: a\"b c\n");
  CliResult escaped = run_cli({"dot", quoted.path()});
  CHECK_THAT(escaped.out, Catch::Matchers::ContainsSubstring("\"a\\\"b\" -> \"c\";"));
}

TEST_CASE("usage and file errors exit nonzero", "[cli]") {
  CHECK(run_cli({}).code != 0);
  CHECK(run_cli({"no-such-command"}).code != 0);
  CHECK(run_cli({"props"}).code != 0);
  CHECK(run_cli({"props", "/no/such/file.rel"}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);

  TempFile bad("universe: 1 2 3\npair: 1 4\n");
  CliResult parse_fail = run_cli({"props", bad.path()});
  CHECK(parse_fail.code == 1);
  CHECK_THAT(parse_fail.err, Catch::Matchers::ContainsSubstring("unknown label '4'"));
  CHECK_THAT(parse_fail.err, Catch::Matchers::ContainsSubstring("line 2"));
}
