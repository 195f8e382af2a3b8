#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "nesto/cli.hpp"
#include "nesto/json_io.hpp"

using namespace nesto;

namespace {

struct CliResult {
  int code;
  Json out;
};

CliResult run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::vector<const char*> argv{"polyshuffle"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out);
  Json j = out.str().empty() ? Json() : Json::parse(out.str());
  return {code, std::move(j)};
}

}  // namespace

TEST_CASE("counts and enumerate") {
  auto r = run({"counts", "--universe", "gamma:inf", "--carrier", "1..3"});
  CHECK(r.code == 0);
  CHECK(r.out["total"] == 13);
  CHECK(r.out["by_nodes"] == Json::array({1, 6, 6}));

  r = run({"enumerate", "--universe", "frieze", "--carrier", "1..3"});
  CHECK(r.code == 0);
  CHECK(r.out["count"] == 13);
  CHECK(r.out["constructs"].size() == 13);

  r = run({"enumerate", "--universe", "frieze", "--carrier", "1..3",
           "--max-nodes", "1"});
  CHECK(r.out["count"] == 1);

  // letter carriers map a..z to 1..26
  r = run({"counts", "--universe", "simplex", "--carrier", "a,b,c"});
  CHECK(r.out["total"] == 7);
}

TEST_CASE("product over stdin") {
  std::string delegation = R"({
    "universe": "frieze",
    "parts": [{"decoration": [2], "children": [{"decoration": [1]}]},
              {"decoration": [3], "children": [{"decoration": [4]}]}],
    "whole": [1, 2, 3, 4],
    "mode": "strict"
  })";
  auto r = run({"product"}, delegation);
  REQUIRE(r.code == 0);
  LinearConstruct got = linear_from_json(r.out);
  CHECK(got.term_count() == 7);
  CHECK(got.coefficient(Construct::parse("23(1,4)")) == QPoly::q());
  CHECK(got.coefficient(Construct::parse("2(1(3(4)))")) == QPoly(1));

  auto at1 = run({"product", "--at-q", "1"}, delegation);
  CHECK(coefficient_sum(linear_from_json(at1.out)) == QPoly(7));

  auto nonrec = run({"product", "--nonrecursive"}, delegation);
  CHECK(linear_from_json(nonrec.out) == got);
}

TEST_CASE("trio over stdin") {
  std::string delegation = R"({
    "universe": "gamma:inf",
    "parts": [{"decoration": [1]}, {"decoration": [2]}],
    "whole": [1, 2]
  })";
  auto r = run({"trio"}, delegation);
  REQUIRE(r.code == 0);
  CHECK(linear_from_json(r.out["prec"]) ==
        LinearConstruct(Construct::parse("1(2)")));
  CHECK(linear_from_json(r.out["succ"]) ==
        LinearConstruct(Construct::parse("2(1)")));
  CHECK(linear_from_json(r.out["dot"]) ==
        LinearConstruct(Construct::parse("12")));
}

TEST_CASE("encode and decode") {
  std::string construct = R"({"decoration": [3], "children": [
      {"decoration": [1, 2]}, {"decoration": [4]}]})";
  auto r = run({"encode", "--format", "cubeword", "--carrier", "1..4"}, construct);
  CHECK(r.code == 0);
  CHECK(r.out == Json("+.+-"));

  r = run({"decode", "--format", "cubeword", "--carrier", "1..4"}, "\"+.+-\"");
  CHECK(r.code == 0);
  CHECK(construct_from_json(r.out) == Construct::parse("3(12,4)"));

  r = run({"encode", "--format", "packed", "--carrier", "1..3"},
          R"({"decoration": [2], "children": [{"decoration": [1, 3]}]})");
  CHECK(r.out == Json::array({1, 2, 1}));

  r = run({"decode", "--format", "schroeder", "--carrier", "1..3"},
          "\"(* ((* *) *))\"");
  CHECK(construct_from_json(r.out) == Construct::parse("1(3(2))"));
}

TEST_CASE("check subcommand reports a verdict") {
  auto r = run({"check", "--suite", "strictness-lemma", "--universe", "gamma:1",
                "--max-carrier", "4"});
  CHECK(r.code == 0);
  CHECK(r.out["ok"] == true);
  CHECK(r.out["cases"].get<long long>() > 0);
}

TEST_CASE("error reporting and exit codes") {
  // domain error: carrier not in the universe
  auto r = run({"counts", "--universe", "gamma:2", "--carrier", "1,4"});
  CHECK(r.code == 1);
  CHECK(r.out["error"]["code"] == "NotInUniverse");

  // malformed JSON on stdin
  r = run({"product"}, "{not json");
  CHECK(r.code == 2);
  CHECK(r.out["error"]["code"] == "MalformedInput");

  // unknown option
  r = run({"counts", "--nope"});
  CHECK(r.code == 2);

  // unknown universe tag
  r = run({"counts", "--universe", "nope", "--carrier", "1..3"});
  CHECK(r.code == 1);
  CHECK(r.out["error"]["code"] == "BadUniverse");
}
