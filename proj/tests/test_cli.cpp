#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "matnum/cli.hpp"
#include "matnum/core.hpp"
#include "matnum/run_word.hpp"

using namespace matnum;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("eval") {
  CHECK(run({"eval", "--system", "j2p1", "ppppmm"}).out == "(13, 2)\n");
  CHECK(run({"eval", "--system", "j2m1", "ppzpp"}).out == "(0, 0)\n");
  CHECK(run({"eval", "--system", "j2m1", ""}).out == "(0, 0)\n");
  CHECK(run({"eval", "--system", "j3m1", "--run-length", "(z p)*3 p"}).code == 0);
  const Result bad = run({"eval", "--system", "j2p1", "ppqm"});
  CHECK(bad.code == cli::kExitDomain);
  CHECK(bad.err.find("'q' at position 2") != std::string::npos);
  CHECK(run({"eval", "--system", "j2m1", "pm"}).code == cli::kExitDomain);
}

TEST_CASE("scalar commands") {
  CHECK(run({"minlen", "--system", "j2m1", "--", "-3", "-1"}).out == "9\n");
  CHECK(run({"minlen", "--system", "j2p1", "--a", "13", "--b", "2"}).out == "6\n");
  CHECK(run({"count", "--system", "j2p1", "--a", "0", "--b", "0", "--k", "2"}).out == "0\n");
  CHECK(run({"count", "--system", "j2m1", "--k", "5", "--", "0", "0"}).out == "2\n");
  CHECK(run({"weight", "--", "-2", "2"}).out == "2\n");
  CHECK(run({"weight", "--system", "j2p1", "--", "1", "0"}).code == cli::kExitDomain);
}

TEST_CASE("witness commands print a verified value that matches the target") {
  const std::vector<std::vector<std::string>> invocations{
      {"witness", "--system", "j2p1", "--", "-13", "-2"},
      {"witness", "--system", "j2m1", "--", "3", "1"},
      {"witness", "--system", "j2m1", "--", "-3", "-1"},
      {"weight-witness", "--", "-4", "2"},
      {"weight-witness", "--", "7", "-3"},
  };
  for (const auto& args : invocations) {
    const Result r = run(args);
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    const std::string target = args[args.size() - 2] + "," + args[args.size() - 1];
    CHECK(ls[2] == "verified: (" + target + ")");
    const NumberSystem sys = NumberSystem::by_name(args[1] == "--system" ? args[2] : "j2m1");
    const DigitWord w = DigitWord::parse(ls[0]);
    CHECK(w.str() == ls[0]);
    CHECK(evaluate(sys, w).compact_str() == target);
  }
  CHECK(lines(run({"witness", "--system", "j2m1", "--", "3", "1"}).out)[0] == "pzzpzp");
}

TEST_CASE("fullrep") {
  const Result r = run({"fullrep", "--n", "3", "--target", "2,-1,3"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[2] == "verified: (2,-1,3)");
  const RunWord w = RunWord::parse(ls[0]);
  CHECK(RunEvaluator(NumberSystem::jn_minus_one(3)).evaluate(w) == IntVec::of({2, -1, 3}));
  CHECK(ls[1] == "length: " + w.length().str());

  const Result flat = run({"fullrep", "--expand", "--", "1", "-1"});
  REQUIRE(flat.code == 0);
  const auto fl = lines(flat.out);
  REQUIRE(fl.size() == 4);
  CHECK(evaluate(NumberSystem::jn_minus_one(2), DigitWord::parse(fl[2])) == IntVec::of({1, -1}));
  CHECK(run({"fullrep", "--n", "2", "--target", "1,2,3"}).code == cli::kExitDomain);
  CHECK(run({"fullrep", "--n", "2", "--target", "1,x"}).code == cli::kExitUsage);
}

TEST_CASE("tables") {
  const Result sd = run({"table", "swap-descent", "--b", "2", "--ell", "2"});
  CHECK(sd.out ==
        "ppppmm,(13,2)\npppmpm,(11,2)\npppmmp,(9,2)\nppmpmp,(7,2)\nppmmpp,(5,2)\npmpmpp,(3,2)\npmmppp,(1,2)\n");
  CHECK(run({"table", "swap-descent", "--b", "2", "--ell", "2"}).out == sd.out);
  const auto csv = lines(run({"table", "swap-descent", "--b", "2", "--ell", "2", "--format", "csv"}).out);
  CHECK(csv.front() == "word,a,b");
  CHECK(csv[1] == "ppppmm,13,2");

  const auto counts = lines(run({"table", "counts", "--system", "j2m1", "--k", "5"}).out);
  CHECK(counts.front() == "a,b,count");
  Int total = 0;
  for (std::size_t i = 1; i < counts.size(); ++i) total += Int(counts[i].substr(counts[i].rfind(',') + 1));
  CHECK(total == 32);

  const auto th = lines(run({"table", "thresholds", "--b", "-1", "--n-max", "5"}).out);
  REQUIRE(th.size() == 7);
  CHECK(th[0] == "n,term");
  CHECK(th[4] == "3,13");
  CHECK(run({"table", "bogus"}).code == cli::kExitUsage);
}

TEST_CASE("json output carries a schema version") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"eval", "--format", "json", "pp"},
           {"minlen", "--format", "json", "--", "3", "1"},
           {"witness", "--format", "json", "--system", "j2m1", "--", "3", "1"},
           {"weight", "--format", "json", "--", "2", "0"},
           {"weight-witness", "--format", "json", "--", "2", "0"},
           {"count", "--format", "json", "--k", "6", "--", "13", "2"},
           {"table", "swap-descent", "--format", "json", "--b", "1", "--ell", "1"},
           {"table", "counts", "--format", "json", "--k", "3"},
           {"table", "thresholds", "--format", "json", "--b", "2"},
           {"fullrep", "--format", "json", "--", "1", "2"},
       }) {
    const Result r = run(args);
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema"] == 1);
  }
  const auto w = nlohmann::json::parse(run({"weight", "--format", "json", "--", "2", "0"}).out);
  CHECK(w["weight"] == "4");
  CHECK(w["case"] == "plus-four-upper");
}

TEST_CASE("csv output") {
  const auto ls = lines(run({"minlen", "--format", "csv", "--system", "j2m1", "--", "-3", "-1"}).out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "system,a,b,min_length");
  CHECK(ls[1] == "j2m1,-3,-1,9");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"minlen", "--a", "1"}).code == cli::kExitUsage);
  CHECK(run({"minlen", "--", "1", "2", "3"}).code == cli::kExitUsage);
  CHECK(run({"minlen", "--", "1.5", "2"}).code == cli::kExitUsage);
  CHECK(run({"minlen", "--format", "xml", "--", "1", "2"}).code == cli::kExitUsage);
  CHECK(run({"minlen", "--system", "j3m1", "--", "1", "2"}).code == cli::kExitDomain);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("certify") {
  const Result r = run({"certify", "--n", "2", "--box", "2", "--k-max", "8", "--horizon", "10"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls.size() == 6);
  for (const std::string& l : ls) CHECK(l.rfind("[PASS]", 0) == 0);
  const auto doc = nlohmann::json::parse(
      run({"certify", "--format", "json", "--n", "1", "--box", "3", "--k-max", "6", "--horizon", "8"}).out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["pass"] == true);
  CHECK(run({"certify", "--n", "2"}).code == cli::kExitUsage);
}
