#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using sigperm::cli::run;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};
Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("map and invert") {
  CHECK(call({"map", "--fn", "Phi", "(-4,-1,2,5,-3,-6,7)"}).out == "[1,2,-6,-3,-5,4]\n");
  CHECK(call({"map", "--fn", "phi", "(-4,-1,2,5,-3,-6,7)", "--cycles", "--pretty"}).out == "(-5)(-1)(4,-3,-6)\n");
  CHECK(call({"map", "--fn", "psi", "[-1,2,-6,-3,-5,4]", "--cycles"}).out == "(7,-4,-1,2,5,-3,-6)\n");
  CHECK(call({"map", "--fn", "phiS", "(1,2)"}).out == "[1]\n");
  CHECK(call({"map", "--fn", "PhiColored", "--r", "2", "(1^1,2)"}).out == "[1]\n");
  const Result inv = call({"invert", "--fn", "PsiD", "[1]"});
  CHECK(inv.code == 0);
  CHECK(inv.out == "[2,1]\n");
  CHECK(call({"map", "--fn", "Phi", inv.out.substr(0, inv.out.size() - 1)}).out == "[1]\n");
  CHECK(call({"invert", "--fn", "PsiColored", "--r", "3", "--color", "2", "[1^1]"}).code == 0);
}

TEST_CASE("stats") {
  CHECK(call({"stats", "[-3,1,2,-5,-4,6]"}).out == "des=2 maj=3 neg=3 fmaj=9\n");
  CHECK(call({"stats", "--format", "json", "(-4,-5)(2,1,-3)(6)"}).out ==
        "{\"des\":2,\"maj\":3,\"neg\":3,\"fmaj\":9}\n");
  CHECK(call({"stats", "--r", "3", "[2^1,1]"}).out == "des=1 maj=1 col=1 fmaj=4\n");
}

TEST_CASE("tabulate schema") {
  const Result r = call({"tabulate", "--domain", "CB", "--n", "3", "--stat", "des", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["domain"] == "CB");
  CHECK(j["n"] == 3);
  CHECK(j["stat"] == "des");
  CHECK(j["counts"]["1"].is_string());
  CHECK(call({"tabulate", "--domain", "B", "--n", "2", "--format", "csv"}).out == "value,count\n0,1\n1,6\n2,1\n");
  CHECK(call({"tabulate", "--domain", "B", "--n", "4", "--threads", "3"}).out ==
        call({"tabulate", "--domain", "B", "--n", "4"}).out);
}

TEST_CASE("exit codes") {
  CHECK(call({"verify", "--claim", "phi-descents", "--n", "4"}).code == 0);
  CHECK(call({"verify", "--claim", "phi-descents", "--n", "5", "--shard", "3/64"}).code == 0);
  CHECK(call({"verify", "--claim", "bogus"}).code == 2);
  CHECK(call({"verify", "--claim", "phi-descents", "--shard", "4/4"}).code == 2);
  CHECK(call({"stats", "[1,1]"}).code == 2);
  CHECK(call({"stats", "[1,"}).code == 2);
  CHECK(call({"tabulate", "--domain", "B", "--n", "14"}).code == 3);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"map", "--fn", "phi", "(1,-2)"}).code == 2);
  CHECK(call({"clt", "--domain", "CB", "--n", "3"}).code == 2);
}

TEST_CASE("seeded output is reproducible") {
  const std::vector<std::string> args{"sample", "--domain", "CD", "--n", "9", "--samples", "5", "--seed", "99"};
  const Result a = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == call(args).out);
  const std::vector<std::string> clt{"clt", "--domain", "CB", "--n", "20", "--samples", "2000", "--seed", "4"};
  CHECK(call(clt).out == call(clt).out);
}

TEST_CASE("verify output carries the digest") {
  const Result r = call({"verify", "--claim", "corollary-counts", "--n", "5", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["digest"].get<std::string>().size() == 16);
}
