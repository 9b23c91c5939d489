#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tlfc_cli/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tlfc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented invocations") {
  CHECK(call({"mul", "n=4:[1,4]", "n=4:[4,4][3,3][1,1]"}).out == "delta^1 * n=4:[3,3][1,1]\n");
  CHECK(call({"mul", "n=4:[4,4][3,3][1,1]", "n=4:[1,4]"}).out == "delta^1 * n=4:[4,4][1,1]\n");
  CHECK(call({"count", "--n", "4", "--narayana"}).out == "1 10 20 10 1\n");
  CHECK(call({"count", "--n", "4", "--narayana", "--brute"}).out == "1 10 20 10 1\n");
  CHECK(call({"to-fc", "strings=2;1-2,1'-2'"}).out == "n=1:[1,1]\n");
}

TEST_CASE("enum and count") {
  CHECK(call({"enum", "--n", "2"}).out == "n=2:[]\nn=2:[1,1]\nn=2:[1,2]\nn=2:[2,2]\nn=2:[2,2][1,1]\n");
  CHECK(call({"enum", "--n", "2", "--p", "2", "--format", "csv"}).out ==
        "element,size,length,shape\nn=2:[2,2][1,1],2,2,slim\n");
  const auto j = nlohmann::json::parse(call({"enum", "--n", "1", "--json"}).out);
  CHECK(j.size() == 2);
  CHECK(call({"count", "--n", "8"}).out == "4862\n");
  CHECK(call({"count", "--n", "5", "--start", "3"}).out == "28\n");
  CHECK(call({"count", "--n", "5", "--start", "3", "--p", "2"}).out == "15\n");
  CHECK(call({"count", "--n", "5", "--first-block", "2", "4"}).out == "4\n");
  CHECK(call({"count", "--n", "5", "--start", "4", "--end", "1"}).out ==
        call({"count", "--n", "5", "--start", "4", "--end", "1", "--brute"}).out);
  // No formula for this combination: falls back to enumeration.
  const auto mixed = nlohmann::json::parse(call({"count", "--n", "5", "--p", "2", "--end", "3", "--start", "4", "--json"}).out);
  CHECK(mixed["method"] == "enumeration");
  CHECK(call({"count", "--n", "3", "--triangle"}).out == "1 3 5 5\n");
}

TEST_CASE("tables") {
  CHECK(call({"table", "--n", "2"}).out == "n 0 1 2\n0 1\n1 1 1\n2 1 3 1\n");
  CHECK(call({"table", "--n", "2", "--kind", "triangle", "--format", "csv"}).out ==
        "n,0,1,2\n0,1\n1,1,1\n2,1,2,2\n");
  const auto j = nlohmann::json::parse(call({"table", "--n", "3", "--kind", "start-end", "--json"}).out);
  CHECK(j["rows"].size() == 3);
}

TEST_CASE("diagrams") {
  CHECK(call({"to-diagram", "n=5:[4,5][3,3][1,1]"}).out == "strings=6;1-2,3-6,4-5,1'-2',3'-4',5'-6'\n");
  const auto j = nlohmann::json::parse(call({"to-diagram", "--json", "--trace", "n=3:[2,2][1,1]"}).out);
  CHECK(j["trace"]["positive"][0]["s"] == 2);
  CHECK(j["diagram"]["strings"] == 4);
  const std::string path = "tlfc_cli_test.svg";
  const Outcome r = call({"render", "n=2:[1,2]", "--svg", path});
  CHECK(r.code == 0);
  std::ifstream file(path);
  std::stringstream svg;
  svg << file.rdbuf();
  CHECK(svg.str().rfind("<svg", 0) == 0);
  std::remove(path.c_str());
  CHECK(call({"render", "strings=2;1-2,1'-2'"}).out.rfind("<svg", 0) == 0);
}

TEST_CASE("conversions") {
  CHECK(call({"convert", "--from", "fc", "--to", "ballot", "n=5:[4,5][3,3][1,1]"}).out == "+-++--++-+--\n");
  CHECK(call({"convert", "--from", "fc", "--to", "ballot", "--nb", "n=5:[4,5][3,3][1,1]"}).out ==
        "+-++--+-+-+-\n");
  CHECK(call({"convert", "--from", "ballot", "--to", "fc", "+-++--++-+--"}).out == "n=5:[4,5][3,3][1,1]\n");
  CHECK(call({"convert", "--from", "dyck", "--to", "diagram", "RURU"}).out == "strings=2;1-2,1'-2'\n");
  CHECK(call({"convert", "--from", "diagram", "--to", "dyck", "strings=2;1-1',2-2'"}).out == "RRUU\n");
  CHECK(call({"convert", "--from", "fc", "--to", "dyck", "--nb", "n=1:[]"}).code == 2);
}

TEST_CASE("census") {
  const std::string out = call({"census", "--n", "4", "--p", "2"}).out;
  CHECK(out.find("total 20 in 9 classes") != std::string::npos);
  const auto j = nlohmann::json::parse(call({"census", "--n", "2", "--p", "1", "--json"}).out);
  CHECK(j["total"] == "3");
}

TEST_CASE("verify") {
  const Outcome r = call({"verify", "--all", "--max-n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS lattice") != std::string::npos);
  CHECK(call({"verify", "fc_core", "--max-n", "3"}).out.rfind("PASS fc_core", 0) == 0);
  CHECK(call({"verify", "nonsense"}).code == 2);
  CHECK(call({"verify"}).code == 2);
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"count"}).code == 2);
  CHECK(call({"table", "--n", "3", "--kind", "bogus"}).code == 2);
  CHECK(call({"--help"}).code == 0);
  const Outcome bad = call({"to-diagram", "n=5:[3,3][4,5]"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("NotStandard") != std::string::npos);
  CHECK(call({"mul", "n=3:[1,1]", "n=4:[1,1]"}).code == 1);
  CHECK(call({"to-fc", "strings=2;1-2'"}).code == 1);
  CHECK(call({"convert", "--from", "ballot", "--to", "fc", "+--+"}).code == 1);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"census", "--n", "5", "--p", "3", "--format", "csv"};
  CHECK(call(args).out == call(args).out);
}
