#include "doctest.h"

#include "frobcoh/cli.hpp"
#include "frobcoh/errors.hpp"
#include "frobcoh/report.hpp"

#include <sstream>

using namespace frobcoh;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("int lists") {
  CHECK(cli::parse_int_list("5..8") == std::vector<std::int64_t>{5, 6, 7, 8});
  CHECK(cli::parse_int_list("3,5,7") == std::vector<std::int64_t>{3, 5, 7});
  CHECK(cli::parse_int_list("2,4..5") == std::vector<std::int64_t>{2, 4, 5});
  CHECK(cli::parse_int_list("9..5").empty());
  CHECK_THROWS_AS(cli::parse_int_list("a..b"), InvalidArgument);
  CHECK_THROWS_AS(cli::parse_int_list(""), InvalidArgument);
}

TEST_CASE("check") {
  SUBCASE("F*(omega^2)(1) on a quintic, p = 5") {
    const Run r = run({"check", "--degree", "5", "--char", "5", "--bundle", "F*(omega^2)(1)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("almost_ulrich: true") != std::string::npos);
  }
  SUBCASE("F*(omega^1)(1): V2 witness at m = 1") {
    const Run r = run({"check", "--degree", "5", "--char", "5", "--bundle", "F*(omega^1)(1)", "--format", "json",
                       "--no-timing"});
    CHECK(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["command"] == "check");
    CHECK(doc["classification"]["almost_ulrich"] == false);
    CHECK(doc["rows"][2]["condition"] == "V2");
    CHECK(doc["rows"][2]["witnesses"][0] == Json{{"i", 2}, {"m", 1}, {"k", 1}, {"dim", 1}});
    CHECK(doc["timing_ms"].is_null());
    CHECK(doc["summary"]["discrepancies"] == 0);
  }
  SUBCASE("non-prime characteristic") {
    const Run r = run({"check", "--degree", "5", "--char", "4", "--bundle", "O(1)"});
    CHECK(r.code == 2);
    CHECK(r.err.find("characteristic must be prime") != std::string::npos);
  }
  SUBCASE("syntax error") {
    const Run r = run({"check", "--degree", "5", "--char", "5", "--bundle", "F*(omega^2(1)"});
    CHECK(r.code == 2);
    CHECK(r.err.find("position 14") != std::string::npos);
  }
  SUBCASE("unrepresentable polarization") {
    const Run r = run({"check", "--degree", "4", "--char", "5", "--polarization", "omega^1", "--bundle", "O(1)"});
    CHECK(r.code == 2);
    CHECK(r.err.find("unrepresentable") != std::string::npos);
  }
  SUBCASE("pluricanonical polarization") {
    const Run r = run({"check", "--degree", "5", "--char", "3", "--polarization", "omega^5", "--bundle",
                       "F*(omega^6)(1)", "--format", "json"});
    CHECK(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["params"]["polarization"] == 5);
    CHECK(doc["resolved"]["inner_twist_old"] == 6);
    CHECK(doc["resolved"]["inner_twist_new"].is_null());
    CHECK(doc["classification"]["almost_ulrich"] == true);
  }
  SUBCASE("csv and markdown are projections of the rows") {
    const Run csv = run({"check", "--degree", "5", "--char", "5", "--bundle", "F*(O(2))(1)", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("condition,holds,checked_window,escape_certificate,witnesses,crosscheck\n", 0) == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 6);
    const Run md = run({"check", "--degree", "5", "--char", "5", "--bundle", "F*(O(2))(1)", "--format", "md"});
    CHECK(md.out.rfind("| condition |", 0) == 0);
  }
  SUBCASE("bad flags never crash") {
    CHECK(run({"check", "--degree", "five", "--char", "5", "--bundle", "O(1)"}).code == 2);
    CHECK(run({"check", "--char", "5", "--bundle", "O(1)"}).code == 2);
    CHECK(run({"check", "--degree", "5", "--char", "5", "--bundle", "O(1)", "--window", "-1"}).code == 2);
    CHECK(run({"check", "--degree", "5", "--char", "5", "--bundle", "O(1)", "--format", "xml"}).code == 2);
    CHECK(run({"check", "--degree", "0", "--char", "5", "--bundle", "O(1)"}).code == 2);
    CHECK(run({"check", "--degree", "5", "--char", "2", "--bundle", "F*(O(9000000000000000000))(9)"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
  }
  SUBCASE("help") { CHECK(run({"--help"}).code == 0); }
}

TEST_CASE("sweep") {
  SUBCASE("full unit grid") {
    const Run r = run({"sweep", "--degree", "5..12", "--char", "3,5,7,11,13", "--r", "1..6", "--no-timing"});
    CHECK(r.code == 0);
    const Json doc = Json::parse(r.out);
    REQUIRE(doc["rows"].size() == 240);
    CHECK(doc["summary"]["discrepancies"] == 0);
    bool saw_515 = false;
    bool saw_913 = false;
    for (const Json& row : doc["rows"]) {
      if (row["d"] == 5 && row["r"] == 1 && row["p"] == 5) {
        saw_515 = true;
        CHECK(row["expected"] == true);
        CHECK(row["observed"] == true);
      }
      if (row["d"] == 9 && row["r"] == 1 && row["p"] == 3) {
        saw_913 = true;
        CHECK(row["expected"] == false);
        CHECK(row["observed"] == false);
        CHECK(row["witnesses"][0]["condition"] == "V0");
      }
    }
    CHECK(saw_515);
    CHECK(saw_913);
  }
  SUBCASE("empty grid") {
    const Run r = run({"sweep", "--degree", "9..5", "--char", "3", "--r", "1"});
    CHECK(r.code == 2);
  }
  SUBCASE("pluricanonical mode") {
    const Run r = run({"sweep", "--degree", "5", "--char", "2,3,5", "--r", "1..6", "--polarization-mode",
                       "pluricanonical", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 19);
  }
  SUBCASE("non-prime in list") { CHECK(run({"sweep", "--degree", "5", "--char", "3,9", "--r", "1"}).code == 2); }
}

TEST_CASE("reproduce") {
  for (const std::string target : {"corrigendum-error", "remark-2", "corollary-table", "pluricanonical"}) {
    CAPTURE(target);
    const Run r = run({"reproduce", target});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS: ", 0) == 0);
  }
  const Run json = run({"reproduce", "corrigendum-error", "--format", "json", "--no-timing"});
  const Json doc = Json::parse(json.out);
  CHECK(doc["result"] == "PASS");
  CHECK(doc["diff"].empty());
  CHECK(run({"reproduce", "nonsense"}).code == 2);
}

TEST_CASE("json diff is field level") {
  const Json expected = Json::parse(R"({"a": 1, "b": [1, {"c": true}], "d": "x"})");
  const Json actual = Json::parse(R"({"a": 1, "b": [1, {"c": false}], "e": 0})");
  const auto diff = json_diff(expected, actual);
  REQUIRE(diff.size() == 2);
  CHECK(diff[0] == "$.b[1].c: expected true, got false");
  CHECK(diff[1] == "$.d: expected \"x\", got <missing>");
}

TEST_CASE("dimensions beyond 64 bits serialize as strings") {
  CHECK(dim_to_json(BigInt(35)) == 35);
  const BigInt big = BigInt(1) << 70;
  CHECK(dim_to_json(big) == big.str());
}
