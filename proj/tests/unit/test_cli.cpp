#include <doctest.h>

#include <sstream>

#include "cyclicpir/cli.hpp"
#include "cyclicpir/json_io.hpp"

using namespace cyclicpir;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("code info with a defining set") {
  const auto r = run({"code", "info", "q=2 n=31 cosets=0,1,3", "--defining"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("[31,20,6]") != std::string::npos);
  CHECK(r.out.find("BCH bound: 6") != std::string::npos);

  const auto j = Json::parse(run({"--json", "code", "info", "q=2 n=31 cosets=0,1,3", "--defining"}).out);
  CHECK(j["k"] == 20);
  CHECK(j["bch"] == 6);
  CHECK(j["distance"]["exact"] == true);
  CHECK(j["distance"]["lower"] == 6);
  CHECK(j["defining_cosets"] == Json::array({0, 1, 3}));
}

TEST_CASE("star and dual") {
  const auto j = Json::parse(run({"star", "q=2 n=7 cosets=0", "q=2 n=7 cosets=0,1", "--json"}).out);
  CHECK(j["cosets"] == Json::array({0, 1}));
  CHECK(j["k"] == 4);
  const auto d = Json::parse(run({"--json", "dual", "q=2 n=7 cosets=0,1"}).out);
  CHECK(d["cosets"] == Json::array({1}));
  CHECK(d["k"] == 3);
  CHECK(run({"star", "q=2 n=7 cosets=0", "q=2 n=15 cosets=0"}).code == kExitUsage);
}

TEST_CASE("malformed input exits 2 with a position marker") {
  const auto r = run({"code", "info", "q=2 n=31 cosets=0,1,x"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("position 20") != std::string::npos);
  CHECK(r.err.find("\n                      ^") != std::string::npos);
  CHECK(run({"code", "info", "q=2 n=30 cosets=1"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--budget", "0", "coset", "7"}).code == kExitUsage);
  CHECK(run({"--budget", "2000000000", "coset", "7"}).code == kExitUsage);
  CHECK(run({"table", "2"}).code == kExitUsage);
  CHECK(run({"rm", "build", "9", "3"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("coset listing") {
  const auto j = Json::parse(run({"--json", "coset", "15"}).out);
  REQUIRE(j.size() == 5);
  CHECK(j[3]["leader"] == 5);
  CHECK(j[3]["members"] == Json::array({5, 10}));
  const auto one = Json::parse(run({"--json", "coset", "127", "--of", "10"}).out);
  CHECK(one[0]["leader"] == 5);
}

TEST_CASE("rm subcommands") {
  CHECK(run({"rm", "build", "1", "3"}).out.find("[8,4,4]") != std::string::npos);
  CHECK(run({"rm", "puncture", "2", "5"}).out.find("[31,16,7]") != std::string::npos);
  CHECK(run({"rm", "shorten", "2", "5"}).out.find("[31,15,8]") != std::string::npos);
  const auto j = Json::parse(run({"--json", "rm", "as-cyclic", "1", "7"}).out);
  CHECK(j["cosets"] == Json::array({0, 1}));
  CHECK(j["k"] == 8);
  const auto s = Json::parse(run({"--json", "rm", "as-cyclic", "1", "7", "--shortened"}).out);
  CHECK(s["k"] == 7);
}

TEST_CASE("pir eval JSON round-trips and re-evaluates to the same report") {
  const auto r = run({"--json", "--seed", "5", "pir", "eval", "q=2 n=63 cosets=21",
                      "q=2 n=63 cosets=0,1,3,7,9,11,15,21,23,27,31"});
  REQUIRE(r.code == kExitOk);
  const auto j = Json::parse(r.out);
  const auto p = j.get<PirParameters>();
  CHECK(Json(p) == j);
  CHECK(p.privacy_lo == 19);
  CHECK(j["rate"] == "6/63");

  SchemeOptions opts;
  opts.distance.budget = p.retrieval_dual.distance.budget;
  opts.distance.seed = p.retrieval_dual.distance.seed;
  const auto again = evaluate_scheme(parse_code_spec(p.storage.spec), parse_code_spec(p.retrieval.spec), opts);
  CHECK(again == p);
}

TEST_CASE("distance reports with an infinite bound serialize as null") {
  DistanceReport d;
  d.upper = kInfiniteDistance;
  const Json j = d;
  CHECK(j["upper"].is_null());
  CHECK(j.get<DistanceReport>() == d);
}

TEST_CASE("pir privacy-check exit codes") {
  CHECK(run({"pir", "privacy-check", "q=2 n=7 cosets=0,1", "3"}).code == kExitOk);
  const auto r = run({"--json", "pir", "privacy-check", "q=2 n=7 cosets=0,1", "4", "--mode", "exhaustive"});
  CHECK(r.code == kExitMismatch);
  const auto j = Json::parse(r.out);
  CHECK(j["pass"] == false);
  CHECK(j["witness"].size() == 4);
  CHECK(run({"pir", "privacy-check", "q=2 n=7 cosets=0,1", "3", "--mode", "maybe"}).code == kExitUsage);
}

TEST_CASE("pir simulate recovers every file and writes a transcript") {
  const auto r = run({"--transcript", "-", "--seed", "11", "pir", "simulate", "q=2 n=7 cosets=0,1",
                      "q=2 n=7 cosets=0", "--files", "2", "--rows", "2"});
  CHECK(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t entries = 0, summaries = 0;
  while (std::getline(lines, line)) {
    if (line.starts_with("{")) {
      const auto j = Json::parse(line);
      CHECK(j.contains("queries_digest"));
      CHECK(j.contains("S"));
      ++entries;
    } else if (line.find("recovered") != std::string::npos) {
      ++summaries;
    }
  }
  CHECK(entries > 0);
  CHECK(summaries == 2);
  CHECK(run({"pir", "simulate", "q=2 n=7 cosets=0", "q=2 n=7 cosets=0", "--file", "5"}).code == kExitUsage);
}

TEST_CASE("search from the command line") {
  const auto r = run({"--json", "search", "--n", "31", "--d-cosets", "2", "--min-privacy", "2", "--top", "3"});
  REQUIRE(r.code == kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["partial"] == false);
  CHECK(j["hits"].size() == 3);
  CHECK(j["hits"][0]["parameters"]["privacy"]["lo"] >= 2);
  CHECK(run({"search", "--n", "31", "--pool", "2"}).code == kExitUsage);
  CHECK(run({"search", "--n", "31", "--min-rate", "half"}).code == kExitUsage);
}

TEST_CASE("table exit codes follow the mismatch rule") {
  const auto ok = run({"--json", "table", "3", "--rows", "2"});
  CHECK(ok.code == kExitOk);
  const auto j = Json::parse(ok.out);
  CHECK(j["summary"]["mismatch"] == 0);
  CHECK(j["rows"][0]["parameters"]["rate"] == "63/127");
  const auto bad = run({"table", "1", "--rows", "5"});
  CHECK(bad.code == kExitMismatch);
  CHECK(bad.out.find("MISMATCH") != std::string::npos);
}
