#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "dtcert/cli.hpp"
#include "dtcert/scan.hpp"

using namespace dtcert;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("triple parsing") {
  CHECK(cli::parse_triple("2,3,7") == Triple(2, 3, 7));
  CHECK_THROWS_AS(cli::parse_triple("2,3"), InvalidInput);
  CHECK_THROWS_AS(cli::parse_triple("2,3,x"), InvalidInput);
  CHECK_THROWS_AS(cli::parse_triple("2,,3"), InvalidInput);
  CHECK_THROWS_AS(cli::parse_triple("2,3,1"), InvalidInput);
}

TEST_CASE("certify exit codes") {
  const auto direct = run({"certify", "--triple", "2,3,7"});
  CHECK(direct.code == 0);
  CHECK(direct.out.find("DIRECT") != std::string::npos);

  const auto none = run({"certify", "--triple", "3,4,5"});
  CHECK(none.code == 1);
  CHECK(none.out.find("NONE") != std::string::npos);

  const auto bad = run({"certify", "--triple", "2,3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("--triple") != std::string::npos);  // usage text

  CHECK(run({"certify"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"certify", "--triple", "2,3,7", "--format", "xml"}).code == 2);
}

TEST_CASE("certify formats") {
  const auto j = run({"certify", "--triple", "2,3,7", "--format", "json"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["route"] == "DIRECT");
  CHECK(certificate_from_json(parsed) == certify({2, 3, 7}));

  const auto csv = run({"certify", "--triple", "2,5,7", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == csv_header() + "\n" + csv_row(certify({2, 5, 7})) + "\n");
}

TEST_CASE("scan verb") {
  const auto r = run({"scan", "--mode", "theorem1", "--q-max", "11", "--r-max", "11", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2,3,7,DIRECT") != std::string::npos);
  CHECK(r.out.find("2,3,11,DIRECT") != std::string::npos);
  CHECK(r.out.find("2,7,11,DIRECT") != std::string::npos);
  CHECK(r.out.find("2,3,5,") == std::string::npos);

  const auto p1 = run({"scan", "--mode", "all", "--q-max", "15", "--r-max", "15", "--all", "--jobs", "1"});
  const auto p8 = run({"scan", "--mode", "all", "--q-max", "15", "--r-max", "15", "--all", "--jobs", "8"});
  CHECK(p1.out == p8.out);

  CHECK(run({"scan", "--mode", "all", "--q-max", "2", "--r-max", "9"}).code == 2);
  CHECK(run({"scan", "--mode", "nope", "--q-max", "5", "--r-max", "9"}).code == 2);
  const auto io = run({"scan", "--mode", "all", "--q-max", "5", "--r-max", "9", "--output", "/nonexistent/x.csv"});
  CHECK(io.code == 3);
  CHECK(io.err.find("/nonexistent/x.csv") != std::string::npos);
}

TEST_CASE("signature verb") {
  const auto both = run({"signature", "--torus", "3", "7", "--method", "both"});
  CHECK(both.code == 0);
  CHECK(both.out == "T(3,7) genus=6 signature_count=-8 signature_seifert=-8\n");
  CHECK(run({"signature", "--torus", "2", "3", "--method", "count"}).out == "T(2,3) genus=1 signature_count=-2\n");
  CHECK(run({"signature", "--torus", "3", "6"}).code == 2);
  CHECK(run({"signature", "--torus", "3", "11", "--method", "seifert", "--limit", "10"}).code == 2);
}

TEST_CASE("certify with a cache") {
  const auto path = std::filesystem::temp_directory_path() / "dtcert_cli_cache.jsonl";
  std::filesystem::remove(path);
  const auto a = run({"certify", "--triple", "2,3,7", "--cache", path.string()});
  const auto b = run({"certify", "--triple", "2,3,7", "--cache", path.string()});
  CHECK(a.out == b.out);
  CHECK(std::filesystem::exists(path));
  InvariantCache cache(path);
  const auto rec = cache.lookup({2, 3, 7});
  REQUIRE(rec.has_value());
  CHECK(rec->invariants->b_plus() == 2);
  std::filesystem::remove(path);
}
