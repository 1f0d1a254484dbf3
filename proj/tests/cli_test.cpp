#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "ideallab/cli.hpp"
#include "ideallab/classify.hpp"
#include "ideallab/parse.hpp"

using namespace ideallab;
using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  return cells;
}

}  // namespace

TEST_CASE("classify json for 12Z") {
  CliResult r = cli({"classify", "--ring", "Z", "--ideal", "(12)", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["ring"] == "Z");
  CHECK(j["ideal"] == "(12)");
  CHECK(j["radical"] == "(6)");
  CHECK(j["properties"]["primary"]["status"] == "refuted");
  CHECK(j["properties"]["one_absorbing_primary"]["status"] == "refuted");
  CHECK(j["properties"]["one_absorbing_primary"]["witness"] ==
        json::array({"13", "3", "4"}));
  CHECK(j["properties"]["two_absorbing_primary"]["status"] == "proven");
  CHECK(j["agreement"] == true);
}

TEST_CASE("classify kxy example") {
  CliResult r = cli({"classify", "--ring", "kxy", "--ideal", "x^2,x*y", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["radical"] == "x");
  CHECK(j["properties"]["primary"]["status"] == "refuted");
  CHECK(j["properties"]["primary"]["witness"] == json::array({"x", "y"}));
  CHECK(j["properties"]["one_absorbing_primary"]["status"] == "proven");
  CHECK(j["properties"]["one_absorbing_primary"]["method"] == "certificate");
}

TEST_CASE("classify zero ideal of Z/12") {
  CliResult r = cli({"classify", "--ring", "Z/12", "--ideal", "(0)", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["properties"]["one_absorbing_primary"]["status"] == "refuted");
  CHECK(j["properties"]["one_absorbing_primary"]["witness"] == json::array({"2", "2", "3"}));
}

TEST_CASE("scan zmod family") {
  CliResult r = cli({"scan", "--family", "zmod", "--n-range", "2..12", "--format", "csv"});
  REQUIRE(r.code == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() > 1);
  CHECK(lines[0] ==
        "ring,ideal,radical,prime,maximal,primary,one_abs,two_abs_primary,two_abs,method");
  i64 divisor_rows = 0;
  for (i64 n = 2; n <= 12; ++n) divisor_rows += static_cast<i64>(divisors_of(n).size());
  CHECK(static_cast<i64>(lines.size()) - 1 == divisor_rows);
  // the 1-absorbing column equals the primary column on every row
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = split_csv(lines[i]);
    REQUIRE(cells.size() == 10);
    CHECK(cells[5] == cells[6]);
  }
}

TEST_CASE("scan int family matches the prime powers") {
  CliResult r = cli({"scan", "--family", "int", "--n-range", "2..30", "--format", "csv"});
  REQUIRE(r.code == 0);
  auto lines = split_lines(r.out);
  std::vector<i64> proven;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = split_csv(lines[i]);
    if (cells[6] == "proven") {
      std::string ideal = cells[1];
      proven.push_back(std::stoll(ideal.substr(1, ideal.size() - 2)));
    }
  }
  CHECK(proven == std::vector<i64>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29});
}

TEST_CASE("scan prod family matches the componentwise form") {
  CliResult r = cli({"scan", "--family", "prod", "--left", "4", "--right", "9"});
  REQUIRE(r.code == 0);
  auto lines = split_lines(r.out);
  CHECK(lines.size() == 10);  // header + 9 ideals, whole ring marked with dashes
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = split_csv(lines[i]);
    if (cells[3] == "-") continue;
    RingHandle R = parse_ring(cells[0]);
    Ideal I = parse_ideal(R, cells[1]);
    Ideal c0 = I.component(0), c1 = I.component(1);
    bool form = (c0.is_whole() && c1.is_proper() && is_primary(c1).is_proven()) ||
                (c1.is_whole() && c0.is_proper() && is_primary(c0).is_proven());
    CHECK((cells[6] == "proven") == form);
  }
}

TEST_CASE("scan rows round trip through the library") {
  CliResult r = cli({"scan", "--family", "int", "--n-range", "2..20", "--format", "csv"});
  REQUIRE(r.code == 0);
  auto lines = split_lines(r.out);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = split_csv(lines[i]);
    RingHandle R = parse_ring(cells[0]);
    Ideal I = parse_ideal(R, cells[1]);
    ClassificationReport rep = classify_report(I, ScanLimits{});
    CHECK(rep.radical_ideal.str() == cells[2]);
    CHECK(status_str(rep.prime.status) == cells[3]);
    CHECK(status_str(rep.maximal.status) == cells[4]);
    CHECK(status_str(rep.primary.status) == cells[5]);
    CHECK(status_str(rep.one_absorbing_primary.status) == cells[6]);
    CHECK(status_str(rep.two_absorbing_primary.status) == cells[7]);
    CHECK(status_str(rep.two_absorbing.status) == cells[8]);
  }
}

TEST_CASE("kxy cells with commas are quoted in CSV") {
  CliResult r = cli({"scan", "--family", "monloc", "--degree-bound", "1"});
  REQUIRE(r.code == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[4].rfind("kxy,\"x,y\",\"x,y\",proven,proven,", 0) == 0);
}

TEST_CASE("verify exits with the violation signal") {
  CliResult ok = cli({"verify", "--theorem", "C1", "--max-n", "100"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("C1: instances=99 violations=0") != std::string::npos);

  CliResult bad = cli({"verify", "--theorem", "CHAIN", "--mutate", "2abs-implies-1abs",
                       "--max-n", "20", "--zmod-max", "20", "--prod-max", "4"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("(12)") != std::string::npos);

  CliResult unknown = cli({"verify", "--theorem", "T99"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("T99") != std::string::npos);

  CliResult badmut = cli({"verify", "--theorem", "CHAIN", "--mutate", "nonsense"});
  CHECK(badmut.code == 2);
}

TEST_CASE("construct through the CLI") {
  CliResult r = cli({"construct", "--kind", "xm", "--ring", "kxy", "--elem", "x"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("x^2,x*y") != std::string::npos);

  CliResult pm = cli({"construct", "--kind", "pm", "--ring", "kxy", "--prime", "x,y"});
  REQUIRE(pm.code == 0);
  CHECK(pm.out.find("x^2,x*y,y^2") != std::string::npos);

  CliResult fail = cli({"construct", "--kind", "xm", "--ring", "Zloc:5", "--elem", "p"});
  CHECK(fail.code == 2);
  CHECK(fail.err.find("maximal") != std::string::npos);
}

TEST_CASE("usage errors name the offending token") {
  CHECK(cli({"classify", "--ring", "Q", "--ideal", "(2)"}).code == 2);
  CHECK(cli({"classify", "--ring", "Q", "--ideal", "(2)"}).err.find("Q") != std::string::npos);
  CHECK(cli({"classify", "--ring", "Z"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"classify", "--ring", "Z", "--ideal", "(1)"}).code == 2);
  CHECK(cli({"scan", "--family", "int", "--n-range", "5"}).code == 2);
  CHECK(cli({"classify", "--ring", "Z", "--ideal", "(2)", "--bogus"}).code == 2);
}

TEST_CASE("classification that needs an unscannable quotient errors cleanly") {
  // the zero ideal of an integer factor leaves no finite residue system for
  // the 2-absorbing scans
  CliResult r = cli({"classify", "--ring", "ZxZ", "--ideal", "(0)x(9)"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("thread count survives a hostile environment variable") {
  for (const char* v : {"0", "-3", "garbage", "100000"}) {
    setenv("IDEALLAB_THREADS", v, 1);
    CliResult r = cli({"verify", "--theorem", "EX-e2"});
    CHECK(r.code == 0);
  }
  unsetenv("IDEALLAB_THREADS");
}

TEST_CASE("output bytes ignore the parallelism degree") {
  auto run_with_threads = [&](const char* threads, std::vector<std::string> args) {
    setenv("IDEALLAB_THREADS", threads, 1);
    CliResult r = cli(std::move(args));
    unsetenv("IDEALLAB_THREADS");
    return r;
  };
  std::vector<std::string> verify_args = {"verify",     "--theorem", "T1,T17,C1",
                                          "--max-n",    "60",        "--zmod-max",
                                          "30",         "--prod-max", "5",
                                          "--format",   "json"};
  CliResult v1 = run_with_threads("1", verify_args);
  CliResult v8 = run_with_threads("8", verify_args);
  CHECK(v1.code == v8.code);
  CHECK(v1.out == v8.out);

  std::vector<std::string> scan_args = {"scan", "--family", "zmod", "--n-range", "2..20"};
  CliResult s1 = run_with_threads("1", scan_args);
  CliResult s8 = run_with_threads("8", scan_args);
  CHECK(s1.out == s8.out);
}
