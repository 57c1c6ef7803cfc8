#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "svir/cli.hpp"
#include "svir/json_io.hpp"

using namespace svir;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("coset table for m=3") {
  const Run r = run({"coset", "--m", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("c = 7/10") != std::string::npos);
  CHECK(r.out.find("6 sectors") != std::string::npos);
  CHECK(r.out.find("(0,1,1)~(1,2,1)") != std::string::npos);
  CHECK(r.out.find("3/80") != std::string::npos);
}

TEST_CASE("JSON output parses back") {
  const Run r = run({"coset", "--m", "4", "--json"});
  REQUIRE(r.code == 0);
  CHECK(coset_data_from_json(Json::parse(r.out)) == build_coset_data(4));
  const Run s = run({"su2", "--level", "3", "--json"});
  REQUIRE(s.code == 0);
  CHECK(level_data_from_json(Json::parse(s.out)) == build_level_data(3));
}

TEST_CASE("invariants at m=4") {
  const Run r = run({"invariants", "--m", "4", "--mode", "full"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(A_3, D_4)") != std::string::npos);
  const Run j = run({"invariants", "--m", "4", "--mode", "full", "--json"});
  const auto list = invariant_list_from_json(Json::parse(j.out));
  CHECK(list.size() >= 2);
  const Run f = run({"invariants", "--m", "28", "--mode", "firstrow"});
  CHECK(f.code == 0);
  CHECK(f.out.find("(A_27, E_8)") != std::string::npos);
}

TEST_CASE("index") {
  const Run r = run({"index", "--m", "4", "--json"});
  REQUIRE(r.code == 0);
  CHECK(index_report_from_json(Json::parse(r.out)).rounded_index == 1);
  const Run minus = run({"index", "--m", "6", "--branch", "minus"});
  CHECK(minus.code == 0);
  CHECK(minus.out.find("rounded_index = -1") != std::string::npos);
  const Run odd = run({"index", "--m", "3"});
  CHECK(odd.code == 2);
  CHECK(odd.err.find("odd m=3") != std::string::npos);
}

TEST_CASE("mckean-singer") {
  const Run r = run({"mckean-singer", "--dims", "5,3", "--seed", "7", "--ts", "0.5,1,2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  const Run j = run({"mckean-singer", "--dims", "4,6", "--seed", "1", "--ts", "1", "--planted", "2", "--json"});
  REQUIRE(j.code == 0);
  CHECK(mckean_singer_report_from_json(Json::parse(j.out)).index == -2);
  CHECK(run({"mckean-singer", "--dims", "5", "--seed", "7", "--ts", "1"}).code == 2);
  CHECK(run({"mckean-singer", "--dims", "2,2", "--seed", "7", "--ts", "1", "--planted", "3"}).code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"coset"}).code == 2);
  CHECK(run({"coset", "--m", "two"}).code == 2);
  CHECK(run({"coset", "--m", "2"}).code == 2);
  CHECK(run({"invariants", "--m", "4", "--mode", "partial"}).code == 2);
  CHECK(run({"invariants", "--m", "14", "--mode", "full"}).code == 2);
  CHECK(run({"su2", "--level", "-1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify is deterministic and honours the exit code") {
  const Run a = run({"verify", "--m", "4,6"});
  const Run b = run({"verify", "--m", "4,6"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("14/14 criteria passed") != std::string::npos);
  const Run j = run({"verify", "--m", "4", "--json"});
  CHECK(Json::parse(j.out)["payload"]["all_passed"] == true);

  // A tolerance nothing can meet must fail the suite.
  ::setenv("SVIR_TOL", "1e-300", 1);
  const Run strict = run({"verify", "--m", "4"});
  CHECK(strict.code == 1);
  CHECK(strict.out.find("FAIL") != std::string::npos);
  ::setenv("SVIR_TOL", "abc", 1);
  CHECK(run({"verify", "--m", "4"}).code == 2);
  ::unsetenv("SVIR_TOL");
}
