#include "sixj/cli.hpp"
#include "sixj/identities.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sixj;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sixj_test_" + name);
}

} // namespace

TEST_CASE("exact") {
  Run r = run({"exact", "1", "1", "1", "1", "1", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "96"));
  CHECK(contains(r.out, "1/24 1/24 1/24 1/24"));
  CHECK(contains(r.out, "1/6 · √1"));
  CHECK(contains(r.out, "0.16666667"));

  r = run({"exact", "1", "1", "1", "0", "1", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "-1/3 · √1"));
  CHECK(contains(r.out, "-0.33333333"));

  r = run({"exact", "1/2", "1/2", "2", "1", "1", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "decimal"));
  CHECK(contains(r.out, " 0\n"));

  r = run({"--digits", "4", "exact", "1", "1", "1", "1", "1", "1"});
  CHECK(contains(r.out, "0.1667\n"));
  r = run({"exact", "1", "1", "1", "1", "1", "1", "--digits", "12"});
  CHECK(contains(r.out, "0.166666666667\n"));
}

TEST_CASE("usage and domain errors exit with 2") {
  CHECK(run({"exact", "1", "1", "1"}).code == 2);
  CHECK(run({"exact", "1", "x", "1", "1", "1", "1"}).code == 2);
  CHECK(run({"exact", "1.25", "1", "1", "1", "1", "1"}).code == 2);
  CHECK(run({"exact", "1", "1", "1", "1", "1", "1", "--digits", "0"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  const Run r = run({"exact", "-1", "1", "1", "1", "1", "1"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "error"));
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("geometry") {
  Run r = run({"geometry", "1", "1", "1", "1", "1", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Delta               8"));
  CHECK(contains(r.out, "0.11785113"));
  CHECK(contains(r.out, "1.91063324"));
  CHECK(contains(r.out, "x = 11/3 ± i·√2/6"));

  r = run({"geometry", "3", "5", "4", "3", "5", "4"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Degenerate"));
  CHECK(contains(r.out, "0.00000000"));
  CHECK(contains(r.out, "72/5"));

  r = run({"geometry", "8", "8", "8", "9/2", "9/2", "9/2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Minkowskian"));
}

TEST_CASE("check") {
  Run r = run({"check", "1", "1", "1", "1", "1", "1"});
  CHECK(r.code == 0);
  CHECK_FALSE(contains(r.out, "FAIL"));
  CHECK_FALSE(contains(r.out, "SKIPPED"));

  r = run({"check", "3", "5", "4", "3", "5", "4"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PASS    discriminant-volume"));
  CHECK(contains(r.out, "SKIPPED cancellation h+Re f"));
  CHECK_FALSE(contains(r.out, "FAIL"));

  r = run({"check", "2", "3", "4", "5/2", "7/2", "9/2"});
  CHECK(r.code == 0);
  CHECK_FALSE(contains(r.out, "FAIL"));
  CHECK(contains(r.out, "PASS    decay saddle"));

  CHECK(run({"check", "1/2", "1/2", "2", "1", "1", "1"}).code == 2);
}

TEST_CASE("identity suite on many sextets") {
  for (const auto& d : std::vector<std::array<std::int64_t, 6>>{
           {10, 12, 8, 9, 7, 11}, {2, 2, 2, 2, 2, 2}, {20, 20, 20, 20, 20, 20}, {0, 2, 2, 2, 2, 2},
           {16, 16, 16, 9, 9, 9}, {1, 1, 2, 1, 1, 2}}) {
    const SpinSextet s = SpinSextet::from_doubled(d);
    const auto results = run_identity_suite(s);
    INFO(s.to_string());
    CHECK(all_passed(results));
  }
}

TEST_CASE("scan writes a deterministic CSV") {
  const auto a = temp_file("a.csv");
  const auto b = temp_file("b.csv");
  Run r = run({"scan", "1", "1", "1", "1", "1", "1", "--k-min", "5", "--k-max", "160", "--doubling",
               "--output", a.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "median env_rel_err"));
  r = run({"--output", b.string(), "scan", "1", "1", "1", "1", "1", "1", "--ks", "5,10,20,40,80,160",
           "--threads", "1"});
  CHECK(r.code == 0);
  const std::string ta = slurp(a);
  CHECK(ta == slurp(b));
  CHECK(ta.rfind("k,exact,pr,amplitude,abs_err,env_rel_err,phase\n5,", 0) == 0);
  std::filesystem::remove(a);
  std::filesystem::remove(b);

  r = run({"scan", "1", "1", "1", "1", "1", "1", "--ks", "1", "--output", "-"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\n1,1.66666666666666657e-01,"));
}

TEST_CASE("scan errors") {
  Run r = run({"scan", "3", "5", "4", "3", "5", "4", "--k-min", "1", "--k-max", "4", "--output", "-"});
  CHECK(r.code == 2);
  r = run({"scan", "8", "8", "8", "9/2", "9/2", "9/2", "--k-min", "1", "--k-max", "4", "--output", "-"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "decay"));
  CHECK(run({"scan", "1", "1", "1", "1", "1", "1", "--ks", "4,2", "--output", "-"}).code == 2);
  CHECK(run({"scan", "1", "1", "1", "1", "1", "1", "--output", "-"}).code == 2);
  CHECK(run({"scan", "1", "1", "1", "1", "1", "1", "--ks", "1", "--output", "/nonexistent/dir/x.csv"}).code == 2);
}

TEST_CASE("decay") {
  Run r = run({"decay", "8", "8", "8", "9/2", "9/2", "9/2", "10", "60"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "predicted rate      -0.19534448"));
  CHECK(contains(r.out, "fitted slope        -0.195"));
  CHECK(run({"decay", "1", "1", "1", "1", "1", "1", "10", "60"}).code == 2);
  CHECK(run({"decay", "8", "8", "8", "9/2", "9/2", "9/2", "10", "12"}).code == 2);
  CHECK(run({"decay", "8", "8", "8", "9/2", "9/2", "9/2", "10", "x"}).code == 2);
}

TEST_CASE("integral") {
  Run r = run({"integral", "3", "3", "3", "3", "4", "4", "4", "40", "400"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "estimate            1.82830"));
  CHECK(contains(r.out, "exact               1.8283069738e-03"));
  CHECK(r.err.empty());

  r = run({"integral", "30", "32", "24", "28", "38", "38", "38", "1", "400"});
  CHECK(r.code == 0);
  CHECK(contains(r.err, "warning: endpoint terms"));

  CHECK(run({"integral", "5", "3", "3", "3", "4", "4", "4", "40", "400"}).code == 2);
  CHECK(run({"integral", "3", "3", "3", "3", "4", "4", "4", "40"}).code == 2);
  CHECK(run({"integral", "3", "3", "3", "3", "4", "4", "4", "40", "50"}).code == 2);

  r = run({"integral", "2.6", "3", "3", "3.4", "4", "4", "4", "10", "400"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "estimate"));
}
