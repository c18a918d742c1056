#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rctrs/cli.hpp"
#include "rctrs/codespec_io.hpp"
#include "rctrs/report.hpp"

using namespace rctrs;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("rctrs_test_" + name)).string();
}

std::string write_golden(const std::string& name, std::size_t which = 0) {
  const std::string path = temp_path(name + std::to_string(which) + ".spec");
  codespec_write_file(path, golden_cases(name)[which].spec);
  return path;
}

}  // namespace

TEST_CASE("reproduce single examples") {
  Run r = run({"reproduce", "--example", "17"});
  CHECK(r.code == 0);
  CHECK(r.out.find("params=[8,4,5] d_method=enumeration") != std::string::npos);
  CHECK(r.out.find("mds=true method=both") != std::string::npos);
  CHECK(r.out.find("schur_dim=8") != std::string::npos);
  r = run({"reproduce", "--example", "23_2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("params=[11,4,8]") != std::string::npos);
  CHECK(r.out.find("params=[12,4,9]") != std::string::npos);
  CHECK(r.out.find("non_rs=true") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("reproduce all is deterministic") {
  const Run a = run({"reproduce", "--example", "all"});
  const Run b = run({"reproduce", "--example", "all"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"reproduce", "--example", "all", "--verbose"}).out.find("matrix:") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"reproduce", "--example", "99"}).code == 2);
  CHECK(run({"check-mds", "/nonexistent/file.spec"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("check-mds on a spec with duplicate alphas") {
  const std::string path = temp_path("dup.spec");
  {
    std::ofstream f(path);
    f << "field 13\nfamily GRS\nn 3\nk 2\nalphas 1,2,2\n";
  }
  const Run r = run({"check-mds", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("ValidationError") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("check-mds verdicts and exit codes") {
  const std::string good = write_golden("29_2", 1);
  Run r = run({"check-mds", good});
  CHECK(r.code == 0);
  CHECK(r.out == "mds=true method=both\n");
  CHECK(run({"check-mds", good, "--method", "closed"}).out == "mds=true method=closed_form_hk1\n");
  CHECK(run({"check-mds", good, "--method", "minors"}).out == "mds=true method=minors\n");

  const std::string bad = temp_path("bad.spec");
  {
    std::ofstream f(bad);
    // points 2 and 4 multiply to 1
    f << "field 7\nfamily RCTRS\nn 6\nk 2\nalphas 1,2,3,4,5\nb 6\nc 0\nlambda 3\neta 1\n";
  }
  r = run({"check-mds", bad});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("mds=false witness=[", 0) == 0);
  std::remove(bad.c_str());
  std::remove(good.c_str());
}

TEST_CASE("schur-dim, distance and distinguish") {
  const std::string f17 = write_golden("17");
  CHECK(run({"schur-dim", f17}).out == "schur_dim=8 non_rs=true ctrs_incompatible=undetermined\n");
  CHECK(run({"distance", f17}).out == "d=5 method=enumeration\n");
  CHECK(run({"distance", f17, "--budget", "100"}).out == "d=5 method=minors\n");
  const std::string f29 = write_golden("29_2");
  CHECK(run({"distinguish", f29, "--target", "ctrs"}).out == "target=ctrs inequivalent=true schur_dim=9\n");
  CHECK(run({"distinguish", f29, "--target", "rs"}).out == "target=rs inequivalent=true schur_dim=9\n");
  std::remove(f17.c_str());
  std::remove(f29.c_str());
}

TEST_CASE("distance budget from the environment") {
  const std::string f17 = write_golden("17");
  setenv("RCTRS_DISTANCE_BUDGET", "10", 1);
  CHECK(run({"distance", f17}).out == "d=5 method=minors\n");
  unsetenv("RCTRS_DISTANCE_BUDGET");
  CHECK(run({"distance", f17}).out == "d=5 method=enumeration\n");
  std::remove(f17.c_str());
}

TEST_CASE("construct writes a readable codespec") {
  Run r = run({"construct", "subgroup", "--field", "23^2", "--order", "11", "--b", "12", "--c", "7", "--lambda", "5",
               "--eta", "g", "--k", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("# guarantee mds=1 non_rs=1") != std::string::npos);
  std::stringstream ss(r.out);
  CHECK(codespec_read(ss) == golden_cases("23_2").front().spec);

  r = run({"construct", "subfield-chain", "--field", "7^4", "--alphas", "0,1,2,3,4,5", "--b", "6", "--c", "5",
           "--lambda", "g@2", "--eta", "g", "--k", "3", "--extended"});
  REQUIRE(r.code == 0);
  std::stringstream chain(r.out);
  CHECK(codespec_read(chain) == golden_cases("7_4")[1].spec);

  r = run({"construct", "subgroup", "--field", "23^2", "--order", "11", "--b", "12", "--c", "7", "--lambda", "2",
           "--eta", "g", "--k", "4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("MembershipViolation") != std::string::npos);

  r = run({"construct", "subgroup", "--field", "17", "--order", "8", "--b", "1", "--c", "2", "--lambda", "10",
           "--eta", "4", "--k", "4", "--unguaranteed"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# guarantee mds=0 non_rs=0 ctrs_incompatible=0") != std::string::npos);
}

TEST_CASE("export and import") {
  const std::string spec = write_golden("17");
  const std::string mat = temp_path("f17.mat");
  CHECK(run({"export", spec, "-o", mat}).code == 0);
  const Run r = run({"import", mat});
  CHECK(r.code == 0);
  CHECK(r.out.find("params=[8,4,5]") != std::string::npos);
  CHECK(r.out.find("mds=true method=minors") != std::string::npos);
  CHECK(r.out.find("schur_dim=8") != std::string::npos);
  const Run stdout_export = run({"export", spec});
  CHECK(stdout_export.out.rfind("17 1 4 8\n", 0) == 0);
  std::remove(spec.c_str());
  std::remove(mat.c_str());
}

TEST_CASE("field-info") {
  const Run r = run({"field-info", "--field", "7^4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("order=2401") != std::string::npos);
  CHECK(r.out.find("subfield degree=2 order=49") != std::string::npos);
  CHECK(run({"field-info", "--field", "6"}).code == 2);
}
