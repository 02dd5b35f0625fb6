#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pisot/report.hpp"
#include "pisot_cli/cli.hpp"

using namespace pisot;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "pisot_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("csv formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-300) == "1e-300");
  CHECK(format_double(-0.0) == "-0");
  const double x = 0.025764015798928251;
  CHECK(std::stod(format_double(x)) == x);
  std::ostringstream s;
  CsvWriter w(s);
  w.header({"a", "b,c"});
  w.row({1.5, std::int64_t{-3}, std::string("say \"hi\"")});
  CHECK(s.str() == "a,\"b,c\"\n1.5,-3,\"say \"\"hi\"\"\"\n");
  std::ostringstream empty;
  CsvWriter(empty).header({"y", "re"});
  CHECK(empty.str() == "y,re\n");
}

TEST_CASE("svg output") {
  SvgPlot p{"t", "x", "y", {{0.0, 0.0}, {1.0, 2.0}}};
  const std::string svg = render_svg(p);
  CHECK(svg == render_svg(p));
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("points=\"70.00,370.00 880.00,40.00\"") != std::string::npos);
}

TEST_CASE("field-check") {
  const Run r = run({"field-check", "--poly", "-1,-1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PV, degree 2, conjugate modulus 0.6180\n", 0) == 0);
  CHECK(run({"field-check", "--poly", "-2,0"}).out.rfind("not-PV", 0) == 0);
  CHECK(run({"field-check", "--poly", "-1,0"}).code == 2);
  CHECK(run({"field-check", "--poly", "x"}).code == 2);
}

TEST_CASE("usage errors") {
  const Run unknown = run({"field-check", "--frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("--frobnicate") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"symbol-scan", "--step", "-1"}).code == 2);
  CHECK(run({"phihat-orbit", "--mask", "nonesuch"}).code == 2);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  for (const char* cmd : {"field-check", "symbol-scan", "phihat-orbit", "bernoulli", "lattice-density", "zeros-scan",
                          "vanishing-probe", "norms-count", "equidistribution"}) {
    CHECK(help.out.find(cmd) != std::string::npos);
  }
}

TEST_CASE("io errors exit 3") {
  CHECK(run({"bernoulli", "--out", "/nonexistent-dir/x.csv"}).code == 3);
}

TEST_CASE("phihat-orbit csv") {
  const Run r = run({"phihat-orbit", "--mask", "dyadic", "--lambda", "1", "--jmax", "40"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("J,re,im,abs,truncation_error\n", 0) == 0);
  CHECK(r.out.find("\n40,0.0257640157989") != std::string::npos);
  const Run v = run({"phihat-orbit", "--mask", "golden_vector", "--lambda", "1", "--jmax", "3"});
  CHECK(v.out.rfind("J,component,re,im,abs,truncation_error\n", 0) == 0);
}

TEST_CASE("symbol-scan writes csv and svg deterministically") {
  const auto csv1 = scratch("scan1.csv");
  const auto csv2 = scratch("scan2.csv");
  REQUIRE(run({"symbol-scan", "--mask", "dyadic", "--range", "0:16", "--step", "0.01", "--out", csv1.string(), "--svg",
               "--threads", "1"})
              .code == 0);
  REQUIRE(run({"symbol-scan", "--mask", "dyadic", "--range", "0:16", "--step", "0.01", "--out", csv2.string(), "--svg",
               "--threads", "4"})
              .code == 0);
  CHECK(slurp(csv1) == slurp(csv2));
  CHECK(slurp(scratch("scan1.svg")) == slurp(scratch("scan2.svg")));
  CHECK(slurp(csv1).rfind("y,re,im,abs,truncation_error\n", 0) == 0);
}

TEST_CASE("config files") {
  const auto cfg = scratch("run.cfg");
  {
    std::ofstream c(cfg);
    c << "# golden mean check\ncommand = field-check\npoly = -1,-1,0\n";
  }
  const Run r = run({"--config", cfg.string()});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PV, degree 3", 0) == 0);
  // command line wins
  const Run o = run({"--config", cfg.string(), "--poly", "-1,-1"});
  CHECK(o.out.rfind("PV, degree 2", 0) == 0);
  CHECK(run({"--config", scratch("missing.cfg").string()}).code == 3);
}

TEST_CASE("every subcommand runs") {
  CHECK(run({"bernoulli", "--jmax", "10"}).code == 0);
  CHECK(run({"lattice-density", "--L", "1000"}).code == 0);
  CHECK(run({"zeros-scan", "--mask", "boxcar", "--L", "20"}).code == 0);
  CHECK(run({"vanishing-probe", "--mask", "bernoulli", "--lambda", "1;1,1", "--jmax", "20"}).code == 0);
  CHECK(run({"norms-count", "--L", "1000"}).code == 0);
  CHECK(run({"equidistribution", "--samples", "1000", "--n", "2"}).code == 0);
  const Run ld = run({"lattice-density", "--L", "1000", "--threads", "3"});
  CHECK(ld.out == run({"lattice-density", "--L", "1000"}).out);
  CHECK(ld.out.rfind("L,count,density,gamma,rel_err,duplicates\n", 0) == 0);
}

TEST_CASE("precision override") {
  setenv("PISOT_PRECISION_BITS", "256", 1);
  CHECK(run({"field-check", "--poly", "-1,-1"}).code == 0);
  setenv("PISOT_PRECISION_BITS", "12", 1);
  CHECK(run({"field-check", "--poly", "-1,-1"}).code == 2);
  unsetenv("PISOT_PRECISION_BITS");
}

}  // TEST_SUITE
