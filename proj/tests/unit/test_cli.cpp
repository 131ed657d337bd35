#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "ulb/error.hpp"
#include "ulb_cli/commands.hpp"

using namespace ulb::cli;

namespace {

const std::filesystem::path kData = ULB_TEST_DATA_DIR;

struct Captured {
  int code = 0;
  std::string out;
  std::string err;
};

template <class Args, class Fn>
Captured run(Fn fn, const Args& args, Format format = Format::text) {
  std::ostringstream out;
  std::ostringstream err;
  Common common;
  common.format = format;
  const int code = fn(args, common, out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed-style binary and returns its exit status.
int exe(const std::string& args) {
  const std::string cmd = std::string(ULB_CLI_EXE) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Cli, BoundText) {
  const Captured r = run(cmd_bound, BoundArgs{4, 24, "newton"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("ULB     = 333"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("tau     = 5"), std::string::npos);
}

TEST(Cli, BoundJsonAndCsv) {
  const Captured j = run(cmd_bound, BoundArgs{4, 2, "gauss"}, Format::json);
  ASSERT_EQ(j.code, kOk);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_NEAR(doc["ulb"].get<double>(), 2.0 * std::exp(-4.0), 1e-12);
  EXPECT_EQ(doc["tau"], 0);

  const Captured c = run(cmd_bound, BoundArgs{4, 24, "newton"}, Format::csv);
  EXPECT_EQ(c.out.substr(0, c.out.find("\r\n")), "n,N,potential,tau,k,s,ulb,verified");
  EXPECT_NE(c.out.find(",333,true\r\n"), std::string::npos) << c.out;
}

TEST(Cli, BoundErrors) {
  EXPECT_EQ(run(cmd_bound, BoundArgs{4, 1.5, "newton"}).code, kUsage);
  EXPECT_EQ(run(cmd_bound, BoundArgs{4, 24, "coulomb"}).code, kUsage);
  EXPECT_EQ(run(cmd_bound, BoundArgs{2, 24, "newton"}).code, kUsage);
  const Captured r = run(cmd_bound, BoundArgs{4, 24, "riesz:-1"});
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, TableWithReference) {
  TableArgs args{4, 20, 25, "newton", (kData / "reference.csv").string()};
  const Captured r = run(cmd_table, args, Format::csv);
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("N,tau,s,ulb,energy,gap\r\n"), std::string::npos);
  EXPECT_NE(r.out.find("\r\n24,5,"), std::string::npos);
  EXPECT_NE(r.out.find(",333,334,1\r\n"), std::string::npos) << r.out;

  args.reference = (kData / "missing.csv").string();
  EXPECT_EQ(run(cmd_table, args).code, kIo);
  args.reference = (kData / "tetrahedron.txt").string();
  EXPECT_EQ(run(cmd_table, args).code, kUsage);
}

TEST(Cli, Curve) {
  const Captured r = run(cmd_curve, CurveArgs{4, -1.0, 0.9, 20}, Format::json);
  ASSERT_EQ(r.code, kOk);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["points"].size(), 20u);
  EXPECT_EQ(doc["points"][0]["L"].get<double>(), 2.0);
  EXPECT_EQ(run(cmd_curve, CurveArgs{4, 0.5, 0.2, 20}).code, kUsage);
}

TEST(Cli, TestfnAndVerdict) {
  const Captured t = run(cmd_testfn, TestfnArgs{4, 24, 9}, Format::json);
  ASSERT_EQ(t.code, kOk);
  const Captured v = run(cmd_verdict, VerdictArgs{10, 40, 2});
  EXPECT_EQ(v.code, kOk);
  EXPECT_NE(v.out.find("j0"), std::string::npos);
  const Captured v24 = run(cmd_verdict, VerdictArgs{4, 24, 4}, Format::json);
  const auto doc = nlohmann::json::parse(v24.out);
  EXPECT_EQ(doc["verdict"], "improvable");
}

TEST(Cli, EnergyAndImprove) {
  const Captured e = run(cmd_energy, EnergyArgs{"d4", "newton"}, Format::json);
  ASSERT_EQ(e.code, kOk) << e.err;
  EXPECT_EQ(nlohmann::json::parse(e.out)["energy"].get<double>(), 334.0);
  const Captured f = run(cmd_energy, EnergyArgs{"file:" + (kData / "tetrahedron.txt").string(), "log"});
  EXPECT_EQ(f.code, kOk);
  EXPECT_NE(f.err.find("warning"), std::string::npos);
  EXPECT_EQ(run(cmd_energy, EnergyArgs{"file:" + (kData / "bad_norm.txt").string(), "newton"}).code,
            kUsage);
  EXPECT_EQ(run(cmd_energy, EnergyArgs{"file:/nonexistent/x.txt", "newton"}).code, kIo);
  EXPECT_EQ(run(cmd_energy, EnergyArgs{"cube:3", "newton"}).code, kUsage);

  const Captured i = run(cmd_improve, ImproveArgs{4, 24, "newton", 8}, Format::json);
  ASSERT_EQ(i.code, kOk) << i.err;
  const double v = nlohmann::json::parse(i.out)["value"].get<double>();
  EXPECT_GT(v, 333.0);
  EXPECT_LE(v, 334.0);
  EXPECT_EQ(run(cmd_improve, ImproveArgs{4, 24, "newton", 6}).code, kUsage);
}

TEST(Cli, Deterministic) {
  for (Format f : {Format::text, Format::csv, Format::json}) {
    const Captured a = run(cmd_table, TableArgs{5, 10, 40, "gauss", std::nullopt}, f);
    const Captured b = run(cmd_table, TableArgs{5, 10, 40, "gauss", std::nullopt}, f);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, ToleranceFromEnvironment) {
  ::unsetenv("ULB_TOL");
  EXPECT_EQ(tolerance_from_env(1e-9), 1e-9);
  ::setenv("ULB_TOL", "1e-6", 1);
  EXPECT_EQ(tolerance_from_env(1e-9), 1e-6);
  ::setenv("ULB_TOL", "abc", 1);
  EXPECT_THROW(tolerance_from_env(1e-9), ulb::ParseError);
  ::unsetenv("ULB_TOL");
}

TEST(Cli, BinaryExitCodes) {
  EXPECT_EQ(exe("bound --n 4 --N 24"), 0);
  EXPECT_EQ(exe("bound --n 4 --N 24 --format json"), 0);
  EXPECT_EQ(exe("--help"), 0);
  EXPECT_EQ(exe("bound --n 4"), 1);
  EXPECT_EQ(exe("bound --n 4 --N 24 --format xml"), 1);
  EXPECT_EQ(exe("energy --code file:/nonexistent/x.txt"), 3);
  EXPECT_EQ(exe("frobnicate"), 1);
}
