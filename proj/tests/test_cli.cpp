#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

#ifndef BNLAT_EXE
#error "BNLAT_EXE must point at the bnlat binary"
#endif

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string("BNLAT_FORMAT= ") + BNLAT_EXE + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, VerifyGenusFive) {
  const CliRun r = run("verify --side k3 --H \"2L - 1/2 F1 - 1/2 F2 - 1/2 F3 - 1/2 F4\" --M \"3L - F1 - F2 - F4\"");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS  verify"), std::string::npos);
}

TEST(Cli, VerifyFailureExitsOne) {
  const CliRun r = run("verify --H \"2L - 1/2 F1 - 1/2 F2 - 1/2 F3 - 1/2 F4\" --M \"3L - F1 - F2\"");
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("failed: verify"), std::string::npos);
}

TEST(Cli, ParseErrorIsAnnotated) {
  const CliRun r = run("verify --H \"2L + 3*Q\" --M L");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("position 7"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("2L + 3*Q\n       ^"), std::string::npos) << r.out;
  EXPECT_EQ(run("verify --side enriques --H \"1 2 x\" --M \"1 2\"").code, 2);
  EXPECT_EQ(run("verify --side enriques --H \"1 2 0\" --M \"1 2\"").code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify --H L").code, 2);
  EXPECT_EQ(run("family").code, 2);
  EXPECT_EQ(run("family --k 0").code, 2);
  EXPECT_EQ(run("family --k-range 5..2").code, 2);
  EXPECT_EQ(run("dioph --beta 1 0 1/2 0").code, 2);
  EXPECT_EQ(run("dioph --beta 1 0 1/3 0").code, 2);
  EXPECT_EQ(run("search --side k3 --target \"3L - F1 - F2\" --radius 1").code, 2);
  EXPECT_EQ(run("phi --h 0 0 0 0 0 0 0 0 0 0").code, 2);
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("phi --help").code, 0);
}

TEST(Cli, DiophObstructionIsAFinding) {
  const CliRun r = run("dioph --json --beta 1 0 0 0 --search-radius 10");
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["items"][0]["parity_obstruction"], true);
  EXPECT_EQ(j["items"][1]["solutions"].size(), 0u);
}

TEST(Cli, DiophUndefinedFormula) {
  const CliRun r = run("dioph --json --beta 1 0 0.5 -0.5");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(nlohmann::json::parse(r.out)["items"][0]["two_s"], "undefined");
}

TEST(Cli, FamilyJson) {
  const CliRun r = run("family --k 3 --json");
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["items"][0]["certificate"]["squares"]["H2"], 24);
  EXPECT_EQ(j["items"][0]["certificate"]["g"], 13);
  EXPECT_EQ(j["command"], "family --k 3 --json");
}

TEST(Cli, EnvironmentSelectsFormat) {
  const std::string cmd = std::string("BNLAT_FORMAT=json ") + BNLAT_EXE + " inv-lattice";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  EXPECT_EQ(WEXITSTATUS(pclose(p)), 0);
  const auto j = nlohmann::json::parse(out);
  EXPECT_EQ(j["items"][0]["rank"], 10);
  EXPECT_EQ(j["items"][0]["determinant"], -1024);
}

TEST(Cli, SearchParallelMatchesSerial) {
  const std::string base = "search --json --side enriques --target \"1 2 0 0 0 0 0 0 0 0\" --radius 3";
  auto serial = nlohmann::json::parse(run(base).out);
  auto parallel = nlohmann::json::parse(run(base + " --parallel").out);
  EXPECT_EQ(serial["items"], parallel["items"]);
}

TEST(Cli, SuiteFaultExitsOne) {
  EXPECT_EQ(run("paper-suite").code, 0);
  const CliRun r = run("paper-suite --inject-theta-fault");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL  theta.isometry"), std::string::npos);
}
