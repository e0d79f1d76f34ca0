#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(LCDEG_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(LCDEG_DATA_DIR) + "/" + name; }

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, DeltaLocC5) {
  const auto r = run("--deterministic deltaloc " + data("c5.edges"));
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["delta_loc"], 2);
  EXPECT_EQ(j["method"], "full-enumeration");
  EXPECT_FALSE(j.contains("timestamp"));
}

TEST(Cli, DeltaLocK2WithOrbitCheck) {
  const auto r = run("deltaloc " + data("k2.edges") + " --orbit-check");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["delta_loc"], 1);
  EXPECT_EQ(j["orbit_verdict"], "AGREE");
  EXPECT_TRUE(j.contains("timestamp"));
}

TEST(Cli, CapRefusal) {
  EXPECT_EQ(run("deltaloc " + data("path40.edges")).code, 2);
  const auto r = run("deltaloc " + data("path40.edges") + " --bipartite");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["delta_loc"], 1);
  EXPECT_EQ(run("--cap-n 4 deltaloc " + data("c5.edges")).code, 2);
  setenv("LCDEG_CAP_N", "4", 1);
  EXPECT_EQ(run("deltaloc " + data("c5.edges")).code, 2);
  unsetenv("LCDEG_CAP_N");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("deltaloc").code, 2);
  EXPECT_EQ(run("deltaloc /nonexistent/file.edges").code, 2);
  EXPECT_EQ(run("--format yaml paley 5").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, Paley) {
  const auto r = run("--deterministic paley 5");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["delta_loc"], 2);
  EXPECT_NEAR(j["bound"].get<double>(), 0.736, 1e-3);
  EXPECT_TRUE(j["holds"].get<bool>());
  EXPECT_TRUE(j["char_sum_checks_passed"].get<bool>());
  EXPECT_EQ(run("paley 7").code, 2);
  EXPECT_EQ(run("paley 13 --verify-all").code, 0);
}

TEST(Cli, PaleyDot) {
  const auto r = run("--format dot paley 5");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("graph Pal5 {"), std::string::npos);
}

TEST(Cli, ReduceRepetition) {
  const auto r = run("--deterministic reduce " + data("repetition.mat"));
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["report"]["d_min"], 2);
  EXPECT_EQ(j["report"]["delta_loc_plus_1"], 2);
  EXPECT_TRUE(j["report"]["equal"].get<bool>());
  EXPECT_EQ(j["report"]["method"], "exact");
}

TEST(Cli, ReduceSingular) {
  const auto r = run("reduce " + data("singular.mat"));
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["report"]["d_min"], 0);
  EXPECT_EQ(j["report"]["method"], "short-circuit");
}

TEST(Cli, ReduceHammingTheoremAssisted) {
  const auto dir = std::filesystem::temp_directory_path() / "lcdeg_cli_bundle";
  std::filesystem::remove_all(dir);
  const auto r = run("--deterministic reduce " + data("hamming74.mat") +
                     " --gadget-side 10 --falsifier-trials 100000 --out-dir " + dir.string());
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["report"]["d_min"], 3);
  EXPECT_EQ(j["report"]["v1l_minimum"], 3);
  EXPECT_EQ(j["report"]["method"], "theorem-assisted");
  for (const char* f : {"aprime.mat", "gadget.edges", "composed.edges", "composed.dot", "manifest.json"})
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  std::filesystem::remove_all(dir);
}

TEST(Cli, ReducePreconditionFailure) {
  EXPECT_EQ(run("reduce " + data("hamming74.mat") + " --gadget-side 6 --required-d 3").code, 2);
}

TEST(Cli, Lll) {
  const auto b = parse(run("--deterministic lll bipartite"));
  EXPECT_NEAR(b["c_max"].get<double>(), 0.110, 5e-4);
  const auto g = parse(run("--deterministic lll general"));
  EXPECT_NEAR(g["c_max"].get<double>(), 0.189, 1e-3);
  EXPECT_EQ(run("lll tripartite").code, 2);
}

TEST(Cli, SampleIsDeterministic) {
  const std::string args = "--deterministic sample graph --size 10 --count 50 --seed 7";
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse(a)["samples"], 50);
  EXPECT_EQ(run("sample graph --size 31 --count 1").code, 2);
}

TEST(Cli, TextFormat) {
  const auto r = run("--deterministic --format text deltaloc " + data("c5.edges"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("delta_loc: 2"), std::string::npos);
  EXPECT_NE(r.out.find("method: full-enumeration"), std::string::npos);
}
