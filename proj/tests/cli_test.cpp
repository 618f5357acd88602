#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(NIREL_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

TEST(Cli, ComposeHalfC) {
  const auto r = run("compose --v1 0.5 --v2 0.5");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["v"][0], 0.8);
}

TEST(Cli, ComposePathsAgreeAtOneDimension) {
  const std::string flags = " --v1 0.3 --f1 1.5 --r1 -0.5 --m1 2 --v2 -0.6 --f2 0.25 --r2 1 --m2 -1 --c 2";
  const auto a = run("compose" + flags), b = run("compose --closed-form" + flags);
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  json ja = json::parse(a.out), jb = json::parse(b.out);
  ja.erase("method");
  jb.erase("method");
  EXPECT_EQ(ja, jb);
}

TEST(Cli, ComposeIdentity) {
  const json j = json::parse(run("compose --n 2 " + write_temp("zero_a.json", "{\"n\": 2}") + " " +
                                 write_temp("zero_b.json", "{\"n\": 2}")).out);
  EXPECT_EQ(j["r"], 0.0);
  EXPECT_EQ(j["matrix"]["entries"][0], 1.0);
  EXPECT_EQ(j["matrix"]["entries"][1], 0.0);
}

TEST(Cli, ComposeUsageErrors) {
  EXPECT_EQ(run("compose --n 2 --closed-form").code, 2);
  EXPECT_EQ(run("compose " + write_temp("bad.json", "{oops") + " " + write_temp("ok.json", "{}")).code, 2);
  EXPECT_EQ(run("compose --v1 1.5").code, 2);
  EXPECT_EQ(run("compose --bogus").code, 2);
}

TEST(Cli, VerifyUnknownSuite) { EXPECT_EQ(run("verify nonsense").code, 2); }

TEST(Cli, VerifyMetricPasses) {
  const auto r = run("verify metric --trials 200");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_TRUE(j.contains("elapsed_ms"));
}

TEST(Cli, VerifyIsDeterministic) {
  json a = json::parse(run("verify group-axioms --trials 100 --seed 5").out);
  json b = json::parse(run("verify group-axioms --trials 100 --seed 5").out);
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Cli, VerifyCorruptedTable) {
  const auto table = run("algebra ub_three --n 2 --c 10");
  ASSERT_EQ(table.code, 0);
  json t = json::parse(table.out);
  t["brackets"][0]["terms"][0]["coeff"] = t["brackets"][0]["terms"][0]["coeff"].get<double>() + 1.0;
  const std::string pair = "[" + t["labels"][t["brackets"][0]["i"].get<int>()].get<std::string>() + "," +
                           t["labels"][t["brackets"][0]["j"].get<int>()].get<std::string>() + "]";
  const auto r = run("verify algebra --table " + write_temp("corrupt.json", t.dump()), true);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find(pair), std::string::npos) << r.out;
}

TEST(Cli, AlgebraTables) {
  const json ub = json::parse(run("algebra ub --n 1").out);
  EXPECT_EQ(ub["labels"].size(), 4u);
  const auto csv = run("algebra u1n --n 1 --b 10 --format csv");
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "i,j,k,bracket,result,coeff");
  EXPECT_NE(csv.out.find("0.02"), std::string::npos);
  EXPECT_EQ(run("algebra so5").code, 2);
}

TEST(Cli, TransformAndRealize) {
  const std::string p = write_temp("p.json", R"({"n": 1, "c": 1, "v": 0.6})");
  const std::string d = write_temp("d.json", R"({"n": 1, "c": 1, "dt": 1, "dq": 0, "dp": 0, "de": 0})");
  const json t = json::parse(run("transform " + p + " " + d).out);
  EXPECT_NEAR(t["dt"].get<double>(), 1.25, 1e-14);
  EXPECT_NEAR(t["proper_time_sq"].get<double>(), 1.0, 1e-14);
  const json m = json::parse(run("realize " + p).out);
  EXPECT_NEAR(m["matrix"]["entries"][0].get<double>(), 1.25, 1e-14);
}

}  // namespace
