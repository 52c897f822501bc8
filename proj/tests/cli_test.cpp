/*
   Copyright 2026 The quadalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "quadalg/driver.hpp"

namespace quadalg {
namespace {

const std::string kCli = QUADALG_CLI_PATH;
const std::string kConfigs = QUADALG_CONFIG_DIR;

struct CliResult {
  int status;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = kCli + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

std::string parse_error(const std::string& text) {
  try {
    parse_config(text, "cfg");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConfigParseError);
    return e.what();
  }
  ADD_FAILURE() << "expected ConfigParseError";
  return "";
}

TEST(Config, MalformedJsonReportsLineAndColumn) {
  std::string msg = parse_error("{\n  \"composition\": {\"params\": [\"-1\",]}\n}");
  EXPECT_NE(msg.find("cfg: line 2"), std::string::npos) << msg;
}

TEST(Config, BadValuesReportTheirPath) {
  EXPECT_NE(parse_error(R"({"etype": {"type": "E9", "a": "-1", "s": []}})").find("/etype/type"), std::string::npos);
  EXPECT_NE(parse_error(R"({"etype": {"type": "E6", "a": "-1", "s": ["1", "q"]}})").find("/etype/s/1"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"composition": {"params": ["1/2"]}, "verify": {"trials": -3}})").find("/verify/trials"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"composition": {"parms": ["-1"]}})").find("/composition/parms"), std::string::npos);
  // Function-field scalars are rejected over Q.
  EXPECT_NE(parse_error(R"({"composition": {"params": ["t"]}})").find("/composition/params/0"), std::string::npos);
  EXPECT_NE(parse_error(R"({"composition": {"params": ["-1"]}, "jordan": {"kind": "herm_mat2", "L": {"params": []}}})")
                .find("exactly one construction"),
            std::string::npos);
}

TEST(Config, ConstructionErrorsAreWrapped) {
  auto cfg = parse_config(R"({"etype": {"type": "E6", "a": "4", "s": ["1", "1"]}})");
  try {
    run(cfg);
    FAIL() << "expected ConstructionError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConstructionError);
    EXPECT_NE(std::string(e.what()).find("SquareA"), std::string::npos);
  }
}

TEST(Run, BundledE6ConfigPasses) {
  auto cfg = load_config(kConfigs + "/e6_q.json");
  Report rep = run(cfg);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.instance["dim_V"], 6);
  EXPECT_EQ(rep.instance["dim_X0"], 8);
  for (const char* name : {"A2", "A3", "B2", "B3", "D1", "hypothesis_1"}) {
    const auto* r = find_record(rep.records, name);
    ASSERT_NE(r, nullptr) << name;
    EXPECT_EQ(r->mode, "symbolic") << name;
  }
}

TEST(Run, BundledOctonionConfigPasses) {
  Report rep = run(load_config(kConfigs + "/octonion_identities.json"));
  EXPECT_TRUE(rep.pass());
  EXPECT_GE(rep.records.size(), 5u);
}

TEST(Run, ReportIsDeterministicWithoutTiming) {
  auto cfg = load_config(kConfigs + "/pseudo_quadratic_qi.json");
  cfg.verify.check.mode = Mode::Random;
  std::string a = report_json(run(cfg), false).dump(), b = report_json(run(cfg), false).dump();
  EXPECT_EQ(a, b);
  cfg.verify.check.seed += 1;
  EXPECT_NE(report_json(run(cfg), false).dump(), a);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run_cli("verify " + kConfigs + "/octonion_identities.json --out /dev/null").status, 0);
  auto bad = write_temp("bad.json", "{\"composition\": [}");
  auto r = run_cli("verify " + bad);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.output.find("ConfigParseError"), std::string::npos);
  auto sq = write_temp("square.json", R"({"etype": {"type": "E6", "a": "9", "s": ["1", "1"]}})");
  EXPECT_EQ(run_cli("construct " + sq).status, 3);
}

TEST(Cli, FlagsOverrideConfig) {
  auto out = ::testing::TempDir() + "pq_report.json";
  auto r = run_cli("verify " + kConfigs + "/pseudo_quadratic_qi.json --mode random --seed 99 --trials 7 --out " + out);
  ASSERT_EQ(r.status, 0) << r.output;
  std::ifstream in(out);
  Json j = Json::parse(in);
  EXPECT_EQ(j["verify"]["mode"], "random");
  EXPECT_EQ(j["verify"]["seed"], 99);
  EXPECT_EQ(j["verify"]["trials"], 7);
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(run_cli("report " + out).status, 0);
}

TEST(Cli, ReportCommandFailsOnFailedCheck) {
  auto path = write_temp("failed.json", R"({"checks": [{"name": "B2", "status": "fail", "hard": true}],
                                           "summary": {"checks": 1, "failed": 1, "warnings": 0}, "verdict": "fail"})");
  auto r = run_cli("report " + path);
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.output.find("fail  B2"), std::string::npos);
}

TEST(Cli, RootGroupTablesForQuadraticForm) {
  auto r = run_cli("rootgroups " + kConfigs + "/rootgroups_quadratic_form.json --no-timing --out -");
  ASSERT_EQ(r.status, 0) << r.output;
  Json j = Json::parse(r.output.substr(0, r.output.rfind("}\n") + 1).substr(0));
  const auto& t = j["tables"]["symbolic"];
  // f(v,w) = 2(v1 w1 + 2 v2 w2 + 5 v3 w3) for <1,2,5>; q(v) t for [x1, x4].
  EXPECT_EQ(t["comm24"]["t"], "2*v_1*w_1+4*v_2*w_2+10*v_3*w_3");
  EXPECT_EQ(t["comm14"]["x3"]["t"], "t_1*v_1^2+2*t_1*v_2^2+5*t_1*v_3^2");
  EXPECT_EQ(t["comm14"]["x2"][1], "t_1*v_2");
}

TEST(Cli, BuildPrintsSpringerTree) {
  auto r = run_cli("build " + kConfigs + "/e8_function_field.json");
  ASSERT_EQ(r.status, 0) << r.output;
  Json j = Json::parse(r.output);
  EXPECT_EQ(j["instance"]["q_anisotropy"]["verdict"], "Anisotropic");
  EXPECT_EQ(j["instance"]["q"]["diag"].size(), 12u);
  EXPECT_TRUE(j["instance"]["q_anisotropy"]["tree"].contains("children"));
}

}  // namespace
}  // namespace quadalg
