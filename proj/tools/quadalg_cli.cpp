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


// quadalg: build, verify and report on instances described by JSON configs.
//
//   quadalg build <config>        quadratic-form data and anisotropy verdicts
//   quadalg construct <config>    instance metadata (dimensions, forms)
//   quadalg verify <config>       full verification report
//   quadalg rootgroups <config>   commutator tables and root-group checks
//   quadalg report <report.json>  summarize a saved report
//
// Exit status: 0 when every hard check passes, 1 on a failed check,
// 2 on a config error, 3 when the instance cannot be built.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "quadalg/driver.hpp"

namespace {

using quadalg::Error;
using quadalg::ErrorCode;
using quadalg::Json;

struct Overrides {
  std::string mode;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::string out;
  bool no_timing = false;
};

void apply(quadalg::RunConfig& cfg, const Overrides& o) {
  if (o.mode == "symbolic") cfg.verify.check.mode = quadalg::Mode::Symbolic;
  if (o.mode == "random") cfg.verify.check.mode = quadalg::Mode::Random;
  if (o.seed) cfg.verify.check.seed = *o.seed;
  if (o.trials) cfg.verify.check.trials = *o.trials;
  if (!o.out.empty()) cfg.out = o.out;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorCode::ConfigParseError, out + ": cannot write output file");
  f << text;
}

int run_command(quadalg::Stage stage, const std::string& path, const Overrides& o) {
  auto cfg = quadalg::load_config(path);
  apply(cfg, o);
  quadalg::Report rep = quadalg::run(cfg, stage);
  Json j = quadalg::report_json(rep, !o.no_timing);
  emit(j.dump(2) + "\n", cfg.out);
  if (stage == quadalg::Stage::Verify || stage == quadalg::Stage::RootGroups) {
    std::cerr << quadalg::summary_text(j);
  }
  return rep.pass() ? 0 : 1;
}

int report_command(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigParseError, path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  Json j;
  try {
    j = Json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ConfigParseError, path + ": malformed JSON at byte " + std::to_string(e.byte));
  }
  if (!j.contains("checks") || !j.contains("summary")) {
    throw Error(ErrorCode::ConfigParseError, path + ": /: not a report (missing checks or summary)");
  }
  std::cout << quadalg::summary_text(j);
  quadalg::Report rep;
  for (const auto& c : j["checks"]) rep.records.push_back(quadalg::record_from_json(c));
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadrangular algebras and Moufang quadrangles over Q and Q(t1..tn)"};
  app.require_subcommand(1);

  Overrides o;
  std::string path;
  auto add_run = [&](const char* name, const char* help, bool verify_flags) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("config", path, "JSON config")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", o.out, "write the JSON here instead of stdout");
    if (verify_flags) {
      sub->add_option("--mode", o.mode, "symbolic or random")->check(CLI::IsMember({"symbolic", "random"}));
      sub->add_option("--seed", o.seed, "random seed");
      sub->add_option("--trials", o.trials, "random trials per identity");
      sub->add_flag("--no-timing", o.no_timing, "omit wall times from the report");
    }
    return sub;
  };
  auto* build = add_run("build", "quadratic-form data and anisotropy verdicts", false);
  auto* construct = add_run("construct", "construct the instance and print its metadata", false);
  auto* verify = add_run("verify", "construct and run the verification suite", true);
  auto* roots = add_run("rootgroups", "commutator tables and root-group checks", true);
  auto* report = app.add_subcommand("report", "summarize a saved report");
  std::string report_path;
  report->add_option("report", report_path, "report JSON")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return run_command(quadalg::Stage::Build, path, o);
    if (*construct) return run_command(quadalg::Stage::Construct, path, o);
    if (*verify) return run_command(quadalg::Stage::Verify, path, o);
    if (*roots) return run_command(quadalg::Stage::RootGroups, path, o);
    return report_command(report_path);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (e.code() == ErrorCode::ConfigParseError) return 2;
    if (e.code() == ErrorCode::ConstructionError) return 3;
    return 4;
  }
}
