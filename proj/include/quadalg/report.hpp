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

#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "quadalg/check.hpp"
#include "quadalg/quadform.hpp"

namespace quadalg {

// Insertion-ordered, so reports serialize deterministically.
using Json = nlohmann::ordered_json;

struct Report {
  std::string command;
  Json instance = Json::object();
  Json verify = Json::object();
  std::vector<CheckRecord> records;
  Json tables;  // rootgroups only

  bool pass() const { return all_pass(records); }
};

inline const char* record_status(const CheckRecord& r) { return r.pass ? "pass" : (r.hard ? "fail" : "warn"); }

inline Json record_json(const CheckRecord& r, bool timing = true) {
  Json j;
  j["name"] = r.name;
  j["statement"] = r.statement;
  j["mode"] = r.mode;
  j["status"] = record_status(r);
  j["hard"] = r.hard;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.note.empty()) j["note"] = r.note;
  if (timing) j["seconds"] = r.seconds;
  return j;
}

inline CheckRecord record_from_json(const Json& j) {
  CheckRecord r;
  r.name = j.value("name", "");
  r.statement = j.value("statement", "");
  r.mode = j.value("mode", "");
  std::string st = j.value("status", "fail");
  r.pass = st == "pass";
  r.hard = j.value("hard", st != "warn");
  r.trials = j.value("trials", std::size_t(0));
  r.seed = j.value("seed", std::uint64_t(0));
  r.witness = j.value("witness", "");
  r.note = j.value("note", "");
  r.seconds = j.value("seconds", 0.0);
  return r;
}

inline Json report_json(const Report& rep, bool timing = true) {
  Json j;
  j["command"] = rep.command;
  j["instance"] = rep.instance;
  j["verify"] = rep.verify;
  Json checks = Json::array();
  std::size_t failed = 0, warned = 0;
  for (const auto& r : rep.records) {
    checks.push_back(record_json(r, timing));
    if (!r.pass) ++(r.hard ? failed : warned);
  }
  j["checks"] = checks;
  if (!rep.tables.is_null()) j["tables"] = rep.tables;
  j["summary"] = {{"checks", rep.records.size()}, {"failed", failed}, {"warnings", warned}};
  j["verdict"] = rep.pass() ? "pass" : "fail";
  return j;
}

template <class K>
Json scalars_json(const std::vector<K>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

template <class K>
Json form_json(const QuadraticForm<K>& q, const FieldCtx& f) {
  return Json{{"diag", scalars_json(q.diag())}, {"ctx", f.vars}};
}

inline Json tree_json(const ResidueNode& n) {
  Json j;
  if (!n.variable.empty()) j["variable"] = n.variable;
  j["entries"] = n.entries;
  j["verdict"] = verdict_name(n.verdict);
  if (!n.leaf_kind.empty()) j["leaf_kind"] = n.leaf_kind;
  if (!n.children.empty()) {
    Json c = Json::array();
    for (const auto& ch : n.children) c.push_back(tree_json(ch));
    j["children"] = c;
  }
  return j;
}

template <class K>
Json verdict_json(const AnisotropyVerdict<K>& v) {
  Json j;
  j["verdict"] = verdict_name(v.kind);
  if (!v.certificate.empty()) j["certificate"] = v.certificate;
  if (!v.witness.empty()) j["witness"] = scalars_json(v.witness);
  if (v.searched) j["searched"] = v.searched;
  if (v.tree) j["tree"] = tree_json(*v.tree);
  return j;
}

// One line per check plus the verdict, for terminals.
inline std::string summary_text(const Json& report) {
  std::string s;
  for (const auto& c : report.at("checks")) {
    std::string line = std::string(c.value("status", "?")) + "  " + c.value("name", "") + "  [" + c.value("mode", "") +
                       ", " + std::to_string(c.value("trials", std::size_t(0))) + "]";
    if (c.contains("witness")) line += "  witness: " + truncate(c["witness"].get<std::string>(), 200);
    s += line + "\n";
  }
  const auto& sm = report.at("summary");
  s += "verdict: " + report.value("verdict", std::string("?")) + " (" + std::to_string(sm.value("checks", 0)) +
       " checks, " + std::to_string(sm.value("failed", 0)) + " failed, " + std::to_string(sm.value("warnings", 0)) +
       " warnings)\n";
  return s;
}

}  // namespace quadalg
