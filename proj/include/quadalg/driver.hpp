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

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quadalg/composition.hpp"
#include "quadalg/jmodule.hpp"
#include "quadalg/jordan.hpp"
#include "quadalg/moufang.hpp"
#include "quadalg/quadrangular.hpp"
#include "quadalg/report.hpp"
#include "quadalg/tensoralg.hpp"

namespace quadalg {

// ---------------------------------------------------------------------------
// Run configuration. Scalars are kept as text and validated against the
// field when the config is parsed.

struct FieldSpec {
  bool function_field = false;
  std::vector<std::string> vars;

  FieldCtx ctx() const { return function_field ? FieldCtx::function_field(vars) : FieldCtx::rationals(); }
};

struct ETypeSpec {
  EType type = EType::E6;
  std::string a;
  std::vector<std::string> s;
  std::optional<std::vector<std::string>> u;
  bool require_anisotropy = false;  // Unknown verdicts fail instead of warn
  bool jternary = false;
};

struct PQSpec {
  std::vector<std::string> L;
  std::vector<std::vector<std::string>> gamma;
};

struct ConstructionSpec {
  std::string kind;  // composition, tensor, jordan, jmodule, pseudo_quadratic, etype, rootgroups
  std::string variant;  // jordan kind, jmodule source or root-group target
  std::vector<std::string> params;       // composition
  std::vector<std::string> c1, c2;       // tensor
  std::vector<std::string> diag, base;   // reduced spin factor
  std::vector<std::string> L;            // herm_mat2
  PQSpec pq;
  ETypeSpec etype;
};

struct VerifySpec {
  CheckSpec check;
  std::size_t d2_trials = 0;  // 0: same as trials
  std::size_t orbit_samples = 3;
  std::size_t symbolic_xdim = 8;
};

struct RunConfig {
  std::string source = "<config>";
  FieldSpec field;
  ConstructionSpec construction;
  VerifySpec verify;
  std::string out;
};

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// A JSON value with its pointer path, for error messages.
class CfgNode {
 public:
  CfgNode(const Json& j, std::string path, const std::string& src) : j_(&j), path_(std::move(path)), src_(&src) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ConfigParseError, *src_ + ": " + (path_.empty() ? "/" : path_) + ": " + msg);
  }

  const std::string& path() const { return path_; }
  bool has(const std::string& k) const { return j_->is_object() && j_->contains(k); }

  CfgNode at(const std::string& k) const {
    object();
    if (!j_->contains(k)) fail("missing key '" + k + "'");
    return CfgNode(j_->at(k), path_ + "/" + k, *src_);
  }

  void object() const {
    if (!j_->is_object()) fail("expected an object");
  }

  void only(const std::vector<std::string>& keys) const {
    object();
    for (const auto& [k, v] : j_->items()) {
      bool ok = false;
      for (const auto& a : keys) ok = ok || a == k;
      if (!ok) CfgNode(v, path_ + "/" + k, *src_).fail("unknown key");
    }
  }

  std::string str() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }

  // Scalars are strings in canonical text form; plain integers are accepted.
  std::string scalar(const FieldSpec& field) const {
    std::string t;
    if (j_->is_number_integer()) {
      t = std::to_string(j_->get<long long>());
    } else if (j_->is_string()) {
      t = j_->get<std::string>();
    } else {
      fail("expected a scalar string");
    }
    try {
      if (field.function_field) {
        (void)parse_scalar<RatFunc>(t, field.ctx());
      } else {
        (void)parse_scalar<Rational>(t, field.ctx());
      }
    } catch (const Error& e) {
      fail(e.what());
    }
    return t;
  }

  std::vector<CfgNode> items() const {
    if (!j_->is_array()) fail("expected an array");
    std::vector<CfgNode> out;
    for (std::size_t i = 0; i < j_->size(); ++i) out.emplace_back((*j_)[i], path_ + "/" + std::to_string(i), *src_);
    return out;
  }

  std::vector<std::string> scalars(const FieldSpec& field) const {
    std::vector<std::string> out;
    for (const auto& n : items()) out.push_back(n.scalar(field));
    return out;
  }

  std::uint64_t uint() const {
    if (!j_->is_number_unsigned() && !(j_->is_number_integer() && j_->get<long long>() >= 0)) {
      fail("expected a non-negative integer");
    }
    return j_->get<std::uint64_t>();
  }

  bool boolean() const {
    if (!j_->is_boolean()) fail("expected true or false");
    return j_->get<bool>();
  }

 private:
  const Json* j_;
  std::string path_;
  const std::string* src_;
};

inline std::vector<std::string> params_of(const CfgNode& n, const FieldSpec& field) {
  n.only({"params"});
  auto p = n.at("params").scalars(field);
  if (p.size() > 3) n.at("params").fail("at most three doubling parameters");
  return p;
}

inline EType etype_of(const CfgNode& n) {
  std::string t = n.str();
  if (t == "E6") return EType::E6;
  if (t == "E7") return EType::E7;
  if (t == "E8") return EType::E8;
  n.fail("expected E6, E7 or E8");
}

inline ETypeSpec etype_spec(const CfgNode& n, const FieldSpec& field, std::vector<std::string> extra_keys = {}) {
  extra_keys.insert(extra_keys.end(), {"type", "a", "s", "u", "require_anisotropy", "jternary"});
  n.only(extra_keys);
  ETypeSpec e;
  e.type = etype_of(n.at("type"));
  e.a = n.at("a").scalar(field);
  e.s = n.at("s").scalars(field);
  if (n.has("u")) e.u = n.at("u").scalars(field);
  if (n.has("require_anisotropy")) e.require_anisotropy = n.at("require_anisotropy").boolean();
  if (n.has("jternary")) e.jternary = n.at("jternary").boolean();
  return e;
}

inline PQSpec pq_spec(const CfgNode& n, const FieldSpec& field) {
  PQSpec p;
  p.L = params_of(n.at("L"), field);
  for (const auto& g : n.at("gamma").items()) p.gamma.push_back(g.scalars(field));
  if (p.gamma.empty()) n.at("gamma").fail("rank must be at least 1");
  return p;
}

inline ConstructionSpec construction_spec(const std::string& kind, const CfgNode& n, const FieldSpec& field) {
  ConstructionSpec c;
  c.kind = kind;
  if (kind == "composition") {
    c.params = params_of(n, field);
  } else if (kind == "tensor") {
    n.only({"c1", "c2"});
    c.c1 = params_of(n.at("c1"), field);
    c.c2 = params_of(n.at("c2"), field);
  } else if (kind == "jordan") {
    c.variant = n.at("kind").str();
    if (c.variant == "reduced_spin") {
      n.only({"kind", "form", "base"});
      n.at("form").only({"diag"});
      c.diag = n.at("form").at("diag").scalars(field);
      c.base = n.at("base").scalars(field);
    } else if (c.variant == "herm_mat2") {
      n.only({"kind", "L"});
      c.L = params_of(n.at("L"), field);
    } else {
      n.at("kind").fail("expected reduced_spin or herm_mat2");
    }
  } else if (kind == "pseudo_quadratic") {
    n.only({"L", "gamma"});
    c.pq = pq_spec(n, field);
  } else if (kind == "etype") {
    c.etype = etype_spec(n, field);
  } else if (kind == "jmodule") {
    c.variant = n.at("from").str();
    if (c.variant == "etype") {
      c.etype = etype_spec(n, field, {"from"});
    } else if (c.variant == "pseudo_quadratic") {
      n.only({"from", "L", "gamma"});
      c.pq = pq_spec(n, field);
    } else {
      n.at("from").fail("expected etype or pseudo_quadratic");
    }
  } else if (kind == "rootgroups") {
    c.variant = n.at("target").str();
    if (c.variant == "quadratic_form") {
      n.only({"target", "form", "base"});
      n.at("form").only({"diag"});
      c.diag = n.at("form").at("diag").scalars(field);
      c.base = n.at("base").scalars(field);
    } else if (c.variant == "involutory") {
      n.only({"target", "L"});
      c.L = params_of(n.at("L"), field);
    } else if (c.variant == "pseudo_quadratic") {
      n.only({"target", "L", "gamma"});
      c.pq = pq_spec(n, field);
    } else if (c.variant == "etype") {
      c.etype = etype_spec(n, field, {"target"});
    } else {
      n.at("target").fail("expected quadratic_form, involutory, pseudo_quadratic or etype");
    }
  }
  return c;
}

}  // namespace detail

inline const std::vector<std::string>& construction_kinds() {
  static const std::vector<std::string> k{"composition", "tensor",     "jordan",    "jmodule",
                                          "pseudo_quadratic", "etype", "rootgroups"};
  return k;
}

inline RunConfig parse_config(const std::string& text, const std::string& source = "<config>") {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ConfigParseError,
                source + ": " + detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed JSON");
  }
  RunConfig cfg;
  cfg.source = source;
  detail::CfgNode root(j, "", cfg.source);
  std::vector<std::string> keys{"field", "verify", "out"};
  for (const auto& k : construction_kinds()) keys.push_back(k);
  root.only(keys);

  if (root.has("field")) {
    auto fn = root.at("field");
    fn.only({"kind", "vars"});
    std::string kind = fn.at("kind").str();
    if (kind == "function_field") {
      cfg.field.function_field = true;
      for (const auto& v : fn.at("vars").items()) cfg.field.vars.push_back(v.str());
      if (cfg.field.vars.empty()) fn.at("vars").fail("a function field needs at least one variable");
    } else if (kind != "rationals") {
      fn.at("kind").fail("expected rationals or function_field");
    }
  }

  std::vector<std::string> found;
  for (const auto& k : construction_kinds()) {
    if (root.has(k)) found.push_back(k);
  }
  if (found.size() != 1) root.fail("expected exactly one construction key (composition, tensor, jordan, ...)");
  cfg.construction = detail::construction_spec(found[0], root.at(found[0]), cfg.field);

  if (root.has("verify")) {
    auto v = root.at("verify");
    v.only({"mode", "seed", "trials", "coeff_bound", "degree_bound", "search_bound", "d2_trials", "orbit_samples",
            "symbolic_xdim"});
    auto& c = cfg.verify.check;
    if (v.has("mode")) {
      std::string m = v.at("mode").str();
      if (m == "symbolic") {
        c.mode = Mode::Symbolic;
      } else if (m != "random") {
        v.at("mode").fail("expected symbolic or random");
      }
    }
    if (v.has("seed")) c.seed = v.at("seed").uint();
    if (v.has("trials")) c.trials = v.at("trials").uint();
    if (v.has("coeff_bound")) c.coeff_bound = long(v.at("coeff_bound").uint());
    if (v.has("degree_bound")) c.degree_bound = int(v.at("degree_bound").uint());
    if (v.has("search_bound")) c.search_bound = long(v.at("search_bound").uint());
    if (v.has("d2_trials")) cfg.verify.d2_trials = v.at("d2_trials").uint();
    if (v.has("orbit_samples")) cfg.verify.orbit_samples = v.at("orbit_samples").uint();
    if (v.has("symbolic_xdim")) cfg.verify.symbolic_xdim = v.at("symbolic_xdim").uint();
  }
  if (root.has("out")) cfg.out = root.at("out").str();
  return cfg;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigParseError, path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

// ---------------------------------------------------------------------------
// Running a config

enum class Stage { Build, Construct, Verify, RootGroups };

inline const char* stage_name(Stage s) {
  switch (s) {
    case Stage::Build: return "build";
    case Stage::Construct: return "construct";
    case Stage::Verify: return "verify";
    case Stage::RootGroups: return "rootgroups";
  }
  return "?";
}

// Records about the quadratic-form data of an E-type instance. An Unknown
// verdict for q is a warning unless `required`; for the composition norms it
// is always a warning (indefinite forms over Q need local invariants).
template <class K>
std::vector<CheckRecord> etype_data_checks(const ETypeData<K>& d, bool required) {
  std::vector<CheckRecord> out;
  auto verdict = [&](const std::string& name, const std::string& stmt, const AnisotropyVerdict<K>& v, bool req) {
    CheckRecord r;
    r.name = name;
    r.statement = stmt;
    r.mode = "exact";
    r.pass = v.kind == VerdictKind::Anisotropic;
    r.hard = req || v.kind == VerdictKind::Isotropic;
    r.note = std::string(verdict_name(v.kind)) + (v.certificate.empty() ? "" : " (" + v.certificate + ")");
    if (v.kind == VerdictKind::Isotropic) r.witness = vec_str(v.witness);
    out.push_back(r);
  };
  verdict("q_anisotropic", "q = N (x) <1, s2, ...> is anisotropic", d.q_verdict, required);
  verdict("c1_division", "the norm of C1 is anisotropic", d.c1_verdict, false);
  verdict("c2_division", "the norm of C2 is anisotropic", d.c2_verdict, false);
  if constexpr (std::is_same_v<K, RatFunc>) {
    CheckRecord r;
    r.name = "springer_certificate";
    r.statement = "residue recursion for q ends in definite forms over Q";
    r.mode = "exact";
    r.pass = d.q_verdict.kind == VerdictKind::Anisotropic && d.q_verdict.tree && d.q_verdict.tree->leaves_definite();
    r.hard = required;
    if (!r.pass) r.witness = d.q_verdict.tree ? "a leaf is not definite" : "no recursion tree";
    out.push_back(r);
  }
  out.push_back(exact_check("witt_chain_dimensions", "dim(q + 2H) = dim(q_A + H) = dim(q_1 - q_2)", [&]() -> std::string {
    if (d.dim_q_plus_2h == d.dim_qa_plus_h && d.dim_qa_plus_h == d.dim_q1_minus_q2) return "";
    return std::to_string(d.dim_q_plus_2h) + ", " + std::to_string(d.dim_qa_plus_h) + ", " +
           std::to_string(d.dim_q1_minus_q2);
  }));
  out.push_back(exact_check("witt_chain_discriminants", "det(q + 2H) and det(q_1 - q_2) agree up to squares",
                            [&]() -> std::string { return d.discriminants_agree ? "" : "discriminants differ"; }));
  return out;
}

namespace detail {

template <class K>
class Runner {
 public:
  Runner(const RunConfig& cfg, Stage stage) : cfg_(cfg), stage_(stage), f_(cfg.field.ctx()), spec_(cfg.verify.check) {
    rep_.command = stage_name(stage);
    rep_.instance["field"] = cfg.field.function_field ? Json{{"kind", "function_field"}, {"vars", cfg.field.vars}}
                                                      : Json{{"kind", "rationals"}};
    rep_.instance["construction"] = cfg.construction.kind;
    if (!cfg.construction.variant.empty()) rep_.instance["variant"] = cfg.construction.variant;
    if (stage == Stage::Verify || stage == Stage::RootGroups) {
      rep_.verify = {{"mode", mode_name(spec_.mode)},
                     {"seed", spec_.seed},
                     {"trials", spec_.trials},
                     {"coeff_bound", spec_.coeff_bound},
                     {"degree_bound", spec_.degree_bound},
                     {"search_bound", spec_.search_bound},
                     {"d2_trials", d2_trials()},
                     {"orbit_samples", cfg.verify.orbit_samples},
                     {"symbolic_xdim", cfg.verify.symbolic_xdim}};
    }
  }

  Report run() {
    const auto& c = cfg_.construction;
    if (stage_ == Stage::RootGroups && c.kind != "rootgroups") {
      throw Error(ErrorCode::ConfigParseError, cfg_.source + ": /: the rootgroups command needs a rootgroups config");
    }
    if (c.kind == "composition") {
      composition();
    } else if (c.kind == "tensor") {
      tensor();
    } else if (c.kind == "jordan") {
      jordan();
    } else if (c.kind == "jmodule") {
      jmodule();
    } else if (c.kind == "pseudo_quadratic") {
      pseudo_quadratic();
    } else if (c.kind == "etype") {
      etype();
    } else {
      rootgroups();
    }
    return std::move(rep_);
  }

 private:
  K sc(const std::string& t) const { return parse_scalar<K>(t, f_); }
  std::vector<K> scs(const std::vector<std::string>& ts) const {
    std::vector<K> out;
    for (const auto& t : ts) out.push_back(sc(t));
    return out;
  }
  std::size_t d2_trials() const { return cfg_.verify.d2_trials ? cfg_.verify.d2_trials : spec_.trials; }
  bool verifying() const { return stage_ == Stage::Verify || stage_ == Stage::RootGroups; }
  bool constructing() const { return stage_ != Stage::Build; }

  void add(std::vector<CheckRecord> rs) {
    for (auto& r : rs) rep_.records.push_back(std::move(r));
  }
  void add(CheckRecord r) { rep_.records.push_back(std::move(r)); }

  // Library errors raised while building an instance.
  template <class F>
  auto build(F body) -> decltype(body()) {
    try {
      return body();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ConfigParseError) throw;
      throw Error(ErrorCode::ConstructionError, e.what());
    }
  }

  void composition() {
    auto C = build([&] { return CompositionAlgebra<K>(scs(cfg_.construction.params)); });
    rep_.instance["params"] = scalars_json(C.params());
    rep_.instance["dim"] = C.dim();
    rep_.instance["norm_form"] = form_json(C.norm_form(), f_);
    if (stage_ == Stage::Build) rep_.instance["norm_anisotropy"] = verdict_json(C.is_division(aniso()));
    if (verifying()) add(identity_suite(C, spec_, f_));
  }

  void tensor() {
    auto T = build([&] {
      return TensorAlgebra<K>(CompositionAlgebra<K>(scs(cfg_.construction.c1)),
                              CompositionAlgebra<K>(scs(cfg_.construction.c2)));
    });
    rep_.instance["c1"] = scalars_json(T.c1().params());
    rep_.instance["c2"] = scalars_json(T.c2().params());
    rep_.instance["dim"] = T.dim();
    rep_.instance["skew_dim"] = T.skew_dim();
    rep_.instance["albert_form"] = form_json(T.albert_form(), f_);
    if (stage_ == Stage::Build) rep_.instance["albert_anisotropy"] = verdict_json(anisotropy_of(T.albert_form(), aniso()));
    if (verifying()) add(skew_identities(T, spec_, f_));
  }

  JordanAlgebra<K> jordan_from_config() const {
    const auto& c = cfg_.construction;
    if (!c.L.empty()) return JordanAlgebra<K>::herm_mat2(CompositionAlgebra<K>(scs(c.L)));
    return JordanAlgebra<K>::reduced_spin(PointedQuadSpace<K>(QuadraticForm<K>(scs(c.diag)), scs(c.base)));
  }

  void jordan() {
    auto J = build([&] { return jordan_from_config(); });
    rep_.instance["kind"] = jordan_kind_name(J.kind());
    rep_.instance["dim"] = J.dim();
    rep_.instance["half_dim"] = J.half_dim();
    if (J.kind() == JordanKind::ReducedSpin) {
      rep_.instance["form"] = form_json(J.space().form, f_);
    } else {
      rep_.instance["L"] = scalars_json(J.L().params());
    }
    if (!verifying()) return;
    add(jordan_checks(J, spec_, f_));
    add(peirce_checks(J, peirce_decompose(J, J.e0())));
    add(halfspace_invertibility_sample(J, f_, spec_));
    if (J.kind() == JordanKind::HermMat2) add(quadratic_pair_identification(J));
  }

  ETypeOptions<K> etype_options() const {
    ETypeOptions<K> o;
    if (cfg_.construction.etype.u) o.u = scs(*cfg_.construction.etype.u);
    o.anisotropy = aniso();
    return o;
  }
  AnisotropyOptions aniso() const {
    AnisotropyOptions o;
    o.search_bound = spec_.search_bound;
    return o;
  }

  PseudoQuadraticSpace<K> pq_from_config() const {
    const auto& p = cfg_.construction.pq;
    PseudoQuadraticSpace<K> P{CompositionAlgebra<K>(scs(p.L)), {}};
    for (const auto& g : p.gamma) P.gamma.push_back(scs(g));
    return P;
  }

  void describe_data(const ETypeData<K>& d) {
    rep_.instance["type"] = etype_name(d.type);
    rep_.instance["a"] = to_string(d.a);
    rep_.instance["s"] = scalars_json(d.s);
    rep_.instance["c1"] = scalars_json(d.c1);
    rep_.instance["c2"] = scalars_json(d.c2);
    rep_.instance["q"] = form_json(d.q, f_);
    rep_.instance["q_anisotropy"] = verdict_json(d.q_verdict);
    rep_.instance["c1_anisotropy"] = verdict_json(d.c1_verdict);
    rep_.instance["c2_anisotropy"] = verdict_json(d.c2_verdict);
    rep_.instance["witt_chain_dims"] = {d.dim_q_plus_2h, d.dim_qa_plus_h, d.dim_q1_minus_q2};
    rep_.instance["discriminants_agree"] = d.discriminants_agree;
  }

  void describe_quadrangular(const QuadrangularAlgebra<K>& Q) {
    rep_.instance["dim_V"] = Q.vdim();
    rep_.instance["dim_X0"] = Q.xdim();
    rep_.instance["V_form"] = form_json(Q.space().form, f_);
    rep_.instance["base"] = scalars_json(Q.base());
  }

  void describe_module(const SpecialJModule<K>& M) {
    rep_.instance["dim_J"] = M.J().dim();
    rep_.instance["dim_X"] = M.dim();
  }

  void etype() {
    const auto& e = cfg_.construction.etype;
    if (stage_ == Stage::Build) {
      auto d = build([&] { return build_e6e7e8_data<K>(e.type, sc(e.a), scs(e.s), aniso()); });
      describe_data(d);
      return;
    }
    auto E = build([&] { return construct_etype<K>(e.type, sc(e.a), scs(e.s), etype_options()); });
    describe_data(E.data);
    describe_module(E.M);
    describe_quadrangular(E.built.Q);
    rep_.instance["qA_u"] = to_string(E.qA_u);
    if (!verifying()) return;
    add(etype_data_checks(E.data, e.require_anisotropy));
    AxiomOptions ao;
    ao.symbolic_xdim = cfg_.verify.symbolic_xdim;
    ao.d2_trials = d2_trials();
    add(verify_axioms(E.built.Q, spec_, f_, ao));
    add(jmodule_hypotheses(E.built, spec_, f_, cfg_.verify.symbolic_xdim));
    add(etype_checks(E, spec_, f_, cfg_.verify.orbit_samples));
    if (e.jternary) add(verify_jternary(etype_jternary(E), spec_, f_));
  }

  void pseudo_quadratic() {
    auto P = pq_from_config();
    auto B = build([&] { return from_pseudoquadratic(P, f_, spec_, aniso()); });
    rep_.instance["L"] = scalars_json(P.L.params());
    rep_.instance["rank"] = P.rank();
    rep_.instance["pi_anisotropy"] = verdict_json(B.pi_verdict);
    describe_module(B.built.data.M);
    describe_quadrangular(B.built.Q);
    if (!verifying()) return;
    add(B.identification);
    AxiomOptions ao;
    ao.symbolic_xdim = cfg_.verify.symbolic_xdim;
    ao.d2_trials = d2_trials();
    add(verify_axioms(B.built.Q, spec_, f_, ao));
    add(jmodule_hypotheses(B.built, spec_, f_, cfg_.verify.symbolic_xdim));
  }

  void module_suite(const SpecialJModule<K>& M, const Vec<K>& u) {
    add(check_module(M, spec_, f_));
    add(check_skew_compat(M, spec_, f_));
    auto P = module_peirce(M);
    add(module_peirce_checks(M, P));
    add(connecting_checks(M, P, u, spec_, f_));
    add(zero_divisor_search(M, f_, spec_));
  }

  void jmodule() {
    const auto& c = cfg_.construction;
    if (c.variant == "etype") {
      const auto& e = c.etype;
      auto E = build([&] { return construct_etype<K>(e.type, sc(e.a), scs(e.s), etype_options()); });
      rep_.instance["type"] = etype_name(e.type);
      describe_module(E.M);
      if (verifying()) module_suite(E.M, E.built.data.u);
    } else {
      auto P = build([&] {
        auto P = pq_from_config();
        P.validate();
        return P;
      });
      auto M = build([&] { return pseudo_quadratic_module(P); });
      rep_.instance["L"] = scalars_json(P.L.params());
      rep_.instance["rank"] = P.rank();
      describe_module(M);
      if (verifying()) module_suite(M, M.J().base());
    }
  }

  struct Target {
    RootSystem<K> R;
    RootTarget target;
    RootFormulas<K> F;
  };

  Target root_target() {
    const auto& c = cfg_.construction;
    if (c.variant == "quadratic_form" || c.variant == "involutory") {
      auto J = build([&] { return jordan_from_config(); });
      auto R = build([&] { return RootSystem<K>::zero_module(J, J.base()); });
      if (c.variant == "quadratic_form") return {R, RootTarget::QuadraticForm, quadratic_form_formulas(R)};
      return {R, RootTarget::Involutory, involutory_formulas(R)};
    }
    if (c.variant == "pseudo_quadratic") {
      auto P = pq_from_config();
      auto B = build([&] { return from_pseudoquadratic(P, f_, spec_, aniso()); });
      auto R = build([&] { return root_system_from(B.built); });
      return {R, RootTarget::PseudoQuadratic, pseudo_quadratic_formulas(P)};
    }
    const auto& e = c.etype;
    auto E = build([&] { return construct_etype<K>(e.type, sc(e.a), scs(e.s), etype_options()); });
    auto R = build([&] { return root_system_from(E.built); });
    return {R, RootTarget::EType, etype_formulas(E.built.Q)};
  }

  static Json welem_json(const WElem<K>& w) { return Json{{"a", scalars_json(w.a)}, {"t", to_string(w.t)}}; }

  template <class S>
  static Json tables(const RootSystem<S>& R, const WElem<S>& w1, const WElem<S>& w2, const Vec<S>& v1,
                     const Vec<S>& v2) {
    auto wj = [](const WElem<S>& w) { return Json{{"a", scalars_json(w.a)}, {"t", to_string(w.t)}}; };
    auto [p, q] = R.comm14(w1, v1);
    return Json{{"W_addition", wj(R.wadd(w1, w2))},
                {"comm13", scalars_json(R.comm13(w1, w2))},
                {"comm24", wj(R.comm24(v1, v2))},
                {"comm14", Json{{"x2", scalars_json(p)}, {"x3", wj(q)}}}};
  }

  void rootgroups() {
    auto T = root_target();
    const auto& R = T.R;
    rep_.instance["target"] = root_target_name(T.target);
    rep_.instance["dim_X0"] = R.xdim();
    rep_.instance["dim_V"] = R.vdim();
    if (!verifying()) return;
    if (stage_ == Stage::RootGroups) {
      std::size_t n = R.xdim(), m = R.vdim();
      Json tb;
      tb["relations"] = {{"W_addition", "[a1,t1] + [a2,t2]"},
                         {"comm13", "[x1(a1,t1), x3(a2,t2)^-1] in U2"},
                         {"comm24", "[x2(v1), x4(v2)^-1] in U3"},
                         {"comm14", "[x1(a1,t1), x4(v1)^-1] in U2 U3"}};
      if (spec_.mode == Mode::Symbolic) {
        SymbolicVars sv(f_, {{"a", n}, {"t", 1}, {"b", n}, {"s", 1}, {"v", m}, {"w", m}});
        auto Rs = R.template rebase<RatFunc>([](const K& x) { return to_ratfunc(x); });
        WElem<RatFunc> w1{sv.vec(0), sv.vec(1)[0]}, w2{sv.vec(2), sv.vec(3)[0]};
        tb["inputs"] = {{"a1", "a_i"}, {"t1", "t_1"}, {"a2", "b_i"}, {"t2", "s_1"}, {"v1", "v_i"}, {"v2", "w_i"}};
        tb["symbolic"] = tables(Rs, w1, w2, sv.vec(4), sv.vec(5));
      } else {
        Rng rng(spec_.seed ^ 0x7AB1E5);
        Json samples = Json::array();
        std::size_t count = std::min<std::size_t>(spec_.trials, 20);
        for (std::size_t i = 0; i < count; ++i) {
          auto w1 = random_welem(R, f_, rng, spec_), w2 = random_welem(R, f_, rng, spec_);
          auto v1 = random_vec<K>(f_, rng, m, spec_), v2 = random_vec<K>(f_, rng, m, spec_);
          samples.push_back({{"input",
                              {{"a1", welem_json(w1)}, {"a2", welem_json(w2)}, {"v1", scalars_json(v1)},
                               {"v2", scalars_json(v2)}}},
                             {"output", tables(R, w1, w2, v1, v2)}});
        }
        tb["samples"] = samples;
      }
      rep_.tables = tb;
    }
    add(compare_relations(R, T.target, T.F, spec_, f_));
    add(group_checks(R, spec_, f_));
  }

  const RunConfig& cfg_;
  Stage stage_;
  FieldCtx f_;
  CheckSpec spec_;
  Report rep_;
};

}  // namespace detail

// Builds the configured instance and, for Verify and RootGroups, runs its
// verification suite. Throws ConstructionError when the instance cannot be
// built; failed checks are reported, not thrown.
inline Report run(const RunConfig& cfg, Stage stage = Stage::Verify) {
  if (cfg.field.function_field) return detail::Runner<RatFunc>(cfg, stage).run();
  return detail::Runner<Rational>(cfg, stage).run();
}

inline void require_pass(const Report& rep) {
  if (rep.pass()) return;
  std::string names;
  for (const auto& r : rep.records) {
    if (r.hard && !r.pass) names += (names.empty() ? "" : ", ") + r.name;
  }
  throw Error(ErrorCode::VerificationFailure, "failed checks: " + names);
}

}  // namespace quadalg
