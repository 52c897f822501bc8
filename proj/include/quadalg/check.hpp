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

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "quadalg/errors.hpp"
#include "quadalg/field/field.hpp"
#include "quadalg/linalg.hpp"

namespace quadalg {

enum class Mode { Symbolic, Random };

inline const char* mode_name(Mode m) { return m == Mode::Symbolic ? "symbolic" : "random"; }

struct CheckSpec {
  Mode mode = Mode::Random;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  long coeff_bound = 10;
  int degree_bound = 1;
  long search_bound = 6;
};

struct CheckRecord {
  std::string name;
  std::string statement;  // the identity or property being checked
  std::string mode;       // "symbolic", "random", "exact" or "search"
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  bool pass = true;
  bool hard = true;  // soft checks only warn
  std::string witness;
  std::string note;
  double seconds = 0;
};

inline bool all_pass(const std::vector<CheckRecord>& rs) {
  for (const auto& r : rs) {
    if (r.hard && !r.pass) return false;
  }
  return true;
}

inline const CheckRecord* find_record(const std::vector<CheckRecord>& rs, const std::string& name) {
  for (const auto& r : rs) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

inline std::string truncate(std::string s, std::size_t n = 400) {
  if (s.size() > n) s = s.substr(0, n) + "...";
  return s;
}

// Fresh indeterminates appended after the base field's variables, so base
// scalars embed without conversion.
class SymbolicVars {
 public:
  SymbolicVars(const FieldCtx& base, const std::vector<std::pair<std::string, std::size_t>>& groups) {
    VarNames names = base.vars;
    std::size_t off = names.size();
    for (const auto& [prefix, n] : groups) {
      offsets_.push_back(names.size());
      sizes_.push_back(n);
      for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + "_" + std::to_string(i));
    }
    (void)off;
    ctx_ = make_var_ctx(std::move(names));
  }

  Vec<RatFunc> vec(std::size_t group) const {
    Vec<RatFunc> v;
    for (std::size_t i = 0; i < sizes_[group]; ++i) v.push_back(RatFunc::var(ctx_, offsets_[group] + i));
    return v;
  }

  const VarCtx& ctx() const { return ctx_; }

 private:
  VarCtx ctx_;
  std::vector<std::size_t> offsets_, sizes_;
};

template <class K>
Vec<K> random_vec(const FieldCtx& f, Rng& rng, std::size_t n, const CheckSpec& spec) {
  Vec<K> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_element<K>(f, rng, spec.coeff_bound, spec.degree_bound));
  return v;
}

template <class K>
Vec<K> random_nonzero_vec(const FieldCtx& f, Rng& rng, std::size_t n, const CheckSpec& spec) {
  for (;;) {
    Vec<K> v = random_vec<K>(f, rng, n, spec);
    if (!is_zero_vec(v)) return v;
  }
}

inline std::string args_str(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "; " : "") + parts[i];
  return s;
}

// Seeded random evaluations only; for identities with no symbolic route.
template <class K, class Ident>
CheckRecord random_check(const std::string& name, const std::string& statement, const CheckSpec& spec,
                         const FieldCtx& f, const std::vector<std::pair<std::string, std::size_t>>& args,
                         Ident ident) {
  CheckRecord rec;
  rec.name = name;
  rec.statement = statement;
  rec.mode = "random";
  rec.seed = spec.seed;
  Stopwatch sw;
  Rng rng(spec.seed);
  for (std::size_t t = 0; t < spec.trials; ++t) {
    std::vector<Vec<K>> xs;
    for (const auto& a : args) xs.push_back(random_vec<K>(f, rng, a.second, spec));
    Vec<K> r = ident(xs);
    ++rec.trials;
    if (!is_zero_vec(r)) {
      rec.pass = false;
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < args.size(); ++i) parts.push_back(args[i].first + "=" + vec_str(xs[i]));
      rec.witness = truncate(args_str(parts) + " -> residual " + vec_str(r), 1200);
      break;
    }
  }
  rec.seconds = sw.seconds();
  return rec;
}

// Runs ident over argument vectors of the given dimensions. In symbolic mode
// the arguments are indeterminates and ident receives the RatFunc-rebased
// structure; in random mode it receives seeded samples. ident returns a
// residual vector that must vanish identically.
template <class K, class Alg, class AlgS, class Ident>
CheckRecord identity_check(const std::string& name, const std::string& statement, const CheckSpec& spec,
                           const FieldCtx& f, const Alg& alg, const AlgS& alg_sym,
                           const std::vector<std::pair<std::string, std::size_t>>& args, Ident ident) {
  CheckRecord rec;
  rec.name = name;
  rec.statement = statement;
  rec.mode = mode_name(spec.mode);
  rec.seed = spec.seed;
  Stopwatch sw;
  if (spec.mode == Mode::Symbolic) {
    SymbolicVars sv(f, args);
    std::vector<Vec<RatFunc>> xs;
    for (std::size_t i = 0; i < args.size(); ++i) xs.push_back(sv.vec(i));
    Vec<RatFunc> r = ident(alg_sym, xs);
    rec.trials = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!is_zero(r[i])) {
        rec.pass = false;
        rec.witness = truncate("residual[" + std::to_string(i) + "] = " + to_string(r[i]));
        break;
      }
    }
  } else {
    CheckRecord r = random_check<K>(name, statement, spec, f, args, [&](const std::vector<Vec<K>>& xs) {
      return ident(alg, xs);
    });
    r.seconds = sw.seconds();
    return r;
  }
  rec.seconds = sw.seconds();
  return rec;
}

// Exact check over an explicit finite family (basis grids and the like).
inline CheckRecord exact_check(const std::string& name, const std::string& statement,
                               const std::function<std::string()>& body) {
  CheckRecord rec;
  rec.name = name;
  rec.statement = statement;
  rec.mode = "exact";
  rec.trials = 1;
  Stopwatch sw;
  try {
    std::string w = body();
    rec.pass = w.empty();
    rec.witness = truncate(w, 1200);
  } catch (const Error& e) {
    rec.pass = false;
    rec.witness = e.what();
  }
  rec.seconds = sw.seconds();
  return rec;
}

template <class K>
Vec<K> scalar_vec(const K& x) {
  return Vec<K>{x};
}

}  // namespace quadalg
