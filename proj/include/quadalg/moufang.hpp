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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadalg/check.hpp"
#include "quadalg/errors.hpp"
#include "quadalg/jmodule.hpp"
#include "quadalg/jordan.hpp"
#include "quadalg/linalg.hpp"
#include "quadalg/quadrangular.hpp"

namespace quadalg {

// [a, t] with a in X0 (coordinates in the chosen basis) and t e0 in J0.
// J0 = k e0 for every Jordan algebra built here, so t is a scalar.
template <class K>
struct WElem {
  Vec<K> a;
  K t;
  friend bool operator==(const WElem& x, const WElem& y) { return x.a == y.a && x.t == y.t; }
};

// x1(w1) x2(v2) x3(w3) x4(v4); V elements are J1/2 coordinates.
template <class K>
struct RootWord {
  WElem<K> w1;
  Vec<K> v2;
  WElem<K> w3;
  Vec<K> v4;
  friend bool operator==(const RootWord& x, const RootWord& y) {
    return x.w1 == y.w1 && x.v2 == y.v2 && x.w3 == y.w3 && x.v4 == y.v4;
  }
};

template <class K>
std::string word_str(const RootWord<K>& g) {
  return "x1(" + vec_str(g.w1.a) + ", " + to_string(g.w1.t) + ") x2(" + vec_str(g.v2) + ") x3(" + vec_str(g.w3.a) +
         ", " + to_string(g.w3.t) + ") x4(" + vec_str(g.v4) + ")";
}

// Root groups U1..U4 from a Jordan algebra with base point u and a special
// J-module with skew form (possibly the zero module). Commutators use
// [g,h] = g^-1 h^-1 g h, and the relations are stored as the transposition
// rules they induce:
//   x3(b) x1(a) = x1(a) x2(c13(a,b)) x3(b)
//   x4(w) x2(v) = x2(v) x3(c24(v,w)) x4(w)
//   x4(v) x1(a) = x1(a) x2(P) x3(Q) x4(v),  (P, Q) = c14(a, v)
template <class K>
class RootSystem {
 public:
  RootSystem() = default;

  static RootSystem zero_module(JordanAlgebra<K> J, Vec<K> u) {
    require_connecting(J, u);
    RootSystem r;
    r.J_ = std::move(J);
    r.u_ = std::move(u);
    return r;
  }
  static RootSystem with_module(const SpecialJModule<K>& M, Vec<K> u, std::vector<Vec<K>> x0) {
    require_connecting(M.J(), u);
    if (!M.has_skew()) throw Error(ErrorCode::ConstructionError, "module has no skew form");
    RootSystem r;
    r.J_ = M.J();
    r.u_ = std::move(u);
    r.M_ = M;
    r.X0_ = Subspace<K>(x0, M.dim());
    r.x0_ = std::move(x0);
    return r;
  }

  const JordanAlgebra<K>& J() const { return J_; }
  const Vec<K>& u() const { return u_; }
  std::size_t xdim() const { return x0_.size(); }
  std::size_t vdim() const { return J_.half_dim(); }
  bool has_module() const { return M_.has_value(); }
  const std::vector<Vec<K>>& x0_basis() const { return x0_; }

  template <class S, class F>
  RootSystem<S> rebase(F conv) const {
    auto cv = [&](const Vec<K>& v) {
      Vec<S> o;
      for (const auto& x : v) o.push_back(conv(x));
      return o;
    };
    RootSystem<S> r;
    if (M_) {
      std::vector<Vec<S>> x0;
      for (const auto& b : x0_) x0.push_back(cv(b));
      r = RootSystem<S>::with_module(M_->template rebase<S>(conv), cv(u_), std::move(x0));
    } else {
      r = RootSystem<S>::zero_module(J_.template rebase<S>(conv), cv(u_));
    }
    r.c13_scale = conv(c13_scale);
    r.c24_scale = conv(c24_scale);
    r.c14_scale = conv(c14_scale);
    return r;
  }

  // Relation coefficients; 1 unless a negative control changes them.
  K c13_scale = K(1), c24_scale = K(1), c14_scale = K(1);

  WElem<K> wzero() const { return WElem<K>{Vec<K>(xdim(), K(0)), K(0)}; }
  Vec<K> vzero() const { return Vec<K>(vdim(), K(0)); }
  RootWord<K> identity() const { return RootWord<K>{wzero(), vzero(), wzero(), vzero()}; }

  Vec<K> embed(const Vec<K>& a) const {
    Vec<K> x(M_ ? M_->dim() : 0, K(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!is_zero(a[i])) x = x + scale(a[i], x0_[i]);
    }
    return x;
  }

  // (x, y) for x, y in X0, as the coefficient of e0.
  K skew0(const Vec<K>& a1, const Vec<K>& a2) const {
    if (!M_) return K(0);
    return j0_coeff(M_->skew(embed(a1), embed(a2)), "(a1, a2)");
  }

  // [a1,t1] + [a2,t2] = [a1 + a2, t1 + t2 + (a2,a1)/2]
  WElem<K> wadd(const WElem<K>& x, const WElem<K>& y) const {
    return WElem<K>{x.a + y.a, x.t + y.t + skew0(y.a, x.a) / K(2)};
  }
  WElem<K> wneg(const WElem<K>& x) const { return WElem<K>{-x.a, -x.t}; }

  // (u.a1, a2) in J1/2.
  Vec<K> comm13(const WElem<K>& w1, const WElem<K>& w2) const {
    if (!M_) return vzero();
    Vec<K> z = M_->skew(M_->act(u_, embed(w1.a)), embed(w2.a));
    return scale(c13_scale, half_coords(z, "(u.a1, a2)"));
  }
  // [0, 2 (v1 v2) e0]
  WElem<K> comm24(const Vec<K>& v1, const Vec<K>& v2) const {
    Vec<K> j = scale(K(2), J_.jprod(J_.jprod(J_.half(v1), J_.half(v2)), J_.e0()));
    return WElem<K>{Vec<K>(xdim(), K(0)), c24_scale * j0_coeff(j, "2(v1 v2)e0")};
  }
  // x2((u.a, v.(u.a))/2 + 2 (U_u t) v) x3(v.(u.a), U_v U_u t)
  std::pair<Vec<K>, WElem<K>> comm14(const WElem<K>& w, const Vec<K>& v) const {
    Vec<K> V = J_.half(v);
    Vec<K> Ut = J_.U(u_, scale(w.t, J_.e0()));
    Vec<K> p = scale(K(2), J_.jprod(Ut, V));
    Vec<K> qa(xdim(), K(0));
    if (M_) {
      Vec<K> ua = M_->act(u_, embed(w.a));
      Vec<K> vua = M_->act(V, ua);
      p = p + scale(K(1) / K(2), M_->skew(ua, vua));
      qa = X0_.coords(vua);
    }
    K qt = j0_coeff(J_.U(V, Ut), "U_v U_u t");
    return {scale(c14_scale, half_coords(p, "U2 part of [x1, x4]")), WElem<K>{scale(c14_scale, qa), c14_scale * qt}};
  }

  RootWord<K> x1(const WElem<K>& w) const { return RootWord<K>{w, vzero(), wzero(), vzero()}; }
  RootWord<K> x2(const Vec<K>& v) const { return RootWord<K>{wzero(), v, wzero(), vzero()}; }
  RootWord<K> x3(const WElem<K>& w) const { return RootWord<K>{wzero(), vzero(), w, vzero()}; }
  RootWord<K> x4(const Vec<K>& v) const { return RootWord<K>{wzero(), vzero(), wzero(), v}; }

  RootWord<K> word_mul(const RootWord<K>& g, const RootWord<K>& h) const {
    std::vector<Letter> w = letters(g);
    for (auto& l : letters(h)) w.push_back(std::move(l));
    return collect(std::move(w));
  }

  // x4(-v4) x3(-w3) x2(-v2) x1(-w1), collected.
  RootWord<K> inverse(const RootWord<K>& g) const {
    std::vector<Letter> w{Letter{4, {}, -g.v4}, Letter{3, wneg(g.w3), {}}, Letter{2, {}, -g.v2},
                          Letter{1, wneg(g.w1), {}}};
    return collect(std::move(w));
  }

  // g^-1 h^-1 g h
  RootWord<K> commutator(const RootWord<K>& g, const RootWord<K>& h) const {
    return word_mul(word_mul(inverse(g), inverse(h)), word_mul(g, h));
  }

 private:
  struct Letter {
    int type;
    WElem<K> w;  // types 1 and 3
    Vec<K> v;    // types 2 and 4
  };

  std::vector<Letter> letters(const RootWord<K>& g) const {
    return {Letter{1, g.w1, {}}, Letter{2, {}, g.v2}, Letter{3, g.w3, {}}, Letter{4, {}, g.v4}};
  }

  static bool trivial(const Letter& l) {
    return (l.type == 1 || l.type == 3) ? is_zero_vec(l.w.a) && is_zero(l.w.t) : is_zero_vec(l.v);
  }

  // Rewrites the leftmost out-of-order or mergeable adjacent pair until the
  // word is x1 x2 x3 x4. Corrections land strictly between the two indices
  // being transposed, so the process terminates.
  RootWord<K> collect(std::vector<Letter> w) const {
    for (;;) {
      std::vector<Letter> next;
      bool changed = false;
      for (auto& l : w) {
        if (!trivial(l)) next.push_back(std::move(l));
      }
      w = std::move(next);
      for (std::size_t i = 0; i + 1 < w.size() && !changed; ++i) {
        Letter& l = w[i];
        Letter& r = w[i + 1];
        if (l.type < r.type) continue;
        changed = true;
        std::vector<Letter> rep;
        if (l.type == r.type) {
          Letter m = l;
          if (l.type == 1 || l.type == 3) {
            m.w = wadd(l.w, r.w);
          } else {
            m.v = l.v + r.v;
          }
          rep = {m};
        } else if (l.type == r.type + 1) {
          rep = {r, l};
        } else if (l.type == 3 && r.type == 1) {
          rep = {r, Letter{2, {}, comm13(r.w, l.w)}, l};
        } else if (l.type == 4 && r.type == 2) {
          rep = {r, Letter{3, comm24(r.v, l.v), {}}, l};
        } else {  // x4(v) x1(w)
          auto [p, q] = comm14(r.w, l.v);
          rep = {r, Letter{2, {}, p}, Letter{3, q, {}}, l};
        }
        std::vector<Letter> out(w.begin(), w.begin() + i);
        for (auto& x : rep) out.push_back(std::move(x));
        for (std::size_t j = i + 2; j < w.size(); ++j) out.push_back(std::move(w[j]));
        w = std::move(out);
      }
      if (!changed) break;
    }
    RootWord<K> g = identity();
    for (const auto& l : w) {
      switch (l.type) {
        case 1: g.w1 = l.w; break;
        case 2: g.v2 = l.v; break;
        case 3: g.w3 = l.w; break;
        default: g.v4 = l.v; break;
      }
    }
    return g;
  }

  K j0_coeff(const Vec<K>& j, const char* what) const {
    for (std::size_t i = 1; i < j.size(); ++i) {
      if (!is_zero(j[i])) throw Error(ErrorCode::DecompositionFailed, std::string(what) + " is not in k e0: " + vec_str(j));
    }
    return j[0];
  }
  Vec<K> half_coords(const Vec<K>& j, const char* what) const {
    if (!is_zero(j.front()) || !is_zero(j.back())) {
      throw Error(ErrorCode::DecompositionFailed, std::string(what) + " is not in J1/2: " + vec_str(j));
    }
    return J_.half_part(j);
  }

  JordanAlgebra<K> J_;
  Vec<K> u_;
  std::optional<SpecialJModule<K>> M_;
  std::vector<Vec<K>> x0_;
  Subspace<K> X0_;
};

// ---------------------------------------------------------------------------
// Group-law checks

template <class K>
WElem<K> random_welem(const RootSystem<K>& R, const FieldCtx& f, Rng& rng, const CheckSpec& spec) {
  return WElem<K>{random_vec<K>(f, rng, R.xdim(), spec), random_element<K>(f, rng, spec.coeff_bound, spec.degree_bound)};
}

template <class K>
RootWord<K> random_word(const RootSystem<K>& R, const FieldCtx& f, Rng& rng, const CheckSpec& spec) {
  return RootWord<K>{random_welem(R, f, rng, spec), random_vec<K>(f, rng, R.vdim(), spec), random_welem(R, f, rng, spec),
                     random_vec<K>(f, rng, R.vdim(), spec)};
}

template <class K>
std::vector<CheckRecord> group_checks(const RootSystem<K>& R, const CheckSpec& spec, const FieldCtx& f) {
  std::vector<CheckRecord> out;
  auto loop = [&](const std::string& name, const std::string& stmt, std::uint64_t salt, auto body) {
    CheckRecord r;
    r.name = name;
    r.statement = stmt;
    r.mode = "random";
    r.seed = spec.seed;
    Stopwatch sw;
    Rng rng(spec.seed ^ salt);
    try {
      for (std::size_t t = 0; t < spec.trials; ++t) {
        ++r.trials;
        std::string w = body(rng);
        if (!w.empty()) {
          r.pass = false;
          r.witness = truncate(w, 1200);
          break;
        }
      }
    } catch (const Error& e) {
      r.pass = false;
      r.witness = e.what();
    }
    r.seconds = sw.seconds();
    out.push_back(r);
  };
  loop("W_associative", "(x + y) + z = x + (y + z) in W", 0x51, [&](Rng& rng) -> std::string {
    auto x = random_welem(R, f, rng, spec), y = random_welem(R, f, rng, spec), z = random_welem(R, f, rng, spec);
    if (R.wadd(R.wadd(x, y), z) == R.wadd(x, R.wadd(y, z))) return "";
    return "x = " + vec_str(x.a) + ", y = " + vec_str(y.a) + ", z = " + vec_str(z.a);
  });
  loop("W_inverse", "w + (-w) = 0 and the commutator of two elements lies in {0} x J0", 0x52,
       [&](Rng& rng) -> std::string {
         auto x = random_welem(R, f, rng, spec), y = random_welem(R, f, rng, spec);
         if (!(R.wadd(x, R.wneg(x)) == R.wzero())) return "w = " + vec_str(x.a);
         auto c = R.wadd(R.wadd(R.wneg(x), R.wneg(y)), R.wadd(x, y));
         if (!is_zero_vec(c.a)) return "commutator has X0 part " + vec_str(c.a);
         return "";
       });
  loop("word_mul_associative", "(gh)k = g(hk) on normal forms", 0x53, [&](Rng& rng) -> std::string {
    auto g = random_word(R, f, rng, spec), h = random_word(R, f, rng, spec), k = random_word(R, f, rng, spec);
    auto l = R.word_mul(R.word_mul(g, h), k), r = R.word_mul(g, R.word_mul(h, k));
    if (l == r) return "";
    return "g = " + word_str(g) + "; h = " + word_str(h) + "; k = " + word_str(k) + ": " + word_str(l) + " vs " + word_str(r);
  });
  loop("word_mul_inverse", "g g^-1 = g^-1 g = 1 and 1 g = g", 0x54, [&](Rng& rng) -> std::string {
    auto g = random_word(R, f, rng, spec);
    auto gi = R.inverse(g);
    if (!(R.word_mul(g, gi) == R.identity()) || !(R.word_mul(gi, g) == R.identity())) return "g = " + word_str(g);
    if (!(R.word_mul(R.identity(), g) == g)) return "identity fails for g = " + word_str(g);
    return "";
  });
  // The commutators recomputed in the group reproduce the relations.
  loop("commutator_relations", "[x1(a), x3(b)^-1], [x2(v), x4(w)^-1], [x1(a), x4(v)^-1] and [Ui, Ui+1] as stored", 0x55,
       [&](Rng& rng) -> std::string {
         auto a = random_welem(R, f, rng, spec), b = random_welem(R, f, rng, spec);
         Vec<K> v = random_vec<K>(f, rng, R.vdim(), spec), w = random_vec<K>(f, rng, R.vdim(), spec);
         if (!(R.commutator(R.x1(a), R.inverse(R.x3(b))) == R.x2(R.comm13(a, b)))) return "[x1, x3^-1] at a = " + vec_str(a.a);
         if (!(R.commutator(R.x2(v), R.inverse(R.x4(w))) == R.x3(R.comm24(v, w)))) return "[x2, x4^-1] at v = " + vec_str(v);
         auto [p, q] = R.comm14(a, v);
         if (!(R.commutator(R.x1(a), R.inverse(R.x4(v))) == R.word_mul(R.x2(p), R.x3(q)))) return "[x1, x4^-1] at v = " + vec_str(v);
         if (!(R.commutator(R.x1(a), R.x2(v)) == R.identity())) return "[x1, x2] != 1";
         if (!(R.commutator(R.x2(v), R.x3(b)) == R.identity())) return "[x2, x3] != 1";
         if (!(R.commutator(R.x3(b), R.x4(w)) == R.identity())) return "[x3, x4] != 1";
         return "";
       });
  return out;
}

// ---------------------------------------------------------------------------
// Specializations: the stored relations against closed forms computed
// independently in the underlying structure, on basis grids and samples.

enum class RootTarget { QuadraticForm, Involutory, PseudoQuadratic, EType };

inline const char* root_target_name(RootTarget t) {
  switch (t) {
    case RootTarget::QuadraticForm: return "quadratic_form";
    case RootTarget::Involutory: return "involutory";
    case RootTarget::PseudoQuadratic: return "pseudo_quadratic";
    case RootTarget::EType: return "etype";
  }
  return "?";
}

// Closed forms of one target.
template <class K>
struct RootFormulas {
  std::function<K(const WElem<K>&, const WElem<K>&)> wadd_t;  // t part of the sum
  std::function<Vec<K>(const WElem<K>&, const WElem<K>&)> c13;
  std::function<K(const Vec<K>&, const Vec<K>&)> c24;
  std::function<std::pair<Vec<K>, WElem<K>>(const WElem<K>&, const Vec<K>&)> c14;
};

template <class K>
std::vector<CheckRecord> compare_relations(const RootSystem<K>& R, RootTarget target, const RootFormulas<K>& F,
                                           const CheckSpec& spec, const FieldCtx& f) {
  std::vector<CheckRecord> out;
  std::string p = std::string(root_target_name(target)) + "_";
  std::vector<WElem<K>> ws;
  std::vector<Vec<K>> vs;
  for (std::size_t i = 0; i < R.xdim(); ++i) ws.push_back(WElem<K>{unit_vec<K>(R.xdim(), i), K(0)});
  ws.push_back(WElem<K>{Vec<K>(R.xdim(), K(0)), K(1)});
  for (std::size_t i = 0; i < R.vdim(); ++i) vs.push_back(unit_vec<K>(R.vdim(), i));
  Rng rng(spec.seed ^ 0x16);
  std::size_t samples = std::min<std::size_t>(spec.trials, 50);
  for (std::size_t t = 0; t < samples; ++t) {
    ws.push_back(random_welem(R, f, rng, spec));
    vs.push_back(random_vec<K>(f, rng, R.vdim(), spec));
  }
  auto wstr = [](const WElem<K>& w) { return "[" + vec_str(w.a) + ", " + to_string(w.t) + "]"; };
  auto rec = [&](const std::string& name, const std::string& stmt, const std::function<std::string()>& body) {
    CheckRecord r = exact_check(p + name, stmt, body);
    r.trials = 1;
    r.note = "basis grid plus " + std::to_string(samples) + " samples";
    out.push_back(r);
  };
  rec("W_addition", "group law of W", [&]() -> std::string {
    for (const auto& x : ws) {
      for (const auto& y : ws) {
        WElem<K> s = R.wadd(x, y);
        if (s.a != x.a + y.a || s.t != F.wadd_t(x, y)) return wstr(x) + " + " + wstr(y) + " = " + wstr(s);
      }
    }
    return "";
  });
  rec("comm13", "[x1(a1), x3(a2)^-1]", [&]() -> std::string {
    for (const auto& x : ws) {
      for (const auto& y : ws) {
        if (R.comm13(x, y) != F.c13(x, y)) return "a1 = " + wstr(x) + ", a2 = " + wstr(y) + ": " + vec_str(R.comm13(x, y));
      }
    }
    return "";
  });
  rec("comm24", "[x2(v1), x4(v2)^-1]", [&]() -> std::string {
    for (const auto& x : vs) {
      for (const auto& y : vs) {
        WElem<K> c = R.comm24(x, y);
        if (!is_zero_vec(c.a) || c.t != F.c24(x, y)) return "v1 = " + vec_str(x) + ", v2 = " + vec_str(y) + ": " + wstr(c);
      }
    }
    return "";
  });
  rec("comm14", "[x1(a,t), x4(v)^-1]", [&]() -> std::string {
    for (const auto& x : ws) {
      for (const auto& v : vs) {
        auto got = R.comm14(x, v);
        auto want = F.c14(x, v);
        if (got.first != want.first || !(got.second == want.second)) {
          return "w = " + wstr(x) + ", v = " + vec_str(v) + ": x2(" + vec_str(got.first) + ") x3" + wstr(got.second) +
                 " vs x2(" + vec_str(want.first) + ") x3" + wstr(want.second);
        }
      }
    }
    return "";
  });
  return out;
}

// Quadratic form type: zero module over the reduced spin factor.
template <class K>
RootFormulas<K> quadratic_form_formulas(const RootSystem<K>& R) {
  PointedQuadSpace<K> V = R.J().space();
  std::size_t m = R.vdim();
  return RootFormulas<K>{
      [](const WElem<K>& x, const WElem<K>& y) { return x.t + y.t; },
      [m](const WElem<K>&, const WElem<K>&) { return Vec<K>(m, K(0)); },
      [V](const Vec<K>& v1, const Vec<K>& v2) { return V.f(v1, v2); },
      [V](const WElem<K>& w, const Vec<K>& v) {
        return std::pair<Vec<K>, WElem<K>>{scale(w.t, v), WElem<K>{{}, V.q(v) * w.t}};
      }};
}

// Involutory type: zero module over H(M2(L)); V = L, W = L_sigma = k.
template <class K>
RootFormulas<K> involutory_formulas(const RootSystem<K>& R) {
  CompositionAlgebra<K> L = R.J().L();
  std::size_t m = R.vdim();
  auto scalar = [](const Vec<K>& l) {
    for (std::size_t i = 1; i < l.size(); ++i) {
      if (!is_zero(l[i])) throw Error(ErrorCode::DecompositionFailed, "not in L_sigma: " + vec_str(l));
    }
    return l[0];
  };
  return RootFormulas<K>{
      [](const WElem<K>& x, const WElem<K>& y) { return x.t + y.t; },
      [m](const WElem<K>&, const WElem<K>&) { return Vec<K>(m, K(0)); },
      [L, scalar](const Vec<K>& l1, const Vec<K>& l2) {
        return scalar(L.multiply(L.conjugate(l1), l2) + L.multiply(L.conjugate(l2), l1));
      },
      [L, scalar](const WElem<K>& w, const Vec<K>& l) {
        Vec<K> al = scale(w.t, l);
        return std::pair<Vec<K>, WElem<K>>{al, WElem<K>{{}, scalar(L.multiply(L.conjugate(l), al))}};
      }};
}

// Pseudo-quadratic type on X~0 = {[a,0]}, computed in (L, X, h):
//   [a1,al1] + [a2,al2] = [a1 + a2, al1 + al2 + (h(a2,a1) - h(a1,a2))/2]
//   c13 = h(a1,a2), c24 = conj(l1) l2 + conj(l2) l1,
//   c14 = (theta(a,l) + al l, [a l, conj(l) al l]),  theta(a,l) = h(a, a l)/2.
template <class K>
RootFormulas<K> pseudo_quadratic_formulas(const PseudoQuadraticSpace<K>& P) {
  const auto& L = P.L;
  auto scalar = [](const Vec<K>& l) {
    for (std::size_t i = 1; i < l.size(); ++i) {
      if (!is_zero(l[i])) throw Error(ErrorCode::DecompositionFailed, "not in L_sigma: " + vec_str(l));
    }
    return l[0];
  };
  return RootFormulas<K>{
      [P, scalar](const WElem<K>& x, const WElem<K>& y) {
        return x.t + y.t + scalar(P.h(y.a, x.a) - P.h(x.a, y.a)) / K(2);
      },
      [P](const WElem<K>& x, const WElem<K>& y) { return P.h(x.a, y.a); },
      [L, scalar](const Vec<K>& l1, const Vec<K>& l2) {
        return scalar(L.multiply(L.conjugate(l1), l2) + L.multiply(L.conjugate(l2), l1));
      },
      [P, L, scalar](const WElem<K>& w, const Vec<K>& l) {
        Vec<K> al = scale(w.t, l);
        Vec<K> theta = scale(K(1) / K(2), P.h(w.a, P.rmul(w.a, l)));
        return std::pair<Vec<K>, WElem<K>>{theta + al,
                                           WElem<K>{P.rmul(w.a, l), scalar(L.multiply(L.conjugate(l), al))}};
      }};
}

// E-type, through the quadrangular algebra Q on X0:
//   [a1,t1] + [a2,t2] = [a1 + a2, t1 + t2 + g(a2,a1)]
//   c13 = h(a1,a2), c24 = f(v1,v2), c14 = (theta(a,v) + t v, [a.v, q(v) t]).
// g(a2,a1) here is f(h(a2,a1),1)/2, the g of the printed group law with its
// arguments in the other order.
template <class K>
RootFormulas<K> etype_formulas(const QuadrangularAlgebra<K>& Q) {
  return RootFormulas<K>{
      [Q](const WElem<K>& x, const WElem<K>& y) { return x.t + y.t + Q.g(y.a, x.a); },
      [Q](const WElem<K>& x, const WElem<K>& y) { return Q.h(x.a, y.a); },
      [Q](const Vec<K>& v1, const Vec<K>& v2) { return Q.f(v1, v2); },
      [Q](const WElem<K>& w, const Vec<K>& v) {
        return std::pair<Vec<K>, WElem<K>>{Q.theta(w.a, v) + scale(w.t, v), WElem<K>{Q.dot(w.a, v), Q.q(v) * w.t}};
      }};
}

template <class K>
RootSystem<K> root_system_from(const FromJModule<K>& B) {
  return RootSystem<K>::with_module(B.data.M, B.data.u, B.data.x0);
}

}  // namespace quadalg
