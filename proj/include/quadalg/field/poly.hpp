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

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadalg/errors.hpp"
#include "quadalg/field/rational.hpp"

namespace quadalg {

inline constexpr std::size_t kMaxVars = 48;

using VarNames = std::vector<std::string>;
using VarCtx = std::shared_ptr<const VarNames>;

inline VarCtx make_var_ctx(VarNames names) {
  if (names.size() > kMaxVars) {
    throw Error(ErrorCode::DimensionMismatch,
                "at most " + std::to_string(kMaxVars) + " variables supported");
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (names[i] == names[j]) throw Error(ErrorCode::CtxMismatch, "duplicate variable " + names[i]);
    }
  }
  return std::make_shared<const VarNames>(std::move(names));
}

// Two contexts are compatible when one variable list is a prefix of the
// other; the longer one wins. A null context means "no variables".
inline VarCtx merge_ctx(const VarCtx& a, const VarCtx& b) {
  if (!a) return b;
  if (!b || a.get() == b.get()) return a;
  const VarCtx& small = a->size() <= b->size() ? a : b;
  const VarCtx& large = a->size() <= b->size() ? b : a;
  for (std::size_t i = 0; i < small->size(); ++i) {
    if ((*small)[i] != (*large)[i]) {
      throw Error(ErrorCode::CtxMismatch, "incompatible variable lists");
    }
  }
  return large;
}

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  bool is_one() const { return deg == 0; }

  // Graded lexicographic: total degree first, then the exponent of the
  // earliest variable.
  friend int compare(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    int c = std::memcmp(a.e.data(), b.e.data(), kMaxVars);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg == b.deg && std::memcmp(a.e.data(), b.e.data(), kMaxVars) == 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(a.e[i]) + unsigned(b.e[i]);
      if (s > 255) throw Error(ErrorCode::DimensionMismatch, "exponent overflow");
      r.e[i] = static_cast<std::uint8_t>(s);
    }
    r.deg = static_cast<std::uint16_t>(a.deg + b.deg);
    return r;
  }

  bool divides(const Monomial& b) const {
    if (deg > b.deg) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (e[i] > b.e[i]) return false;
    }
    return true;
  }

  // b / this, caller guarantees divisibility.
  Monomial quotient_of(const Monomial& b) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(b.e[i] - e[i]);
    r.deg = static_cast<std::uint16_t>(b.deg - deg);
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.e[i] = std::min(a.e[i], b.e[i]);
      d += r.e[i];
    }
    r.deg = static_cast<std::uint16_t>(d);
    return r;
  }

  static Monomial var(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.e[i] = static_cast<std::uint8_t>(power);
    m.deg = static_cast<std::uint16_t>(power);
    return m;
  }
};

struct Term {
  Monomial m;
  Rational c;
};

// Sparse multivariate polynomial over Q. Terms are kept sorted by
// decreasing graded-lex order with no zero coefficients, so structural
// equality is semantic equality.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.push_back(Term{Monomial{}, c});
  }
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly var(const VarCtx& ctx, std::size_t i) {
    if (!ctx || i >= ctx->size()) throw Error(ErrorCode::CtxMismatch, "variable index out of range");
    Poly p;
    p.ctx_ = ctx;
    p.terms_.push_back(Term{Monomial::var(i), Rational(1)});
    return p;
  }

  static Poly term(const VarCtx& ctx, const Monomial& m, const Rational& c) {
    Poly p;
    if (c.is_zero()) return p;
    p.ctx_ = m.is_one() ? nullptr : ctx;
    p.terms_.push_back(Term{m, c});
    return p;
  }

  // Builds from unsorted, possibly repeated terms.
  static Poly from_terms(const VarCtx& ctx, std::vector<Term> terms) {
    Poly p;
    p.ctx_ = ctx;
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const VarCtx& ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c.is_one(); }
  bool is_single_term() const { return terms_.size() == 1; }
  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error(ErrorCode::CtxMismatch, "polynomial is not constant");
    return terms_[0].c;
  }
  // Constant coefficient, zero if absent.
  Rational constant_term() const {
    if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
    return Rational(0);
  }
  const Term& lead() const { return terms_.front(); }

  int total_degree() const { return terms_.empty() ? -1 : terms_.front().m.deg; }
  int degree_in(std::size_t v) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max<int>(d, t.m.e[v]);
    return d;
  }
  int min_degree_in(std::size_t v) const {
    int d = 1 << 20;
    for (const auto& t : terms_) d = std::min<int>(d, t.m.e[v]);
    return terms_.empty() ? 0 : d;
  }
  bool has_var(std::size_t v) const {
    for (const auto& t : terms_) {
      if (t.m.e[v] != 0) return true;
    }
    return false;
  }
  // Largest variable index occurring, or -1 for constants.
  int max_var() const {
    int best = -1;
    for (const auto& t : terms_) {
      for (int i = static_cast<int>(kMaxVars) - 1; i > best; --i) {
        if (t.m.e[static_cast<std::size_t>(i)] != 0) {
          best = i;
          break;
        }
      }
    }
    return best;
  }

  // Monomial dividing every term (componentwise minimum exponent).
  Monomial monomial_content() const {
    if (terms_.empty()) return Monomial{};
    Monomial g = terms_[0].m;
    for (std::size_t i = 1; i < terms_.size() && !g.is_one(); ++i) g = Monomial::gcd(g, terms_[i].m);
    return g;
  }

  // Positive rational c with this/c having coprime integer coefficients.
  Rational content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class g = terms_[0].c.num();
    mpz_class l = terms_[0].c.den();
    for (std::size_t i = 1; i < terms_.size(); ++i) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), terms_[i].c.raw().get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), terms_[i].c.raw().get_den_mpz_t());
    }
    mpz_abs(g.get_mpz_t(), g.get_mpz_t());
    return Rational(g, l);
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  Poly& operator+=(const Poly& b) { return *this = merge(*this, b, false); }
  Poly& operator-=(const Poly& b) { return *this = merge(*this, b, true); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.is_constant()) return b.scaled(a.terms_[0].c);
    if (b.is_constant()) return a.scaled(b.terms_[0].c);
    VarCtx ctx = merge_ctx(a.ctx_, b.ctx_);
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0], ctx);
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0], ctx);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) out.push_back(Term{x.m * y.m, x.c * y.c});
    }
    return from_terms(ctx, std::move(out));
  }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly scaled(const Rational& c) const {
    if (c.is_zero()) return Poly();
    Poly r = *this;
    if (c.is_one()) return r;
    for (auto& t : r.terms_) t.c *= c;
    return r;
  }

  Poly times_term(const Term& t, const VarCtx& ctx) const {
    Poly r;
    r.ctx_ = ctx;
    r.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves the order.
    for (const auto& x : terms_) r.terms_.push_back(Term{x.m * t.m, x.c * t.c});
    return r;
  }

  // Divides by a monomial that divides every term.
  Poly div_monomial(const Monomial& m) const {
    if (m.is_one()) return *this;
    Poly r;
    r.ctx_ = ctx_;
    r.terms_.reserve(terms_.size());
    for (const auto& x : terms_) {
      if (!m.divides(x.m)) throw Error(ErrorCode::NotDivisible, "monomial does not divide");
      r.terms_.push_back(Term{m.quotient_of(x.m), x.c});
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
    }
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Exact quotient a / b; throws NotDivisible if b does not divide a.
  std::optional<Poly> try_divide(const Poly& b) const {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (is_zero()) return Poly();
    if (b.is_constant()) return scaled(b.terms_[0].c.inv());
    if (b.terms_.size() == 1) {
      const Term& t = b.terms_[0];
      Poly r;
      r.ctx_ = merge_ctx(ctx_, b.ctx_);
      Rational ci = t.c.inv();
      for (const auto& x : terms_) {
        if (!t.m.divides(x.m)) return std::nullopt;
        r.terms_.push_back(Term{t.m.quotient_of(x.m), x.c * ci});
      }
      return r;
    }
    VarCtx ctx = merge_ctx(ctx_, b.ctx_);
    const Term& lb = b.lead();
    Rational lbi = lb.c.inv();
    std::vector<Term> q;
    Poly rem = *this;
    while (!rem.is_zero()) {
      const Term& lr = rem.lead();
      if (!lb.m.divides(lr.m)) return std::nullopt;
      Term t{lb.m.quotient_of(lr.m), lr.c * lbi};
      q.push_back(t);
      rem = rem - b.times_term(t, ctx);
    }
    Poly out;
    out.ctx_ = ctx;
    out.terms_ = std::move(q);  // produced in decreasing order
    return out;
  }

  Poly divide_exact(const Poly& b) const {
    auto q = try_divide(b);
    if (!q) throw Error(ErrorCode::NotDivisible, "inexact polynomial division");
    return *q;
  }

  // Exact square root if this is the square of a polynomial.
  std::optional<Poly> sqrt() const {
    if (is_zero()) return Poly();
    const Term& lt = lead();
    Monomial m0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (lt.m.e[i] % 2 != 0) return std::nullopt;
      m0.e[i] = static_cast<std::uint8_t>(lt.m.e[i] / 2);
    }
    m0.deg = static_cast<std::uint16_t>(lt.m.deg / 2);
    auto c0 = lt.c.sqrt();
    if (!c0) return std::nullopt;
    Term s0{m0, *c0};
    Poly s = term(ctx_, m0, *c0);
    Monomial last = m0;
    Rational two_c0 = Rational(2) * s0.c;
    for (std::size_t iter = 0; iter <= terms_.size() * terms_.size() + 2; ++iter) {
      Poly r = *this - s * s;
      if (r.is_zero()) return s;
      const Term& lr = r.lead();
      if (!m0.divides(lr.m)) return std::nullopt;
      Monomial mt = m0.quotient_of(lr.m);
      if (compare(mt, last) >= 0) return std::nullopt;
      last = mt;
      s = s + term(ctx_, mt, lr.c / two_c0);
    }
    return std::nullopt;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    Rational acc(0);
    for (const auto& t : terms_) {
      Rational v = t.c;
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (t.m.e[i] == 0) continue;
        if (i >= point.size()) throw Error(ErrorCode::DimensionMismatch, "evaluation point too short");
        v *= point[i].pow(t.m.e[i]);
      }
      acc += v;
    }
    return acc;
  }

  // Sets variable v to zero.
  Poly at_zero(std::size_t v) const {
    Poly r;
    r.ctx_ = ctx_;
    for (const auto& t : terms_) {
      if (t.m.e[v] == 0) r.terms_.push_back(t);
    }
    return r;
  }

  // Coefficients with respect to variable v: result[i] multiplies v^i.
  std::vector<Poly> coeffs_in(std::size_t v) const {
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(degree_in(v), 0)) + 1);
    for (const auto& t : terms_) {
      Term u = t;
      u.m.deg = static_cast<std::uint16_t>(u.m.deg - u.m.e[v]);
      u.m.e[v] = 0;
      buckets[t.m.e[v]].push_back(std::move(u));
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_terms(ctx_, std::move(b)));
    return out;
  }

  static Poly from_coeffs(const VarCtx& ctx, std::size_t v, const std::vector<Poly>& cs) {
    std::vector<Term> all;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (const auto& t : cs[i].terms_) {
        Term u = t;
        unsigned e = unsigned(u.m.e[v]) + unsigned(i);
        if (e > 255) throw Error(ErrorCode::DimensionMismatch, "exponent overflow");
        u.m.e[v] = static_cast<std::uint8_t>(e);
        u.m.deg = static_cast<std::uint16_t>(u.m.deg + i);
        all.push_back(std::move(u));
      }
    }
    return from_terms(ctx, std::move(all));
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      Rational c = t.c;
      bool neg = c.sign() < 0;
      if (neg) c = -c;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? "-" : "+";
      }
      first = false;
      std::string mono = monomial_str(t.m);
      if (mono.empty()) {
        out += c.str();
      } else if (c.is_one()) {
        out += mono;
      } else {
        out += c.str() + "*" + mono;
      }
    }
    return out;
  }

 private:
  std::string monomial_str(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (m.e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += (ctx_ && i < ctx_->size()) ? (*ctx_)[i] : ("x" + std::to_string(i));
      if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return compare(a.m, b.m) > 0; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      Term acc = std::move(terms_[i]);
      std::size_t j = i + 1;
      while (j < terms_.size() && terms_[j].m == acc.m) {
        acc.c += terms_[j].c;
        ++j;
      }
      if (!acc.c.is_zero()) terms_[w++] = std::move(acc);
      i = j;
    }
    terms_.resize(w);
    if (is_constant()) ctx_ = nullptr;
  }

  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    Poly r;
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    r.ctx_ = merge_ctx(a.ctx_, b.ctx_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size()) {
        c = -1;
      } else if (j == b.terms_.size()) {
        c = 1;
      } else {
        c = compare(a.terms_[i].m, b.terms_[j].m);
      }
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const Term& t = b.terms_[j++];
        r.terms_.push_back(Term{t.m, subtract ? -t.c : t.c});
      } else {
        Rational s = subtract ? a.terms_[i].c - b.terms_[j].c : a.terms_[i].c + b.terms_[j].c;
        if (!s.is_zero()) r.terms_.push_back(Term{a.terms_[i].m, std::move(s)});
        ++i;
        ++j;
      }
    }
    if (r.is_constant()) r.ctx_ = nullptr;
    return r;
  }

  VarCtx ctx_;
  std::vector<Term> terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

// Greatest common divisor, normalized to leading coefficient 1 (the zero
// polynomial only for gcd(0,0)).
Poly poly_gcd(const Poly& a, const Poly& b);

namespace detail {

inline Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.lead().c.inv());
}

// gcd of all coefficients of p with respect to variable v.
inline Poly content_in(const Poly& p, std::size_t v) {
  auto cs = p.coeffs_in(v);
  Poly g;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? monic(c) : poly_gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

inline std::vector<Poly> trim(std::vector<Poly> u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
  return u;
}

inline std::vector<Poly> primitive_in(const std::vector<Poly>& u) {
  Poly g;
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? monic(c) : poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  std::vector<Poly> out;
  out.reserve(u.size());
  Poly gm = g.is_constant() ? Poly(1) : g;
  for (const auto& c : u) {
    Poly q = gm.is_one() ? c : c.divide_exact(gm);
    out.push_back(q);
  }
  // Strip the rational content as well to keep coefficients small.
  Rational rc(0);
  bool first = true;
  for (const auto& c : out) {
    if (c.is_zero()) continue;
    Rational k = c.content();
    if (first) {
      rc = k;
      first = false;
    } else {
      mpz_class n, d;
      mpz_gcd(n.get_mpz_t(), rc.raw().get_num_mpz_t(), k.raw().get_num_mpz_t());
      mpz_lcm(d.get_mpz_t(), rc.raw().get_den_mpz_t(), k.raw().get_den_mpz_t());
      rc = Rational(n, d);
    }
  }
  if (!first && !rc.is_one()) {
    Rational inv = rc.inv();
    for (auto& c : out) c = c.scaled(inv);
  }
  return out;
}

// Pseudo-remainder of a by b in the main variable (coefficient vectors).
inline std::vector<Poly> prem(std::vector<Poly> a, const std::vector<Poly>& b) {
  const std::size_t n = b.size() - 1;
  const Poly& lb = b.back();
  a = trim(std::move(a));
  while (!a.empty() && a.size() - 1 >= n) {
    std::size_t m = a.size() - 1;
    Poly la = a.back();
    std::size_t shift = m - n;
    for (std::size_t i = 0; i < a.size(); ++i) {
      Poly v = a[i] * lb;
      if (i >= shift && i - shift <= n) v -= la * b[i - shift];
      a[i] = std::move(v);
    }
    a = trim(std::move(a));
  }
  return a;
}

inline Poly gcd_nomono(const Poly& a, const Poly& b) {
  if (a.is_constant() || b.is_constant()) return Poly(1);
  VarCtx ctx = merge_ctx(a.ctx(), b.ctx());
  int va = a.max_var(), vb = b.max_var();
  std::size_t v = static_cast<std::size_t>(std::max(va, vb));
  if (!a.has_var(v)) return poly_gcd(a, content_in(b, v));
  if (!b.has_var(v)) return poly_gcd(content_in(a, v), b);
  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly c = poly_gcd(ca, cb);
  auto ua = primitive_in(a.coeffs_in(v));
  auto ub = primitive_in(b.coeffs_in(v));
  if (ua.size() < ub.size()) std::swap(ua, ub);
  while (true) {
    auto r = prem(ua, ub);
    if (r.empty()) break;
    if (r.size() == 1) {
      ub = {Poly(1)};
      break;
    }
    ua = std::move(ub);
    ub = primitive_in(r);
  }
  Poly g = Poly::from_coeffs(ctx, v, primitive_in(ub));
  return monic(c * g);
}

}  // namespace detail

inline Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return detail::monic(b);
  if (b.is_zero()) return detail::monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b) return detail::monic(a);
  Monomial m = Monomial::gcd(a.monomial_content(), b.monomial_content());
  VarCtx ctx = merge_ctx(a.ctx(), b.ctx());
  if (a.is_single_term() || b.is_single_term()) return Poly::term(ctx, m, Rational(1));
  Poly ar = a.div_monomial(a.monomial_content());
  Poly br = b.div_monomial(b.monomial_content());
  Poly g = detail::gcd_nomono(ar, br);
  if (m.is_one()) return g;
  return g.times_term(Term{m, Rational(1)}, ctx);
}

}  // namespace quadalg
