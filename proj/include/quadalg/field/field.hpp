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

#include <cctype>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "quadalg/errors.hpp"
#include "quadalg/field/poly.hpp"
#include "quadalg/field/ratfunc.hpp"
#include "quadalg/field/rational.hpp"

namespace quadalg {

// Deterministic generator. Bounded draws are derived from the raw 64-bit
// stream directly so results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
  }

  Rng fork(std::uint64_t salt) { return Rng(gen_() ^ (salt * 0x9E3779B97F4A7C15ULL)); }

 private:
  std::mt19937_64 gen_;
};

struct FieldCtx {
  VarNames vars;
  VarCtx ctx;

  static FieldCtx rationals() { return FieldCtx{}; }
  static FieldCtx function_field(VarNames names) {
    FieldCtx f;
    f.vars = names;
    f.ctx = make_var_ctx(std::move(names));
    return f;
  }

  bool is_rationals() const { return vars.empty(); }
  std::size_t nvars() const { return vars.size(); }
  RatFunc var(std::size_t i) const { return RatFunc::var(ctx, i); }
  std::string describe() const {
    if (vars.empty()) return "Q";
    std::string s = "Q(";
    for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
    return s + ")";
  }
};

template <class K>
inline constexpr bool is_ratfunc_v = std::is_same_v<K, RatFunc>;

inline Rational random_rational(Rng& rng, long coeff_bound) {
  if (coeff_bound < 1) throw Error(ErrorCode::DimensionMismatch, "coeff_bound must be >= 1");
  return Rational(rng.uniform(-coeff_bound, coeff_bound));
}

// Integer in [-b,b] over Q; over a function field a polynomial of total
// degree <= degree_bound with such integer coefficients.
template <class K>
K random_element(const FieldCtx& f, Rng& rng, long coeff_bound, int degree_bound) {
  if constexpr (std::is_same_v<K, Rational>) {
    (void)f;
    (void)degree_bound;
    return random_rational(rng, coeff_bound);
  } else {
    if (f.is_rationals() || degree_bound <= 0) return RatFunc(random_rational(rng, coeff_bound));
    // Enumerate all monomials up to the degree bound in a fixed order.
    std::vector<Term> terms;
    std::vector<unsigned> e(f.nvars(), 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
      if (i == f.nvars()) {
        Rational c = random_rational(rng, coeff_bound);
        if (c.is_zero()) return;
        Monomial m;
        unsigned d = 0;
        for (std::size_t k = 0; k < e.size(); ++k) {
          m.e[k] = static_cast<std::uint8_t>(e[k]);
          d += e[k];
        }
        m.deg = static_cast<std::uint16_t>(d);
        terms.push_back(Term{m, c});
        return;
      }
      for (int p = 0; p <= left; ++p) {
        e[i] = static_cast<unsigned>(p);
        self(self, i + 1, left - p);
      }
      e[i] = 0;
    };
    rec(rec, 0, degree_bound);
    return RatFunc(Poly::from_terms(f.ctx, std::move(terms)));
  }
}

template <class K>
K random_nonzero(const FieldCtx& f, Rng& rng, long coeff_bound, int degree_bound) {
  for (;;) {
    K x = random_element<K>(f, rng, coeff_bound, degree_bound);
    if (!is_zero(x)) return x;
  }
}

inline std::optional<Rational> square_root(const Rational& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "is_square of zero");
  return x.sqrt();
}
inline std::optional<RatFunc> square_root(const RatFunc& x) { return x.sqrt(); }

inline Rational evaluate_at(const Rational& x, const std::vector<Rational>&) { return x; }
inline Rational evaluate_at(const RatFunc& x, const std::vector<Rational>& pt) { return x.evaluate(pt); }

inline RatFunc to_ratfunc(const Rational& x) { return RatFunc(x); }
inline RatFunc to_ratfunc(const RatFunc& x) { return x; }

// Sign of a nonzero constant; nullopt for non-constant elements.
inline std::optional<int> constant_sign(const Rational& x) { return x.sign(); }
inline std::optional<int> constant_sign(const RatFunc& x) {
  if (!x.is_constant()) return std::nullopt;
  return x.constant_value().sign();
}

// Recursive-descent parser for scalar expressions: integers, n/d, variable
// names, + - * / ^ (integer exponent) and parentheses.
class ScalarParser {
 public:
  ScalarParser(std::string text, VarCtx ctx) : s_(std::move(text)), ctx_(std::move(ctx)) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  RatFunc expr() {
    RatFunc acc;
    bool first = true;
    for (;;) {
      skip();
      bool neg = false;
      if (eat('-')) {
        neg = true;
      } else if (eat('+')) {
      } else if (!first) {
        return acc;
      }
      RatFunc t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
  }
  RatFunc term() {
    RatFunc acc = power();
    for (;;) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        acc = acc / power();
      } else {
        return acc;
      }
    }
  }
  RatFunc power() {
    RatFunc b = atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      long e = std::stol(s_.substr(start, pos_ - start));
      RatFunc r(1);
      for (long i = 0; i < e; ++i) r = r * b;
      if (neg) r = r.inv();
      return r;
    }
    return b;
  }
  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc(Rational(mpz_class(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (ctx_) {
        for (std::size_t i = 0; i < ctx_->size(); ++i) {
          if ((*ctx_)[i] == name) return RatFunc::var(ctx_, i);
        }
      }
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string s_;
  VarCtx ctx_;
  std::size_t pos_ = 0;
};

template <class K>
K parse_scalar(const std::string& text, const FieldCtx& f) {
  RatFunc r = ScalarParser(text, f.ctx).parse();
  if constexpr (std::is_same_v<K, Rational>) {
    if (!r.is_constant()) throw Error(ErrorCode::ParseError, "'" + text + "' is not a rational constant");
    return r.constant_value();
  } else {
    return r;
  }
}

}  // namespace quadalg
