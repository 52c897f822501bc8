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
#include <vector>

#include "quadalg/errors.hpp"
#include "quadalg/field/poly.hpp"
#include "quadalg/field/rational.hpp"

namespace quadalg {

// Element of Q(t1..tn) as num/den with gcd(num,den) = 1 and den carrying
// coprime integer coefficients and a positive leading coefficient.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : num_(Rational(c)), den_(1) {}   // NOLINT(google-explicit-constructor)
  RatFunc(int c) : num_(Rational(c)), den_(1) {}    // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& p) : num_(p), den_(1) {}      // NOLINT(google-explicit-constructor)

  static RatFunc make(Poly num, Poly den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.reduce();
    return r;
  }

  static RatFunc var(const VarCtx& ctx, std::size_t i) { return RatFunc(Poly::var(ctx, i)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  VarCtx ctx() const { return merge_ctx(num_.ctx(), den_.ctx()); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }
  Rational constant_value() const {
    if (!is_constant()) throw Error(ErrorCode::CtxMismatch, "rational function is not constant");
    return num_.constant_value();
  }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b, false); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, b, true); }
  RatFunc& operator+=(const RatFunc& b) { return *this = add(*this, b, false); }
  RatFunc& operator-=(const RatFunc& b) { return *this = add(*this, b, true); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    RatFunc r;
    if (a.den_.is_one() && b.den_.is_one()) {
      r.num_ = a.num_ * b.num_;
      return r;
    }
    if (a.is_constant()) return b.scaled(a.num_.constant_value());
    if (b.is_constant()) return a.scaled(b.num_.constant_value());
    // Cross-cancel so the product needs no further gcd.
    Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!bd.is_one()) {
      Poly g = poly_gcd(an, bd);
      if (!g.is_constant()) {
        an = an.divide_exact(g);
        bd = bd.divide_exact(g);
      }
    }
    if (!ad.is_one()) {
      Poly g = poly_gcd(bn, ad);
      if (!g.is_constant()) {
        bn = bn.divide_exact(g);
        ad = ad.divide_exact(g);
      }
    }
    r.num_ = an * bn;
    r.den_ = ad * bd;
    r.normalize_den();
    return r;
  }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

  RatFunc inv() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize_den();
    return r;
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero rational function");
    if (b.is_constant()) return a.scaled(b.num_.constant_value().inv());
    return a * b.inv();
  }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

  RatFunc scaled(const Rational& c) const {
    RatFunc r = *this;
    r.num_ = r.num_.scaled(c);
    if (r.num_.is_zero()) r.den_ = Poly(1);
    return r;
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  Rational evaluate(const std::vector<Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (d.is_zero()) throw Error(ErrorCode::PoleAtPoint, "denominator vanishes at point");
    return num_.evaluate(point) / d;
  }

  std::optional<RatFunc> sqrt() const {
    if (is_zero()) throw Error(ErrorCode::ZeroInput, "is_square of zero");
    // num/den is a square iff num*den is a square polynomial.
    auto w = (num_ * den_).sqrt();
    if (!w) return std::nullopt;
    return make(*w, den_);
  }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  static RatFunc add(const RatFunc& a, const RatFunc& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    RatFunc r;
    if (a.den_ == b.den_) {
      r.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
      r.den_ = a.den_;
      if (!r.den_.is_one()) r.reduce();
      return r;
    }
    Poly g = poly_gcd(a.den_, b.den_);
    if (g.is_constant()) {
      Poly n1 = a.num_ * b.den_, n2 = b.num_ * a.den_;
      r.num_ = subtract ? n1 - n2 : n1 + n2;
      r.den_ = a.den_ * b.den_;
      // Coprime denominators: the sum is already in lowest terms.
      r.normalize_den();
      return r;
    }
    Poly ad = a.den_.divide_exact(g), bd = b.den_.divide_exact(g);
    Poly n1 = a.num_ * bd, n2 = b.num_ * ad;
    r.num_ = subtract ? n1 - n2 : n1 + n2;
    r.den_ = a.den_ * bd;
    r.reduce();
    return r;
  }

  void reduce() {
    if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    if (den_.is_constant()) {
      num_ = num_.scaled(den_.constant_value().inv());
      den_ = Poly(1);
      return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
    normalize_den();
  }

  void normalize_den() {
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    if (den_.is_constant()) {
      num_ = num_.scaled(den_.constant_value().inv());
      den_ = Poly(1);
      return;
    }
    Rational c = den_.content();
    if (den_.lead().c.sign() < 0) c = -c;
    if (!c.is_one()) {
      Rational ci = c.inv();
      num_ = num_.scaled(ci);
      den_ = den_.scaled(ci);
    }
  }

  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }
inline std::string to_string(const RatFunc& r) { return r.str(); }

}  // namespace quadalg
