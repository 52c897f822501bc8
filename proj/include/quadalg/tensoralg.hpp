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

#include <string>
#include <utility>
#include <vector>

#include "quadalg/composition.hpp"
#include "quadalg/errors.hpp"
#include "quadalg/linalg.hpp"

namespace quadalg {

// s1 (x) 1 + 1 (x) s2 with s_i skew in C_i. Components are stored as full
// coordinate vectors of C_i whose scalar coordinate is zero.
template <class K>
struct SkewElem {
  Vec<K> s1;
  Vec<K> s2;
  friend bool operator==(const SkewElem& a, const SkewElem& b) { return a.s1 == b.s1 && a.s2 == b.s2; }
};

// C1 (x) C2 with involution sigma1 (x) sigma2. Coordinates are indexed by
// p * dim(C2) + q for basis1(p) (x) basis2(q).
template <class K>
class TensorAlgebra {
 public:
  struct Entry {
    std::size_t index;
    K coeff;
  };

  TensorAlgebra() = default;
  TensorAlgebra(CompositionAlgebra<K> c1, CompositionAlgebra<K> c2) : c1_(std::move(c1)), c2_(std::move(c2)) {
    n1_ = c1_.dim();
    n2_ = c2_.dim();
    n_ = n1_ * n2_;
    build_table();
  }

  const CompositionAlgebra<K>& c1() const { return c1_; }
  const CompositionAlgebra<K>& c2() const { return c2_; }
  std::size_t dim() const { return n_; }
  std::size_t dim1() const { return n1_; }
  std::size_t dim2() const { return n2_; }
  std::size_t skew_dim() const { return n1_ + n2_ - 2; }
  std::size_t index(std::size_t p, std::size_t q) const { return p * n2_ + q; }

  Vec<K> unit() const { return unit_vec<K>(n_, 0); }
  Vec<K> basis(std::size_t p, std::size_t q) const { return unit_vec<K>(n_, index(p, q)); }

  Vec<K> pure(const Vec<K>& x1, const Vec<K>& x2) const {
    Vec<K> z(n_, K(0));
    for (std::size_t p = 0; p < n1_; ++p) {
      if (is_zero(x1[p])) continue;
      for (std::size_t q = 0; q < n2_; ++q) {
        if (!is_zero(x2[q])) z[index(p, q)] = x1[p] * x2[q];
      }
    }
    return z;
  }

  Vec<K> multiply(const Vec<K>& x, const Vec<K>& y) const {
    check(x);
    check(y);
    Vec<K> z(n_, K(0));
    for (std::size_t a = 0; a < n_; ++a) {
      if (is_zero(x[a])) continue;
      for (std::size_t b = 0; b < n_; ++b) {
        if (is_zero(y[b])) continue;
        const Entry& e = table_[a * n_ + b];
        z[e.index] += e.coeff * x[a] * y[b];
      }
    }
    return z;
  }

  Vec<K> involution(const Vec<K>& x) const {
    check(x);
    Vec<K> r = x;
    for (std::size_t p = 0; p < n1_; ++p) {
      for (std::size_t q = 0; q < n2_; ++q) {
        if ((p == 0) != (q == 0)) r[index(p, q)] = -r[index(p, q)];
      }
    }
    return r;
  }

  Vec<K> embed(const SkewElem<K>& s) const {
    check_skew(s);
    Vec<K> z(n_, K(0));
    for (std::size_t p = 1; p < n1_; ++p) z[index(p, 0)] = s.s1[p];
    for (std::size_t q = 1; q < n2_; ++q) z[index(0, q)] = s.s2[q];
    return z;
  }

  // Splits x into the two skew components; anything outside the grading
  // is a ResultNotSkew error.
  SkewElem<K> decompose(const Vec<K>& x) const {
    check(x);
    for (std::size_t p = 0; p < n1_; ++p) {
      for (std::size_t q = 0; q < n2_; ++q) {
        bool graded = (p == 0) != (q == 0);
        if (!graded && !is_zero(x[index(p, q)])) {
          throw Error(ErrorCode::ResultNotSkew, "nonzero coordinate at " + composition_labels()[p] + "(x)" +
                                                    composition_labels()[q] + ": " + to_string(x[index(p, q)]));
        }
      }
    }
    SkewElem<K> s{Vec<K>(n1_, K(0)), Vec<K>(n2_, K(0))};
    for (std::size_t p = 1; p < n1_; ++p) s.s1[p] = x[index(p, 0)];
    for (std::size_t q = 1; q < n2_; ++q) s.s2[q] = x[index(0, q)];
    return s;
  }

  // Skew coordinates: (s1[1..], s2[1..]).
  Vec<K> skew_coords(const SkewElem<K>& s) const {
    Vec<K> v;
    for (std::size_t p = 1; p < n1_; ++p) v.push_back(s.s1[p]);
    for (std::size_t q = 1; q < n2_; ++q) v.push_back(s.s2[q]);
    return v;
  }
  SkewElem<K> from_skew_coords(const Vec<K>& v) const {
    if (v.size() != skew_dim()) throw Error(ErrorCode::DimensionMismatch, "skew coordinate length");
    SkewElem<K> s{Vec<K>(n1_, K(0)), Vec<K>(n2_, K(0))};
    for (std::size_t p = 1; p < n1_; ++p) s.s1[p] = v[p - 1];
    for (std::size_t q = 1; q < n2_; ++q) s.s2[q] = v[n1_ - 1 + q - 1];
    return s;
  }

  // q_A(s1 (x) 1 + 1 (x) s2) = q1(s1) - q2(s2)
  K albert(const SkewElem<K>& s) const { return c1_.norm(s.s1) - c2_.norm(s.s2); }
  K albert_bil(const SkewElem<K>& s, const SkewElem<K>& t) const {
    return c1_.bil(s.s1, t.s1) - c2_.bil(s.s2, t.s2);
  }
  // The Albert form as a diagonal form on skew coordinates.
  QuadraticForm<K> albert_form() const {
    std::vector<K> d;
    for (std::size_t p = 1; p < n1_; ++p) d.push_back(c1_.norm_form()[p]);
    for (std::size_t q = 1; q < n2_; ++q) d.push_back(-c2_.norm_form()[q]);
    return QuadraticForm<K>(std::move(d));
  }

  SkewElem<K> sharp(const SkewElem<K>& s) const { return SkewElem<K>{s.s1, -s.s2}; }

  SkewElem<K> s_inverse(const SkewElem<K>& s) const {
    K n = albert(s);
    if (is_zero(n)) throw Error(ErrorCode::IsotropicSkew, "q_A(s) = 0");
    K c = K(-1) / n;
    SkewElem<K> h = sharp(s);
    return SkewElem<K>{scale(c, h.s1), scale(c, h.s2)};
  }

  Matrix<K> lmul_matrix(const Vec<K>& s) const {
    check(s);
    Matrix<K> m(n_, n_);
    for (std::size_t a = 0; a < n_; ++a) {
      if (is_zero(s[a])) continue;
      for (std::size_t b = 0; b < n_; ++b) {
        const Entry& e = table_[a * n_ + b];
        m(e.index, b) += e.coeff * s[a];
      }
    }
    return m;
  }

  // (x,y) -> x conj(y) - y conj(x)
  SkewElem<K> skew_pair(const Vec<K>& x, const Vec<K>& y) const {
    return decompose(multiply(x, involution(y)) - multiply(y, involution(x)));
  }

  // e0 . x = 1/2 (x + (1/a)(i1 (x) i2) x) and its complement.
  std::pair<Vec<K>, Vec<K>> peirce_project(const K& a, const Vec<K>& x) const {
    Vec<K> ii = basis(1, 1);
    Vec<K> x0 = scale(K(1) / K(2), x + scale(K(1) / a, multiply(ii, x)));
    return {x0, x - x0};
  }

  template <class S, class F>
  TensorAlgebra<S> rebase(F conv) const {
    return TensorAlgebra<S>(c1_.template rebase<S>(conv), c2_.template rebase<S>(conv));
  }

 private:
  void check(const Vec<K>& x) const {
    if (x.size() != n_) throw Error(ErrorCode::AlgebraMismatch, "tensor element length");
  }
  void check_skew(const SkewElem<K>& s) const {
    if (s.s1.size() != n1_ || s.s2.size() != n2_) throw Error(ErrorCode::AlgebraMismatch, "skew element shape");
    if (!is_zero(s.s1[0]) || !is_zero(s.s2[0])) throw Error(ErrorCode::ResultNotSkew, "skew component with scalar part");
  }

  void build_table() {
    table_.clear();
    table_.reserve(n_ * n_);
    for (std::size_t p = 0; p < n1_; ++p) {
      for (std::size_t q = 0; q < n2_; ++q) {
        for (std::size_t r = 0; r < n1_; ++r) {
          for (std::size_t s = 0; s < n2_; ++s) {
            const auto& e1 = c1_.entry(p, r);
            const auto& e2 = c2_.entry(q, s);
            table_.push_back(Entry{index(e1.index, e2.index), e1.coeff * e2.coeff});
          }
        }
      }
    }
    // table_ is laid out as [(p,q)][(r,s)] which matches [a][b].
  }

  CompositionAlgebra<K> c1_, c2_;
  std::size_t n1_ = 1, n2_ = 1, n_ = 1;
  std::vector<Entry> table_;
};

template <class K>
TensorAlgebra<RatFunc> to_symbolic(const TensorAlgebra<K>& t) {
  return t.template rebase<RatFunc>([](const K& x) { return to_ratfunc(x); });
}

// Identities of skew elements in C1 (x) C2: flexibility s1(s2 s1) =
// (s1 s2) s1, the operator identity (s1 s2 s1) x = s1(s2(s1 x)), and
// s(s^{-1} x) = x.
template <class K>
std::vector<CheckRecord> skew_identities(const TensorAlgebra<K>& T, const CheckSpec& spec, const FieldCtx& f) {
  std::vector<CheckRecord> out;
  auto Ts = to_symbolic(T);
  std::size_t m = T.skew_dim(), n = T.dim();
  out.push_back(identity_check<K>(
      "skew_flexible", "s1(s2 s1) = (s1 s2) s1", spec, f, T, Ts, {{"a", m}, {"b", m}},
      [](const auto& A, const auto& v) {
        auto s1 = A.embed(A.from_skew_coords(v[0]));
        auto s2 = A.embed(A.from_skew_coords(v[1]));
        return A.multiply(s1, A.multiply(s2, s1)) - A.multiply(A.multiply(s1, s2), s1);
      }));
  CheckSpec rnd = spec;
  rnd.mode = Mode::Random;
  out.push_back(identity_check<K>(
      "skew_triple_operator", "(s1 s2 s1) x = s1(s2(s1 x))", rnd, f, T, Ts, {{"a", m}, {"b", m}, {"x", n}},
      [](const auto& A, const auto& v) {
        auto s1 = A.embed(A.from_skew_coords(v[0]));
        auto s2 = A.embed(A.from_skew_coords(v[1]));
        const auto& x = v[2];
        return A.multiply(A.multiply(s1, A.multiply(s2, s1)), x) - A.multiply(s1, A.multiply(s2, A.multiply(s1, x)));
      }));
  out.push_back(identity_check<K>(
      "skew_inverse_action", "s(s^{-1} x) = x for q_A(s) != 0", rnd, f, T, Ts, {{"a", m}, {"x", n}},
      [](const auto& A, const auto& v) {
        auto s = A.from_skew_coords(v[0]);
        using V = std::decay_t<decltype(v[1])>;
        if (is_zero(A.albert(s))) return V(v[1].size(), typename V::value_type(0));
        auto si = A.s_inverse(s);
        return A.multiply(A.embed(s), A.multiply(A.embed(si), v[1])) - v[1];
      }));
  out.push_back(identity_check<K>(
      "involution_anti_automorphism", "sigma(xy) = sigma(y) sigma(x)", rnd, f, T, Ts, {{"x", n}, {"y", n}},
      [](const auto& A, const auto& v) {
        return A.involution(A.multiply(v[0], v[1])) - A.multiply(A.involution(v[1]), A.involution(v[0]));
      }));
  out.push_back(identity_check<K>(
      "skew_pair_antisymmetric", "(x,y) = -(y,x), result graded", rnd, f, T, Ts, {{"x", n}, {"y", n}},
      [](const auto& A, const auto& v) {
        auto a = A.skew_pair(v[0], v[1]);
        auto b = A.skew_pair(v[1], v[0]);
        return A.skew_coords(a) + A.skew_coords(b);
      }));
  return out;
}

}  // namespace quadalg
