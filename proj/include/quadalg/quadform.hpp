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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadalg/errors.hpp"
#include "quadalg/field/field.hpp"
#include "quadalg/linalg.hpp"

namespace quadalg {

// Nondegenerate diagonal quadratic form sum d_i x_i^2.
template <class K>
class QuadraticForm {
 public:
  QuadraticForm() = default;
  explicit QuadraticForm(std::vector<K> diag) : diag_(std::move(diag)) {
    if (diag_.empty()) throw Error(ErrorCode::DimensionMismatch, "quadratic form of dimension 0");
    for (std::size_t i = 0; i < diag_.size(); ++i) {
      if (is_zero(diag_[i])) {
        throw Error(ErrorCode::DegenerateForm, "zero diagonal entry at index " + std::to_string(i));
      }
    }
  }

  std::size_t dim() const { return diag_.size(); }
  const std::vector<K>& diag() const { return diag_; }
  const K& operator[](std::size_t i) const { return diag_[i]; }

  K eval(const Vec<K>& v) const {
    check(v);
    K acc(0);
    for (std::size_t i = 0; i < diag_.size(); ++i) {
      if (!is_zero(v[i])) acc += diag_[i] * v[i] * v[i];
    }
    return acc;
  }

  K polarize(const Vec<K>& v, const Vec<K>& w) const {
    check(v);
    check(w);
    K acc(0);
    for (std::size_t i = 0; i < diag_.size(); ++i) {
      if (!is_zero(v[i]) && !is_zero(w[i])) acc += diag_[i] * v[i] * w[i];
    }
    return K(2) * acc;
  }

  QuadraticForm scaled(const K& c) const {
    std::vector<K> d;
    for (const auto& x : diag_) d.push_back(c * x);
    return QuadraticForm(std::move(d));
  }

  K determinant() const {
    K d(1);
    for (const auto& x : diag_) d *= x;
    return d;
  }

  friend QuadraticForm orthogonal_sum(const QuadraticForm& a, const QuadraticForm& b) {
    std::vector<K> d = a.diag_;
    d.insert(d.end(), b.diag_.begin(), b.diag_.end());
    return QuadraticForm(std::move(d));
  }

  // Kronecker order: index i*dim(b)+j carries a_i b_j.
  friend QuadraticForm tensor(const QuadraticForm& a, const QuadraticForm& b) {
    std::vector<K> d;
    for (const auto& x : a.diag_) {
      for (const auto& y : b.diag_) d.push_back(x * y);
    }
    return QuadraticForm(std::move(d));
  }

  template <class S, class F>
  QuadraticForm<S> map(F conv) const {
    std::vector<S> d;
    for (const auto& x : diag_) d.push_back(conv(x));
    return QuadraticForm<S>(std::move(d));
  }

 private:
  void check(const Vec<K>& v) const {
    if (v.size() != diag_.size()) {
      throw Error(ErrorCode::DimensionMismatch, "vector length " + std::to_string(v.size()) +
                                                    " for form of dimension " + std::to_string(diag_.size()));
    }
  }

  std::vector<K> diag_;
};

// <<a_1,...,a_n>> = <1,a_1> x ... x <1,a_n>; the entry for the subset S
// (bit i set iff a_{i+1} in S) is the product of its members.
template <class K>
QuadraticForm<K> pfister(const std::vector<K>& elems) {
  std::vector<K> d{K(1)};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (is_zero(elems[i])) throw Error(ErrorCode::ZeroSlot, "Pfister slot " + std::to_string(i + 1) + " is zero");
    std::size_t n = d.size();
    for (std::size_t j = 0; j < n; ++j) d.push_back(d[j] * elems[i]);
  }
  return QuadraticForm<K>(std::move(d));
}

template <class K>
struct PointedQuadSpace {
  QuadraticForm<K> form;
  Vec<K> base;

  PointedQuadSpace() = default;
  PointedQuadSpace(QuadraticForm<K> q, Vec<K> b) : form(std::move(q)), base(std::move(b)) {
    if (form.eval(base) != K(1)) throw Error(ErrorCode::DegenerateForm, "base point does not have norm 1");
  }

  std::size_t dim() const { return form.dim(); }
  K q(const Vec<K>& v) const { return form.eval(v); }
  K f(const Vec<K>& v, const Vec<K>& w) const { return form.polarize(v, w); }

  // v -> f(base,v) base - v
  Vec<K> sigma(const Vec<K>& v) const { return scale(f(base, v), base) - v; }

  Vec<K> inverse(const Vec<K>& v) const {
    K n = q(v);
    if (is_zero(n)) throw Error(ErrorCode::IsotropicVector, "q(v) = 0 in pq_inverse");
    return scale(K(1) / n, sigma(v));
  }
};

// Basis of {w : f(w, s) = 0 for all spanning s} for a diagonal form.
template <class K>
std::vector<Vec<K>> orthogonal_complement(const QuadraticForm<K>& q, const std::vector<Vec<K>>& spanning) {
  std::size_t n = q.dim();
  if (spanning.empty()) {
    std::vector<Vec<K>> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vec<K>(n, i));
    return all;
  }
  Matrix<K> m(spanning.size(), n);
  for (std::size_t r = 0; r < spanning.size(); ++r) {
    if (spanning[r].size() != n) throw Error(ErrorCode::DimensionMismatch, "spanning vector length");
    for (std::size_t i = 0; i < n; ++i) m(r, i) = K(2) * q[i] * spanning[r][i];
  }
  auto basis = nullspace(m);
  if (basis.size() != n - rank(Matrix<K>::from_rows(spanning, n))) {
    throw Error(ErrorCode::DegenerateForm, "form degenerate on the ambient space");
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Anisotropy

enum class VerdictKind { Anisotropic, Isotropic, Unknown };

inline const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Anisotropic: return "Anisotropic";
    case VerdictKind::Isotropic: return "Isotropic";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

// One node of a residue-form recursion. Interior nodes split on `variable`
// into the even- and odd-valuation residue forms; leaves are forms over Q.
struct ResidueNode {
  std::string variable;              // empty for leaves
  std::vector<std::string> entries;  // diagonal of the form at this node
  VerdictKind verdict = VerdictKind::Unknown;
  std::string leaf_kind;  // "positive-definite", "negative-definite", "empty", "search", "non-constant"
  std::vector<ResidueNode> children;

  bool leaves_definite() const {
    if (children.empty()) {
      return leaf_kind == "positive-definite" || leaf_kind == "negative-definite" || leaf_kind == "empty";
    }
    for (const auto& c : children) {
      if (!c.leaves_definite()) return false;
    }
    return true;
  }
};

template <class K>
struct AnisotropyVerdict {
  VerdictKind kind = VerdictKind::Unknown;
  Vec<K> witness;
  std::string certificate;  // "definite", "residue-recursion", "search", ...
  std::optional<ResidueNode> tree;
  std::size_t searched = 0;
};

struct AnisotropyOptions {
  long search_bound = 6;
  std::size_t search_cap = 200000;
};

namespace detail {

// Zero search over Q: enumerate the first n-1 coordinates in a box and
// solve for the last one when that needs only a rational square root.
inline std::optional<Vec<Rational>> search_zero(const std::vector<Rational>& d, const AnisotropyOptions& opt,
                                                std::size_t* count) {
  std::size_t n = d.size();
  if (n == 1) return std::nullopt;
  long bound = std::max<long>(1, opt.search_bound);
  // Shrink the box so the enumeration stays under the cap.
  while (bound > 1) {
    double c = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) c *= double(2 * bound + 1);
    if (c <= double(opt.search_cap)) break;
    --bound;
  }
  std::vector<long> v(n - 1, -bound);
  for (;;) {
    ++*count;
    bool nonzero = false;
    Rational s(0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (v[i] != 0) {
        nonzero = true;
        s += d[i] * Rational(v[i] * v[i]);
      }
    }
    if (nonzero) {
      Rational need = -s / d[n - 1];
      std::optional<Rational> r;
      if (need.is_zero()) {
        r = Rational(0);
      } else {
        r = need.sqrt();
      }
      if (r) {
        Vec<Rational> w;
        for (auto x : v) w.push_back(Rational(x));
        w.push_back(*r);
        return w;
      }
    }
    std::size_t k = 0;
    while (k < v.size() && v[k] == bound) v[k++] = -bound;
    if (k == v.size()) break;
    ++v[k];
  }
  return std::nullopt;
}

inline AnisotropyVerdict<Rational> anisotropy_over_q(const std::vector<Rational>& d, const AnisotropyOptions& opt,
                                                     ResidueNode* node) {
  AnisotropyVerdict<Rational> out;
  if (node) {
    for (const auto& x : d) node->entries.push_back(x.str());
  }
  if (d.empty()) {
    out.kind = VerdictKind::Anisotropic;
    out.certificate = "empty";
    if (node) node->leaf_kind = "empty";
  } else if (std::all_of(d.begin(), d.end(), [](const Rational& x) { return x.sign() > 0; }) ||
             std::all_of(d.begin(), d.end(), [](const Rational& x) { return x.sign() < 0; })) {
    out.kind = VerdictKind::Anisotropic;
    out.certificate = "definite";
    if (node) node->leaf_kind = d[0].sign() > 0 ? "positive-definite" : "negative-definite";
  } else {
    out.certificate = "search";
    if (node) node->leaf_kind = "search";
    auto w = search_zero(d, opt, &out.searched);
    if (w) {
      out.kind = VerdictKind::Isotropic;
      out.witness = *w;
    }
  }
  if (node) node->verdict = out.kind;
  return out;
}

// Residue recursion over Q(vars) on the variables order[0..depth).
inline AnisotropyVerdict<RatFunc> springer(const std::vector<RatFunc>& d, const std::vector<std::size_t>& order,
                                           std::size_t depth, const VarCtx& ctx, const AnisotropyOptions& opt,
                                           ResidueNode& node) {
  AnisotropyVerdict<RatFunc> out;
  out.certificate = "residue-recursion";
  if (depth == 0) {
    std::vector<Rational> qd;
    for (const auto& x : d) {
      if (!x.is_constant()) {
        for (const auto& y : d) node.entries.push_back(y.str());
        node.leaf_kind = "non-constant";
        node.verdict = VerdictKind::Unknown;
        return out;
      }
      qd.push_back(x.constant_value());
    }
    auto v = anisotropy_over_q(qd, opt, &node);
    out.kind = v.kind;
    out.searched = v.searched;
    for (const auto& x : v.witness) out.witness.push_back(RatFunc(x));
    return out;
  }
  for (const auto& x : d) node.entries.push_back(x.str());
  std::size_t t = order[depth - 1];
  node.variable = (*ctx)[t];
  if (d.empty()) {
    out.kind = VerdictKind::Anisotropic;
    node.leaf_kind = "empty";
    node.verdict = out.kind;
    return out;
  }
  // Split each entry as t^ord * unit and record the residue of the unit.
  struct Split {
    int ord;
    RatFunc unit;
    RatFunc residue;
  };
  std::vector<Split> parts;
  for (const auto& x : d) {
    int a = x.num().min_degree_in(t), b = x.den().min_degree_in(t);
    Monomial ma = Monomial::var(t, static_cast<unsigned>(a));
    Monomial mb = Monomial::var(t, static_cast<unsigned>(b));
    Poly n = x.num().div_monomial(ma), dd = x.den().div_monomial(mb);
    RatFunc unit = RatFunc::make(n, dd);
    RatFunc residue = RatFunc::make(n.at_zero(t), dd.at_zero(t));
    parts.push_back(Split{a - b, unit, residue});
  }
  std::vector<RatFunc> cls[2];
  std::vector<std::size_t> idx[2];
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int p = ((parts[i].ord % 2) + 2) % 2;
    cls[p].push_back(parts[i].residue);
    idx[p].push_back(i);
  }
  bool all_aniso = true;
  node.children.resize(2);
  for (int p = 0; p < 2; ++p) {
    auto sub = springer(cls[p], order, depth - 1, ctx, opt, node.children[p]);
    out.searched += sub.searched;
    if (sub.kind != VerdictKind::Anisotropic) all_aniso = false;
    if (sub.kind == VerdictKind::Isotropic && out.kind != VerdictKind::Isotropic) {
      // Lift only when the unit parts in this class do not involve t.
      bool liftable = true;
      for (auto i : idx[p]) {
        if (parts[i].unit != parts[i].residue) liftable = false;
      }
      if (!liftable) continue;
      Vec<RatFunc> w(d.size(), RatFunc(0));
      for (std::size_t k = 0; k < idx[p].size(); ++k) {
        std::size_t i = idx[p][k];
        int m = (parts[i].ord - p) / 2;
        RatFunc tp = RatFunc::var(ctx, t);
        RatFunc scale_t(1);
        for (int e = 0; e < std::abs(m); ++e) scale_t = scale_t * tp;
        w[i] = m >= 0 ? sub.witness[k] / scale_t : sub.witness[k] * scale_t;
      }
      out.kind = VerdictKind::Isotropic;
      out.witness = std::move(w);
    }
  }
  if (out.kind != VerdictKind::Isotropic && all_aniso) out.kind = VerdictKind::Anisotropic;
  node.verdict = out.kind;
  return out;
}

}  // namespace detail

// Decides anisotropy where the desk-scale machinery allows. Isotropic
// witnesses are re-evaluated exactly before being returned.
inline AnisotropyVerdict<Rational> anisotropy(const QuadraticForm<Rational>& q, const AnisotropyOptions& opt = {}) {
  ResidueNode node;
  auto v = detail::anisotropy_over_q(q.diag(), opt, &node);
  v.tree = node;
  if (v.kind == VerdictKind::Isotropic && (!is_zero(q.eval(v.witness)) || is_zero_vec(v.witness))) {
    throw Error(ErrorCode::AnisotropyWitness, "internal: invalid isotropy witness");
  }
  return v;
}

// Over Q(t_1..t_n): variable_order lists variable indices; the last one is
// split off first. An empty order means all variables in declaration order.
inline AnisotropyVerdict<RatFunc> anisotropy(const QuadraticForm<RatFunc>& q, std::vector<std::size_t> variable_order = {},
                                             const AnisotropyOptions& opt = {}) {
  VarCtx ctx;
  for (const auto& x : q.diag()) ctx = merge_ctx(ctx, x.ctx());
  if (variable_order.empty() && ctx) {
    for (std::size_t i = 0; i < ctx->size(); ++i) variable_order.push_back(i);
  }
  ResidueNode node;
  auto v = detail::springer(q.diag(), variable_order, variable_order.size(), ctx, opt, node);
  v.tree = node;
  if (v.kind == VerdictKind::Isotropic && (!is_zero(q.eval(v.witness)) || is_zero_vec(v.witness))) {
    throw Error(ErrorCode::AnisotropyWitness, "internal: invalid isotropy witness");
  }
  return v;
}

template <class K>
AnisotropyVerdict<K> anisotropy_of(const QuadraticForm<K>& q, const AnisotropyOptions& opt = {}) {
  if constexpr (std::is_same_v<K, Rational>) {
    return anisotropy(q, opt);
  } else {
    return anisotropy(q, {}, opt);
  }
}

// ---------------------------------------------------------------------------
// Data for the exceptional types.

enum class EType { E6, E7, E8 };

inline const char* etype_name(EType t) {
  switch (t) {
    case EType::E6: return "E6";
    case EType::E7: return "E7";
    case EType::E8: return "E8";
  }
  return "?";
}

template <class K>
struct ETypeData {
  EType type;
  K a;
  std::vector<K> s;    // s_2, s_3, ... (for E8 includes s_6)
  std::vector<K> c1;   // parameters of C_1
  std::vector<K> c2;   // parameters of C_2
  QuadraticForm<K> q;  // N (x) <1, s_2, ...>
  AnisotropyVerdict<K> q_verdict;
  AnisotropyVerdict<K> c1_verdict;
  AnisotropyVerdict<K> c2_verdict;
  // Witt chain q + 2H ~ q_A + H ~ q_1 - q_2 at the level of invariants.
  std::size_t dim_q_plus_2h = 0, dim_qa_plus_h = 0, dim_q1_minus_q2 = 0;
  bool discriminants_agree = false;
};

template <class K>
bool is_square_elem(const K& x) {
  return square_root(x).has_value();
}

template <class K>
ETypeData<K> build_e6e7e8_data(EType type, const K& a, std::vector<K> s, const AnisotropyOptions& opt = {}) {
  if (is_zero(a)) throw Error(ErrorCode::ZeroSlot, "a = 0");
  if (is_square_elem(a)) throw Error(ErrorCode::SquareA, "a = " + to_string(a) + " is a square");
  std::size_t need = type == EType::E6 ? 2 : type == EType::E7 ? 3 : 5;
  if (type == EType::E8 && s.size() == 4) s.push_back(K(-1) / (s[0] * s[1] * s[2] * s[3]));
  if (s.size() != need) {
    throw Error(ErrorCode::DimensionMismatch, std::string(etype_name(type)) + " needs " + std::to_string(need) +
                                                  " s-parameters, got " + std::to_string(s.size()));
  }
  for (const auto& x : s) {
    if (is_zero(x)) throw Error(ErrorCode::ZeroSlot, "zero s-parameter");
  }
  ETypeData<K> out;
  out.type = type;
  out.a = a;
  out.s = s;
  out.c1 = {a, -s[0], -s[1]};
  switch (type) {
    case EType::E6: out.c2 = {a}; break;
    case EType::E7: out.c2 = {a, s[0] * s[1] * s[2]}; break;
    case EType::E8: {
      K prod = s[0] * s[1] * s[2] * s[3] * s[4];
      if (prod != K(-1)) {
        throw Error(ErrorCode::ProductConstraintViolated, "s2*s3*s4*s5*s6 = " + to_string(prod) + ", expected -1");
      }
      out.c2 = {a, -s[2] * s[4], -s[3] * s[4]};
      break;
    }
  }
  std::vector<K> tail{K(1)};
  for (const auto& x : s) tail.push_back(x);
  QuadraticForm<K> norm_e = pfister<K>({-a});
  out.q = tensor(norm_e, QuadraticForm<K>(tail));
  out.q_verdict = anisotropy_of(out.q, opt);
  if (out.q_verdict.kind == VerdictKind::Isotropic) {
    throw Error(ErrorCode::NotAnisotropic, "q is isotropic, witness " + vec_str(out.q_verdict.witness));
  }
  auto norm_of = [](const std::vector<K>& params) {
    std::vector<K> neg;
    for (const auto& p : params) neg.push_back(-p);
    return pfister(neg);
  };
  QuadraticForm<K> q1 = norm_of(out.c1), q2 = norm_of(out.c2);
  out.c1_verdict = anisotropy_of(q1, opt);
  out.c2_verdict = anisotropy_of(q2, opt);
  if (out.c1_verdict.kind == VerdictKind::Isotropic || out.c2_verdict.kind == VerdictKind::Isotropic) {
    throw Error(ErrorCode::NotAnisotropic, "a composition algebra norm is isotropic");
  }
  std::size_t dq = out.q.dim(), d1 = q1.dim(), d2 = q2.dim();
  out.dim_q_plus_2h = dq + 4;
  out.dim_qa_plus_h = (d1 - 1) + (d2 - 1) + 2;
  out.dim_q1_minus_q2 = d1 + d2;
  // det(q + 2H) = det q; det(q_1 - q_2) = det q_1 (-1)^{d2} det q_2.
  K disc = out.q.determinant() * q1.determinant() * q2.determinant();
  if (d2 % 2 == 1) disc = -disc;
  out.discriminants_agree = is_square_elem(disc);
  return out;
}

}  // namespace quadalg
