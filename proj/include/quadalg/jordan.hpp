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
#include <string>
#include <utility>
#include <vector>

#include "quadalg/check.hpp"
#include "quadalg/composition.hpp"
#include "quadalg/errors.hpp"
#include "quadalg/linalg.hpp"
#include "quadalg/quadform.hpp"

namespace quadalg {

enum class JordanKind { ReducedSpin, HermMat2 };

inline const char* jordan_kind_name(JordanKind k) {
  return k == JordanKind::ReducedSpin ? "reduced_spin" : "herm_mat2";
}

// Jordan algebra k e0 + W + k e1 with supplementary idempotents e0, e1.
// Coordinates are [t0, w_1..w_m, t1]. For the reduced spin factor W = V; for
// H(M2(L), sigma t) with L a quadratic extension or quaternion algebra (so
// that the symmetric elements of L are the scalars) W = L and the element
// [t0, l, t1] is the matrix [[t0, l^sigma], [l, t1]].
template <class K>
class JordanAlgebra {
 public:
  struct Term {
    std::size_t index;
    K coeff;
  };

  JordanAlgebra() = default;

  static JordanAlgebra reduced_spin(PointedQuadSpace<K> space) {
    JordanAlgebra J;
    J.kind_ = JordanKind::ReducedSpin;
    J.m_ = space.dim();
    J.space_ = std::move(space);
    J.build_table();
    return J;
  }

  static JordanAlgebra herm_mat2(CompositionAlgebra<K> L) {
    if (L.dim() != 2 && L.dim() != 4) {
      throw Error(ErrorCode::DimensionMismatch, "L must be a quadratic extension or a quaternion algebra");
    }
    JordanAlgebra J;
    J.kind_ = JordanKind::HermMat2;
    J.m_ = L.dim();
    J.L_ = std::move(L);
    J.build_table();
    return J;
  }

  JordanKind kind() const { return kind_; }
  std::size_t dim() const { return m_ + 2; }
  std::size_t half_dim() const { return m_; }
  const PointedQuadSpace<K>& space() const { return space_; }
  const CompositionAlgebra<K>& L() const { return L_; }

  Vec<K> e0() const { return unit_vec<K>(dim(), 0); }
  Vec<K> e1() const { return unit_vec<K>(dim(), m_ + 1); }
  Vec<K> unit() const { return e0() + e1(); }
  Vec<K> basis(std::size_t i) const { return unit_vec<K>(dim(), i); }

  Vec<K> from_parts(const K& t0, const Vec<K>& w, const K& t1) const {
    if (w.size() != m_) throw Error(ErrorCode::CtxMismatch, "half-space vector length");
    Vec<K> x{t0};
    x.insert(x.end(), w.begin(), w.end());
    x.push_back(t1);
    return x;
  }
  Vec<K> half(const Vec<K>& w) const { return from_parts(K(0), w, K(0)); }
  Vec<K> half_part(const Vec<K>& x) const {
    check(x);
    return Vec<K>(x.begin() + 1, x.begin() + 1 + m_);
  }

  // Quadratic form on the half space: q(v) for the reduced spin factor,
  // l l^sigma for the matrix algebra.
  K half_q(const Vec<K>& w) const { return kind_ == JordanKind::ReducedSpin ? space_.q(w) : L_.norm(w); }
  K half_f(const Vec<K>& v, const Vec<K>& w) const {
    return kind_ == JordanKind::ReducedSpin ? space_.f(v, w) : L_.bil(v, w);
  }

  // Element of the half space with u^2 = 1: the base point, or l = 1.
  Vec<K> base() const { return half(kind_ == JordanKind::ReducedSpin ? space_.base : L_.unit()); }

  // Product from the multiplication table of basis elements.
  Vec<K> jprod(const Vec<K>& x, const Vec<K>& y) const {
    check(x);
    check(y);
    std::size_t n = dim();
    Vec<K> z(n, K(0));
    for (std::size_t a = 0; a < n; ++a) {
      if (is_zero(x[a])) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (is_zero(y[b])) continue;
        K xy = x[a] * y[b];
        for (const auto& t : table_[a * n + b]) z[t.index] += t.coeff * xy;
      }
    }
    return z;
  }

  // Product computed without the table: the closed formula for the reduced
  // spin factor, and (mn + nm)/2 in M2(L) for the matrix algebra.
  Vec<K> jprod_direct(const Vec<K>& x, const Vec<K>& y) const {
    check(x);
    check(y);
    K h(K(1) / K(2));
    K t0 = x[0], t1 = x[m_ + 1], s0 = y[0], s1 = y[m_ + 1];
    Vec<K> v = half_part(x), w = half_part(y);
    if (kind_ == JordanKind::ReducedSpin) {
      K fvw = space_.f(v, w);
      return from_parts(t0 * s0 + h * fvw, scale(h * (t0 + t1), w) + scale(h * (s0 + s1), v), t1 * s1 + h * fvw);
    }
    auto M = to_matrix(x), N = to_matrix(y);
    auto P = mat_mul(M, N), Q = mat_mul(N, M);
    std::array<Vec<K>, 4> R;
    for (int i = 0; i < 4; ++i) R[i] = scale(h, P[i] + Q[i]);
    return from_matrix(R);
  }

  Vec<K> square(const Vec<K>& x) const { return jprod(x, x); }

  // U_x y = 2 x(xy) - x^2 y
  Vec<K> U(const Vec<K>& x, const Vec<K>& y) const {
    return scale(K(2), jprod(x, jprod(x, y))) - jprod(square(x), y);
  }
  // U_{x,z} y = U_{x+z} y - U_x y - U_z y
  Vec<K> U_lin(const Vec<K>& x, const Vec<K>& z, const Vec<K>& y) const {
    return scale(K(2), jprod(x, jprod(z, y)) + jprod(z, jprod(x, y))) - scale(K(2), jprod(jprod(x, z), y));
  }

  Matrix<K> lmul_matrix(const Vec<K>& x) const {
    std::vector<Vec<K>> cols;
    for (std::size_t b = 0; b < dim(); ++b) cols.push_back(jprod(x, basis(b)));
    return Matrix<K>::from_columns(cols, dim());
  }
  Matrix<K> U_matrix(const Vec<K>& x) const {
    std::vector<Vec<K>> cols;
    for (std::size_t b = 0; b < dim(); ++b) cols.push_back(U(x, basis(b)));
    return Matrix<K>::from_columns(cols, dim());
  }

  const std::vector<Term>& table_entry(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }

  // Copy with one structure constant scaled; used for negative controls.
  JordanAlgebra corrupted(std::size_t a, std::size_t b, const K& factor) const {
    JordanAlgebra c = *this;
    for (auto* cell : {&c.table_[a * dim() + b], &c.table_[b * dim() + a]}) {
      for (auto& t : *cell) t.coeff = t.coeff * factor;
    }
    return c;
  }

  template <class S, class F>
  JordanAlgebra<S> rebase(F conv) const {
    JordanAlgebra<S> out;
    if (kind_ == JordanKind::ReducedSpin) {
      Vec<S> b;
      for (const auto& x : space_.base) b.push_back(conv(x));
      out = JordanAlgebra<S>::reduced_spin(PointedQuadSpace<S>(space_.form.template map<S>(conv), b));
    } else {
      out = JordanAlgebra<S>::herm_mat2(L_.template rebase<S>(conv));
    }
    for (std::size_t i = 0; i < table_.size(); ++i) {
      std::vector<typename JordanAlgebra<S>::Term> cell;
      for (const auto& t : table_[i]) cell.push_back({t.index, conv(t.coeff)});
      out.set_cell(i, std::move(cell));
    }
    return out;
  }

  void set_cell(std::size_t flat, std::vector<Term> cell) { table_[flat] = std::move(cell); }

  void check(const Vec<K>& x) const {
    if (x.size() != dim()) throw Error(ErrorCode::CtxMismatch, "element does not belong to this Jordan algebra");
  }

 private:
  using M2 = std::array<Vec<K>, 4>;  // entries 00, 01, 10, 11 in L

  M2 to_matrix(const Vec<K>& x) const {
    Vec<K> l = half_part(x);
    return M2{scale(x[0], L_.unit()), L_.conjugate(l), l, scale(x[m_ + 1], L_.unit())};
  }
  M2 mat_mul(const M2& a, const M2& b) const {
    return M2{L_.multiply(a[0], b[0]) + L_.multiply(a[1], b[2]), L_.multiply(a[0], b[1]) + L_.multiply(a[1], b[3]),
              L_.multiply(a[2], b[0]) + L_.multiply(a[3], b[2]), L_.multiply(a[2], b[1]) + L_.multiply(a[3], b[3])};
  }
  // Reads back a matrix that must be sigma-t hermitian with scalar diagonal.
  Vec<K> from_matrix(const M2& r) const {
    for (int d : {0, 3}) {
      for (std::size_t i = 1; i < m_; ++i) {
        if (!is_zero(r[d][i])) throw Error(ErrorCode::DecompositionFailed, "diagonal entry not fixed by sigma");
      }
    }
    if (L_.conjugate(r[2]) != r[1]) throw Error(ErrorCode::DecompositionFailed, "matrix is not hermitian");
    return from_parts(r[0][0], r[2], r[3][0]);
  }

  void add_term(std::size_t a, std::size_t b, std::size_t idx, const K& c) {
    if (is_zero(c)) return;
    table_[a * dim() + b].push_back(Term{idx, c});
  }

  // Basis products from the defining rules:
  //   e_i e_j = delta_ij e_i,  e_i w = w/2,
  //   v w = f(v,w)/2 (e0 + e1)                      (reduced spin)
  //   v w = (l^s l' + l'^s l)/2 e0 + (l l'^s + l' l^s)/2 e1   (matrices)
  void build_table() {
    std::size_t n = dim(), i1 = m_ + 1;
    table_.assign(n * n, {});
    K h = K(1) / K(2);
    add_term(0, 0, 0, K(1));
    add_term(i1, i1, i1, K(1));
    for (std::size_t p = 1; p <= m_; ++p) {
      for (std::size_t e : {std::size_t(0), i1}) {
        add_term(e, p, p, h);
        add_term(p, e, p, h);
      }
      for (std::size_t q = 1; q <= m_; ++q) {
        if (kind_ == JordanKind::ReducedSpin) {
          K c = h * space_.f(unit_vec<K>(m_, p - 1), unit_vec<K>(m_, q - 1));
          add_term(p, q, 0, c);
          add_term(p, q, i1, c);
        } else {
          Vec<K> lp = L_.basis(p - 1), lq = L_.basis(q - 1);
          Vec<K> d0 = L_.multiply(L_.conjugate(lp), lq) + L_.multiply(L_.conjugate(lq), lp);
          Vec<K> d1 = L_.multiply(lp, L_.conjugate(lq)) + L_.multiply(lq, L_.conjugate(lp));
          for (std::size_t i = 1; i < m_; ++i) {
            if (!is_zero(d0[i]) || !is_zero(d1[i])) {
              throw Error(ErrorCode::DecompositionFailed, "symmetrized product of L is not central");
            }
          }
          add_term(p, q, 0, h * d0[0]);
          add_term(p, q, i1, h * d1[0]);
        }
      }
    }
  }

  JordanKind kind_ = JordanKind::ReducedSpin;
  std::size_t m_ = 0;
  PointedQuadSpace<K> space_;
  CompositionAlgebra<K> L_;
  std::vector<std::vector<Term>> table_;
};

template <class K>
JordanAlgebra<RatFunc> to_symbolic(const JordanAlgebra<K>& J) {
  return J.template rebase<RatFunc>([](const K& x) { return to_ratfunc(x); });
}

template <class K>
struct PeirceSpaces {
  Subspace<K> J0, Jhalf, J1;
};

// Eigenspaces of multiplication by e for the eigenvalues 0, 1/2, 1.
template <class K>
PeirceSpaces<K> peirce_decompose(const JordanAlgebra<K>& J, const Vec<K>& e) {
  J.check(e);
  if (J.square(e) != e) throw Error(ErrorCode::NotIdempotent, "e^2 != e");
  if (is_zero_vec(e) || e == J.unit()) throw Error(ErrorCode::NotIdempotent, "idempotent is not proper");
  Matrix<K> Le = J.lmul_matrix(e);
  std::size_t n = J.dim();
  auto eigen = [&](const K& lambda) {
    return Subspace<K>(nullspace(Le - Matrix<K>::identity(n).scaled(lambda)), n);
  };
  PeirceSpaces<K> P{eigen(K(0)), eigen(K(1) / K(2)), eigen(K(1))};
  if (P.J0.dim() + P.Jhalf.dim() + P.J1.dim() != n) {
    throw Error(ErrorCode::DecompositionFailed, "eigenspaces for 0, 1/2, 1 do not span the algebra");
  }
  return P;
}

namespace detail {

template <class K>
const Subspace<K>& peirce_space(const PeirceSpaces<K>& P, int twice) {
  return twice == 0 ? P.J0 : (twice == 1 ? P.Jhalf : P.J1);
}

inline std::string peirce_label(int twice) { return twice == 0 ? "J0" : (twice == 1 ? "J1/2" : "J1"); }

}  // namespace detail

// Multiplication and U-operator containments of a Peirce decomposition,
// checked on all basis pairs and triples.
template <class K>
std::vector<CheckRecord> peirce_checks(const JordanAlgebra<K>& J, const PeirceSpaces<K>& P) {
  std::vector<CheckRecord> out;
  out.push_back(exact_check("peirce_products", "J_iJ_j = 0, J_iJ_1/2 in J_1/2, J_1/2^2 in J0+J1", [&]() -> std::string {
    for (int a = 0; a <= 2; ++a) {
      for (int b = a; b <= 2; ++b) {
        for (const auto& x : detail::peirce_space(P, a).basis()) {
          for (const auto& y : detail::peirce_space(P, b).basis()) {
            Vec<K> z = J.jprod(x, y);
            bool ok = true;
            if (a == 0 && b == 2) ok = is_zero_vec(z);
            else if (a == b && a != 1) ok = detail::peirce_space(P, a).contains(z);
            else if (a == 1 && b == 1) {
              std::vector<Vec<K>> b01 = P.J0.basis();
              b01.insert(b01.end(), P.J1.basis().begin(), P.J1.basis().end());
              ok = b01.empty() ? is_zero_vec(z) : Subspace<K>(b01, J.dim()).contains(z);
            } else {
              ok = P.Jhalf.contains(z);
            }
            if (!ok) {
              return detail::peirce_label(a) + " x " + detail::peirce_label(b) + ": " + vec_str(x) + " * " +
                     vec_str(y) + " = " + vec_str(z);
            }
          }
        }
      }
    }
    return "";
  }));
  out.push_back(exact_check("peirce_U_containment", "U_{J_m} J_l in J_{2m-l}", [&]() -> std::string {
    for (int m = 0; m <= 2; ++m) {
      for (int l = 0; l <= 2; ++l) {
        int target = 2 * m - l;
        for (const auto& x : detail::peirce_space(P, m).basis()) {
          for (const auto& y : detail::peirce_space(P, l).basis()) {
            Vec<K> z = J.U(x, y);
            bool ok = (target < 0 || target > 2) ? is_zero_vec(z) : detail::peirce_space(P, target).contains(z);
            if (!ok) {
              return "U_" + vec_str(x) + " " + vec_str(y) + " = " + vec_str(z) + " not in " +
                     (target < 0 || target > 2 ? std::string("0") : detail::peirce_label(target));
            }
          }
        }
      }
    }
    return "";
  }));
  return out;
}

// Structural identities of a Jordan algebra with its distinguished
// idempotents. The Jordan identity is symbolic when requested and the
// algebra is small (half space of dimension at most 6); otherwise random.
template <class K>
std::vector<CheckRecord> jordan_checks(const JordanAlgebra<K>& J, const CheckSpec& spec, const FieldCtx& f) {
  std::vector<CheckRecord> out;
  auto Js = to_symbolic(J);
  std::size_t n = J.dim(), m = J.half_dim();
  CheckSpec rnd = spec;
  rnd.mode = Mode::Random;

  out.push_back(exact_check("idempotents", "e0^2 = e0, e1^2 = e1, e0 e1 = 0, e0 + e1 = 1", [&]() -> std::string {
    if (J.square(J.e0()) != J.e0()) return "e0^2 = " + vec_str(J.square(J.e0()));
    if (J.square(J.e1()) != J.e1()) return "e1^2 = " + vec_str(J.square(J.e1()));
    if (!is_zero_vec(J.jprod(J.e0(), J.e1()))) return "e0 e1 = " + vec_str(J.jprod(J.e0(), J.e1()));
    for (std::size_t b = 0; b < n; ++b) {
      if (J.jprod(J.unit(), J.basis(b)) != J.basis(b)) return "unit fails on basis " + std::to_string(b);
    }
    return "";
  }));
  out.push_back(exact_check("product_routes_agree", "table product = direct product on basis pairs", [&]() -> std::string {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Vec<K> t = J.jprod(J.basis(a), J.basis(b)), d = J.jprod_direct(J.basis(a), J.basis(b));
        if (t != d) return "basis " + std::to_string(a) + "," + std::to_string(b) + ": " + vec_str(t) + " vs " + vec_str(d);
      }
    }
    return "";
  }));
  out.push_back(identity_check<K>("commutative", "xy = yx", rnd, f, J, Js, {{"x", n}, {"y", n}},
                                  [](const auto& A, const auto& v) { return A.jprod(v[0], v[1]) - A.jprod(v[1], v[0]); }));
  CheckSpec jspec = spec;
  if (spec.mode == Mode::Symbolic && m > 6) {
    jspec.mode = Mode::Random;
    jspec.trials = std::max<std::size_t>(spec.trials, 1000);
  }
  out.push_back(identity_check<K>("jordan_identity", "(x^2 y) x = x^2 (y x)", jspec, f, J, Js, {{"x", n}, {"y", n}},
                                  [](const auto& A, const auto& v) {
                                    auto x2 = A.square(v[0]);
                                    return A.jprod(A.jprod(x2, v[1]), v[0]) - A.jprod(x2, A.jprod(v[1], v[0]));
                                  }));
  out.push_back(identity_check<K>(
      "U_half_formulas", "U_v e0 = q(v) e1, U_v e1 = q(v) e0, U_v w = f(v,w) v - q(v) w", spec, f, J, Js,
      {{"v", m}, {"w", m}}, [](const auto& A, const auto& a) {
        auto v = A.half(a[0]), w = A.half(a[1]);
        auto q = A.half_q(a[0]);
        auto r0 = A.U(v, A.e0()) - scale(q, A.e1());
        auto r1 = A.U(v, A.e1()) - scale(q, A.e0());
        auto r2 = A.U(v, w) - (scale(A.half_f(a[0], a[1]), v) - scale(q, w));
        r0.insert(r0.end(), r1.begin(), r1.end());
        r0.insert(r0.end(), r2.begin(), r2.end());
        return r0;
      }));
  out.push_back(identity_check<K>("U_linearization", "U_{x,z} y = U_{x+z} y - U_x y - U_z y", rnd, f, J, Js,
                                  {{"x", n}, {"z", n}, {"y", n}}, [](const auto& A, const auto& v) {
                                    return A.U_lin(v[0], v[1], v[2]) -
                                           (A.U(v[0] + v[1], v[2]) - A.U(v[0], v[2]) - A.U(v[1], v[2]));
                                  }));
  out.push_back(identity_check<K>(
      "U_base_involutive_automorphism", "U_u U_u x = x and U_u(xy) = U_u(x) U_u(y) for u^2 = 1", spec, f, J, Js,
      {{"x", n}, {"y", n}}, [](const auto& A, const auto& v) {
        auto u = A.base();
        auto r = A.U(u, A.U(u, v[0])) - v[0];
        auto s = A.U(u, A.jprod(v[0], v[1])) - A.jprod(A.U(u, v[0]), A.U(u, v[1]));
        r.insert(r.end(), s.begin(), s.end());
        return r;
      }));
  out.push_back(identity_check<K>("U_base_is_sigma", "U_u v = f(u,v) u - v on the half space", rnd, f, J, Js,
                                  {{"v", m}}, [](const auto& A, const auto& a) {
                                    auto u = A.base();
                                    auto v = A.half(a[0]);
                                    return A.U(u, v) - (scale(A.half_f(A.half_part(u), a[0]), u) - v);
                                  }));
  PeirceSpaces<K> P = peirce_decompose(J, J.e1());
  out.push_back(exact_check("peirce_dimensions", "J0 = k e0, J1/2 = half space, J1 = k e1 w.r.t. e1", [&]() -> std::string {
    if (P.J0.dim() != 1 || !P.J0.contains(J.e0())) return "J0 has dimension " + std::to_string(P.J0.dim());
    if (P.J1.dim() != 1 || !P.J1.contains(J.e1())) return "J1 has dimension " + std::to_string(P.J1.dim());
    if (P.Jhalf.dim() != m) return "J1/2 has dimension " + std::to_string(P.Jhalf.dim());
    for (std::size_t i = 0; i < m; ++i) {
      if (!P.Jhalf.contains(J.half(unit_vec<K>(m, i)))) return "half-space basis vector " + std::to_string(i) + " missing";
    }
    return "";
  }));
  for (auto& r : peirce_checks(J, P)) out.push_back(std::move(r));
  return out;
}

// The matrix algebra over a quadratic pair compared with the reduced spin
// factor of (L, l l^sigma, 1): structure constants must coincide exactly.
template <class K>
CheckRecord quadratic_pair_identification(const JordanAlgebra<K>& H) {
  return exact_check("quadratic_pair_identification", "H(M2(L)) equals the reduced spin factor of (L, l l^sigma, 1)",
                     [&]() -> std::string {
                       if (H.kind() != JordanKind::HermMat2) return "not a matrix algebra";
                       auto S = JordanAlgebra<K>::reduced_spin(PointedQuadSpace<K>(H.L().norm_form(), H.L().unit()));
                       for (std::size_t a = 0; a < H.dim(); ++a) {
                         for (std::size_t b = 0; b < H.dim(); ++b) {
                           Vec<K> x = H.jprod(H.basis(a), H.basis(b)), y = S.jprod(S.basis(a), S.basis(b));
                           if (x != y) {
                             return "basis " + std::to_string(a) + "," + std::to_string(b) + ": " + vec_str(x) +
                                    " vs " + vec_str(y);
                           }
                         }
                       }
                       return "";
                     });
}

// Samples of the half space: v is invertible in J exactly when U_v is, and
// this must match the reduction q(v) != 0. Small integer vectors are
// enumerated before the random trials so that isotropic vectors of simple
// forms are found.
template <class K>
CheckRecord halfspace_invertibility_sample(const JordanAlgebra<K>& J, const FieldCtx& f, const CheckSpec& spec) {
  CheckRecord rec;
  rec.name = "halfspace_invertibility";
  rec.statement = "every nonzero v in J1/2 is invertible";
  rec.mode = "search";
  rec.seed = spec.seed;
  Stopwatch sw;
  std::size_t m = J.half_dim(), n = J.dim();
  auto test = [&](const Vec<K>& v) -> bool {
    ++rec.trials;
    if (is_zero_vec(v)) return true;
    bool by_U = rank(J.U_matrix(J.half(v))) == n;
    bool by_q = !is_zero(J.half_q(v));
    if (by_U != by_q) {
      rec.pass = false;
      rec.witness = "U-invertibility and q(v) != 0 disagree at v = " + vec_str(v);
      rec.note = "internal inconsistency";
      return false;
    }
    if (!by_q) {
      rec.pass = false;
      rec.witness = "v = " + vec_str(v) + " has q(v) = 0";
      return false;
    }
    return true;
  };
  long b = std::min<long>(spec.search_bound, 2);
  std::size_t box = 1;
  for (std::size_t i = 0; i < m && box <= 20000; ++i) box *= std::size_t(2 * b + 1);
  if (box <= 20000) {
    Vec<K> v(m, K(0));
    std::vector<long> c(m, -b);
    for (;;) {
      for (std::size_t i = 0; i < m; ++i) v[i] = K(c[i]);
      if (!test(v)) break;
      std::size_t i = 0;
      while (i < m && c[i] == b) c[i++] = -b;
      if (i == m) break;
      ++c[i];
    }
  }
  if (rec.pass) {
    Rng rng(spec.seed);
    for (std::size_t t = 0; t < spec.trials; ++t) {
      if (!test(random_vec<K>(f, rng, m, spec))) break;
    }
  }
  rec.seconds = sw.seconds();
  return rec;
}

}  // namespace quadalg
