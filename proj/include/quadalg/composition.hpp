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

#include "quadalg/check.hpp"
#include "quadalg/errors.hpp"
#include "quadalg/linalg.hpp"
#include "quadalg/quadform.hpp"

namespace quadalg {

inline const std::vector<std::string>& composition_labels() {
  static const std::vector<std::string> labels{"1", "i", "j", "ij", "k", "ik", "jk", "(ij)k"};
  return labels;
}

// Composition algebra of dimension 2^n (n <= 3) built by Cayley-Dickson
// doubling with parameters (a, b, c). The basis is 1,i,j,ij,k,ik,jk,(ij)k
// truncated to the dimension; a product of two basis vectors is a scalar
// multiple of a single basis vector, stored in a table.
template <class K>
class CompositionAlgebra {
 public:
  struct Entry {
    std::size_t index;
    K coeff;
  };

  CompositionAlgebra() : CompositionAlgebra(std::vector<K>{}) {}

  explicit CompositionAlgebra(std::vector<K> params) : params_(std::move(params)) {
    if (params_.size() > 3) throw Error(ErrorCode::DimensionMismatch, "at most three doubling parameters");
    for (const auto& p : params_) {
      if (is_zero(p)) throw Error(ErrorCode::ZeroSlot, "zero composition parameter");
    }
    dim_ = std::size_t(1) << params_.size();
    table_.reserve(dim_ * dim_);
    for (std::size_t p = 0; p < dim_; ++p) {
      for (std::size_t q = 0; q < dim_; ++q) {
        Vec<K> z = doubling_mul(unit_vec<K>(dim_, p), unit_vec<K>(dim_, q), params_.size());
        Entry e{0, K(0)};
        for (std::size_t r = 0; r < dim_; ++r) {
          if (!is_zero(z[r])) e = Entry{r, z[r]};
        }
        table_.push_back(e);
      }
    }
    std::vector<K> neg;
    for (const auto& p : params_) neg.push_back(-p);
    norm_ = pfister(neg);
  }

  std::size_t dim() const { return dim_; }
  const std::vector<K>& params() const { return params_; }
  const QuadraticForm<K>& norm_form() const { return norm_; }
  const Entry& entry(std::size_t p, std::size_t q) const { return table_[p * dim_ + q]; }

  Vec<K> unit() const { return unit_vec<K>(dim_, 0); }
  Vec<K> basis(std::size_t i) const { return unit_vec<K>(dim_, i); }

  Vec<K> multiply(const Vec<K>& x, const Vec<K>& y) const {
    check(x);
    check(y);
    Vec<K> z(dim_, K(0));
    for (std::size_t p = 0; p < dim_; ++p) {
      if (is_zero(x[p])) continue;
      for (std::size_t q = 0; q < dim_; ++q) {
        if (is_zero(y[q])) continue;
        const Entry& e = table_[p * dim_ + q];
        z[e.index] += e.coeff * x[p] * y[q];
      }
    }
    return z;
  }

  Vec<K> conjugate(const Vec<K>& x) const {
    check(x);
    Vec<K> r = -x;
    r[0] = x[0];
    return r;
  }

  K norm(const Vec<K>& x) const { return norm_.eval(x); }
  K bil(const Vec<K>& x, const Vec<K>& y) const { return norm_.polarize(x, y); }
  K trace(const Vec<K>& x) const { return K(2) * x[0]; }  // f(x,1)

  Vec<K> inverse(const Vec<K>& x) const {
    K n = norm(x);
    if (is_zero(n)) throw Error(ErrorCode::NormZero, "element of norm zero has no inverse");
    return scale(K(1) / n, conjugate(x));
  }

  std::vector<Vec<K>> skew_basis() const {
    std::vector<Vec<K>> out;
    for (std::size_t i = 1; i < dim_; ++i) out.push_back(basis(i));
    return out;
  }

  AnisotropyVerdict<K> is_division(const AnisotropyOptions& opt = {}) const { return anisotropy_of(norm_, opt); }

  // Copy with one structure constant negated; used for negative controls.
  CompositionAlgebra corrupted(std::size_t p, std::size_t q) const {
    CompositionAlgebra c = *this;
    c.table_[p * dim_ + q].coeff = -c.table_[p * dim_ + q].coeff;
    return c;
  }

  template <class S, class F>
  CompositionAlgebra<S> rebase(F conv) const {
    std::vector<S> ps;
    for (const auto& p : params_) ps.push_back(conv(p));
    CompositionAlgebra<S> out(ps);
    for (std::size_t i = 0; i < table_.size(); ++i) out.set_entry(i, table_[i].index, conv(table_[i].coeff));
    return out;
  }

  void set_entry(std::size_t flat, std::size_t index, K coeff) { table_[flat] = Entry{index, std::move(coeff)}; }

  friend bool operator==(const CompositionAlgebra& a, const CompositionAlgebra& b) {
    return a.params_ == b.params_;
  }

 private:
  void check(const Vec<K>& x) const {
    if (x.size() != dim_) throw Error(ErrorCode::AlgebraMismatch, "element length does not match algebra dimension");
  }

  static Vec<K> conj_level(const Vec<K>& x) {
    Vec<K> r = -x;
    r[0] = x[0];
    return r;
  }

  // (x1 + x2 k)(y1 + y2 k) = (x1 y1 + c conj(y2) x2) + (y2 x1 + x2 conj(y1)) k
  Vec<K> doubling_mul(const Vec<K>& x, const Vec<K>& y, std::size_t level) const {
    if (level == 0) return Vec<K>{x[0] * y[0]};
    std::size_t h = x.size() / 2;
    Vec<K> x1(x.begin(), x.begin() + h), x2(x.begin() + h, x.end());
    Vec<K> y1(y.begin(), y.begin() + h), y2(y.begin() + h, y.end());
    const K& c = params_[level - 1];
    Vec<K> lo = doubling_mul(x1, y1, level - 1) + scale(c, doubling_mul(conj_level(y2), x2, level - 1));
    Vec<K> hi = doubling_mul(y2, x1, level - 1) + doubling_mul(x2, conj_level(y1), level - 1);
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;
  }

  std::vector<K> params_;
  std::size_t dim_ = 1;
  std::vector<Entry> table_;
  QuadraticForm<K> norm_;
};

// psi(x,y) = x conj(y) - y conj(x), a skew element of C.
template <class K>
Vec<K> psi(const CompositionAlgebra<K>& C, const Vec<K>& x, const Vec<K>& y) {
  return C.multiply(x, C.conjugate(y)) - C.multiply(y, C.conjugate(x));
}

template <class K>
CompositionAlgebra<RatFunc> to_symbolic(const CompositionAlgebra<K>& c) {
  return c.template rebase<RatFunc>([](const K& x) { return to_ratfunc(x); });
}

// The composition-algebra identity suite: minimal polynomial, shifts of the
// norm's bilinear form, alternativity, Kirmse and Moufang identities, plus
// multiplicativity of the norm and conjugation as an anti-automorphism.
template <class K>
std::vector<CheckRecord> identity_suite(const CompositionAlgebra<K>& C, const CheckSpec& spec, const FieldCtx& f) {
  std::vector<CheckRecord> out;
  auto Cs = to_symbolic(C);
  std::size_t n = C.dim();
  auto one = [&](const std::string& name, const std::string& stmt, std::size_t nargs, auto ident) {
    std::vector<std::pair<std::string, std::size_t>> args;
    const char* names[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < nargs; ++i) args.push_back({names[i], n});
    out.push_back(identity_check<K>(name, stmt, spec, f, C, Cs, args, ident));
  };
  one("minimal_polynomial", "x^2 - f(x,1) x + q(x) 1 = 0", 1, [](const auto& A, const auto& a) {
    const auto& x = a[0];
    return A.multiply(x, x) - scale(A.trace(x), x) + scale(A.norm(x), A.unit());
  });
  one("bil_shift_left", "f(xy,z) = f(y, conj(x) z)", 3, [](const auto& A, const auto& a) {
    const auto &x = a[0], &y = a[1], &z = a[2];
    return scalar_vec(A.bil(A.multiply(x, y), z) - A.bil(y, A.multiply(A.conjugate(x), z)));
  });
  one("bil_shift_right", "f(xy,z) = f(x, z conj(y))", 3, [](const auto& A, const auto& a) {
    const auto &x = a[0], &y = a[1], &z = a[2];
    return scalar_vec(A.bil(A.multiply(x, y), z) - A.bil(x, A.multiply(z, A.conjugate(y))));
  });
  one("bil_shift_conjugate", "f(xy,z) = f(y conj(z), conj(x))", 3, [](const auto& A, const auto& a) {
    const auto &x = a[0], &y = a[1], &z = a[2];
    return scalar_vec(A.bil(A.multiply(x, y), z) - A.bil(A.multiply(y, A.conjugate(z)), A.conjugate(x)));
  });
  one("left_alternative", "(xx)y = x(xy)", 2, [](const auto& A, const auto& a) {
    const auto &x = a[0], &y = a[1];
    return A.multiply(A.multiply(x, x), y) - A.multiply(x, A.multiply(x, y));
  });
  one("right_alternative", "(yx)x = y(xx)", 2, [](const auto& A, const auto& a) {
    const auto &x = a[0], &y = a[1];
    return A.multiply(A.multiply(y, x), x) - A.multiply(y, A.multiply(x, x));
  });
  one("kirmse_left", "x(conj(x) y) = q(x) y", 2, [](const auto& A, const auto& a) {
    const auto &x = a[0], &y = a[1];
    return A.multiply(x, A.multiply(A.conjugate(x), y)) - scale(A.norm(x), y);
  });
  one("kirmse_right", "(x conj(y)) y = q(y) x", 2, [](const auto& A, const auto& a) {
    const auto &x = a[0], &y = a[1];
    return A.multiply(A.multiply(x, A.conjugate(y)), y) - scale(A.norm(y), x);
  });
  one("moufang_middle", "(zx)(yz) = z((xy)z)", 3, [](const auto& A, const auto& a) {
    const auto &x = a[0], &y = a[1], &z = a[2];
    return A.multiply(A.multiply(z, x), A.multiply(y, z)) - A.multiply(z, A.multiply(A.multiply(x, y), z));
  });
  one("moufang_left", "z(x(zy)) = (z(xz))y", 3, [](const auto& A, const auto& a) {
    const auto &x = a[0], &y = a[1], &z = a[2];
    return A.multiply(z, A.multiply(x, A.multiply(z, y))) - A.multiply(A.multiply(z, A.multiply(x, z)), y);
  });
  one("moufang_right", "x(z(yz)) = ((xz)y)z", 3, [](const auto& A, const auto& a) {
    const auto &x = a[0], &y = a[1], &z = a[2];
    return A.multiply(x, A.multiply(z, A.multiply(y, z))) - A.multiply(A.multiply(A.multiply(x, z), y), z);
  });
  one("norm_multiplicative", "q(xy) = q(x) q(y)", 2, [](const auto& A, const auto& a) {
    const auto &x = a[0], &y = a[1];
    return scalar_vec(A.norm(A.multiply(x, y)) - A.norm(x) * A.norm(y));
  });
  one("conjugation_anti_automorphism", "conj(xy) = conj(y) conj(x)", 2, [](const auto& A, const auto& a) {
    const auto &x = a[0], &y = a[1];
    return A.conjugate(A.multiply(x, y)) - A.multiply(A.conjugate(y), A.conjugate(x));
  });
  return out;
}

// Two-generator associativity on words: the associator of three products
// built from x and y vanishes (random mode only; degree grows quickly).
template <class K>
CheckRecord two_generator_associativity(const CompositionAlgebra<K>& C, const CheckSpec& spec, const FieldCtx& f) {
  CheckSpec s = spec;
  s.mode = Mode::Random;
  auto ident = [](const auto& A, const auto& a) {
    const auto &x = a[0], &y = a[1];
    using V = std::decay_t<decltype(x)>;
    std::vector<V> words{x, y, A.multiply(x, y), A.multiply(y, x), A.multiply(x, x), A.multiply(A.multiply(x, y), x)};
    V acc(x.size(), typename V::value_type(0));
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        for (std::size_t k = 0; k < words.size(); k += 2) {
          V d = A.multiply(A.multiply(words[i], words[j]), words[k]) -
                A.multiply(words[i], A.multiply(words[j], words[k]));
          if (!is_zero_vec(d)) return d;
        }
      }
    }
    return acc;
  };
  auto r = identity_check<K>("two_generator_associativity", "[u,v,w] = 0 for words u,v,w in x,y", s, f, C,
                             to_symbolic(C), {{"x", C.dim()}, {"y", C.dim()}}, ident);
  return r;
}

}  // namespace quadalg
