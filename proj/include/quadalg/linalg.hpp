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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quadalg/errors.hpp"
#include "quadalg/field/field.hpp"

namespace quadalg {

template <class K>
using Vec = std::vector<K>;

template <class K>
Vec<K> zero_vec(std::size_t n) {
  return Vec<K>(n, K(0));
}

template <class K>
Vec<K> unit_vec(std::size_t n, std::size_t i) {
  Vec<K> v(n, K(0));
  v[i] = K(1);
  return v;
}

template <class K>
void check_same_dim(const Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
}

template <class K>
Vec<K> operator+(const Vec<K>& a, const Vec<K>& b) {
  check_same_dim(a, b);
  Vec<K> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <class K>
Vec<K> operator-(const Vec<K>& a, const Vec<K>& b) {
  check_same_dim(a, b);
  Vec<K> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class K>
Vec<K> operator-(const Vec<K>& a) {
  Vec<K> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

template <class K>
Vec<K> scale(const K& c, const Vec<K>& a) {
  Vec<K> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = is_zero(a[i]) ? K(0) : c * a[i];
  return r;
}

template <class K>
bool is_zero_vec(const Vec<K>& a) {
  for (const auto& x : a) {
    if (!is_zero(x)) return false;
  }
  return true;
}

template <class K>
std::vector<std::string> vec_strings(const Vec<K>& a) {
  std::vector<std::string> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(to_string(x));
  return out;
}

template <class K>
std::string vec_str(const Vec<K>& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + to_string(a[i]);
  return s + "]";
}

// Dense row-major matrix. Products skip zero entries, which is where the
// structured operators built in this library get their speed.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  static Matrix from_columns(const std::vector<Vec<K>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<K>>& rws, std::size_t cols) {
    Matrix m(rws.size(), cols);
    for (std::size_t i = 0; i < rws.size(); ++i) {
      if (rws[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "row length");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rws[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec<K> row(std::size_t i) const { return Vec<K>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
  Vec<K> col(std::size_t j) const {
    Vec<K> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Vec<K> apply(const Vec<K>& x) const {
    if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape");
    Vec<K> y(rows_, K(0));
    for (std::size_t j = 0; j < cols_; ++j) {
      if (is_zero(x[j])) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const K& m = (*this)(i, j);
        if (!is_zero(m)) y[i] += m * x[j];
      }
    }
    return y;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& x = a(i, k);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const K& y = b(k, j);
          if (!is_zero(y)) c(i, j) += x * y;
        }
      }
    }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum shape");
    Matrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference shape");
    Matrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
  }
  Matrix scaled(const K& s) const {
    Matrix c = *this;
    for (auto& x : c.a_) {
      if (!is_zero(x)) x = x * s;
    }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  bool is_zero_matrix() const {
    for (const auto& x : a_) {
      if (!is_zero(x)) return false;
    }
    return true;
  }

  template <class S, class F>
  Matrix<S> map(F conv) const {
    Matrix<S> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = conv((*this)(i, j));
    }
    return m;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

template <class K>
struct Echelon {
  Matrix<K> r;                     // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

template <class K>
Echelon<K> rref(Matrix<K> m) {
  Echelon<K> e;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    K inv = K(1) / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!is_zero(m(row, j))) m(row, j) = m(row, j) * inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, c))) continue;
      K f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
      }
    }
    e.pivots.push_back(c);
    ++row;
  }
  e.r = std::move(m);
  return e;
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).pivots.size();
}

// Basis of {x : m x = 0}.
template <class K>
std::vector<Vec<K>> nullspace(const Matrix<K>& m) {
  Echelon<K> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec<K>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<K> v(m.cols(), K(0));
    v[f] = K(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      if (!is_zero(e.r(i, f))) v[e.pivots[i]] = -e.r(i, f);
    }
    out.push_back(std::move(v));
  }
  return out;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix<K> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = K(1);
  }
  Echelon<K> e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
    throw Error(ErrorCode::DegenerateForm, "singular matrix");
  }
  Matrix<K> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.r(i, n + j);
  }
  return inv;
}

// A subspace of K^n given by a basis, with exact coordinate extraction.
template <class K>
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::vector<Vec<K>> basis, std::size_t ambient) : basis_(std::move(basis)), n_(ambient) {
    if (basis_.empty()) return;
    Matrix<K> b = Matrix<K>::from_columns(basis_, n_);
    // Rows where the basis is independent: pivots of the transpose.
    Echelon<K> e = rref(b.transpose());
    if (e.pivots.size() != basis_.size()) throw Error(ErrorCode::DegenerateForm, "dependent basis");
    rows_ = e.pivots;
    Matrix<K> block(basis_.size(), basis_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t j = 0; j < basis_.size(); ++j) block(i, j) = b(rows_[i], j);
    }
    block_inv_ = inverse(block);
  }

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<Vec<K>>& basis() const { return basis_; }
  const Vec<K>& operator[](std::size_t i) const { return basis_[i]; }

  Vec<K> embed(const Vec<K>& c) const {
    if (c.size() != basis_.size()) throw Error(ErrorCode::DimensionMismatch, "subspace coordinates");
    Vec<K> x(n_, K(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (is_zero(c[j])) continue;
      for (std::size_t i = 0; i < n_; ++i) {
        if (!is_zero(basis_[j][i])) x[i] += c[j] * basis_[j][i];
      }
    }
    return x;
  }

  // Coordinates of x; with check=true, x must lie in the subspace.
  Vec<K> coords(const Vec<K>& x, bool check = true) const {
    if (x.size() != n_) throw Error(ErrorCode::DimensionMismatch, "ambient vector length");
    Vec<K> sel(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) sel[i] = x[rows_[i]];
    Vec<K> c = block_inv_.rows() ? block_inv_.apply(sel) : Vec<K>{};
    if (check && embed(c) != x) throw Error(ErrorCode::DecompositionFailed, "vector not in subspace");
    return c;
  }

  bool contains(const Vec<K>& x) const {
    if (basis_.empty()) return is_zero_vec(x);
    Vec<K> sel(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) sel[i] = x[rows_[i]];
    return embed(block_inv_.apply(sel)) == x;
  }

 private:
  std::vector<Vec<K>> basis_;
  std::size_t n_ = 0;
  std::vector<std::size_t> rows_;
  Matrix<K> block_inv_;
};

// Column space basis drawn from the original columns at pivot positions.
template <class K>
std::vector<Vec<K>> column_basis(const Matrix<K>& m) {
  Echelon<K> e = rref(m);
  std::vector<Vec<K>> out;
  for (auto p : e.pivots) out.push_back(m.col(p));
  return out;
}

// Incrementally maintained echelon basis, used for span-growth loops.
template <class K>
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t n) : n_(n) {}

  std::size_t dim() const { return rows_.size(); }

  // Adds x if independent of the current span; returns whether it grew.
  bool add(Vec<K> x) {
    if (x.size() != n_) throw Error(ErrorCode::DimensionMismatch, "span vector length");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const K& f = x[piv_[r]];
      if (is_zero(f)) continue;
      K ff = f;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!is_zero(rows_[r][j])) x[j] -= ff * rows_[r][j];
      }
    }
    std::size_t p = 0;
    while (p < n_ && is_zero(x[p])) ++p;
    if (p == n_) return false;
    K inv = K(1) / x[p];
    for (auto& v : x) {
      if (!is_zero(v)) v = v * inv;
    }
    rows_.push_back(std::move(x));
    piv_.push_back(p);
    return true;
  }

 private:
  std::size_t n_;
  std::vector<Vec<K>> rows_;
  std::vector<std::size_t> piv_;
};

}  // namespace quadalg
