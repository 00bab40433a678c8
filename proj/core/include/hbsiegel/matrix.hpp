// Copyright 2026 The hbsiegel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#ifndef HBSIEGEL_MATRIX_HPP
#define HBSIEGEL_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "hbsiegel/errors.hpp"
#include "hbsiegel/gauss_rational.hpp"
#include "hbsiegel/rational.hpp"

namespace hbsiegel {

// Dense row-major matrix over an exact scalar type (Rational, GaussRational)
// or over intervals. Division-based members (inverse, determinant, solve)
// only instantiate for field scalars.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if (!((*this)(r, c) == (*this)(c, r))) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& ark = a(r, k);
        if (ark == T{}) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) p(r, c) += ark * b(k, c);
      }
    return p;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw Error(Errc::DimensionMismatch, "matrix-vector shape");
    std::vector<T> out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t c = 0; c < a.cols_; ++c) out[r] += a(r, c) * v[c];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  T determinant() const {
    if (!is_square()) throw Error(Errc::NonSquare, "determinant of non-square matrix");
    Matrix m = *this;
    T det(1);
    const std::size_t n = rows_;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && m(piv, col) == T{}) ++piv;
      if (piv == n) return T{};
      if (piv != col) {
        m.swap_rows(piv, col);
        det = -det;
      }
      det *= m(col, col);
      const T inv = T(1) / m(col, col);
      for (std::size_t r = col + 1; r < n; ++r) {
        if (m(r, col) == T{}) continue;
        const T f = m(r, col) * inv;
        for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
      }
    }
    return det;
  }

  /// Gauss-Jordan inverse; nullopt when singular.
  std::optional<Matrix> try_inverse() const {
    if (!is_square()) throw Error(Errc::NonSquare, "inverse of non-square matrix");
    const std::size_t n = rows_;
    Matrix m = *this;
    Matrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && m(piv, col) == T{}) ++piv;
      if (piv == n) return std::nullopt;
      m.swap_rows(piv, col);
      inv.swap_rows(piv, col);
      const T s = T(1) / m(col, col);
      for (std::size_t c = 0; c < n; ++c) {
        m(col, c) *= s;
        inv(col, c) *= s;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || m(r, col) == T{}) continue;
        const T f = m(r, col);
        for (std::size_t c = 0; c < n; ++c) {
          m(r, c) -= f * m(col, c);
          inv(r, c) -= f * inv(col, c);
        }
      }
    }
    return inv;
  }

  Matrix inverse() const {
    auto inv = try_inverse();
    if (!inv) throw Error(Errc::SingularMatrix, "matrix is singular");
    return *std::move(inv);
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(Errc::DimensionMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using GaussMatrix = Matrix<GaussRational>;

inline GaussMatrix to_gauss(const RatMatrix& re, const RatMatrix& im) {
  GaussMatrix z(re.rows(), re.cols());
  for (std::size_t r = 0; r < re.rows(); ++r)
    for (std::size_t c = 0; c < re.cols(); ++c) z(r, c) = GaussRational(re(r, c), im(r, c));
  return z;
}

inline RatMatrix real_part(const GaussMatrix& z) {
  RatMatrix m(z.rows(), z.cols());
  for (std::size_t r = 0; r < z.rows(); ++r)
    for (std::size_t c = 0; c < z.cols(); ++c) m(r, c) = z(r, c).re;
  return m;
}

inline RatMatrix imag_part(const GaussMatrix& z) {
  RatMatrix m(z.rows(), z.cols());
  for (std::size_t r = 0; r < z.rows(); ++r)
    for (std::size_t c = 0; c < z.cols(); ++c) m(r, c) = z(r, c).im;
  return m;
}

inline bool is_integral(const RatMatrix& m) { return is_integral(m.data()); }

/// Exact leading-principal-minor test (Sylvester) for a symmetric matrix.
bool is_positive_definite(const RatMatrix& m);

}  // namespace hbsiegel

#endif  // HBSIEGEL_MATRIX_HPP
