/*
   Copyright 2026 The flatflag Authors

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

#ifndef FLATFLAG_ALGEBRA_MATRIX_HPP
#define FLATFLAG_ALGEBRA_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "flatflag/algebra/ratfunc.hpp"

namespace flatflag {

/// Dense row-major matrix over a commutative ring whose elements carry their
/// own context (Poly, RatFunc). There is no default element, so every
/// constructor takes a fill value.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
  }

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const { return data_; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  void set_column(std::size_t j, const std::vector<T>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  Matrix transposed() const {
    if (data_.empty()) return Matrix(cols_, rows_, data_);
    Matrix out(cols_, rows_, data_.front());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  template <class F>
  auto map(F&& fn) const {
    using U = decltype(fn(data_.front()));
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& a : data_) out.push_back(fn(a));
    return Matrix<U>(rows_, cols_, std::move(out));
  }

  bool is_zero() const {
    for (const auto& a : data_)
      if (!flatflag::is_zero(a)) return false;
    return true;
  }

  Matrix operator-() const {
    return map([](const T& a) { return -a; });
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    const T zero = zero_like(a.data_.front());
    Matrix out(a.rows_, b.cols_, zero);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (flatflag::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (flatflag::is_zero(b(k, j))) continue;
          out(i, j) = out(i, j) + aik * b(k, j);
        }
      }
    return out;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> out(rows_, zero_like(v.front()));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!flatflag::is_zero((*this)(i, j)) && !flatflag::is_zero(v[j]))
          out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }

  /// Kronecker product a (x) b.
  friend Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_ * b.rows_, a.cols_ * b.cols_, zero_like(a.data_.front()));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l)
            out(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
    return out;
  }

  /// out(i, j) = (*this)(perm[i], perm[j]).
  Matrix permuted(const std::vector<std::size_t>& perm) const {
    Matrix out = *this;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(perm[i], perm[j]);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

using MatRF = Matrix<RatFunc>;
using MatPoly = Matrix<Poly>;

inline MatRF to_ratfunc(const MatPoly& m) {
  return m.map([](const Poly& a) { return RatFunc(a); });
}

/// Entrywise conversion back to polynomials; fails on any proper fraction.
inline MatPoly to_poly(const MatRF& m) {
  return m.map([](const RatFunc& a) {
    if (!a.is_polynomial()) throw PreconditionError("matrix entry is not a polynomial");
    return a.num();
  });
}

inline MatRF zero_matrix(const FieldPtr& f, std::size_t n) { return MatRF(n, n, RatFunc(f)); }
inline MatRF identity_matrix(const FieldPtr& f, std::size_t n) {
  return MatRF::identity(n, RatFunc(f), RatFunc::constant(f, f->one()));
}

template <class T>
Matrix<T> matrix_pow(const Matrix<T>& m, unsigned e) {
  Matrix<T> out = Matrix<T>::identity(m.rows(), zero_like(m(0, 0)), one_like(m(0, 0)));
  for (unsigned i = 0; i < e; ++i) out = out * m;
  return out;
}

}  // namespace flatflag

#endif  // FLATFLAG_ALGEBRA_MATRIX_HPP
