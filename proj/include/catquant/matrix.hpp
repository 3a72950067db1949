#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "catquant/error.hpp"

namespace catquant {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
///
/// Products of matrices whose entries are small integers are computed exactly
/// (every intermediate is an integer below 2^53), which is what the 0/1
/// pull-back presheaves rely on for bit-exact comparisons.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw StructuralError("matrix entries length " + std::to_string(data_.size()) +
                            " != rows*cols " + std::to_string(rows_ * cols_));
  }

  /// Real-valued literal, row by row.
  ComplexMatrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw StructuralError("ragged matrix literal");
      for (double v : r) data_.emplace_back(v, 0.0);
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw StructuralError("block out of range");
    ComplexMatrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw StructuralError("block out of range");
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  std::vector<Complex> apply(std::span<const Complex> v) const {
    if (v.size() != cols_) throw StructuralError("vector length does not match matrix columns");
    std::vector<Complex> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
      out[r] = acc;
    }
    return out;
  }

  bool is_zero_one() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
      return z.imag() == 0.0 && (z.real() == 0.0 || z.real() == 1.0);
    });
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& z) { return z == Complex{}; });
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_)
      throw StructuralError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                            std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                            std::to_string(b.cols_));
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    check_same_shape(a, b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    check_same_shape(a, b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
    for (auto& z : a.data_) z *= s;
    return a;
  }

 private:
  static void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw StructuralError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b; infinity on shape mismatch.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return HUGE_VAL;
  double m = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] - eb[i]));
  return m;
}

inline bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

}  // namespace catquant
