#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "minsurf/errors.hpp"
#include "minsurf/scalar.hpp"

namespace minsurf {

// Small dense matrix. Everything in this project is at most a handful of
// rows/columns, so no blocking or views; just bounds-checked storage.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  Mat(int rows, int cols, std::initializer_list<T> vals) : Mat(rows, cols) {
    if (static_cast<int>(vals.size()) != rows * cols) {
      throw DimensionMismatch("initializer size does not match matrix shape");
    }
    std::copy(vals.begin(), vals.end(), data_.begin());
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  bool same_shape(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  Mat transposed() const {
    Mat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    if (!a.same_shape(b)) throw DimensionMismatch("matrix sum shape mismatch");
    Mat c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    if (!a.same_shape(b)) throw DimensionMismatch("matrix difference shape mismatch");
    Mat c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
  }

  friend Mat operator*(const T& s, const Mat& a) {
    Mat c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = s * a.data_[i];
    return c;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<T>& flat() const { return data_; }
  std::vector<T>& flat() { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using RealMat = Mat<real_t>;
using ComplexMat = Mat<complex_t>;
using IntMat = Mat<bigint_t>;
using RatMat = Mat<bigrat_t>;

inline real_t max_abs(const RealMat& m) {
  real_t v = 0;
  for (const auto& x : m.flat()) v = std::max(v, abs(x));
  return v;
}

inline real_t max_abs(const ComplexMat& m) {
  real_t v = 0;
  for (const auto& x : m.flat()) v = std::max(v, cabs(x));
  return v;
}

inline RealMat to_real(const IntMat& m) {
  RealMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = real_t(m(i, j));
  return r;
}

inline RealMat to_real(const RatMat& m) {
  RealMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      r(i, j) = real_t(numerator(m(i, j))) / real_t(denominator(m(i, j)));
  return r;
}

inline RealMat real_part(const ComplexMat& m) {
  RealMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).real();
  return r;
}

// Gaussian elimination with partial pivoting; throws SingularBasis when the
// pivot falls below `pivot_floor` times the largest input entry.
RealMat inverse(const RealMat& m, const real_t& pivot_floor);

}  // namespace minsurf
