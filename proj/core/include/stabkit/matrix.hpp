#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stabkit/error.hpp"
#include "stabkit/ring.hpp"

namespace stabkit {

/// Dense row-major matrix over a commutative ring.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, RingTraits<R>::zero()) {}
  Matrix(std::initializer_list<std::initializer_list<R>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_)
        throw Error(ErrorKind::DimensionMismatch, "ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RingTraits<R>::one();
    return m;
  }
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<R>>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows)
        throw Error(ErrorKind::DimensionMismatch, "column length differs from row count");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }
  static Matrix column_vector(const std::vector<R>& v) { return from_columns(v.size(), {v}); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<R> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const R> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<R> column(std::size_t j) const {
    std::vector<R> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!RingTraits<R>::is_zero(x)) return false;
    return true;
  }
  bool column_is_zero(std::size_t j) const {
    for (std::size_t i = 0; i < rows_; ++i)
      if (!RingTraits<R>::is_zero((*this)(i, j))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class F>
  auto map(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const R&>()))>;
    Matrix<Out> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += c * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const R& c) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (!RingTraits<R>::is_zero((*this)(src, j))) (*this)(dst, j) += c * (*this)(src, j);
  }
  /// col[dst] += c * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const R& c) {
    for (std::size_t i = 0; i < rows_; ++i)
      if (!RingTraits<R>::is_zero((*this)(i, src))) (*this)(i, dst) += c * (*this)(i, src);
  }
  void scale_row(std::size_t i, const R& c) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = c * (*this)(i, j);
  }
  void scale_col(std::size_t j, const R& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c * (*this)(i, j);
  }

  /// Keeps the listed columns, in order.
  Matrix select_columns(const std::vector<std::size_t>& keep) const {
    Matrix out(rows_, keep.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < keep.size(); ++k) out(i, k) = (*this)(i, keep[k]);
    return out;
  }
  Matrix top_rows(std::size_t n) const {
    Matrix out(n, cols_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& x = a(i, k);
        if (RingTraits<R>::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!RingTraits<R>::is_zero(b(k, j))) out(i, j) += x * b(k, j);
      }
    return out;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(ErrorKind::DimensionMismatch, "matrix sum shape");
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(ErrorKind::DimensionMismatch, "matrix difference shape");
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
    return out;
  }
  Matrix operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

template <class R>
std::vector<R> operator*(const Matrix<R>& m, const std::vector<R>& v) {
  return (m * Matrix<R>::column_vector(v)).column(0);
}

/// [A | B]; the row counts must agree.
template <class R>
Matrix<R> hstack(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "hstack row counts differ");
  Matrix<R> out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

template <class R>
Matrix<R> vstack(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "vstack column counts differ");
  Matrix<R> out(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) out(a.rows() + i, j) = b(i, j);
  }
  return out;
}

template <class R>
Matrix<R> block_diagonal(const std::vector<Matrix<R>>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix<R> out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

template <class R>
Matrix<R> block_diagonal(const Matrix<R>& a, const Matrix<R>& b) {
  return block_diagonal(std::vector<Matrix<R>>{a, b});
}

/// Row-major nested list of formatted entries, e.g. [["0", "-1 + 2*t"], ...].
template <class R>
std::string to_string(const Matrix<R>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += "\"" + RingTraits<R>::format(m(i, j)) + "\"";
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace stabkit
