#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "thicklat/error.hpp"

namespace thicklat {

// Dense row-major matrix. Element arithmetic is whatever T provides; for
// prime-field elements T carries its own modulus so the usual operators work.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T const& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (auto const& r : rows) {
      if (r.size() != cols_) {
        throw Error("ragged matrix literal");
      }
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n, T const& zero, T const& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = one;
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  T const& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<T const> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<T> const& data() const noexcept { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        t(c, r) = (*this)(r, c);
      }
    }
    return t;
  }

  // Product with an explicit zero, needed when either side has an empty
  // inner dimension and T has no meaningful default.
  Matrix multiply(Matrix const& rhs, T const& zero) const {
    if (cols_ != rhs.rows_) {
      throw Error("matrix product shape mismatch");
    }
    Matrix out(rows_, rhs.cols_, zero);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        T const& a = (*this)(i, k);
        if (a == zero) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          out(i, j) = out(i, j) + a * rhs(k, j);
        }
      }
    }
    return out;
  }

  Matrix operator*(Matrix const& rhs) const {
    return multiply(rhs, T{});
  }

  Matrix operator-(Matrix const& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
      throw Error("matrix difference shape mismatch");
    }
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) {
      out.data_[i] = data_[i] - rhs.data_[i];
    }
    return out;
  }

  Matrix operator+(Matrix const& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
      throw Error("matrix sum shape mismatch");
    }
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) {
      out.data_[i] = data_[i] + rhs.data_[i];
    }
    return out;
  }

  bool is_zero(T const& zero) const {
    return std::all_of(data_.begin(), data_.end(),
                       [&](T const& x) { return x == zero; });
  }

  // Columns [begin, end) as a new matrix.
  Matrix columns(std::size_t begin, std::size_t end) const {
    Matrix out(rows_, end - begin);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = begin; c < end; ++c) {
        out(r, c - begin) = (*this)(r, c);
      }
    }
    return out;
  }

  Matrix row_block(std::size_t begin, std::size_t end) const {
    Matrix out(end - begin, cols_);
    for (std::size_t r = begin; r < end; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        out(r - begin, c) = (*this)(r, c);
      }
    }
    return out;
  }

  friend bool operator==(Matrix const& a, Matrix const& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // Lexicographic on (shape, entries); used as the canonical order.
  friend bool operator<(Matrix const& a, Matrix const& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return std::lexicographical_compare(a.data_.begin(), a.data_.end(),
                                        b.data_.begin(), b.data_.end());
  }

  friend std::ostream& operator<<(std::ostream& os, Matrix const& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t c = 0; c < m.cols_; ++c) {
        os << (c ? ", " : "") << m(r, c);
      }
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Kronecker product a (x) b: block (i, j) is a(i, j) b.
template <typename T>
Matrix<T> kronecker(Matrix<T> const& a, Matrix<T> const& b, T const& zero) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == zero) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

}  // namespace thicklat
