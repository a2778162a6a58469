#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "thicklat/field.hpp"
#include "thicklat/matrix.hpp"

// Exact linear algebra over a field object F (PrimeField or RationalField).
namespace thicklat::linalg {

template <typename F>
using Mat = Matrix<typename F::value_type>;

template <typename F>
struct Echelon {
  Mat<F> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form.
template <typename F>
Echelon<F> rref(F const& field, Mat<F> m) {
  auto const zero = field.zero();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == zero) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(pivot, c));
    }
    auto const inv = field.one() / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == zero) continue;
      auto const factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) = m(r, c) - factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename F>
std::size_t rank(F const& field, Mat<F> const& m) {
  if (m.empty()) return 0;
  return rref(field, m).pivots.size();
}

// Columns form a basis of the right null space, one column per free
// variable with that variable set to one.
template <typename F>
Mat<F> kernel_basis(F const& field, Mat<F> const& m) {
  auto const n = m.cols();
  if (m.rows() == 0) return Mat<F>::identity(n, field.zero(), field.one());
  auto const ech = rref(field, m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Mat<F> basis(n, free_cols.size(), field.zero());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    auto const f = free_cols[k];
    basis(f, k) = field.one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      basis(ech.pivots[r], k) = -ech.reduced(r, f);
    }
  }
  return basis;
}

// Rows form a basis of {y : y m = 0}.
template <typename F>
Mat<F> left_kernel(F const& field, Mat<F> const& m) {
  return kernel_basis(field, m.transpose()).transpose();
}

// Columns of m at pivot positions: a basis of the column space.
template <typename F>
Mat<F> column_basis(F const& field, Mat<F> const& m) {
  if (m.empty()) return Mat<F>(m.rows(), 0, field.zero());
  auto const ech = rref(field, m);
  Mat<F> out(m.rows(), ech.pivots.size(), field.zero());
  for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, ech.pivots[k]);
  }
  return out;
}

// Some X with a X = b, or nullopt when inconsistent. Free variables are 0.
template <typename F>
std::optional<Mat<F>> solve(F const& field, Mat<F> const& a, Mat<F> const& b) {
  if (a.rows() != b.rows()) throw Error("solve: row mismatch");
  auto const n = a.cols();
  auto const k = b.cols();
  Mat<F> aug(a.rows(), n + k, field.zero());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < k; ++c) aug(r, n + c) = b(r, c);
  }
  auto const ech = rref(field, aug);
  Mat<F> x(n, k, field.zero());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    auto const p = ech.pivots[r];
    if (p >= n) return std::nullopt;
    for (std::size_t c = 0; c < k; ++c) x(p, c) = ech.reduced(r, n + c);
  }
  return x;
}

template <typename F>
std::optional<Mat<F>> inverse(F const& field, Mat<F> const& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(field, m) != m.rows()) return std::nullopt;
  return solve(field, m, Mat<F>::identity(m.rows(), field.zero(), field.one()));
}

template <typename F>
Mat<F> multiply(F const& field, Mat<F> const& a, Mat<F> const& b) {
  return a.multiply(b, field.zero());
}

template <typename F>
bool is_zero(F const& field, Mat<F> const& m) {
  return m.is_zero(field.zero());
}

template <typename F>
Mat<F> convert(F const& field, Matrix<std::int64_t> const& m) {
  Mat<F> out(m.rows(), m.cols(), field.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = field.from_int(m(r, c));
  }
  return out;
}

}  // namespace thicklat::linalg

namespace thicklat {

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
std::size_t integer_rank(Matrix<std::int64_t> m);

}  // namespace thicklat
