#include "thicklat/linalg.hpp"

namespace thicklat {

std::size_t integer_rank(Matrix<std::int64_t> m) {
  // Bareiss: every division below is exact, entries stay minors of m.
  std::size_t rank = 0;
  std::int64_t prev = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(rank, c), m(pivot, c));
    }
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        __int128 const num = static_cast<__int128>(m(rank, col)) * m(r, c) -
                             static_cast<__int128>(m(r, col)) * m(rank, c);
        m(r, c) = static_cast<std::int64_t>(num / prev);
      }
      m(r, col) = 0;
    }
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace thicklat
