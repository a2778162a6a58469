#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the code path it is used to check.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "thicklat/root_system.hpp"

namespace thicklat::oracle {

// Degrees of the basic invariants and Coxeter number.
inline std::vector<std::int64_t> degrees(DynkinType const& t) {
  std::int64_t const n = t.rank();
  std::vector<std::int64_t> d;
  switch (t.family()) {
    case Family::A:
      for (std::int64_t i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Family::D:
      for (std::int64_t i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
  }
  return d;
}

// prod_i (h + d_i) / d_i with h the largest degree.
inline std::int64_t w_catalan(DynkinType const& t) {
  auto const d = degrees(t);
  auto const h = *std::max_element(d.begin(), d.end());
  // Multiply numerators and denominators separately; exact at these sizes.
  __int128 num = 1;
  __int128 den = 1;
  for (auto di : d) {
    num *= h + di;
    den *= di;
  }
  return static_cast<std::int64_t>(num / den);
}

// Positive roots of a simply-laced system are exactly the nonnegative
// integer vectors of quadratic norm 2. Coefficients never exceed 6.
inline std::set<IntVector> roots_by_norm(IntMatrix const& cartan) {
  auto const n = cartan.rows();
  std::set<IntVector> out;
  IntVector v(n, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < n && v[i] == 6) v[i++] = 0;
    if (i == n) break;
    ++v[i];
    std::int64_t norm = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) norm += v[a] * cartan(a, b) * v[b];
    }
    if (norm == 2) out.insert(v);
  }
  return out;
}

// Shortest factorisation into reflections, by breadth-first search over
// the whole group. Returns element -> length for every reachable element.
inline std::map<IntMatrix, int> reflection_word_lengths(std::vector<WeylElement> const& refl,
                                                        std::size_t rank) {
  std::map<IntMatrix, int> dist;
  auto const id = IntMatrix::identity(rank, 0, 1);
  dist[id] = 0;
  std::deque<IntMatrix> queue{id};
  while (!queue.empty()) {
    auto const w = queue.front();
    queue.pop_front();
    for (auto const& t : refl) {
      auto const wt = w * t.mat();
      if (dist.emplace(wt, dist[w] + 1).second) queue.push_back(wt);
    }
  }
  return dist;
}

}  // namespace thicklat::oracle
