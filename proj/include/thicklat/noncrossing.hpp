#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thicklat/hasse.hpp"
#include "thicklat/quiver.hpp"
#include "thicklat/root_system.hpp"

namespace thicklat {

// A Weyl group element together with the Coxeter element c whose interval
// [e, c] in absolute order it belongs to.
struct NcElement {
  WeylElement elem;
  WeylElement coxeter;

  friend bool operator==(NcElement const&, NcElement const&) = default;
  friend bool operator<(NcElement const& a, NcElement const& b) {
    if (!(a.elem == b.elem)) return a.elem < b.elem;
    return a.coxeter < b.coxeter;
  }
};

// Product of the simple reflections in Quiver::sink_first_order(): the
// target of every arrow is multiplied to the left of its source.
WeylElement coxeter_element(RootSystem const& rs, Quiver const& orientation);

// The interval [e, c] by breadth-first search over reflection-length
// increasing steps. Canonically sorted by matrix entries.
std::vector<NcElement> enumerate_nc(RootSystem const& rs, WeylElement const& c);
// Same, iterating reflections in the given order.
std::vector<NcElement> enumerate_nc(RootSystem const& rs, WeylElement const& c,
                                    std::span<WeylElement const> reflections);

// Absolute order: l(u) + l(u^-1 w) = l(w).
bool absolute_leq(RootSystem const& rs, WeylElement const& u, WeylElement const& w);

bool nc_leq(RootSystem const& rs, NcElement const& u, NcElement const& w);
NcElement nc_meet(RootSystem const& rs, NcElement const& u, NcElement const& w);
NcElement nc_join(RootSystem const& rs, NcElement const& u, NcElement const& w);

// NC(W, c) with elements enumerated once, for repeated order queries.
class NcLattice {
 public:
  NcLattice(RootSystem rs, WeylElement coxeter);

  RootSystem const& root_system() const noexcept { return rs_; }
  WeylElement const& coxeter() const noexcept { return coxeter_; }
  std::vector<NcElement> const& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  std::optional<std::size_t> index_of(WeylElement const& w) const;
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }
  int length(std::size_t i) const { return lengths_[i]; }

  bool leq(std::size_t i, std::size_t j) const;
  std::size_t meet(std::size_t i, std::size_t j) const;
  std::size_t join(std::size_t i, std::size_t j) const;

  // Covers u < u t for reflections t, from the reflection action.
  HasseDiagram hasse() const;

 private:
  RootSystem rs_;
  WeylElement coxeter_;
  std::vector<NcElement> elements_;
  std::map<WeylElement, std::size_t> index_;
  std::vector<int> lengths_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

using SetPartition = std::vector<std::vector<int>>;

// Type A_n only: the permutation of {1..n+1} realised by w, as a vector p
// with p[i-1] = image of i.
std::vector<int> type_a_permutation(RootSystem const& rs, WeylElement const& w);

// Cycles of the permutation, each block sorted, blocks sorted by minimum.
SetPartition nc_to_set_partition(RootSystem const& rs, NcElement const& x);

// Whether the partition avoids a < b < c < d, a ~ c, b ~ d across distinct
// blocks, positions taken along the given cyclic order.
bool is_noncrossing(SetPartition const& partition, std::vector<int> const& cyclic_order);

// "(1,2),(3)"
std::string format_partition(SetPartition const& p);

// A minimal factorization x = t_1 ... t_k into reflections, greedily choosing
// the first positive root (in canonical order) at each step.
std::vector<IntVector> reflection_factorization(RootSystem const& rs, WeylElement const& x);

}  // namespace thicklat
