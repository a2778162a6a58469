#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thicklat {

// A finite poset given by its cover relations. Each pair is (lower, upper).
struct HasseDiagram {
  std::size_t size = 0;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

// Covers of the order leq(i, j) on {0..n-1} by exhaustive pairwise scan:
// i < j is a cover when no k lies strictly between. O(n^3).
HasseDiagram transitive_reduction(std::size_t n,
                                  std::function<bool(std::size_t, std::size_t)> const& leq);

// Reflexive-transitive closure of the cover relation as a dense matrix.
std::vector<std::vector<bool>> order_closure(HasseDiagram const& h);

// An order-isomorphism a -> b (image of each element of a), if any.
std::optional<std::vector<std::size_t>> find_order_isomorphism(HasseDiagram const& a,
                                                               HasseDiagram const& b);

inline bool lattice_iso(HasseDiagram const& a, HasseDiagram const& b) {
  return find_order_isomorphism(a, b).has_value();
}

// Checks every pair has a unique meet and join under the closure order.
bool is_lattice(HasseDiagram const& h);

// A diagram transcribed from a drawing: labelled nodes placed at heights,
// joined by undirected segments. Each segment is oriented from the lower
// node to the higher one.
struct DrawnDiagram {
  struct Node {
    std::string name;
    std::string label;
    double x;
    double y;
  };
  std::vector<Node> nodes;
  std::vector<std::pair<std::string, std::string>> segments;

  HasseDiagram to_hasse() const;
};

}  // namespace thicklat
