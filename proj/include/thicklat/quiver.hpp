#pragma once

#include <string>
#include <vector>

#include "thicklat/root_system.hpp"

namespace thicklat {

// 0-based vertices.
struct Arrow {
  int source;
  int target;

  friend bool operator==(Arrow const&, Arrow const&) = default;
};

using DimVector = std::vector<int>;

// An orientation of a simply-laced Dynkin diagram. Arrows are stored in the
// order of DynkinType::edges(), so arrow indices are stable across
// reorientations of the same diagram.
class Quiver {
 public:
  Quiver(DynkinType type, std::vector<Arrow> arrows);

  // Every edge {i, j} with i < j oriented i -> j (linear for type A).
  static Quiver standard(DynkinType type);
  // Comma-separated 1-based arrows, e.g. "1>2,3>2". Empty text gives the
  // standard orientation.
  static Quiver parse(DynkinType type, std::string const& orientation);

  DynkinType const& type() const noexcept { return type_; }
  std::size_t vertex_count() const noexcept { return static_cast<std::size_t>(type_.rank()); }
  std::vector<Arrow> const& arrows() const noexcept { return arrows_; }

  bool is_sink(int v) const;
  bool is_source(int v) const;

  // Reverse every arrow incident to v.
  Quiver reflected_at(int v) const;

  // A vertex order v_1, ..., v_n in which the target of every arrow comes
  // before its source. Ties go to the smallest vertex.
  std::vector<int> sink_first_order() const;

  std::string orientation_string() const;

  friend bool operator==(Quiver const&, Quiver const&) = default;

 private:
  DynkinType type_;
  std::vector<Arrow> arrows_;
};

// <d, e> = sum_i d_i e_i - sum_arrows d_source e_target.
int euler_form(Quiver const& q, DimVector const& d, DimVector const& e);

// Positive roots of the underlying type in vertex coordinates.
std::vector<DimVector> indecomposable_dims(Quiver const& q);

DimVector to_dim_vector(IntVector const& v);
IntVector to_int_vector(DimVector const& d);
std::string format_dim(DimVector const& d);

}  // namespace thicklat
