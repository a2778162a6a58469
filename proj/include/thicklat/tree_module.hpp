#pragma once

#include <vector>

#include "thicklat/field.hpp"
#include "thicklat/quiver.hpp"
#include "thicklat/representation.hpp"

namespace thicklat {

// An integral realisation of the indecomposable with dimension vector dim:
// free over the integers, so it base-changes to every prime field and to Q.
struct TreeModule {
  Quiver quiver;
  DimVector dim;
  std::vector<IntMatrix> maps;  // maps[a]: dim[target] x dim[source]

  // All entries are 0 or 1.
  bool zero_one() const;
};

// Builds the indecomposable for the positive root alpha by reflection
// functors from a simple representation, then rescales basis vectors along
// a spanning forest of the coefficient graph so every entry becomes 0 or 1.
// Throws Error when alpha is not a positive root; throws InvariantViolation
// if the result is not integral.
TreeModule tree_module(Quiver const& q, DimVector const& alpha);

template <typename F>
Representation<F> base_change(TreeModule const& m, F const& field) {
  std::vector<Matrix<typename F::value_type>> maps;
  maps.reserve(m.maps.size());
  for (auto const& a : m.maps) maps.push_back(linalg::convert(field, a));
  return Representation<F>(m.quiver, field, m.dim, std::move(maps));
}

FieldRep base_change(TreeModule const& m, Field const& field);

}  // namespace thicklat
