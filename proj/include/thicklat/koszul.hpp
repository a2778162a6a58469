#pragma once

#include <cstddef>
#include <vector>

#include "thicklat/field.hpp"
#include "thicklat/matrix.hpp"
#include "thicklat/polynomial.hpp"
#include "thicklat/quiver.hpp"
#include "thicklat/tree_module.hpp"

namespace thicklat {

using PolyMatrix = Matrix<Polynomial>;
using QMatrix = Matrix<Rational>;

// A bounded complex of free modules over a polynomial ring, homologically
// graded: d_n maps degree n to degree n - 1.
class FreeComplex {
 public:
  // ranks[i] is the rank in degree low + i; diffs[i] is d_{low+i+1}, of
  // shape ranks[i] x ranks[i+1]. Shapes are validated; d^2 = 0 is not.
  FreeComplex(PolyRing ring, int low, std::vector<std::size_t> ranks, std::vector<PolyMatrix> diffs);

  PolyRing const& ring() const noexcept { return ring_; }
  int low() const noexcept { return low_; }
  int high() const noexcept { return low_ + static_cast<int>(ranks_.size()) - 1; }
  // Zero outside [low, high].
  std::size_t rank(int n) const;
  std::vector<std::size_t> const& ranks() const noexcept { return ranks_; }
  // d_n for low < n <= high.
  PolyMatrix const& differential(int n) const;

  // d_{n-1} d_n = 0 for all n, checked exactly.
  bool is_complex() const;

 private:
  PolyRing ring_;
  int low_;
  std::vector<std::size_t> ranks_;
  std::vector<PolyMatrix> diffs_;
};

// R in degree 0.
FreeComplex unit_complex(PolyRing const& ring);
// R --f--> R in degrees 1 and 0.
FreeComplex cone_of_scalar(PolyRing const& ring, Polynomial const& f);
// Total complex with d(a (x) b) = da (x) b + (-1)^|a| a (x) db. Blocks of a
// degree are ordered by the degree of the left factor, ascending.
FreeComplex tensor(FreeComplex const& c, FreeComplex const& d);
// cone(f_1) (x) ... (x) cone(f_r). Throws Error on an empty list.
FreeComplex koszul_complex(PolyRing const& ring, std::vector<Polynomial> const& generators);

struct EvaluatedComplex {
  int low = 0;
  std::vector<std::size_t> ranks;
  std::vector<QMatrix> diffs;  // same layout as FreeComplex
};

// Substitutes the point into every entry. Throws Error on an arity mismatch.
EvaluatedComplex evaluate(FreeComplex const& c, std::vector<Rational> const& point);

// dim ker d_n - rank d_{n+1} for each degree, from low to high. Throws
// Error if d^2 != 0.
std::vector<int> homology_dims(EvaluatedComplex const& c);

// Homology of K (x) M evaluated at the point, as one dimension vector per
// degree from K.low() to K.high(). Each vertex carries K (x) k^{dim_v};
// arrows act by identity (x) M_a, checked to be chain maps.
std::vector<DimVector> koszul_tensor_module(FreeComplex const& k, TreeModule const& m,
                                            std::vector<Rational> const& point);

}  // namespace thicklat
