#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "thicklat/field.hpp"
#include "thicklat/noncrossing.hpp"
#include "thicklat/quiver.hpp"
#include "thicklat/root_system.hpp"

namespace thicklat {

// A wide subcategory of rep(Q), keyed by the dimension vectors of the
// indecomposables it contains (one per positive root). objects is sorted.
struct WideSubcategory {
  Quiver quiver;
  Field field;
  std::vector<DimVector> objects;

  bool contains(DimVector const& d) const;
  bool is_subset_of(WideSubcategory const& other) const;
  std::string to_string() const;

  friend bool operator==(WideSubcategory const& a, WideSubcategory const& b) {
    return a.quiver == b.quiver && a.field == b.field && a.objects == b.objects;
  }
};

struct ItAssignment {
  WideSubcategory wide;
  NcElement nc;
};

// Everything the closure needs, computed once per quiver and prime field:
// for each ordered pair of indecomposables the summands of kernels, images
// and cokernels of all their morphisms and of the middle terms of all their
// extensions, plus Ext dimensions and which pairs admit a monomorphism.
class ThickEnumerator {
 public:
  using Mask = boost::dynamic_bitset<>;

  // Throws Error unless field is finite.
  ThickEnumerator(Quiver q, Field field);

  Quiver const& quiver() const noexcept { return quiver_; }
  Field const& field() const noexcept { return field_; }
  RootSystem const& root_system() const noexcept { return rs_; }
  std::vector<DimVector> const& roots() const noexcept { return roots_; }
  WeylElement const& coxeter() const noexcept { return coxeter_; }

  // Throws Error for a vector that is not a positive root.
  std::size_t index_of(DimVector const& d) const;
  Mask mask_of(std::vector<DimVector> const& dims) const;
  WideSubcategory to_wide(Mask const& m) const;

  Mask closure_mask(Mask seed) const;
  WideSubcategory closure(std::vector<DimVector> const& seed) const;

  // Distinct closures of all seed sets, sorted by (size, objects).
  std::vector<WideSubcategory> enumerate() const;

  std::vector<DimVector> simples(WideSubcategory const& w) const;

  // Product of reflections of the simples in an order where Ext from an
  // earlier simple to a later one vanishes. Checks all such orders agree.
  NcElement it_map(WideSubcategory const& w) const;

  int ext(std::size_t x, std::size_t y) const { return ext_[x][y]; }
  int hom(std::size_t x, std::size_t y) const { return hom_[x][y]; }

 private:
  Quiver quiver_;
  Field field_;
  RootSystem rs_;
  WeylElement coxeter_;
  std::vector<DimVector> roots_;
  std::map<DimVector, std::size_t> index_;
  std::vector<std::vector<Mask>> produced_;
  std::vector<std::vector<int>> hom_;
  std::vector<std::vector<int>> ext_;
  std::vector<std::vector<bool>> mono_;
};

WideSubcategory wide_closure(Quiver const& q, Field const& field,
                             std::vector<DimVector> const& seed);
std::vector<WideSubcategory> enumerate_thick(Quiver const& q, Field const& field);
std::vector<DimVector> simples_of(WideSubcategory const& wide);
NcElement it_map(WideSubcategory const& wide);

struct BijectionReport {
  std::size_t thick_count = 0;
  std::size_t nc_count = 0;
  bool injective = false;
  bool surjective = false;
  bool order_preserved = false;  // W <= W' implies it(W) <= it(W')
  bool order_reflected = false;  // it(W) <= it(W') implies W <= W'
  bool lengths_match = false;    // reflection length = number of simples
  std::vector<std::string> violations;
  std::vector<ItAssignment> assignments;

  bool ok() const {
    return injective && surjective && order_preserved && order_reflected && lengths_match &&
           violations.empty();
  }
};

BijectionReport verify_bijection(Quiver const& q, Field const& field);
BijectionReport verify_bijection(ThickEnumerator const& ctx);

}  // namespace thicklat
