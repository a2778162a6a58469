#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "thicklat/hasse.hpp"
#include "thicklat/noncrossing.hpp"
#include "thicklat/poset.hpp"

namespace thicklat {

inline constexpr std::size_t kDefaultSizeGuard = 100000;

// A function from the points of a poset into NC(W, c). values[p] indexes
// nc->elements().
struct SpecFunction {
  std::shared_ptr<FinitePoset const> poset;
  std::shared_ptr<NcLattice const> nc;
  std::vector<std::size_t> values;

  NcElement const& value(std::size_t point) const { return nc->elements()[values[point]]; }
};

// p <= q in the poset implies sigma(p) <= sigma(q).
bool is_specialization_closed(SpecFunction const& sigma);

// Functions ordered pointwise, sorted lexicographically by values.
class FunctionLattice {
 public:
  FunctionLattice(std::shared_ptr<FinitePoset const> poset, std::shared_ptr<NcLattice const> nc,
                  std::vector<std::vector<std::size_t>> values);

  FinitePoset const& poset() const noexcept { return *poset_; }
  NcLattice const& nc() const noexcept { return *nc_; }
  std::size_t size() const noexcept { return values_.size(); }
  SpecFunction member(std::size_t i) const { return {poset_, nc_, values_[i]}; }
  std::vector<std::size_t> const& values(std::size_t i) const { return values_[i]; }
  std::optional<std::size_t> index_of(std::vector<std::size_t> const& values) const;

  bool leq(std::size_t i, std::size_t j) const;
  // Pointwise meet and join; throws InvariantViolation if the result is not
  // a member.
  std::size_t meet(std::size_t i, std::size_t j) const;
  std::size_t join(std::size_t i, std::size_t j) const;

  // (lower, upper) index pairs of the covering relation.
  std::vector<std::pair<std::size_t, std::size_t>> const& covers() const noexcept {
    return covers_;
  }
  HasseDiagram hasse() const { return {size(), covers_}; }

 private:
  std::shared_ptr<FinitePoset const> poset_;
  std::shared_ptr<NcLattice const> nc_;
  std::vector<std::vector<std::size_t>> values_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

// All |NC|^|P| functions. Throws SizeGuardError when that exceeds cap.
FunctionLattice all_functions(FinitePoset const& poset, std::shared_ptr<NcLattice const> nc,
                              std::size_t cap = kDefaultSizeGuard);
// Specialization-closed functions only. Throws SizeGuardError once more
// than cap are found.
FunctionLattice monotone_functions(FinitePoset const& poset, std::shared_ptr<NcLattice const> nc,
                                   std::size_t cap = kDefaultSizeGuard);

bool lattice_iso(FunctionLattice const& a, FunctionLattice const& b);
bool lattice_iso(FunctionLattice const& a, HasseDiagram const& b);

// Smashing subcategories, equivalently thick subcategories of perfect
// complexes: the number of specialization-closed functions.
std::size_t smashing_count(FinitePoset const& poset, std::shared_ptr<NcLattice const> nc,
                           std::size_t cap = kDefaultSizeGuard);

// Reference drawings: NC(A2) as noncrossing partitions of {1,2,3}, and the
// specialization-closed functions from a 2-point chain into NC(A2).
DrawnDiagram nc_a2_drawing();
DrawnDiagram monotone_chain2_a2_drawing();

}  // namespace thicklat
