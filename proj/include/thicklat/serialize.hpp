#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "thicklat/koszul.hpp"
#include "thicklat/noncrossing.hpp"
#include "thicklat/spec_model.hpp"
#include "thicklat/thick_enum.hpp"

namespace thicklat {

using Json = nlohmann::json;

inline constexpr char const* kSchemaVersion = "1";

// A lattice ready for output: one stable identifier per member and the
// covering pairs (lower, upper) as indices into ids.
struct LatticeGraph {
  std::string name;
  std::vector<std::string> ids;
  std::vector<std::string> labels;  // optional; ids are used when empty
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

// Type A: the set partition, e.g. "(1,2),(3)". Otherwise a minimal reflection
// factorization such as "r(0,1,0,0)*r(1,1,1,1)", or "e" for the identity.
std::string nc_id(RootSystem const& rs, NcElement const& x);

LatticeGraph nc_graph(NcLattice const& nc);
// Wide subcategories ordered by inclusion.
LatticeGraph thick_graph(std::vector<WideSubcategory> const& wides);
// Member ids list point=value pairs, e.g. "p1=(1),(2),(3);p2=(1,2,3)".
LatticeGraph function_graph(FunctionLattice const& fl);

// {"count", "nodes": [...], "edges": [[lower, upper], ...]}. Nodes keep the
// graph order; edges are sorted by identifier pair.
Json lattice_json(LatticeGraph const& g);
// digraph with one statement per node and edges from lower to higher.
std::string lattice_dot(LatticeGraph const& g);

Json bijection_json(BijectionReport const& r, RootSystem const& rs);

// Homology of K at a point, optionally tensored with a tree module.
struct KoszulReport {
  std::vector<std::string> generators;
  std::vector<std::string> point;
  int low = 0;
  std::vector<std::size_t> ranks;
  std::vector<int> homology;
  std::optional<DimVector> module_dim;
  std::vector<DimVector> module_homology;
  // Every module homology vector is a nonnegative multiple of module_dim.
  bool multiples_of_module = true;
};

KoszulReport koszul_report(PolyRing const& ring, std::vector<std::string> const& generators,
                           std::vector<Rational> const& point, TreeModule const* module);
Json koszul_json(KoszulReport const& r);

}  // namespace thicklat
