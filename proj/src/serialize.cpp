#include "thicklat/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "thicklat/error.hpp"
#include "thicklat/hasse.hpp"

namespace thicklat {

namespace {

std::string dot_quote(std::string const& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string rational_string(Rational const& q) {
  std::ostringstream s;
  s << q;
  return s.str();
}

bool is_multiple(DimVector const& v, DimVector const& base) {
  std::optional<int> k;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (base[i] == 0) {
      if (v[i] != 0) return false;
      continue;
    }
    if (v[i] % base[i] != 0) return false;
    int const q = v[i] / base[i];
    if (q < 0 || (k && *k != q)) return false;
    k = q;
  }
  return true;
}

}  // namespace

std::string nc_id(RootSystem const& rs, NcElement const& x) {
  if (rs.type().family() == Family::A) return format_partition(nc_to_set_partition(rs, x));
  auto const factors = reflection_factorization(rs, x.elem);
  if (factors.empty()) return "e";
  std::string out;
  for (auto const& r : factors) {
    if (!out.empty()) out += '*';
    out += "r" + format_vector(r);
  }
  return out;
}

LatticeGraph nc_graph(NcLattice const& nc) {
  LatticeGraph g;
  g.name = "NC(" + nc.root_system().type().name() + ")";
  for (auto const& x : nc.elements()) g.ids.push_back(nc_id(nc.root_system(), x));
  g.covers = nc.hasse().covers;
  return g;
}

LatticeGraph thick_graph(std::vector<WideSubcategory> const& wides) {
  LatticeGraph g;
  g.name = wides.empty() ? "thick" : "thick(" + wides.front().quiver.type().name() + ")";
  for (auto const& w : wides) g.ids.push_back(w.to_string());
  g.covers = transitive_reduction(wides.size(), [&](std::size_t i, std::size_t j) {
               return wides[i].is_subset_of(wides[j]);
             }).covers;
  return g;
}

LatticeGraph function_graph(FunctionLattice const& fl) {
  LatticeGraph g;
  g.name = "functions";
  auto const& rs = fl.nc().root_system();
  for (std::size_t i = 0; i < fl.size(); ++i) {
    std::string id;
    for (std::size_t p = 0; p < fl.poset().size(); ++p) {
      if (p) id += ';';
      id += fl.poset().name(p) + "=" + nc_id(rs, fl.nc().elements()[fl.values(i)[p]]);
    }
    g.ids.push_back(std::move(id));
  }
  g.covers = fl.covers();
  return g;
}

namespace {

std::vector<std::pair<std::string, std::string>> sorted_edges(LatticeGraph const& g) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : g.covers) out.emplace_back(g.ids.at(a), g.ids.at(b));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Json lattice_json(LatticeGraph const& g) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < g.ids.size(); ++i) {
    Json n{{"id", g.ids[i]}};
    if (!g.labels.empty()) n["label"] = g.labels[i];
    nodes.push_back(std::move(n));
  }
  Json edges = Json::array();
  for (auto const& [a, b] : sorted_edges(g)) edges.push_back(Json::array({a, b}));
  return Json{{"name", g.name}, {"count", g.ids.size()}, {"nodes", nodes}, {"edges", edges}};
}

std::string lattice_dot(LatticeGraph const& g) {
  std::string out = "digraph " + dot_quote(g.name) + " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < g.ids.size(); ++i) {
    out += "  " + dot_quote(g.ids[i]);
    if (!g.labels.empty()) out += " [label=" + dot_quote(g.labels[i]) + "]";
    out += ";\n";
  }
  for (auto const& [a, b] : sorted_edges(g)) out += "  " + dot_quote(a) + " -> " + dot_quote(b) + ";\n";
  return out + "}\n";
}

Json bijection_json(BijectionReport const& r, RootSystem const& rs) {
  Json assignments = Json::array();
  for (auto const& a : r.assignments) {
    assignments.push_back({{"thick", a.wide.to_string()}, {"nc", nc_id(rs, a.nc)}});
  }
  return Json{{"thick_count", r.thick_count},
              {"nc_count", r.nc_count},
              {"injective", r.injective},
              {"surjective", r.surjective},
              {"order_preserved", r.order_preserved},
              {"order_reflected", r.order_reflected},
              {"lengths_match", r.lengths_match},
              {"violations", r.violations},
              {"ok", r.ok()},
              {"assignments", assignments}};
}

KoszulReport koszul_report(PolyRing const& ring, std::vector<std::string> const& generators,
                           std::vector<Rational> const& point, TreeModule const* module) {
  std::vector<Polynomial> gens;
  for (auto const& g : generators) gens.push_back(parse_polynomial(ring, g));
  auto const k = koszul_complex(ring, gens);
  KoszulReport r;
  for (auto const& g : gens) r.generators.push_back(g.to_string(ring));
  for (auto const& x : point) r.point.push_back(rational_string(x));
  r.low = k.low();
  r.ranks = k.ranks();
  r.homology = homology_dims(evaluate(k, point));
  if (module) {
    r.module_dim = module->dim;
    r.module_homology = koszul_tensor_module(k, *module, point);
    for (auto const& h : r.module_homology) r.multiples_of_module &= is_multiple(h, module->dim);
  }
  return r;
}

Json koszul_json(KoszulReport const& r) {
  Json degrees = Json::array();
  for (std::size_t i = 0; i < r.ranks.size(); ++i) {
    Json d{{"degree", r.low + static_cast<int>(i)}, {"rank", r.ranks[i]}, {"homology", r.homology[i]}};
    if (r.module_dim) d["module_homology"] = r.module_homology[i];
    degrees.push_back(std::move(d));
  }
  bool const acyclic = std::all_of(r.homology.begin(), r.homology.end(), [](int h) { return h == 0; });
  Json out{{"generators", r.generators}, {"point", r.point}, {"degrees", degrees}, {"acyclic", acyclic}};
  if (r.module_dim) {
    out["module"] = *r.module_dim;
    out["multiples_of_module"] = r.multiples_of_module;
  }
  return out;
}

}  // namespace thicklat
