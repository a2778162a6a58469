#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thicklat/error.hpp"
#include "thicklat/serialize.hpp"
#include "thicklat/tree_module.hpp"

namespace py = pybind11;
using namespace thicklat;

namespace {

Quiver quiver_of(std::string const& type, std::string const& orientation) {
  return Quiver::parse(DynkinType::parse(type), orientation);
}

std::shared_ptr<NcLattice const> nc_of(Quiver const& q) {
  auto rs = build_root_system(q.type());
  auto c = coxeter_element(rs, q);
  return std::make_shared<NcLattice const>(std::move(rs), std::move(c));
}

// Results cross the boundary as JSON text; the Python side decodes them.
std::string nc_json(std::string const& type, std::string const& orientation) {
  return lattice_json(nc_graph(*nc_of(quiver_of(type, orientation)))).dump();
}

std::string thick_json(std::string const& type, std::uint32_t p, std::string const& orientation,
                       bool verify) {
  ThickEnumerator const ctx(quiver_of(type, orientation), Field::prime(p));
  auto doc = lattice_json(thick_graph(ctx.enumerate()));
  if (verify) doc["bijection"] = bijection_json(verify_bijection(ctx), ctx.root_system());
  return doc.dump();
}

std::string functions_json(std::string const& type, std::string const& poset, std::string const& mode,
                           std::string const& orientation, std::size_t cap) {
  auto const nc = nc_of(quiver_of(type, orientation));
  auto const p = FinitePoset::from_spec(poset);
  if (mode != "all" && mode != "monotone") throw Error("mode must be 'all' or 'monotone'");
  auto const fl = mode == "all" ? all_functions(p, nc, cap) : monotone_functions(p, nc, cap);
  return lattice_json(function_graph(fl)).dump();
}

std::string koszul_json_text(std::string const& vars, std::vector<std::string> const& gens,
                             std::string const& at, std::optional<std::string> const& module_type,
                             std::optional<DimVector> const& module_dim, std::string const& orientation) {
  std::optional<TreeModule> m;
  if (module_type && module_dim) m = tree_module(quiver_of(*module_type, orientation), *module_dim);
  auto const r = koszul_report(PolyRing::parse(vars), gens, parse_point(at), m ? &*m : nullptr);
  return koszul_json(r).dump();
}

py::dict tree_module_dict(std::string const& type, DimVector const& dim, std::string const& orientation) {
  auto const m = tree_module(quiver_of(type, orientation), dim);
  py::list maps;
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    auto const& arrow = m.quiver.arrows()[a];
    py::list rows;
    for (std::size_t r = 0; r < m.maps[a].rows(); ++r) {
      py::list row;
      for (std::size_t c = 0; c < m.maps[a].cols(); ++c) row.append(m.maps[a](r, c));
      rows.append(row);
    }
    py::dict entry;
    entry["source"] = arrow.source + 1;
    entry["target"] = arrow.target + 1;
    entry["matrix"] = rows;
    maps.append(entry);
  }
  py::dict out;
  out["dim"] = m.dim;
  out["maps"] = maps;
  out["zero_one"] = m.zero_one();
  return out;
}

std::vector<DimVector> closure(std::string const& type, std::vector<DimVector> const& seed, std::uint32_t p,
                               std::string const& orientation) {
  return wide_closure(quiver_of(type, orientation), Field::prime(p), seed).objects;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lattices of thick subcategories for Dynkin quivers";
  // Later registrations are tried first, so the base class goes first.
  auto const& base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<SizeGuardError>(m, "SizeGuardError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.attr("SCHEMA_VERSION") = kSchemaVersion;
  m.attr("DEFAULT_SIZE_GUARD") = kDefaultSizeGuard;
  m.def("nc_json", &nc_json, py::arg("type"), py::arg("orientation") = "");
  m.def("thick_json", &thick_json, py::arg("type"), py::arg("field") = 2, py::arg("orientation") = "",
        py::arg("verify") = false);
  m.def("functions_json", &functions_json, py::arg("type"), py::arg("poset"), py::arg("mode") = "monotone",
        py::arg("orientation") = "", py::arg("cap") = kDefaultSizeGuard);
  m.def("koszul_json", &koszul_json_text, py::arg("vars"), py::arg("gens"), py::arg("at"),
        py::arg("module_type") = py::none(), py::arg("module_dim") = py::none(), py::arg("orientation") = "");
  m.def("tree_module", &tree_module_dict, py::arg("type"), py::arg("dim"), py::arg("orientation") = "");
  m.def("wide_closure", &closure, py::arg("type"), py::arg("seed"), py::arg("field") = 2,
        py::arg("orientation") = "");
}
