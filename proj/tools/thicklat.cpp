#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include "thicklat/error.hpp"
#include "thicklat/serialize.hpp"
#include "thicklat/tree_module.hpp"

using namespace thicklat;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct Options {
  std::string type = "A2";
  std::string orientation;
  std::string field = "2";
  std::string poset = "point";
  std::string mode = "monotone";
  std::string format = "json";
  bool count = false;
  bool verify = false;
  std::string out;
  std::string vars = "x,y";
  std::string gens;
  std::string at;
  std::string module;
};

std::size_t size_guard() {
  char const* env = std::getenv("THICKLAT_SIZE_GUARD");
  if (!env || !*env) return kDefaultSizeGuard;
  try {
    std::size_t used = 0;
    auto const v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return static_cast<std::size_t>(v);
  } catch (std::exception const&) {
    throw Error(std::string("THICKLAT_SIZE_GUARD must be a nonnegative integer, got '") + env + "'");
  }
}

void emit(Options const& o, std::string const& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error("cannot write " + o.out);
  f << text;
  if (!f.flush()) throw Error("failed writing " + o.out);
}

Json document(std::string const& command, std::vector<std::string> const& argv) {
  return Json{{"schema_version", kSchemaVersion}, {"command", {{"name", command}, {"argv", argv}}}};
}

// Writes the lattice in the requested format; json documents get the extra
// payload merged in.
void emit_lattice(Options const& o, Json doc, LatticeGraph const& g, Json const& extra = {}) {
  if (o.count || o.format == "count") {
    emit(o, std::to_string(g.ids.size()) + "\n");
  } else if (o.format == "dot") {
    emit(o, lattice_dot(g));
  } else {
    doc["lattice"] = lattice_json(g);
    if (!extra.is_null()) doc.update(extra);
    emit(o, doc.dump(2) + "\n");
  }
}

Quiver quiver_of(Options const& o) {
  return Quiver::parse(DynkinType::parse(o.type), o.orientation);
}

std::shared_ptr<NcLattice const> nc_of(Quiver const& q) {
  auto rs = build_root_system(q.type());
  auto c = coxeter_element(rs, q);
  return std::make_shared<NcLattice const>(std::move(rs), std::move(c));
}

int cmd_nc(Options const& o, std::vector<std::string> const& argv) {
  auto const q = quiver_of(o);
  auto const nc = nc_of(q);
  auto doc = document("nc", argv);
  Json extra{{"type", q.type().name()},
             {"coxeter", nc_id(nc->root_system(), nc->elements()[nc->top()])}};
  emit_lattice(o, doc, nc_graph(*nc), extra);
  return 0;
}

int cmd_thick(Options const& o, std::vector<std::string> const& argv) {
  auto const q = quiver_of(o);
  auto const field = Field::parse(o.field);
  if (!field.is_finite()) throw Error("thick needs a finite field, got '" + o.field + "'");
  ThickEnumerator const ctx(q, field);
  auto const wides = ctx.enumerate();
  Json extra{{"type", q.type().name()}, {"field", o.field}};
  int code = 0;
  if (o.verify) {
    auto const report = verify_bijection(ctx);
    extra["bijection"] = bijection_json(report, ctx.root_system());
    if (!report.ok()) code = kVerifyFailed;
    std::cerr << "thick " << report.thick_count << " = nc " << report.nc_count << ", bijection "
              << (report.ok() ? "OK" : "FAILED") << "\n";
  }
  emit_lattice(o, document("thick", argv), thick_graph(wides), extra);
  return code;
}

int cmd_specfn(Options const& o, std::vector<std::string> const& argv) {
  auto const q = quiver_of(o);
  auto const nc = nc_of(q);
  auto const poset = FinitePoset::from_spec(o.poset);
  auto const guard = size_guard();
  if (o.mode != "all" && o.mode != "monotone") throw Error("--mode must be all or monotone");
  auto const fl = o.mode == "all" ? all_functions(poset, nc, guard) : monotone_functions(poset, nc, guard);
  Json extra{{"type", q.type().name()}, {"poset", poset.names()}, {"mode", o.mode}};
  emit_lattice(o, document("specfn", argv), function_graph(fl), extra);
  return 0;
}

std::vector<std::string> split_top_level(std::string const& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// "A2:(1,1)"
TreeModule parse_module(std::string const& spec, std::string const& orientation) {
  auto const colon = spec.find(':');
  if (colon == std::string::npos) throw Error("--module expects TYPE:(d1,...,dn), got '" + spec + "'");
  auto const type = DynkinType::parse(spec.substr(0, colon));
  auto body = spec.substr(colon + 1);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
    throw Error("--module dimension vector must be parenthesised, got '" + body + "'");
  }
  DimVector dim;
  for (auto const& part : split_top_level(body.substr(1, body.size() - 2))) {
    try {
      std::size_t used = 0;
      dim.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (std::exception const&) {
      throw Error("--module entry '" + part + "' is not an integer");
    }
  }
  return tree_module(Quiver::parse(type, orientation), dim);
}

int cmd_koszul(Options const& o, std::vector<std::string> const& argv) {
  if (o.format == "dot") throw Error("koszul has no dot output");
  auto const ring = PolyRing::parse(o.vars);
  auto const point = parse_point(o.at);
  std::optional<TreeModule> module;
  if (!o.module.empty()) module = parse_module(o.module, o.orientation);
  auto const report = koszul_report(ring, split_top_level(o.gens), point, module ? &*module : nullptr);
  int const code = report.multiples_of_module ? 0 : kVerifyFailed;
  if (o.count || o.format == "count") {
    std::string line;
    for (std::size_t i = 0; i < report.homology.size(); ++i) {
      line += (i ? "," : "") + std::to_string(report.homology[i]);
    }
    emit(o, line + "\n");
    return code;
  }
  auto doc = document("koszul", argv);
  doc["ring"] = ring.variables();
  doc.update(koszul_json(report));
  emit(o, doc.dump(2) + "\n");
  return code;
}

void write_file(std::filesystem::path const& p, std::string const& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error("cannot write " + p.string());
  f << text;
  if (!f.flush()) throw Error("failed writing " + p.string());
}

int cmd_figures(Options const& o, std::vector<std::string> const& argv) {
  std::filesystem::path const dir = o.out.empty() ? "." : o.out;
  std::filesystem::create_directories(dir);
  auto const q = Quiver::standard(DynkinType::parse("A2"));
  auto const nc = nc_of(q);
  auto const fl = monotone_functions(FinitePoset::chain(2), nc);

  auto g1 = nc_graph(*nc);
  g1.name = "figure1";
  auto g2 = function_graph(fl);
  g2.name = "figure2";
  bool const iso1 = lattice_iso(nc->hasse(), nc_a2_drawing().to_hasse());
  bool const iso2 = lattice_iso(fl, monotone_chain2_a2_drawing().to_hasse());

  auto doc1 = document("figures", argv);
  doc1["lattice"] = lattice_json(g1);
  doc1["matches_drawing"] = iso1;
  auto doc2 = document("figures", argv);
  doc2["lattice"] = lattice_json(g2);
  doc2["matches_drawing"] = iso2;
  write_file(dir / "figure1.dot", lattice_dot(g1));
  write_file(dir / "figure1.json", doc1.dump(2) + "\n");
  write_file(dir / "figure2.dot", lattice_dot(g2));
  write_file(dir / "figure2.json", doc2.dump(2) + "\n");
  std::cout << "figure1: " << g1.ids.size() << " nodes, " << g1.covers.size() << " covers, "
            << (iso1 ? "matches" : "DOES NOT MATCH") << " the drawing\n";
  std::cout << "figure2: " << g2.ids.size() << " nodes, " << g2.covers.size() << " covers, "
            << (iso2 ? "matches" : "DOES NOT MATCH") << " the drawing\n";
  return iso1 && iso2 ? 0 : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattices of thick and localizing subcategories for Dynkin quivers"};
  app.require_subcommand(1);
  Options o;

  auto add_quiver = [&](CLI::App* c) {
    c->add_option("--type", o.type, "Dynkin type such as A3, D4, E6")->capture_default_str();
    c->add_option("--orientation", o.orientation, "arrows like 1>2,3>2 (default: standard)");
  };
  auto add_format = [&](CLI::App* c, std::vector<std::string> formats) {
    c->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(std::move(formats)))
        ->capture_default_str();
    c->add_flag("--count", o.count, "print only the count");
    c->add_option("--out", o.out, "write to this file instead of stdout");
  };

  auto* nc = app.add_subcommand("nc", "noncrossing partition lattice NC(Q)");
  add_quiver(nc);
  add_format(nc, {"json", "dot", "count"});

  auto* thick = app.add_subcommand("thick", "thick subcategories over a finite field");
  add_quiver(thick);
  add_format(thick, {"json", "dot", "count"});
  thick->add_option("--field", o.field, "prime p for GF(p)")->capture_default_str();
  thick->add_flag("--verify", o.verify, "check the bijection with NC(Q)");

  auto* specfn = app.add_subcommand("specfn", "functions from a poset into NC(Q)");
  add_quiver(specfn);
  add_format(specfn, {"json", "dot", "count"});
  specfn->add_option("--poset", o.poset, "point, chainN, antichainN, diamond or @file")
      ->capture_default_str();
  specfn->add_option("--mode", o.mode, "all or monotone")
      ->check(CLI::IsMember({"all", "monotone"}))
      ->capture_default_str();

  auto* figures = app.add_subcommand("figures", "write figure1/figure2 .dot and .json");
  figures->add_option("--out", o.out, "output directory (default: .)");

  auto* koszul = app.add_subcommand("koszul", "homology of a Koszul complex at a rational point");
  koszul->add_option("--vars", o.vars, "ring variables")->capture_default_str();
  koszul->add_option("--gens", o.gens, "generators, comma separated")->required();
  koszul->add_option("--at", o.at, "rational point, e.g. 0,1/2")->required();
  koszul->add_option("--module", o.module, "tree module, e.g. A2:(1,1)");
  koszul->add_option("--orientation", o.orientation, "orientation for --module");
  add_format(koszul, {"json", "count"});

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    if (*nc) return cmd_nc(o, args);
    if (*thick) return cmd_thick(o, args);
    if (*specfn) return cmd_specfn(o, args);
    if (*figures) return cmd_figures(o, args);
    if (*koszul) return cmd_koszul(o, args);
  } catch (SizeGuardError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
