#include "thicklat/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "thicklat/error.hpp"

namespace thicklat {

Quiver::Quiver(DynkinType type, std::vector<Arrow> arrows) : type_(type) {
  auto const edges = type_.edges();
  if (arrows.size() != edges.size()) {
    throw Error("orientation of " + type_.name() + " needs exactly " +
                std::to_string(edges.size()) + " arrows");
  }
  std::vector<bool> used(arrows.size(), false);
  for (auto [i, j] : edges) {
    bool found = false;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      auto const& a = arrows[k];
      if (used[k]) continue;
      if ((a.source == i && a.target == j) || (a.source == j && a.target == i)) {
        arrows_.push_back(a);
        used[k] = true;
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error("orientation does not match the " + type_.name() +
                  " diagram: missing edge " + std::to_string(i + 1) + "-" +
                  std::to_string(j + 1));
    }
  }
}

Quiver Quiver::standard(DynkinType type) {
  std::vector<Arrow> arrows;
  for (auto [i, j] : type.edges()) arrows.push_back({i, j});
  return Quiver(type, std::move(arrows));
}

Quiver Quiver::parse(DynkinType type, std::string const& orientation) {
  if (orientation.empty()) return standard(type);
  std::vector<Arrow> arrows;
  std::stringstream ss(orientation);
  std::string item;
  int const n = type.rank();
  while (std::getline(ss, item, ',')) {
    auto const gt = item.find('>');
    auto const lt = item.find('<');
    if (gt == std::string::npos && lt == std::string::npos) {
      throw Error("cannot parse arrow '" + item + "' (expected a>b)");
    }
    auto const pos = gt != std::string::npos ? gt : lt;
    int a = 0;
    int b = 0;
    try {
      a = std::stoi(item.substr(0, pos));
      b = std::stoi(item.substr(pos + 1));
    } catch (std::exception const&) {
      throw Error("cannot parse arrow '" + item + "'");
    }
    if (a < 1 || a > n || b < 1 || b > n) {
      throw Error("arrow '" + item + "' names a vertex outside 1.." + std::to_string(n));
    }
    if (gt != std::string::npos) {
      arrows.push_back({a - 1, b - 1});
    } else {
      arrows.push_back({b - 1, a - 1});
    }
  }
  return Quiver(type, std::move(arrows));
}

bool Quiver::is_sink(int v) const {
  return std::none_of(arrows_.begin(), arrows_.end(),
                      [v](Arrow const& a) { return a.source == v; });
}

bool Quiver::is_source(int v) const {
  return std::none_of(arrows_.begin(), arrows_.end(),
                      [v](Arrow const& a) { return a.target == v; });
}

Quiver Quiver::reflected_at(int v) const {
  Quiver out = *this;
  for (auto& a : out.arrows_) {
    if (a.source == v || a.target == v) std::swap(a.source, a.target);
  }
  return out;
}

std::vector<int> Quiver::sink_first_order() const {
  int const n = type_.rank();
  std::vector<int> out_degree(n, 0);
  for (auto const& a : arrows_) ++out_degree[a.source];
  std::set<int> ready;
  for (int v = 0; v < n; ++v) {
    if (out_degree[v] == 0) ready.insert(v);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    int const v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (auto const& a : arrows_) {
      if (a.target == v && --out_degree[a.source] == 0) ready.insert(a.source);
    }
  }
  // Dynkin diagrams are trees, so every orientation is acyclic.
  THICKLAT_ASSERT(order.size() == static_cast<std::size_t>(n), "quiver must be acyclic");
  return order;
}

std::string Quiver::orientation_string() const {
  std::string out;
  for (auto const& a : arrows_) {
    if (!out.empty()) out += ',';
    out += std::to_string(a.source + 1) + ">" + std::to_string(a.target + 1);
  }
  return out;
}

int euler_form(Quiver const& q, DimVector const& d, DimVector const& e) {
  if (d.size() != q.vertex_count() || e.size() != q.vertex_count()) {
    throw Error("euler_form: dimension vector length does not match the quiver");
  }
  int total = 0;
  for (std::size_t i = 0; i < d.size(); ++i) total += d[i] * e[i];
  for (auto const& a : q.arrows()) total -= d[a.source] * e[a.target];
  return total;
}

std::vector<DimVector> indecomposable_dims(Quiver const& q) {
  RootSystem const rs(q.type());
  std::vector<DimVector> out;
  out.reserve(rs.positive_roots().size());
  for (auto const& beta : rs.positive_roots()) out.push_back(to_dim_vector(beta));
  return out;
}

DimVector to_dim_vector(IntVector const& v) { return DimVector(v.begin(), v.end()); }

IntVector to_int_vector(DimVector const& d) { return IntVector(d.begin(), d.end()); }

std::string format_dim(DimVector const& d) { return format_vector(to_int_vector(d)); }

}  // namespace thicklat
