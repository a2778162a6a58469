#include "thicklat/spec_model.hpp"

#include <functional>

#include "thicklat/error.hpp"

namespace thicklat {

namespace {

std::vector<std::vector<bool>> nc_order(NcLattice const& nc) {
  std::vector<std::vector<bool>> leq(nc.size(), std::vector<bool>(nc.size(), false));
  for (std::size_t i = 0; i < nc.size(); ++i) {
    for (std::size_t j = 0; j < nc.size(); ++j) leq[i][j] = nc.leq(i, j);
  }
  return leq;
}

std::string guard_hint(std::size_t cap) {
  return " exceeds the size guard of " + std::to_string(cap) +
         " (raise it with THICKLAT_SIZE_GUARD)";
}

}  // namespace

bool is_specialization_closed(SpecFunction const& sigma) {
  for (auto [p, q] : sigma.poset->strict_pairs()) {
    if (!sigma.nc->leq(sigma.values[p], sigma.values[q])) return false;
  }
  return true;
}

FunctionLattice::FunctionLattice(std::shared_ptr<FinitePoset const> poset,
                                 std::shared_ptr<NcLattice const> nc,
                                 std::vector<std::vector<std::size_t>> values)
    : poset_(std::move(poset)), nc_(std::move(nc)), values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    THICKLAT_ASSERT(values_[i].size() == poset_->size(), "one value per point");
    THICKLAT_ASSERT(index_.emplace(values_[i], i).second, "function lattice members are distinct");
  }
  // Raising one value along an NC cover gives every cover, in both the full
  // product and the monotone sublattice: if f < g differ at more than one
  // point, raising f at a maximal point of disagreement stays monotone and
  // lies strictly between.
  std::vector<std::vector<std::size_t>> up(nc_->size());
  for (auto [lo, hi] : nc_->hasse().covers) up[lo].push_back(hi);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    auto next = values_[i];
    for (std::size_t p = 0; p < next.size(); ++p) {
      auto const old = next[p];
      for (auto u : up[old]) {
        next[p] = u;
        if (auto j = index_of(next)) covers_.emplace_back(i, *j);
      }
      next[p] = old;
    }
  }
  std::sort(covers_.begin(), covers_.end());
}

std::optional<std::size_t> FunctionLattice::index_of(std::vector<std::size_t> const& values) const {
  auto const it = index_.find(values);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FunctionLattice::leq(std::size_t i, std::size_t j) const {
  for (std::size_t p = 0; p < poset_->size(); ++p) {
    if (!nc_->leq(values_[i][p], values_[j][p])) return false;
  }
  return true;
}

std::size_t FunctionLattice::meet(std::size_t i, std::size_t j) const {
  std::vector<std::size_t> v(poset_->size());
  for (std::size_t p = 0; p < v.size(); ++p) v[p] = nc_->meet(values_[i][p], values_[j][p]);
  auto const k = index_of(v);
  THICKLAT_ASSERT(k.has_value(), "pointwise meet stays in the function lattice");
  return *k;
}

std::size_t FunctionLattice::join(std::size_t i, std::size_t j) const {
  std::vector<std::size_t> v(poset_->size());
  for (std::size_t p = 0; p < v.size(); ++p) v[p] = nc_->join(values_[i][p], values_[j][p]);
  auto const k = index_of(v);
  THICKLAT_ASSERT(k.has_value(), "pointwise join stays in the function lattice");
  return *k;
}

FunctionLattice all_functions(FinitePoset const& poset, std::shared_ptr<NcLattice const> nc,
                              std::size_t cap) {
  auto const m = nc->size();
  std::size_t count = 1;
  bool overflow = false;
  for (std::size_t p = 0; p < poset.size(); ++p) {
    if (count > cap) {
      overflow = true;
      break;
    }
    count *= m;
  }
  if (overflow || count > cap) {
    auto const what = overflow ? std::string("more than ") + std::to_string(count)
                               : std::to_string(count);
    throw SizeGuardError("all_functions: " + std::to_string(m) + "^" +
                             std::to_string(poset.size()) + " = " + what + " functions" +
                             guard_hint(cap),
                         count, cap);
  }
  std::vector<std::vector<std::size_t>> values;
  values.reserve(count);
  std::vector<std::size_t> v(poset.size(), 0);
  for (std::size_t k = 0; k < count; ++k) {
    values.push_back(v);
    for (std::size_t p = poset.size(); p-- > 0;) {
      if (++v[p] < m) break;
      v[p] = 0;
    }
  }
  return FunctionLattice(std::make_shared<FinitePoset const>(poset), std::move(nc),
                         std::move(values));
}

FunctionLattice monotone_functions(FinitePoset const& poset, std::shared_ptr<NcLattice const> nc,
                                   std::size_t cap) {
  auto const order = nc_order(*nc);
  auto const n = poset.size();
  std::vector<std::vector<std::size_t>> values;
  std::vector<std::size_t> v(n, 0);
  // Assign points in index order, checking relations with earlier points.
  std::function<void(std::size_t)> assign = [&](std::size_t p) {
    if (p == n) {
      if (values.size() == cap) {
        throw SizeGuardError("monotone_functions: more than " + std::to_string(cap) +
                                 " functions" + guard_hint(cap),
                             cap + 1, cap);
      }
      values.push_back(v);
      return;
    }
    for (std::size_t x = 0; x < nc->size(); ++x) {
      bool ok = true;
      for (std::size_t q = 0; q < p && ok; ++q) {
        if (poset.leq(q, p) && !order[v[q]][x]) ok = false;
        if (poset.leq(p, q) && !order[x][v[q]]) ok = false;
      }
      if (!ok) continue;
      v[p] = x;
      assign(p + 1);
    }
  };
  assign(0);
  return FunctionLattice(std::make_shared<FinitePoset const>(poset), std::move(nc),
                         std::move(values));
}

bool lattice_iso(FunctionLattice const& a, FunctionLattice const& b) {
  return lattice_iso(a.hasse(), b.hasse());
}

bool lattice_iso(FunctionLattice const& a, HasseDiagram const& b) {
  return lattice_iso(a.hasse(), b);
}

std::size_t smashing_count(FinitePoset const& poset, std::shared_ptr<NcLattice const> nc,
                           std::size_t cap) {
  return monotone_functions(poset, std::move(nc), cap).size();
}

DrawnDiagram nc_a2_drawing() {
  DrawnDiagram d;
  d.nodes = {
      {"a", "(1,2,3)", 2, 4},
      {"b", "(1,2)", 0, 2},
      {"c", "(2,3)", 2, 2},
      {"d", "(1,3)", 4, 2},
      {"e", "(1),(2),(3)", 2, 0},
  };
  d.segments = {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "e"}, {"c", "e"}, {"d", "e"}};
  return d;
}

// Labels give the generic point's partition, then the closed point's in
// brackets.
DrawnDiagram monotone_chain2_a2_drawing() {
  DrawnDiagram d;
  d.nodes = {
      {"a", "(1,2,3) [(1,2,3)]", 5, 13},
      {"m", "(1),(2),(3) [(1,2,3)]", 1.5, 3.5},
      {"b", "(1,2),(3) [(1,2,3)]", -1, 7},
      {"c", "(1,2),(3) [(1,2),(3)]", -2, 5},
      {"d", "(1),(2),(3) [(1,2),(3)]", -1, 2},
      {"e", "(1,3),(2) [(1,2,3)]", 5, 8},
      {"f", "(1,3),(2) [(1,3),(2)]", 5, 5.5},
      {"g", "(1),(2),(3) [(1,3),(2)]", 5, 3},
      {"h", "(2,3),(1) [(1,2,3)]", 9, 7},
      {"i", "(2,3),(1) [(2,3),(1)]", 10, 5},
      {"j", "(1),(2),(3) [(2,3),(1)]", 9, 2},
      {"k", "(1),(2),(3) [(1),(2),(3)]", 5, 0},
  };
  d.segments = {{"a", "b"}, {"a", "e"}, {"a", "h"}, {"b", "c"}, {"c", "d"}, {"d", "k"},
                {"e", "f"}, {"f", "g"}, {"g", "k"}, {"h", "i"}, {"i", "j"}, {"d", "m"},
                {"g", "m"}, {"m", "b"}, {"m", "e"}, {"j", "k"}, {"m", "h"}, {"m", "j"}};
  return d;
}

}  // namespace thicklat
