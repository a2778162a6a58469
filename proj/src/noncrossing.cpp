#include "thicklat/noncrossing.hpp"

#include <algorithm>
#include <set>

#include "thicklat/error.hpp"
#include "thicklat/linalg.hpp"

namespace thicklat {

WeylElement coxeter_element(RootSystem const& rs, Quiver const& orientation) {
  if (!(orientation.type() == rs.type())) {
    throw Error("quiver of type " + orientation.type().name() +
                " does not match root system " + rs.type().name());
  }
  auto c = WeylElement::identity(rs.rank());
  for (int v : orientation.sink_first_order()) c = c * rs.simple_reflection(v);
  return c;
}

bool absolute_leq(RootSystem const& rs, WeylElement const& u, WeylElement const& w) {
  // l(u^-1 w) = rank(u^-1 w - 1) = rank(w - u).
  auto const distance = static_cast<int>(integer_rank(w.mat() - u.mat()));
  return reflection_length(rs, u) + distance == reflection_length(rs, w);
}

std::vector<NcElement> enumerate_nc(RootSystem const& rs, WeylElement const& c) {
  return enumerate_nc(rs, c, rs.reflections());
}

std::vector<NcElement> enumerate_nc(RootSystem const& rs, WeylElement const& c,
                                    std::span<WeylElement const> reflections) {
  auto const n = static_cast<int>(rs.rank());
  if (c.rank() != rs.rank() || reflection_length(rs, c) != n) {
    throw Error("enumerate_nc: element does not have full reflection length " +
                std::to_string(n));
  }
  std::set<WeylElement> found{WeylElement::identity(rs.rank())};
  std::set<WeylElement> frontier = found;
  for (int level = 0; level < n; ++level) {
    std::set<WeylElement> next;
    for (auto const& w : frontier) {
      for (auto const& t : reflections) {
        auto wt = w * t;
        if (next.count(wt)) continue;
        if (reflection_length(rs, wt) != level + 1) continue;
        if (!absolute_leq(rs, wt, c)) continue;
        next.insert(std::move(wt));
      }
    }
    found.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<NcElement> out;
  out.reserve(found.size());
  for (auto const& w : found) out.push_back({w, c});
  return out;
}

namespace {

void require_same_coxeter(NcElement const& u, NcElement const& w) {
  if (!(u.coxeter == w.coxeter)) {
    throw Error("noncrossing elements belong to different Coxeter elements");
  }
}

}  // namespace

bool nc_leq(RootSystem const& rs, NcElement const& u, NcElement const& w) {
  require_same_coxeter(u, w);
  return absolute_leq(rs, u.elem, w.elem);
}

NcElement nc_meet(RootSystem const& rs, NcElement const& u, NcElement const& w) {
  require_same_coxeter(u, w);
  NcLattice const lattice(rs, u.coxeter);
  auto const i = lattice.index_of(u.elem);
  auto const j = lattice.index_of(w.elem);
  if (!i || !j) throw Error("nc_meet: element not below the Coxeter element");
  return lattice.elements()[lattice.meet(*i, *j)];
}

NcElement nc_join(RootSystem const& rs, NcElement const& u, NcElement const& w) {
  require_same_coxeter(u, w);
  NcLattice const lattice(rs, u.coxeter);
  auto const i = lattice.index_of(u.elem);
  auto const j = lattice.index_of(w.elem);
  if (!i || !j) throw Error("nc_join: element not below the Coxeter element");
  return lattice.elements()[lattice.join(*i, *j)];
}

NcLattice::NcLattice(RootSystem rs, WeylElement coxeter)
    : rs_(std::move(rs)), coxeter_(std::move(coxeter)) {
  elements_ = enumerate_nc(rs_, coxeter_);
  lengths_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i].elem, i);
    lengths_.push_back(reflection_length(rs_, elements_[i].elem));
  }
  bottom_ = index_.at(WeylElement::identity(rs_.rank()));
  top_ = index_.at(coxeter_);
}

std::optional<std::size_t> NcLattice::index_of(WeylElement const& w) const {
  auto const it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool NcLattice::leq(std::size_t i, std::size_t j) const {
  if (i == j) return true;
  if (lengths_[i] >= lengths_[j]) return false;
  auto const distance =
      static_cast<int>(integer_rank(elements_[j].elem.mat() - elements_[i].elem.mat()));
  return lengths_[i] + distance == lengths_[j];
}

std::size_t NcLattice::meet(std::size_t i, std::size_t j) const {
  std::vector<std::size_t> lower;
  for (std::size_t z = 0; z < size(); ++z) {
    if (leq(z, i) && leq(z, j)) lower.push_back(z);
  }
  std::vector<std::size_t> maxima;
  for (auto z : lower) {
    if (std::all_of(lower.begin(), lower.end(), [&](auto y) { return leq(y, z); })) {
      maxima.push_back(z);
    }
  }
  THICKLAT_ASSERT(maxima.size() == 1, "meet must be unique in NC(W,c)");
  return maxima.front();
}

std::size_t NcLattice::join(std::size_t i, std::size_t j) const {
  std::vector<std::size_t> upper;
  for (std::size_t z = 0; z < size(); ++z) {
    if (leq(i, z) && leq(j, z)) upper.push_back(z);
  }
  std::vector<std::size_t> minima;
  for (auto z : upper) {
    if (std::all_of(upper.begin(), upper.end(), [&](auto y) { return leq(z, y); })) {
      minima.push_back(z);
    }
  }
  THICKLAT_ASSERT(minima.size() == 1, "join must be unique in NC(W,c)");
  return minima.front();
}

HasseDiagram NcLattice::hasse() const {
  HasseDiagram h{size(), {}};
  for (std::size_t i = 0; i < size(); ++i) {
    std::set<std::size_t> above;
    for (auto const& t : rs_.reflections()) {
      auto const up = index_of(elements_[i].elem * t);
      if (up && lengths_[*up] == lengths_[i] + 1) above.insert(*up);
    }
    for (auto j : above) h.covers.emplace_back(i, j);
  }
  return h;
}

std::vector<int> type_a_permutation(RootSystem const& rs, WeylElement const& w) {
  if (rs.type().family() != Family::A) {
    throw Error("set-partition rendering needs type A, got " + rs.type().name());
  }
  auto const n = rs.rank();
  std::vector<int> perm(n + 1, 0);
  // Root e_1 - e_k is alpha_1 + ... + alpha_{k-1}; its image is
  // e_{p(1)} - e_{p(k)} in the standard coordinates x_j = c_j - c_{j-1}.
  for (std::size_t k = 2; k <= n + 1; ++k) {
    IntVector root(n, 0);
    for (std::size_t i = 0; i + 1 < k; ++i) root[i] = 1;
    auto const image = w.apply(root);
    int plus = 0;
    int minus = 0;
    for (std::size_t j = 1; j <= n + 1; ++j) {
      std::int64_t const cur = j <= n ? image[j - 1] : 0;
      std::int64_t const prev = j >= 2 ? image[j - 2] : 0;
      auto const x = cur - prev;
      if (x == 1) {
        THICKLAT_ASSERT(plus == 0, "image of a type A root has one +1 coordinate");
        plus = static_cast<int>(j);
      } else if (x == -1) {
        THICKLAT_ASSERT(minus == 0, "image of a type A root has one -1 coordinate");
        minus = static_cast<int>(j);
      } else {
        THICKLAT_ASSERT(x == 0, "type A root coordinates are 0, 1 or -1");
      }
    }
    THICKLAT_ASSERT(plus && minus, "image must be a root");
    THICKLAT_ASSERT(perm[0] == 0 || perm[0] == plus, "permutation image of 1 is consistent");
    perm[0] = plus;
    perm[k - 1] = minus;
  }
  return perm;
}

SetPartition nc_to_set_partition(RootSystem const& rs, NcElement const& x) {
  auto const perm = type_a_permutation(rs, x.elem);
  std::vector<bool> seen(perm.size(), false);
  SetPartition blocks;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> block;
    for (auto v = start; !seen[v]; v = static_cast<std::size_t>(perm[v] - 1)) {
      seen[v] = true;
      block.push_back(static_cast<int>(v + 1));
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

bool is_noncrossing(SetPartition const& partition, std::vector<int> const& cyclic_order) {
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < cyclic_order.size(); ++i) pos[cyclic_order[i]] = i;
  std::map<int, std::size_t> block_of;
  for (std::size_t b = 0; b < partition.size(); ++b) {
    for (int v : partition[b]) block_of[v] = b;
  }
  std::vector<int> seq(cyclic_order.size());
  for (auto const& [v, p] : pos) seq[p] = v;
  auto const n = seq.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          auto const ba = block_of.at(seq[a]);
          auto const bb = block_of.at(seq[b]);
          if (ba != bb && ba == block_of.at(seq[c]) && bb == block_of.at(seq[d])) return false;
        }
      }
    }
  }
  return true;
}

std::string format_partition(SetPartition const& p) {
  std::string out;
  for (auto const& block : p) {
    if (!out.empty()) out += ',';
    out += '(';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i]);
    }
    out += ')';
  }
  return out;
}

std::vector<IntVector> reflection_factorization(RootSystem const& rs, WeylElement const& x) {
  std::vector<IntVector> factors;
  auto rest = x;
  auto const identity = WeylElement::identity(rs.rank());
  while (!(rest == identity)) {
    bool stepped = false;
    for (std::size_t k = 0; k < rs.reflections().size(); ++k) {
      auto const& t = rs.reflections()[k];
      if (absolute_leq(rs, t, rest)) {
        factors.push_back(rs.positive_roots()[k]);
        rest = t * rest;
        stepped = true;
        break;
      }
    }
    THICKLAT_ASSERT(stepped, "every non-identity element lies above some reflection");
  }
  return factors;
}

}  // namespace thicklat
