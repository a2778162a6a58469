#include "thicklat/hasse.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "thicklat/error.hpp"

namespace thicklat {

HasseDiagram transitive_reduction(std::size_t n,
                                  std::function<bool(std::size_t, std::size_t)> const& leq) {
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) less[i][j] = i != j && leq(i, j);
  }
  HasseDiagram h{n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!less[i][j]) continue;
      bool between = false;
      for (std::size_t k = 0; k < n && !between; ++k) between = less[i][k] && less[k][j];
      if (!between) h.covers.emplace_back(i, j);
    }
  }
  return h;
}

namespace {

struct Adjacency {
  std::vector<std::vector<std::size_t>> up;
  std::vector<std::vector<std::size_t>> down;
  std::set<std::pair<std::size_t, std::size_t>> edges;

  explicit Adjacency(HasseDiagram const& h) : up(h.size), down(h.size) {
    for (auto [lo, hi] : h.covers) {
      if (lo >= h.size || hi >= h.size) throw Error("cover index out of range");
      up[lo].push_back(hi);
      down[hi].push_back(lo);
      edges.emplace(lo, hi);
    }
  }
};

// Longest chain length from a minimal element; -1 marks a cycle.
std::vector<int> heights(Adjacency const& adj) {
  auto const n = adj.up.size();
  std::vector<int> indeg(n);
  for (std::size_t v = 0; v < n; ++v) indeg[v] = static_cast<int>(adj.down[v].size());
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::vector<int> h(n, 0);
  std::size_t visited = 0;
  while (!ready.empty()) {
    auto const v = ready.back();
    ready.pop_back();
    ++visited;
    for (auto w : adj.up[v]) {
      h[w] = std::max(h[w], h[v] + 1);
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  if (visited != n) throw Error("cover relation contains a cycle");
  return h;
}

// Joint color refinement of both diagrams so colors are comparable.
std::pair<std::vector<int>, std::vector<int>> refine(Adjacency const& a, Adjacency const& b) {
  auto const ha = heights(a);
  auto const hb = heights(b);
  using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
  std::vector<int> ca(a.up.size());
  std::vector<int> cb(b.up.size());
  for (std::size_t v = 0; v < ca.size(); ++v) ca[v] = ha[v];
  for (std::size_t v = 0; v < cb.size(); ++v) cb[v] = hb[v];
  std::size_t classes = 0;
  for (;;) {
    std::map<Sig, int> palette;
    auto signature = [](Adjacency const& adj, std::vector<int> const& c, std::size_t v) {
      std::vector<int> up;
      std::vector<int> down;
      for (auto w : adj.up[v]) up.push_back(c[w]);
      for (auto w : adj.down[v]) down.push_back(c[w]);
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      return Sig{c[v], std::move(up), std::move(down)};
    };
    std::vector<Sig> sa;
    std::vector<Sig> sb;
    for (std::size_t v = 0; v < ca.size(); ++v) sa.push_back(signature(a, ca, v));
    for (std::size_t v = 0; v < cb.size(); ++v) sb.push_back(signature(b, cb, v));
    for (auto const& s : sa) palette.emplace(s, 0);
    for (auto const& s : sb) palette.emplace(s, 0);
    int next = 0;
    for (auto& [sig, color] : palette) color = next++;
    for (std::size_t v = 0; v < ca.size(); ++v) ca[v] = palette[sa[v]];
    for (std::size_t v = 0; v < cb.size(); ++v) cb[v] = palette[sb[v]];
    if (palette.size() == classes) break;
    classes = palette.size();
  }
  return {ca, cb};
}

class IsoSearch {
 public:
  IsoSearch(Adjacency const& a, Adjacency const& b, std::vector<int> ca, std::vector<int> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)) {
    auto const n = ca_.size();
    map_.assign(n, kUnmapped);
    used_.assign(n, false);
    // Visit rarest colors first, then neighbours of already placed nodes.
    std::map<int, std::size_t> freq;
    for (auto c : ca_) ++freq[c];
    std::vector<std::size_t> seeds(n);
    for (std::size_t v = 0; v < n; ++v) seeds[v] = v;
    std::stable_sort(seeds.begin(), seeds.end(), [&](auto x, auto y) {
      return freq[ca_[x]] < freq[ca_[y]];
    });
    std::vector<bool> queued(n, false);
    for (auto s : seeds) {
      if (queued[s]) continue;
      std::vector<std::size_t> stack{s};
      queued[s] = true;
      while (!stack.empty()) {
        auto const v = stack.front();
        stack.erase(stack.begin());
        order_.push_back(v);
        for (auto const* nbrs : {&a_.up[v], &a_.down[v]}) {
          for (auto w : *nbrs) {
            if (!queued[w]) {
              queued[w] = true;
              stack.push_back(w);
            }
          }
        }
      }
    }
  }

  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    auto const v = order_[depth];
    for (std::size_t w = 0; w < cb_.size(); ++w) {
      if (used_[w] || cb_[w] != ca_[v] || !consistent(v, w)) continue;
      map_[v] = w;
      used_[w] = true;
      if (run(depth + 1)) return true;
      map_[v] = kUnmapped;
      used_[w] = false;
    }
    return false;
  }

  std::vector<std::size_t> const& mapping() const { return map_; }

 private:
  static constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);

  bool consistent(std::size_t v, std::size_t w) const {
    for (std::size_t u = 0; u < map_.size(); ++u) {
      if (map_[u] == kUnmapped) continue;
      if (a_.edges.count({u, v}) != b_.edges.count({map_[u], w})) return false;
      if (a_.edges.count({v, u}) != b_.edges.count({w, map_[u]})) return false;
    }
    return true;
  }

  Adjacency const& a_;
  Adjacency const& b_;
  std::vector<int> ca_;
  std::vector<int> cb_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

}  // namespace

std::vector<std::vector<bool>> order_closure(HasseDiagram const& h) {
  Adjacency const adj(h);
  std::vector<std::vector<bool>> leq(h.size, std::vector<bool>(h.size, false));
  for (std::size_t v = 0; v < h.size; ++v) {
    std::vector<std::size_t> stack{v};
    leq[v][v] = true;
    while (!stack.empty()) {
      auto const x = stack.back();
      stack.pop_back();
      for (auto y : adj.up[x]) {
        if (!leq[v][y]) {
          leq[v][y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return leq;
}

std::optional<std::vector<std::size_t>> find_order_isomorphism(HasseDiagram const& a,
                                                               HasseDiagram const& b) {
  if (a.size != b.size || a.covers.size() != b.covers.size()) return std::nullopt;
  Adjacency const adj_a(a);
  Adjacency const adj_b(b);
  if (adj_a.edges.size() != adj_b.edges.size()) return std::nullopt;
  auto [ca, cb] = refine(adj_a, adj_b);
  auto sa = ca;
  auto sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  IsoSearch search(adj_a, adj_b, std::move(ca), std::move(cb));
  if (!search.run()) return std::nullopt;
  return search.mapping();
}

bool is_lattice(HasseDiagram const& h) {
  auto const leq = order_closure(h);
  auto const n = h.size;
  auto unique_extremum = [&](std::size_t x, std::size_t y, bool lower) {
    std::vector<std::size_t> bounds;
    for (std::size_t z = 0; z < n; ++z) {
      if (lower ? (leq[z][x] && leq[z][y]) : (leq[x][z] && leq[y][z])) bounds.push_back(z);
    }
    std::size_t count = 0;
    for (auto z : bounds) {
      bool const extreme = std::all_of(bounds.begin(), bounds.end(), [&](std::size_t t) {
        return lower ? leq[t][z] : leq[z][t];
      });
      if (extreme) ++count;
    }
    return count == 1;
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!unique_extremum(x, y, true) || !unique_extremum(x, y, false)) return false;
    }
  }
  return true;
}

HasseDiagram DrawnDiagram::to_hasse() const {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i].name] = i;
  HasseDiagram h{nodes.size(), {}};
  for (auto const& [p, q] : segments) {
    if (!index.count(p) || !index.count(q)) throw Error("segment " + p + "-" + q + " names an unknown node");
    auto const ip = index.at(p);
    auto const iq = index.at(q);
    if (nodes[ip].y == nodes[iq].y) throw Error("segment joins nodes at the same height");
    if (nodes[ip].y < nodes[iq].y) {
      h.covers.emplace_back(ip, iq);
    } else {
      h.covers.emplace_back(iq, ip);
    }
  }
  return h;
}

}  // namespace thicklat
