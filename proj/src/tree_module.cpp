#include "thicklat/tree_module.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <random>

#include "thicklat/error.hpp"

namespace thicklat {

namespace {

using QRep = Representation<RationalField>;
using QMat = Matrix<Rational>;

QRep simple_rep(Quiver const& q, int vertex) {
  DimVector dim(q.vertex_count(), 0);
  dim[vertex] = 1;
  return QRep::semisimple(q, RationalField{}, dim);
}

// Reflection functor at a source k of n.quiver: replaces N_k by the
// cokernel of N_k -> (+)_{k->j} N_j and reverses the arrows at k.
QRep reflect_at_source(QRep const& n, int k) {
  RationalField const field;
  auto const& q = n.quiver;
  THICKLAT_ASSERT(q.is_source(k), "reflection functor needs a source");
  std::vector<std::size_t> incident;
  std::size_t stacked = 0;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    if (q.arrows()[a].source == k) {
      incident.push_back(a);
      stacked += static_cast<std::size_t>(n.dim[q.arrows()[a].target]);
    }
  }
  auto const nk = static_cast<std::size_t>(n.dim[k]);
  QMat phi(stacked, nk, field.zero());
  std::size_t row = 0;
  for (auto a : incident) {
    auto const& m = n.maps[a];
    for (std::size_t r = 0; r < m.rows(); ++r, ++row) {
      for (std::size_t c = 0; c < nk; ++c) phi(row, c) = m(r, c);
    }
  }
  auto proj = linalg::left_kernel(field, phi);
  // Rescaling a row of proj rescales one basis vector of the cokernel; clear
  // denominators so the representation stays integral.
  for (std::size_t r = 0; r < proj.rows(); ++r) {
    BigInt lcm = 1;
    for (std::size_t c = 0; c < proj.cols(); ++c) {
      lcm = boost::multiprecision::lcm(lcm, denominator(proj(r, c)));
    }
    for (std::size_t c = 0; c < proj.cols(); ++c) proj(r, c) *= Rational(lcm);
  }

  auto dim = n.dim;
  dim[k] = static_cast<int>(proj.rows());
  auto maps = n.maps;
  std::size_t col = 0;
  for (auto a : incident) {
    auto const width = static_cast<std::size_t>(n.dim[q.arrows()[a].target]);
    maps[a] = proj.columns(col, col + width);
    col += width;
  }
  return QRep(q.reflected_at(k), field, std::move(dim), std::move(maps));
}

// Rescale basis vectors so every edge of a spanning forest of the
// coefficient graph carries the entry 1.
QRep normalize(QRep const& m) {
  auto const& q = m.quiver;
  std::vector<std::size_t> offset(q.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    offset[v + 1] = offset[v] + static_cast<std::size_t>(m.dim[v]);
  }
  auto const nodes = offset.back();
  struct Edge {
    std::size_t arrow, row, col;
  };
  std::vector<std::vector<Edge>> adj(nodes);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    auto const s = static_cast<std::size_t>(q.arrows()[a].source);
    auto const t = static_cast<std::size_t>(q.arrows()[a].target);
    for (std::size_t r = 0; r < m.maps[a].rows(); ++r) {
      for (std::size_t c = 0; c < m.maps[a].cols(); ++c) {
        if (m.maps[a](r, c) == 0) continue;
        adj[offset[t] + r].push_back({a, r, c});
        adj[offset[s] + c].push_back({a, r, c});
      }
    }
  }
  // New basis vector b'_i = scale_i b_i; entry (r, c) becomes
  // A(r, c) scale_source(c) / scale_target(r).
  std::vector<Rational> scale(nodes, Rational(0));
  for (std::size_t root = 0; root < nodes; ++root) {
    if (scale[root] != 0) continue;
    scale[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      auto const x = queue.front();
      queue.pop_front();
      for (auto const& e : adj[x]) {
        auto const s = static_cast<std::size_t>(q.arrows()[e.arrow].source);
        auto const t = static_cast<std::size_t>(q.arrows()[e.arrow].target);
        auto const src = offset[s] + e.col;
        auto const tgt = offset[t] + e.row;
        auto const& entry = m.maps[e.arrow](e.row, e.col);
        if (scale[tgt] == 0) {
          scale[tgt] = entry * scale[src];
          queue.push_back(tgt);
        } else if (scale[src] == 0) {
          scale[src] = scale[tgt] / entry;
          queue.push_back(src);
        }
      }
    }
  }
  auto maps = m.maps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    auto const s = static_cast<std::size_t>(q.arrows()[a].source);
    auto const t = static_cast<std::size_t>(q.arrows()[a].target);
    for (std::size_t r = 0; r < maps[a].rows(); ++r) {
      for (std::size_t c = 0; c < maps[a].cols(); ++c) {
        maps[a](r, c) = maps[a](r, c) * scale[offset[s] + c] / scale[offset[t] + r];
      }
    }
  }
  return QRep(q, m.field, m.dim, std::move(maps));
}

bool all_integral(QRep const& m) {
  for (auto const& a : m.maps) {
    for (auto const& x : a.data()) {
      if (denominator(x) != 1) return false;
    }
  }
  return true;
}

std::size_t support_size(QRep const& m) {
  std::size_t count = 0;
  for (auto const& a : m.maps) {
    for (auto const& x : a.data()) count += x != 0;
  }
  return count;
}

Rational weight(QRep const& m) {
  Rational total = 0;
  for (auto const& a : m.maps) {
    for (auto const& x : a.data()) total += abs(x);
  }
  return total;
}

// Replace basis vector i at vertex v by b_i + lambda b_j. Coordinates change
// by the inverse: rows of incoming maps, columns of outgoing maps.
QRep shear(QRep const& m, int v, std::size_t i, std::size_t j, Rational const& lambda) {
  auto maps = m.maps;
  for (std::size_t a = 0; a < m.quiver.arrows().size(); ++a) {
    auto const& arrow = m.quiver.arrows()[a];
    auto& mat = maps[a];
    if (arrow.target == v) {
      for (std::size_t c = 0; c < mat.cols(); ++c) mat(j, c) -= lambda * mat(i, c);
    }
    if (arrow.source == v) {
      for (std::size_t r = 0; r < mat.rows(); ++r) mat(r, i) += lambda * mat(r, j);
    }
  }
  return QRep(m.quiver, m.field, m.dim, std::move(maps));
}

// Greedy descent on the number of nonzero entries (then their absolute
// sum) by unimodular shears. An indecomposable needs a connected
// coefficient graph, so total_dim - 1 nonzero entries is optimal and makes
// that graph a spanning tree.
QRep reduce_support(QRep m) {
  auto const target = static_cast<std::size_t>(m.total_dim() - 1);
  for (;;) {
    auto best = std::make_pair(support_size(m), weight(m));
    if (best.first <= target) return m;
    std::optional<QRep> next;
    for (std::size_t v = 0; v < m.quiver.vertex_count(); ++v) {
      auto const d = static_cast<std::size_t>(m.dim[v]);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          if (i == j) continue;
          for (int sign : {1, -1}) {
            auto cand = shear(m, static_cast<int>(v), i, j, Rational(sign));
            auto score = std::make_pair(support_size(cand), weight(cand));
            if (score < best) {
              best = score;
              next = std::move(cand);
            }
          }
        }
      }
    }
    if (!next) return m;
    m = std::move(*next);
  }
}

bool all_zero_one(QRep const& m) {
  for (auto const& a : m.maps) {
    for (auto const& x : a.data()) {
      if (x != 0 && x != 1) return false;
    }
  }
  return true;
}

}  // namespace

bool TreeModule::zero_one() const {
  for (auto const& a : maps) {
    for (auto x : a.data()) {
      if (x != 0 && x != 1) return false;
    }
  }
  return true;
}

TreeModule tree_module(Quiver const& q, DimVector const& alpha) {
  RootSystem const rs(q.type());
  auto const root = to_int_vector(alpha);
  if (alpha.size() != rs.rank() || !rs.positive_root_index(root)) {
    throw Error("not a positive root of " + q.type().name() + ": " + format_dim(alpha));
  }

  // Walk the admissible sink sequence, applying s_k to the root, until the
  // root becomes the simple root at the current sink.
  auto const order = q.sink_first_order();
  std::vector<int> steps;
  auto current = q;
  auto beta = root;
  auto const max_steps = 4 * rs.positive_roots().size() * rs.rank() + 4;
  int simple_vertex = -1;
  for (std::size_t t = 0; t < max_steps; ++t) {
    int const k = order[t % order.size()];
    THICKLAT_ASSERT(current.is_sink(k), "admissible order visits sinks");
    bool const is_simple_k =
        beta[static_cast<std::size_t>(k)] == 1 &&
        std::count(beta.begin(), beta.end(), std::int64_t{0}) ==
            static_cast<std::ptrdiff_t>(beta.size() - 1);
    if (is_simple_k) {
      simple_vertex = k;
      break;
    }
    beta = rs.simple_reflection(static_cast<std::size_t>(k)).apply(beta);
    THICKLAT_ASSERT(rs.positive_root_index(beta).has_value(),
                    "sink reflection keeps a non-simple positive root positive");
    steps.push_back(k);
    current = current.reflected_at(k);
  }
  THICKLAT_ASSERT(simple_vertex >= 0, "root reaches a simple root along the sink sequence");

  auto rep = simple_rep(current, simple_vertex);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    rep = reflect_at_source(rep, *it);
    auto scaled = normalize(rep);
    if (all_integral(scaled)) rep = std::move(scaled);
  }
  THICKLAT_ASSERT(rep.quiver == q, "reflection functors return to the original quiver");
  THICKLAT_ASSERT(rep.dim == alpha, "reflection functors realise the requested root");
  if (!all_zero_one(rep)) {
    // Greedy descent can stall; retry from a few fixed random shears.
    std::mt19937 rng(0x5eed);
    auto start = rep;
    for (int attempt = 0; attempt < 64; ++attempt) {
      auto scaled = normalize(reduce_support(start));
      if (all_zero_one(scaled)) {
        rep = std::move(scaled);
        break;
      }
      start = rep;
      for (int kick = 0; kick < 3; ++kick) {
        auto const v = static_cast<int>(rng() % q.vertex_count());
        auto const d = static_cast<std::size_t>(rep.dim[static_cast<std::size_t>(v)]);
        if (d < 2) continue;
        auto const i = rng() % d;
        auto const j = (i + 1 + rng() % (d - 1)) % d;
        start = shear(start, v, i, j, Rational(rng() % 2 ? 1 : -1));
      }
    }
  }

  TreeModule out{q, alpha, {}};
  for (auto const& a : rep.maps) {
    IntMatrix m(a.rows(), a.cols(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        auto const& x = a(r, c);
        THICKLAT_ASSERT(denominator(x) == 1, "tree module entries must be integral");
        m(r, c) = numerator(x).convert_to<std::int64_t>();
      }
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

FieldRep base_change(TreeModule const& m, Field const& field) {
  if (field.is_finite()) return base_change(m, PrimeField(field.characteristic()));
  return base_change(m, RationalField{});
}

int hom_dim(FieldRep const& m, FieldRep const& n) {
  return std::visit(
      [](auto const& a, auto const& b) -> int {
        if constexpr (std::is_same_v<decltype(a), decltype(b)>) {
          return hom_dim(a, b);
        } else {
          throw Error("hom_dim: representations over different fields");
        }
      },
      m, n);
}

int ext_dim(FieldRep const& m, FieldRep const& n) {
  return std::visit(
      [](auto const& a, auto const& b) -> int {
        if constexpr (std::is_same_v<decltype(a), decltype(b)>) {
          return ext_dim(a, b);
        } else {
          throw Error("ext_dim: representations over different fields");
        }
      },
      m, n);
}

DimVector const& dimension(FieldRep const& m) {
  return std::visit([](auto const& a) -> DimVector const& { return a.dim; }, m);
}

Field field_of(FieldRep const& m) {
  return std::visit(
      [](auto const& a) -> Field {
        auto const p = a.field.characteristic();
        return p == 0 ? Field::rationals() : Field::prime(p);
      },
      m);
}

}  // namespace thicklat
