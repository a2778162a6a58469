#include "thicklat/koszul.hpp"

#include "thicklat/error.hpp"
#include "thicklat/linalg.hpp"

namespace thicklat {

namespace {

PolyMatrix poly_identity(std::size_t n, std::size_t nvars) {
  return PolyMatrix::identity(n, Polynomial(), Polynomial(nvars, Rational(1)));
}

bool composes_to_zero(PolyMatrix const& outer, PolyMatrix const& inner) {
  return outer.multiply(inner, Polynomial()).is_zero(Polynomial());
}

void place(PolyMatrix& dst, PolyMatrix const& src, std::size_t row, std::size_t col) {
  for (std::size_t r = 0; r < src.rows(); ++r) {
    for (std::size_t c = 0; c < src.cols(); ++c) dst(row + r, col + c) = src(r, c);
  }
}

}  // namespace

FreeComplex::FreeComplex(PolyRing ring, int low, std::vector<std::size_t> ranks,
                         std::vector<PolyMatrix> diffs)
    : ring_(std::move(ring)), low_(low), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
  if (ranks_.empty()) throw Error("a complex needs at least one degree");
  if (diffs_.size() + 1 != ranks_.size()) throw Error("one differential between adjacent degrees");
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    if (diffs_[i].rows() != ranks_[i] || diffs_[i].cols() != ranks_[i + 1]) {
      throw Error("differential d_" + std::to_string(low_ + static_cast<int>(i) + 1) +
                  " has the wrong shape");
    }
  }
}

std::size_t FreeComplex::rank(int n) const {
  if (n < low_ || n > high()) return 0;
  return ranks_[static_cast<std::size_t>(n - low_)];
}

PolyMatrix const& FreeComplex::differential(int n) const {
  if (n <= low_ || n > high()) throw Error("no differential d_" + std::to_string(n));
  return diffs_[static_cast<std::size_t>(n - low_ - 1)];
}

bool FreeComplex::is_complex() const {
  for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
    if (!composes_to_zero(diffs_[i], diffs_[i + 1])) return false;
  }
  return true;
}

FreeComplex unit_complex(PolyRing const& ring) { return FreeComplex(ring, 0, {1}, {}); }

FreeComplex cone_of_scalar(PolyRing const& ring, Polynomial const& f) {
  for (auto const& [e, c] : f.terms()) {
    if (e.size() != ring.size()) throw Error("polynomial does not belong to the ring");
  }
  PolyMatrix d(1, 1, f);
  return FreeComplex(ring, 0, {1, 1}, {d});
}

FreeComplex tensor(FreeComplex const& c, FreeComplex const& d) {
  if (!(c.ring() == d.ring())) throw Error("tensor of complexes over different rings");
  auto const nvars = c.ring().size();
  int const low = c.low() + d.low();
  int const high = c.high() + d.high();

  // offset[n][p]: position of the C_p (x) D_{n-p} block inside degree n.
  auto block_offset = [&](int n, int p) {
    std::size_t off = 0;
    for (int a = c.low(); a < p; ++a) off += c.rank(a) * d.rank(n - a);
    return off;
  };
  std::vector<std::size_t> ranks;
  for (int n = low; n <= high; ++n) ranks.push_back(block_offset(n, c.high() + 1));

  std::vector<PolyMatrix> diffs;
  for (int n = low + 1; n <= high; ++n) {
    PolyMatrix dn(ranks[static_cast<std::size_t>(n - 1 - low)],
                  ranks[static_cast<std::size_t>(n - low)], Polynomial());
    for (int p = c.low(); p <= c.high(); ++p) {
      int const q = n - p;
      if (q < d.low() || q > d.high()) continue;
      auto const col = block_offset(n, p);
      if (p - 1 >= c.low()) {
        auto const blk = kronecker(c.differential(p), poly_identity(d.rank(q), nvars), Polynomial());
        place(dn, blk, block_offset(n - 1, p - 1), col);
      }
      if (q - 1 >= d.low()) {
        auto blk = kronecker(poly_identity(c.rank(p), nvars), d.differential(q), Polynomial());
        if (p % 2 != 0) {
          for (std::size_t r = 0; r < blk.rows(); ++r) {
            for (std::size_t k = 0; k < blk.cols(); ++k) blk(r, k) = -blk(r, k);
          }
        }
        place(dn, blk, block_offset(n - 1, p), col);
      }
    }
    diffs.push_back(std::move(dn));
  }
  FreeComplex out(c.ring(), low, std::move(ranks), std::move(diffs));
  THICKLAT_ASSERT(out.is_complex(), "tensor product differential squares to zero");
  return out;
}

FreeComplex koszul_complex(PolyRing const& ring, std::vector<Polynomial> const& generators) {
  if (generators.empty()) throw Error("a Koszul complex needs at least one generator");
  auto k = cone_of_scalar(ring, generators.front());
  for (std::size_t i = 1; i < generators.size(); ++i) {
    k = tensor(k, cone_of_scalar(ring, generators[i]));
  }
  return k;
}

EvaluatedComplex evaluate(FreeComplex const& c, std::vector<Rational> const& point) {
  if (point.size() != c.ring().size()) {
    throw Error("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                std::to_string(c.ring().size()) + " variables");
  }
  EvaluatedComplex out{c.low(), c.ranks(), {}};
  for (int n = c.low() + 1; n <= c.high(); ++n) {
    auto const& d = c.differential(n);
    QMatrix m(d.rows(), d.cols(), Rational(0));
    for (std::size_t r = 0; r < d.rows(); ++r) {
      for (std::size_t k = 0; k < d.cols(); ++k) m(r, k) = d(r, k).evaluate(point);
    }
    out.diffs.push_back(std::move(m));
  }
  return out;
}

std::vector<int> homology_dims(EvaluatedComplex const& c) {
  RationalField const field;
  auto const n = c.ranks.size();
  if (c.diffs.size() + 1 != n) throw Error("one differential between adjacent degrees");
  std::vector<std::size_t> rk;
  for (std::size_t i = 0; i < c.diffs.size(); ++i) {
    if (c.diffs[i].rows() != c.ranks[i] || c.diffs[i].cols() != c.ranks[i + 1]) {
      throw Error("differential has the wrong shape");
    }
    if (i + 1 < c.diffs.size() && !linalg::multiply(field, c.diffs[i], c.diffs[i + 1]).is_zero(Rational(0))) {
      throw Error("not a complex: d^2 != 0 at degree " + std::to_string(c.low + static_cast<int>(i) + 2));
    }
    rk.push_back(linalg::rank(field, c.diffs[i]));
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i) {
    // Outgoing d_{low+i} is diffs[i-1]; incoming d_{low+i+1} is diffs[i].
    std::size_t const out_rank = i == 0 ? 0 : rk[i - 1];
    std::size_t const in_rank = i < rk.size() ? rk[i] : 0;
    out.push_back(static_cast<int>(c.ranks[i] - out_rank - in_rank));
  }
  return out;
}

std::vector<DimVector> koszul_tensor_module(FreeComplex const& k, TreeModule const& m,
                                            std::vector<Rational> const& point) {
  RationalField const field;
  auto const base = evaluate(k, point);
  auto const nv = m.dim.size();
  std::vector<EvaluatedComplex> at_vertex;
  for (std::size_t v = 0; v < nv; ++v) {
    auto const dv = static_cast<std::size_t>(m.dim[v]);
    auto const id = QMatrix::identity(dv, Rational(0), Rational(1));
    EvaluatedComplex e{base.low, {}, {}};
    for (auto r : base.ranks) e.ranks.push_back(r * dv);
    for (auto const& d : base.diffs) e.diffs.push_back(kronecker(d, id, Rational(0)));
    at_vertex.push_back(std::move(e));
  }
  // identity (x) M_a commutes with d (x) identity.
  for (std::size_t a = 0; a < m.quiver.arrows().size(); ++a) {
    auto const& arrow = m.quiver.arrows()[a];
    auto const ma = linalg::convert(field, m.maps[a]);
    for (std::size_t i = 0; i < base.diffs.size(); ++i) {
      auto const f_upper = kronecker(QMatrix::identity(base.ranks[i + 1], Rational(0), Rational(1)),
                                   ma, Rational(0));
      auto const f_lower =
          kronecker(QMatrix::identity(base.ranks[i], Rational(0), Rational(1)), ma, Rational(0));
      auto const lhs = linalg::multiply(field, f_lower, at_vertex[arrow.source].diffs[i]);
      auto const rhs = linalg::multiply(field, at_vertex[arrow.target].diffs[i], f_upper);
      THICKLAT_ASSERT(lhs == rhs, "arrow maps form a chain map");
    }
  }
  std::vector<DimVector> out(base.ranks.size(), DimVector(nv, 0));
  for (std::size_t v = 0; v < nv; ++v) {
    auto const h = homology_dims(at_vertex[v]);
    for (std::size_t i = 0; i < h.size(); ++i) out[i][v] = h[i];
  }
  return out;
}

}  // namespace thicklat
