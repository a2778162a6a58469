#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "thicklat/error.hpp"
#include "thicklat/field.hpp"
#include "thicklat/linalg.hpp"
#include "thicklat/quiver.hpp"

namespace thicklat {

// A finite-dimensional representation of a Dynkin quiver over F. maps[a]
// is the matrix of arrow a, of shape dim[target] x dim[source].
template <typename F>
struct Representation {
  using Scalar = typename F::value_type;
  using Mat = Matrix<Scalar>;

  Quiver quiver;
  F field;
  DimVector dim;
  std::vector<Mat> maps;

  Representation(Quiver q, F f, DimVector d, std::vector<Mat> m)
      : quiver(std::move(q)), field(std::move(f)), dim(std::move(d)), maps(std::move(m)) {
    if (dim.size() != quiver.vertex_count()) throw Error("dimension vector length mismatch");
    if (std::any_of(dim.begin(), dim.end(), [](int x) { return x < 0; })) {
      throw Error("dimension vector has a negative entry");
    }
    if (maps.size() != quiver.arrows().size()) throw Error("one matrix per arrow required");
    for (std::size_t a = 0; a < maps.size(); ++a) {
      auto const& arrow = quiver.arrows()[a];
      if (maps[a].rows() != static_cast<std::size_t>(dim[arrow.target]) ||
          maps[a].cols() != static_cast<std::size_t>(dim[arrow.source])) {
        throw Error("arrow matrix shape does not match the dimension vector");
      }
    }
  }

  // All arrow maps zero.
  static Representation semisimple(Quiver q, F f, DimVector d) {
    std::vector<Mat> maps;
    for (auto const& a : q.arrows()) {
      maps.emplace_back(static_cast<std::size_t>(d[a.target]),
                        static_cast<std::size_t>(d[a.source]), f.zero());
    }
    return Representation(std::move(q), std::move(f), std::move(d), std::move(maps));
  }

  int total_dim() const {
    int total = 0;
    for (int x : dim) total += x;
    return total;
  }
};

// A morphism of representations: one matrix per vertex, of shape
// dim_target(v) x dim_source(v).
template <typename F>
struct RepMorphism {
  std::vector<Matrix<typename F::value_type>> components;
};

namespace detail {

template <typename F>
void require_compatible(Representation<F> const& m, Representation<F> const& n) {
  if (!(m.quiver == n.quiver)) throw Error("representations live on different quivers");
  if (!(m.field == n.field)) throw Error("representations live over different fields");
}

// Offsets of the per-vertex blocks phi_v (row-major, dim N_v x dim M_v).
inline std::vector<std::size_t> hom_offsets(DimVector const& m, DimVector const& n) {
  std::vector<std::size_t> off(m.size() + 1, 0);
  for (std::size_t v = 0; v < m.size(); ++v) {
    off[v + 1] = off[v] + static_cast<std::size_t>(m[v]) * static_cast<std::size_t>(n[v]);
  }
  return off;
}

inline std::vector<std::size_t> arrow_offsets(Quiver const& q, DimVector const& m,
                                              DimVector const& n) {
  std::vector<std::size_t> off(q.arrows().size() + 1, 0);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    auto const& arrow = q.arrows()[a];
    off[a + 1] = off[a] + static_cast<std::size_t>(n[arrow.target]) *
                              static_cast<std::size_t>(m[arrow.source]);
  }
  return off;
}

}  // namespace detail

// The map delta: (phi_v)_v -> (phi_t M_a - N_a phi_s)_a. Its kernel is
// Hom(M, N); its cokernel is Ext^1(M, N), since the standard projective
// resolution of M has exactly these two terms.
template <typename F>
Matrix<typename F::value_type> coboundary_matrix(Representation<F> const& m,
                                                 Representation<F> const& n) {
  detail::require_compatible(m, n);
  auto const& field = m.field;
  auto const voff = detail::hom_offsets(m.dim, n.dim);
  auto const aoff = detail::arrow_offsets(m.quiver, m.dim, n.dim);
  Matrix<typename F::value_type> delta(aoff.back(), voff.back(), field.zero());
  for (std::size_t a = 0; a < m.quiver.arrows().size(); ++a) {
    auto const s = static_cast<std::size_t>(m.quiver.arrows()[a].source);
    auto const t = static_cast<std::size_t>(m.quiver.arrows()[a].target);
    auto const ms = static_cast<std::size_t>(m.dim[s]);
    auto const mt = static_cast<std::size_t>(m.dim[t]);
    auto const ns = static_cast<std::size_t>(n.dim[s]);
    auto const nt = static_cast<std::size_t>(n.dim[t]);
    auto const& ma = m.maps[a];
    auto const& na = n.maps[a];
    for (std::size_t r = 0; r < nt; ++r) {
      for (std::size_t c = 0; c < ms; ++c) {
        auto const row = aoff[a] + r * ms + c;
        // sum_k phi_t(r, k) M_a(k, c)
        for (std::size_t k = 0; k < mt; ++k) {
          auto const col = voff[t] + r * mt + k;
          delta(row, col) = delta(row, col) + ma(k, c);
        }
        // - sum_k N_a(r, k) phi_s(k, c)
        for (std::size_t k = 0; k < ns; ++k) {
          auto const col = voff[s] + k * ms + c;
          delta(row, col) = delta(row, col) - na(r, k);
        }
      }
    }
  }
  return delta;
}

template <typename F>
std::vector<RepMorphism<F>> hom_basis(Representation<F> const& m, Representation<F> const& n) {
  auto const& field = m.field;
  auto const delta = coboundary_matrix(m, n);
  auto const kernel = linalg::kernel_basis(field, delta);
  auto const voff = detail::hom_offsets(m.dim, n.dim);
  std::vector<RepMorphism<F>> out;
  for (std::size_t k = 0; k < kernel.cols(); ++k) {
    RepMorphism<F> f;
    for (std::size_t v = 0; v < m.dim.size(); ++v) {
      auto const rows = static_cast<std::size_t>(n.dim[v]);
      auto const cols = static_cast<std::size_t>(m.dim[v]);
      Matrix<typename F::value_type> comp(rows, cols, field.zero());
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) comp(r, c) = kernel(voff[v] + r * cols + c, k);
      }
      f.components.push_back(std::move(comp));
    }
    out.push_back(std::move(f));
  }
  return out;
}

template <typename F>
int hom_dim(Representation<F> const& m, Representation<F> const& n) {
  auto const delta = coboundary_matrix(m, n);
  return static_cast<int>(delta.cols() - linalg::rank(m.field, delta));
}

// Ext^1 via the Euler form: dim Hom - <dim M, dim N>.
template <typename F>
int ext_dim(Representation<F> const& m, Representation<F> const& n) {
  auto const e = hom_dim(m, n) - euler_form(m.quiver, m.dim, n.dim);
  THICKLAT_ASSERT(e >= 0, "Ext^1 dimension must be nonnegative");
  return e;
}

// Ext^1 as the cokernel of the coboundary map.
template <typename F>
int ext_dim_via_resolution(Representation<F> const& m, Representation<F> const& n) {
  auto const delta = coboundary_matrix(m, n);
  return static_cast<int>(delta.rows() - linalg::rank(m.field, delta));
}

// Cocycles (one matrix per arrow, dim N_target x dim M_source) whose classes
// form a basis of Ext^1(M, N). Each is a standard unit cocycle.
template <typename F>
std::vector<std::vector<Matrix<typename F::value_type>>> ext_basis(Representation<F> const& m,
                                                                  Representation<F> const& n) {
  auto const& field = m.field;
  auto const delta = coboundary_matrix(m, n);
  auto const rows = delta.rows();
  // Pivots of [delta | I] beyond delta's columns pick unit vectors spanning
  // a complement of the coboundaries.
  Matrix<typename F::value_type> aug(rows, delta.cols() + rows, field.zero());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < delta.cols(); ++c) aug(r, c) = delta(r, c);
    aug(r, delta.cols() + r) = field.one();
  }
  auto const ech = linalg::rref(field, aug);
  auto const aoff = detail::arrow_offsets(m.quiver, m.dim, n.dim);
  std::vector<std::vector<Matrix<typename F::value_type>>> out;
  for (auto p : ech.pivots) {
    if (p < delta.cols()) continue;
    auto const unit = p - delta.cols();
    std::vector<Matrix<typename F::value_type>> cocycle;
    for (std::size_t a = 0; a < m.quiver.arrows().size(); ++a) {
      auto const& arrow = m.quiver.arrows()[a];
      auto const nt = static_cast<std::size_t>(n.dim[arrow.target]);
      auto const ms = static_cast<std::size_t>(m.dim[arrow.source]);
      Matrix<typename F::value_type> block(nt, ms, field.zero());
      if (unit >= aoff[a] && unit < aoff[a + 1]) {
        auto const local = unit - aoff[a];
        block(local / ms, local % ms) = field.one();
      }
      cocycle.push_back(std::move(block));
    }
    out.push_back(std::move(cocycle));
  }
  return out;
}

// Middle term E of 0 -> N -> E -> M -> 0 for the cocycle eta:
// E_v = N_v + M_v and E_a = [[N_a, eta_a], [0, M_a]].
template <typename F>
Representation<F> extension(Representation<F> const& m, Representation<F> const& n,
                            std::vector<Matrix<typename F::value_type>> const& eta) {
  detail::require_compatible(m, n);
  auto const& field = m.field;
  DimVector dim(m.dim.size());
  for (std::size_t v = 0; v < dim.size(); ++v) dim[v] = m.dim[v] + n.dim[v];
  std::vector<Matrix<typename F::value_type>> maps;
  for (std::size_t a = 0; a < m.quiver.arrows().size(); ++a) {
    auto const& arrow = m.quiver.arrows()[a];
    auto const ns = static_cast<std::size_t>(n.dim[arrow.source]);
    auto const nt = static_cast<std::size_t>(n.dim[arrow.target]);
    auto const ms = static_cast<std::size_t>(m.dim[arrow.source]);
    auto const mt = static_cast<std::size_t>(m.dim[arrow.target]);
    if (eta[a].rows() != nt || eta[a].cols() != ms) throw Error("cocycle shape mismatch");
    Matrix<typename F::value_type> e(nt + mt, ns + ms, field.zero());
    for (std::size_t r = 0; r < nt; ++r) {
      for (std::size_t c = 0; c < ns; ++c) e(r, c) = n.maps[a](r, c);
      for (std::size_t c = 0; c < ms; ++c) e(r, ns + c) = eta[a](r, c);
    }
    for (std::size_t r = 0; r < mt; ++r) {
      for (std::size_t c = 0; c < ms; ++c) e(nt + r, ns + c) = m.maps[a](r, c);
    }
    maps.push_back(std::move(e));
  }
  return Representation<F>(m.quiver, field, std::move(dim), std::move(maps));
}

template <typename F>
Representation<F> direct_sum(Representation<F> const& m, Representation<F> const& n) {
  detail::require_compatible(m, n);
  std::vector<Matrix<typename F::value_type>> zero;
  for (auto const& arrow : m.quiver.arrows()) {
    zero.emplace_back(static_cast<std::size_t>(n.dim[arrow.target]),
                      static_cast<std::size_t>(m.dim[arrow.source]), m.field.zero());
  }
  return extension(m, n, zero);
}

// The subrepresentation spanned by per-vertex column bases, which must be
// stable under the arrows.
template <typename F>
Representation<F> restrict_to(Representation<F> const& e,
                              std::vector<Matrix<typename F::value_type>> const& basis) {
  auto const& field = e.field;
  DimVector dim(e.dim.size());
  for (std::size_t v = 0; v < dim.size(); ++v) dim[v] = static_cast<int>(basis[v].cols());
  std::vector<Matrix<typename F::value_type>> maps;
  for (std::size_t a = 0; a < e.quiver.arrows().size(); ++a) {
    auto const& arrow = e.quiver.arrows()[a];
    auto const image = linalg::multiply(field, e.maps[a], basis[arrow.source]);
    auto x = linalg::solve(field, basis[arrow.target], image);
    THICKLAT_ASSERT(x.has_value(), "subspace must be stable under the arrow maps");
    maps.push_back(std::move(*x));
  }
  return Representation<F>(e.quiver, field, std::move(dim), std::move(maps));
}

template <typename F>
Representation<F> kernel(Representation<F> const& m, RepMorphism<F> const& f) {
  std::vector<Matrix<typename F::value_type>> basis;
  for (std::size_t v = 0; v < m.dim.size(); ++v) {
    basis.push_back(linalg::kernel_basis(m.field, f.components[v]));
  }
  return restrict_to(m, basis);
}

template <typename F>
Representation<F> image(Representation<F> const& n, RepMorphism<F> const& f) {
  std::vector<Matrix<typename F::value_type>> basis;
  for (std::size_t v = 0; v < n.dim.size(); ++v) {
    basis.push_back(linalg::column_basis(n.field, f.components[v]));
  }
  return restrict_to(n, basis);
}

template <typename F>
Representation<F> cokernel(Representation<F> const& n, RepMorphism<F> const& f) {
  auto const& field = n.field;
  // Quotient maps P_v with ker P_v = im f_v; induced arrow Z with
  // Z P_s = P_t N_a.
  std::vector<Matrix<typename F::value_type>> proj;
  DimVector dim(n.dim.size());
  for (std::size_t v = 0; v < n.dim.size(); ++v) {
    proj.push_back(linalg::left_kernel(field, f.components[v]));
    dim[v] = static_cast<int>(proj.back().rows());
  }
  std::vector<Matrix<typename F::value_type>> maps;
  for (std::size_t a = 0; a < n.quiver.arrows().size(); ++a) {
    auto const& arrow = n.quiver.arrows()[a];
    auto const rhs = linalg::multiply(field, proj[arrow.target], n.maps[a]);
    auto zt = linalg::solve(field, proj[arrow.source].transpose(), rhs.transpose());
    THICKLAT_ASSERT(zt.has_value(), "cokernel arrow must be well defined");
    maps.push_back(zt->transpose());
  }
  return Representation<F>(n.quiver, field, std::move(dim), std::move(maps));
}

template <typename F>
bool is_injective(RepMorphism<F> const& f, F const& field) {
  for (auto const& c : f.components) {
    if (linalg::rank(field, c) != c.cols()) return false;
  }
  return true;
}

template <typename F>
bool is_morphism(Representation<F> const& m, Representation<F> const& n,
                 RepMorphism<F> const& f) {
  auto const& field = m.field;
  for (std::size_t a = 0; a < m.quiver.arrows().size(); ++a) {
    auto const& arrow = m.quiver.arrows()[a];
    auto const lhs = linalg::multiply(field, f.components[arrow.target], m.maps[a]);
    auto const rhs = linalg::multiply(field, n.maps[a], f.components[arrow.source]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

// Linear combination sum_i coeffs[i] basis[i].
template <typename F>
RepMorphism<F> combine(F const& field, std::vector<RepMorphism<F>> const& basis,
                       std::vector<typename F::value_type> const& coeffs,
                       DimVector const& source, DimVector const& target) {
  RepMorphism<F> out;
  for (std::size_t v = 0; v < source.size(); ++v) {
    out.components.emplace_back(static_cast<std::size_t>(target[v]),
                                static_cast<std::size_t>(source[v]), field.zero());
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] == field.zero()) continue;
    for (std::size_t v = 0; v < source.size(); ++v) {
      auto& comp = out.components[v];
      auto const& b = basis[i].components[v];
      for (std::size_t r = 0; r < comp.rows(); ++r) {
        for (std::size_t c = 0; c < comp.cols(); ++c) comp(r, c) = comp(r, c) + coeffs[i] * b(r, c);
      }
    }
  }
  return out;
}

// Calls visit(coeffs) for every vector in GF(p)^count, zero vector first.
inline void for_each_vector(PrimeField const& field, std::size_t count,
                            std::function<void(std::vector<ModInt> const&)> const& visit) {
  std::vector<ModInt> coeffs(count, field.zero());
  for (;;) {
    visit(coeffs);
    std::size_t i = 0;
    while (i < count) {
      coeffs[i] = coeffs[i] + field.one();
      if (!(coeffs[i] == field.zero())) break;
      ++i;
    }
    if (i == count) return;
  }
}

namespace detail {

template <typename F>
std::vector<Matrix<typename F::value_type>> fitting_power(F const& field,
                                                          RepMorphism<F> const& phi) {
  std::vector<Matrix<typename F::value_type>> out;
  for (auto const& c : phi.components) {
    auto p = Matrix<typename F::value_type>::identity(c.rows(), field.zero(), field.one());
    for (std::size_t k = 0; k < c.rows(); ++k) p = linalg::multiply(field, p, c);
    out.push_back(std::move(p));
  }
  return out;
}

// Fitting decomposition E = im phi^N + ker phi^N when phi is neither
// nilpotent nor invertible.
template <typename F>
std::optional<std::pair<Representation<F>, Representation<F>>> try_split(
    Representation<F> const& e, RepMorphism<F> const& phi) {
  auto const& field = e.field;
  auto const power = fitting_power(field, phi);
  bool nilpotent = true;
  bool invertible = true;
  for (std::size_t v = 0; v < power.size(); ++v) {
    auto const r = linalg::rank(field, power[v]);
    if (r != 0) nilpotent = false;
    if (r != power[v].rows()) invertible = false;
  }
  if (nilpotent || invertible) return std::nullopt;
  std::vector<Matrix<typename F::value_type>> im;
  std::vector<Matrix<typename F::value_type>> ker;
  for (auto const& p : power) {
    im.push_back(linalg::column_basis(field, p));
    ker.push_back(linalg::kernel_basis(field, p));
  }
  return std::make_pair(restrict_to(e, im), restrict_to(e, ker));
}

template <typename F>
std::vector<typename F::value_type> shift_candidates(F const& field) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    return field.elements();
  } else {
    std::vector<typename F::value_type> out;
    for (int k = -3; k <= 3; ++k) out.push_back(field.from_int(k));
    return out;
  }
}

template <typename F>
RepMorphism<F> minus_scalar(F const& /*field*/, RepMorphism<F> phi, typename F::value_type lambda) {
  for (auto& c : phi.components) {
    for (std::size_t i = 0; i < c.rows(); ++i) c(i, i) = c(i, i) - lambda;
  }
  return phi;
}

}  // namespace detail

// Dimension vectors of the indecomposable summands, sorted. Over a Dynkin
// quiver every indecomposable is a brick, so a one-dimensional endomorphism
// algebra certifies indecomposability; otherwise a splitting endomorphism
// (neither nilpotent nor invertible) exists and is searched for.
template <typename F>
std::vector<DimVector> decompose(Representation<F> const& e) {
  if (e.total_dim() == 0) return {};
  auto const& field = e.field;
  auto const endo = hom_basis(e, e);
  THICKLAT_ASSERT(!endo.empty(), "nonzero representation has the identity endomorphism");
  if (endo.size() == 1) return {e.dim};

  auto finish = [](Representation<F> const& a, Representation<F> const& b) {
    auto left = decompose(a);
    auto right = decompose(b);
    left.insert(left.end(), right.begin(), right.end());
    std::sort(left.begin(), left.end());
    return left;
  };

  auto const shifts = detail::shift_candidates(field);
  for (auto const& b : endo) {
    for (auto const& lambda : shifts) {
      if (auto split = detail::try_split(e, detail::minus_scalar(field, b, lambda))) {
        return finish(split->first, split->second);
      }
    }
  }
  std::mt19937_64 rng(0x7a11);
  std::vector<typename F::value_type> coeffs(endo.size(), field.zero());
  for (int attempt = 0; attempt < 512; ++attempt) {
    for (auto& x : coeffs) x = field.from_int(static_cast<std::int64_t>(rng() % 7) - 3);
    auto const phi = combine(field, endo, coeffs, e.dim, e.dim);
    for (auto const& lambda : shifts) {
      if (auto split = detail::try_split(e, detail::minus_scalar(field, phi, lambda))) {
        return finish(split->first, split->second);
      }
    }
  }
  throw InvariantViolation("no splitting endomorphism found for a representation with " +
                           std::to_string(endo.size()) + "-dimensional endomorphism algebra");
}

using FieldRep = std::variant<Representation<PrimeField>, Representation<RationalField>>;

int hom_dim(FieldRep const& m, FieldRep const& n);
int ext_dim(FieldRep const& m, FieldRep const& n);
DimVector const& dimension(FieldRep const& m);
Field field_of(FieldRep const& m);

}  // namespace thicklat
