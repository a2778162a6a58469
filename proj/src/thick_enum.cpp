#include "thicklat/thick_enum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "thicklat/error.hpp"
#include "thicklat/representation.hpp"
#include "thicklat/tree_module.hpp"

namespace thicklat {

namespace {

using Rep = Representation<PrimeField>;

// Seeds are enumerated literally up to this many roots; beyond it the
// closed sets are reached by adding one root at a time.
constexpr std::size_t kLiteralSeedLimit = 16;

// Coefficient vectors up to scalars: first nonzero entry equal to one.
bool normalized(std::vector<ModInt> const& coeffs, PrimeField const& field) {
  for (auto const& x : coeffs) {
    if (x == field.zero()) continue;
    return x == field.one();
  }
  return false;
}

bool mask_less(ThickEnumerator::Mask const& a, ThickEnumerator::Mask const& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i];
  }
  return false;
}

}  // namespace

bool WideSubcategory::contains(DimVector const& d) const {
  return std::binary_search(objects.begin(), objects.end(), d);
}

bool WideSubcategory::is_subset_of(WideSubcategory const& other) const {
  return std::includes(other.objects.begin(), other.objects.end(), objects.begin(),
                       objects.end());
}

std::string WideSubcategory::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (i) out += ",";
    out += format_dim(objects[i]);
  }
  return out + "}";
}

ThickEnumerator::ThickEnumerator(Quiver q, Field field)
    : quiver_(std::move(q)),
      field_(field),
      rs_(build_root_system(quiver_.type())),
      coxeter_(coxeter_element(rs_, quiver_)),
      roots_(indecomposable_dims(quiver_)) {
  if (!field_.is_finite()) {
    throw Error("wide closure enumerates morphisms exhaustively and needs a finite field, got " +
                field_.name());
  }
  PrimeField const pf(field_.characteristic());
  auto const n = roots_.size();
  for (std::size_t i = 0; i < n; ++i) index_.emplace(roots_[i], i);
  std::vector<Rep> reps;
  for (auto const& d : roots_) reps.push_back(base_change(tree_module(quiver_, d), pf));

  produced_.assign(n, std::vector<Mask>(n, Mask(n)));
  hom_.assign(n, std::vector<int>(n, 0));
  ext_.assign(n, std::vector<int>(n, 0));
  mono_.assign(n, std::vector<bool>(n, false));

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto& out = produced_[x][y];
      auto add = [&](Rep const& r) {
        for (auto const& d : decompose(r)) out.set(index_of(d));
      };
      auto const& mx = reps[x];
      auto const& my = reps[y];

      auto const homs = hom_basis(mx, my);
      hom_[x][y] = static_cast<int>(homs.size());
      for_each_vector(pf, homs.size(), [&](std::vector<ModInt> const& coeffs) {
        if (!normalized(coeffs, pf)) return;
        auto const f = combine(pf, homs, coeffs, mx.dim, my.dim);
        add(kernel(mx, f));
        add(image(my, f));
        add(cokernel(my, f));
        if (is_injective(f, pf)) mono_[x][y] = true;
      });

      // Ext^1(X, Y): extensions 0 -> Y -> E -> X -> 0.
      auto const classes = ext_basis(mx, my);
      ext_[x][y] = static_cast<int>(classes.size());
      for_each_vector(pf, classes.size(), [&](std::vector<ModInt> const& coeffs) {
        if (!normalized(coeffs, pf)) return;
        auto eta = classes.front();
        for (auto& block : eta) block = Matrix<ModInt>(block.rows(), block.cols(), pf.zero());
        for (std::size_t i = 0; i < classes.size(); ++i) {
          for (std::size_t a = 0; a < eta.size(); ++a) {
            auto& block = eta[a];
            for (std::size_t r = 0; r < block.rows(); ++r) {
              for (std::size_t c = 0; c < block.cols(); ++c) {
                block(r, c) = block(r, c) + coeffs[i] * classes[i][a](r, c);
              }
            }
          }
        }
        add(extension(mx, my, eta));
      });
    }
  }
}

std::size_t ThickEnumerator::index_of(DimVector const& d) const {
  auto const it = index_.find(d);
  if (it == index_.end()) {
    throw Error(format_dim(d) + " is not an indecomposable dimension vector of " +
                quiver_.type().name());
  }
  return it->second;
}

ThickEnumerator::Mask ThickEnumerator::mask_of(std::vector<DimVector> const& dims) const {
  Mask m(roots_.size());
  for (auto const& d : dims) m.set(index_of(d));
  return m;
}

WideSubcategory ThickEnumerator::to_wide(Mask const& m) const {
  WideSubcategory w{quiver_, field_, {}};
  for (auto i = m.find_first(); i != Mask::npos; i = m.find_next(i)) w.objects.push_back(roots_[i]);
  std::sort(w.objects.begin(), w.objects.end());
  return w;
}

ThickEnumerator::Mask ThickEnumerator::closure_mask(Mask w) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto x = w.find_first(); x != Mask::npos; x = w.find_next(x)) {
      for (auto y = w.find_first(); y != Mask::npos; y = w.find_next(y)) {
        if (produced_[x][y].is_subset_of(w)) continue;
        w |= produced_[x][y];
        changed = true;
      }
    }
  }
  return w;
}

WideSubcategory ThickEnumerator::closure(std::vector<DimVector> const& seed) const {
  return to_wide(closure_mask(mask_of(seed)));
}

std::vector<WideSubcategory> ThickEnumerator::enumerate() const {
  auto const n = roots_.size();
  std::set<Mask, decltype(&mask_less)> found(&mask_less);
  if (n <= kLiteralSeedLimit) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
      found.insert(closure_mask(Mask(n, bits)));
    }
  } else {
    // closure(S + x) = closure(closure(S) + x), so every closure of a seed
    // is reached from the empty set one root at a time.
    std::vector<Mask> queue{closure_mask(Mask(n))};
    found.insert(queue.front());
    while (!queue.empty()) {
      auto const w = queue.back();
      queue.pop_back();
      for (std::size_t x = 0; x < n; ++x) {
        if (w[x]) continue;
        auto next = w;
        next.set(x);
        next = closure_mask(next);
        if (found.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  std::vector<WideSubcategory> out;
  out.reserve(found.size());
  for (auto const& m : found) out.push_back(to_wide(m));
  return out;
}

std::vector<DimVector> ThickEnumerator::simples(WideSubcategory const& w) const {
  std::vector<std::size_t> members;
  for (auto const& d : w.objects) members.push_back(index_of(d));
  std::vector<DimVector> out;
  for (auto y : members) {
    bool const has_proper_sub = std::any_of(members.begin(), members.end(), [&](auto x) {
      return x != y && mono_[x][y];
    });
    if (!has_proper_sub) out.push_back(roots_[y]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

NcElement ThickEnumerator::it_map(WideSubcategory const& w) const {
  auto const simple = simples(w);
  std::vector<std::size_t> idx;
  std::vector<WeylElement> refl;
  for (auto const& d : simple) {
    idx.push_back(index_of(d));
    refl.push_back(reflection(rs_, to_int_vector(d)));
  }
  auto const r = idx.size();
  // Every linear order with Ext(earlier, later) = 0.
  std::vector<WeylElement> products;
  std::vector<std::size_t> order;
  std::vector<bool> used(r, false);
  std::function<void()> extend = [&] {
    if (order.size() == r) {
      auto p = WeylElement::identity(rs_.rank());
      for (auto i : order) p = p * refl[i];
      products.push_back(std::move(p));
      return;
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (used[i]) continue;
      // i may come next only if no remaining j needs to precede it.
      bool blocked = false;
      for (std::size_t j = 0; j < r; ++j) {
        if (j != i && !used[j] && ext_[idx[i]][idx[j]] > 0) blocked = true;
      }
      if (blocked) continue;
      used[i] = true;
      order.push_back(i);
      extend();
      order.pop_back();
      used[i] = false;
    }
  };
  extend();
  THICKLAT_ASSERT(!products.empty(), "simples of " + w.to_string() + " admit an exceptional order");
  for (auto const& p : products) {
    THICKLAT_ASSERT(p == products.front(),
                    "all exceptional orders of " + w.to_string() + " give the same element");
  }
  auto const& elem = products.front();
  THICKLAT_ASSERT(reflection_length(rs_, elem) == static_cast<int>(r),
                  "image of " + w.to_string() + " has length equal to its number of simples");
  THICKLAT_ASSERT(absolute_leq(rs_, elem, coxeter_),
                  "image of " + w.to_string() + " lies below the Coxeter element");
  return {elem, coxeter_};
}

WideSubcategory wide_closure(Quiver const& q, Field const& field,
                             std::vector<DimVector> const& seed) {
  return ThickEnumerator(q, field).closure(seed);
}

std::vector<WideSubcategory> enumerate_thick(Quiver const& q, Field const& field) {
  return ThickEnumerator(q, field).enumerate();
}

std::vector<DimVector> simples_of(WideSubcategory const& wide) {
  return ThickEnumerator(wide.quiver, wide.field).simples(wide);
}

NcElement it_map(WideSubcategory const& wide) {
  return ThickEnumerator(wide.quiver, wide.field).it_map(wide);
}

BijectionReport verify_bijection(Quiver const& q, Field const& field) {
  return verify_bijection(ThickEnumerator(q, field));
}

BijectionReport verify_bijection(ThickEnumerator const& ctx) {
  BijectionReport report;
  auto const thick = ctx.enumerate();
  NcLattice const nc(ctx.root_system(), ctx.coxeter());
  report.thick_count = thick.size();
  report.nc_count = nc.size();

  std::vector<std::size_t> image;
  report.lengths_match = true;
  for (auto const& w : thick) {
    auto x = ctx.it_map(w);
    auto const i = nc.index_of(x.elem);
    if (!i) {
      report.violations.push_back("image of " + w.to_string() + " is not in NC");
      continue;
    }
    if (nc.length(*i) != static_cast<int>(ctx.simples(w).size())) {
      report.lengths_match = false;
      report.violations.push_back("length mismatch for " + w.to_string());
    }
    image.push_back(*i);
    report.assignments.push_back({w, std::move(x)});
  }
  std::set<std::size_t> const distinct(image.begin(), image.end());
  report.injective = image.size() == thick.size() && distinct.size() == image.size();
  report.surjective = distinct.size() == nc.size();

  report.order_preserved = report.injective;
  report.order_reflected = report.injective;
  if (report.injective) {
    for (std::size_t a = 0; a < thick.size(); ++a) {
      for (std::size_t b = 0; b < thick.size(); ++b) {
        bool const sub = thick[a].is_subset_of(thick[b]);
        bool const leq = nc.leq(image[a], image[b]);
        if (sub && !leq) {
          report.order_preserved = false;
          report.violations.push_back(thick[a].to_string() + " <= " + thick[b].to_string() +
                                      " but images are not comparable");
        }
        if (leq && !sub) {
          report.order_reflected = false;
          report.violations.push_back("images of " + thick[a].to_string() + " and " +
                                      thick[b].to_string() + " are ordered but not nested");
        }
      }
    }
  }
  return report;
}

}  // namespace thicklat
