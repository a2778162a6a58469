#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "thicklat/error.hpp"
#include "thicklat/thick_enum.hpp"
#include "thicklat/tree_module.hpp"

using namespace thicklat;

namespace {

Quiver quiver_of(char const* type, char const* orientation = "") {
  return Quiver::parse(DynkinType::parse(type), orientation);
}

// Least wide subcategory containing S, computed as the left perpendicular
// of the right perpendicular of S from raw Hom and Ext dimensions.
struct PerpOracle {
  std::vector<DimVector> dims;
  std::vector<std::vector<bool>> orth;  // Hom(x, y) = Ext(x, y) = 0

  PerpOracle(Quiver const& q, PrimeField const& field) : dims(indecomposable_dims(q)) {
    std::vector<Representation<PrimeField>> reps;
    for (auto const& d : dims) reps.push_back(base_change(tree_module(q, d), field));
    orth.assign(dims.size(), std::vector<bool>(dims.size(), false));
    for (std::size_t x = 0; x < dims.size(); ++x) {
      for (std::size_t y = 0; y < dims.size(); ++y) {
        orth[x][y] =
            hom_dim(reps[x], reps[y]) == 0 && ext_dim_via_resolution(reps[x], reps[y]) == 0;
      }
    }
  }

  std::vector<DimVector> wide_hull(std::vector<std::size_t> const& seed) const {
    std::vector<std::size_t> right;
    for (std::size_t y = 0; y < dims.size(); ++y) {
      if (std::all_of(seed.begin(), seed.end(), [&](auto x) { return orth[x][y]; })) {
        right.push_back(y);
      }
    }
    std::vector<DimVector> out;
    for (std::size_t x = 0; x < dims.size(); ++x) {
      if (std::all_of(right.begin(), right.end(), [&](auto y) { return orth[x][y]; })) {
        out.push_back(dims[x]);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

std::vector<std::vector<DimVector>> families(std::vector<WideSubcategory> const& ws) {
  std::vector<std::vector<DimVector>> out;
  for (auto const& w : ws) out.push_back(w.objects);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("wide closure examples on A2") {
  auto const q = quiver_of("A2", "1>2");
  ThickEnumerator const ctx(q, Field::prime(2));
  CHECK(ctx.closure({{1, 0}}).objects == std::vector<DimVector>{{1, 0}});
  CHECK(ctx.closure({{1, 0}, {0, 1}}).objects.size() == 3);
  CHECK(ctx.closure({{1, 1}}).objects == std::vector<DimVector>{{1, 1}});
  CHECK(ctx.closure(std::vector<DimVector>{}).objects.empty());
  // Kernel of P1 -> S1 is S2... here (1,1) -> (1,0) has kernel (0,1).
  CHECK(ctx.closure({{1, 1}, {1, 0}}).objects.size() == 3);
  CHECK(wide_closure(q, Field::prime(3), {{0, 1}}).objects == std::vector<DimVector>{{0, 1}});
}

TEST_CASE("wide closure errors") {
  auto const q = quiver_of("A2");
  CHECK_THROWS_AS(ThickEnumerator(q, Field::rationals()), Error);
  CHECK_THROWS_AS(wide_closure(q, Field::rationals(), {{1, 0}}), Error);
  ThickEnumerator const ctx(q, Field::prime(2));
  CHECK_THROWS_AS(ctx.closure({{2, 1}}), Error);
  CHECK_THROWS_AS(ctx.closure({{1, 0, 0}}), Error);
}

TEST_CASE("wide closure matches the perpendicular oracle on every seed") {
  for (auto [type, orient] : {std::pair{"A2", "1>2"}, {"A3", "1>2,2>3"}, {"A3", "1>2,3>2"},
                              {"A3", "2>1,2>3"}, {"A4", "1>2,3>2,3>4"}, {"D4", ""},
                              {"D4", "2>1,2>3,2>4"}}) {
    CAPTURE(type);
    CAPTURE(orient);
    auto const q = quiver_of(type, orient);
    ThickEnumerator const ctx(q, Field::prime(2));
    PerpOracle const oracle(q, PrimeField(2));
    auto const n = ctx.roots().size();
    REQUIRE(oracle.dims == ctx.roots());
    std::mt19937 rng(7);
    std::size_t const trials = n <= 10 ? (std::size_t{1} << n) : 1500;
    for (std::size_t t = 0; t < trials; ++t) {
      std::size_t const bits = n <= 10 ? t : rng() % (std::size_t{1} << n);
      std::vector<std::size_t> seed;
      std::vector<DimVector> seed_dims;
      for (std::size_t i = 0; i < n; ++i) {
        if (bits >> i & 1) {
          seed.push_back(i);
          seed_dims.push_back(ctx.roots()[i]);
        }
      }
      CHECK(ctx.closure(seed_dims).objects == oracle.wide_hull(seed));
    }
  }
}

TEST_CASE("wide closure is idempotent, extensive and monotone") {
  for (auto type : {"A1", "A2", "A3", "A4", "D4"}) {
    CAPTURE(type);
    ThickEnumerator const ctx(quiver_of(type), Field::prime(2));
    auto const n = ctx.roots().size();
    for (unsigned seed = 0; seed < 200; ++seed) {
      std::mt19937 rng(seed);
      ThickEnumerator::Mask a(n);
      ThickEnumerator::Mask b(n);
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = rng() % 3 == 0;
        b[i] = a[i] || rng() % 4 == 0;
      }
      auto const ca = ctx.closure_mask(a);
      CHECK(ctx.closure_mask(ca) == ca);
      CHECK(a.is_subset_of(ca));
      CHECK(ca.is_subset_of(ctx.closure_mask(b)));
    }
  }
}

TEST_CASE("thick subcategory counts equal W-Catalan numbers") {
  for (auto type : {"A1", "A2", "A3", "A4", "D4"}) {
    CAPTURE(type);
    auto const t = DynkinType::parse(type);
    auto const thick = enumerate_thick(Quiver::standard(t), Field::prime(2));
    CHECK(static_cast<std::int64_t>(thick.size()) == oracle::w_catalan(t));
  }
  CHECK(enumerate_thick(quiver_of("A2"), Field::prime(2)).size() == 5);
  CHECK(enumerate_thick(quiver_of("D4"), Field::prime(2)).size() == 50);
}

TEST_CASE("enumeration is field independent") {
  for (auto [type, orient] : {std::pair{"A1", ""}, {"A2", ""}, {"A3", ""}, {"A3", "1>2,3>2"}}) {
    CAPTURE(type);
    auto const q = quiver_of(type, orient);
    auto const f2 = families(enumerate_thick(q, Field::prime(2)));
    CHECK(families(enumerate_thick(q, Field::prime(3))) == f2);
    CHECK(families(enumerate_thick(q, Field::prime(5))) == f2);
  }
}

TEST_CASE("simples of wide subcategories") {
  auto const q = quiver_of("A2", "1>2");
  ThickEnumerator const ctx(q, Field::prime(2));
  auto const all = ctx.closure({{1, 0}, {0, 1}});
  CHECK(ctx.simples(all) == std::vector<DimVector>{{0, 1}, {1, 0}});
  CHECK(simples_of(all) == std::vector<DimVector>{{0, 1}, {1, 0}});
  CHECK(ctx.simples(ctx.closure(std::vector<DimVector>{})).empty());
  CHECK(ctx.simples(ctx.closure({{1, 1}})) == std::vector<DimVector>{{1, 1}});
  // {S1, P1}... the wide subcategory generated by (1,1) and (0,1) is everything.
  CHECK(ctx.simples(ctx.closure({{1, 1}, {0, 1}})).size() == 2);
}

TEST_CASE("simples form an exceptional family generating the subcategory") {
  for (auto type : {"A3", "D4"}) {
    ThickEnumerator const ctx(quiver_of(type), Field::prime(2));
    for (auto const& w : ctx.enumerate()) {
      auto const simple = ctx.simples(w);
      CHECK(ctx.closure(simple) == w);
      for (auto const& a : simple) {
        for (auto const& b : simple) {
          if (a != b) CHECK(ctx.hom(ctx.index_of(a), ctx.index_of(b)) == 0);
        }
      }
    }
  }
}

TEST_CASE("it_map examples") {
  auto const q = quiver_of("A2", "1>2");
  ThickEnumerator const ctx(q, Field::prime(2));
  auto const& rs = ctx.root_system();
  CHECK(ctx.it_map(ctx.closure(std::vector<DimVector>{})).elem == WeylElement::identity(2));
  CHECK(ctx.it_map(ctx.closure({{1, 0}, {0, 1}})).elem == ctx.coxeter());
  CHECK(ctx.it_map(ctx.closure({{1, 1}})).elem == reflection(rs, {1, 1}));
  CHECK(it_map(ctx.closure({{1, 0}})).elem == rs.simple_reflection(0));
  for (auto name : {"A3", "A4", "D4"}) {
    for (auto orient : {"", "alt"}) {
      auto const t = DynkinType::parse(name);
      auto qq = Quiver::standard(t);
      if (std::string(orient) == "alt") qq = qq.reflected_at(1);
      ThickEnumerator const c2(qq, Field::prime(2));
      auto const full = c2.closure(c2.roots());
      CHECK(c2.it_map(full).elem == coxeter_element(c2.root_system(), qq));
    }
  }
}

TEST_CASE("Ingalls-Thomas bijection is an order isomorphism") {
  for (auto [type, orient] : {std::pair{"A1", ""}, {"A2", ""}, {"A2", "2>1"}, {"A3", ""},
                              {"A3", "1>2,3>2"}, {"A4", ""}, {"D4", ""}, {"D4", "2>1,3>2,2>4"}}) {
    CAPTURE(type);
    CAPTURE(orient);
    auto const report = verify_bijection(quiver_of(type, orient), Field::prime(2));
    CHECK(report.thick_count == report.nc_count);
    CHECK(report.injective);
    CHECK(report.surjective);
    CHECK(report.order_preserved);
    CHECK(report.order_reflected);
    CHECK(report.lengths_match);
    CHECK(report.violations.empty());
    CHECK(report.ok());
  }
  auto const a3 = verify_bijection(quiver_of("A3"), Field::prime(3));
  CHECK(a3.ok());
  CHECK(a3.thick_count == 14);
}

TEST_CASE("it_map sends intersections and joins to NC meets and joins") {
  for (auto type : {"A2", "A3"}) {
    ThickEnumerator const ctx(quiver_of(type), Field::prime(2));
    auto const thick = ctx.enumerate();
    NcLattice const nc(ctx.root_system(), ctx.coxeter());
    std::vector<std::size_t> image;
    for (auto const& w : thick) image.push_back(*nc.index_of(ctx.it_map(w).elem));
    for (std::size_t a = 0; a < thick.size(); ++a) {
      for (std::size_t b = 0; b < thick.size(); ++b) {
        std::vector<DimVector> both;
        std::set_intersection(thick[a].objects.begin(), thick[a].objects.end(),
                              thick[b].objects.begin(), thick[b].objects.end(),
                              std::back_inserter(both));
        auto joined = thick[a].objects;
        joined.insert(joined.end(), thick[b].objects.begin(), thick[b].objects.end());
        auto const meet = ctx.closure(both);
        CHECK(meet.objects == both);
        CHECK(*nc.index_of(ctx.it_map(meet).elem) == nc.meet(image[a], image[b]));
        CHECK(*nc.index_of(ctx.it_map(ctx.closure(joined)).elem) == nc.join(image[a], image[b]));
      }
    }
  }
}

TEST_CASE("literal seed enumeration agrees with growth from closed sets") {
  for (auto type : {"A3", "D4"}) {
    ThickEnumerator const ctx(quiver_of(type), Field::prime(2));
    auto const n = ctx.roots().size();
    std::set<std::vector<DimVector>> grown;
    std::vector<ThickEnumerator::Mask> stack{ctx.closure_mask(ThickEnumerator::Mask(n))};
    grown.insert(ctx.to_wide(stack.front()).objects);
    while (!stack.empty()) {
      auto const w = stack.back();
      stack.pop_back();
      for (std::size_t x = 0; x < n; ++x) {
        auto next = w;
        next.set(x);
        next = ctx.closure_mask(next);
        if (grown.insert(ctx.to_wide(next).objects).second) stack.push_back(next);
      }
    }
    auto const literal = families(ctx.enumerate());
    CHECK(std::vector<std::vector<DimVector>>(grown.begin(), grown.end()) == literal);
  }
}
