#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "thicklat/error.hpp"
#include "thicklat/quiver.hpp"
#include "thicklat/representation.hpp"
#include "thicklat/tree_module.hpp"

using namespace thicklat;

namespace {

// Every orientation of the diagram, one bit per edge.
std::vector<Quiver> all_orientations(DynkinType const& t) {
  auto const edges = t.edges();
  std::vector<Quiver> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << edges.size()); ++mask) {
    std::vector<Arrow> arrows;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      if (mask >> e & 1) std::swap(a, b);
      arrows.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
    out.emplace_back(t, arrows);
  }
  return out;
}

// |Hom(M, N)| over GF(2) by trying every tuple of vertex matrices.
template <typename Rep>
int brute_hom_dim_gf2(Rep const& m, Rep const& n) {
  std::size_t entries = 0;
  for (std::size_t v = 0; v < m.dim.size(); ++v) {
    entries += static_cast<std::size_t>(m.dim[v] * n.dim[v]);
  }
  REQUIRE(entries <= 20);
  std::size_t count = 0;
  PrimeField const f2(2);
  for (std::size_t bits = 0; bits < (std::size_t{1} << entries); ++bits) {
    RepMorphism<PrimeField> f;
    std::size_t k = 0;
    for (std::size_t v = 0; v < m.dim.size(); ++v) {
      Matrix<ModInt> c(static_cast<std::size_t>(n.dim[v]), static_cast<std::size_t>(m.dim[v]),
                       f2.zero());
      for (std::size_t r = 0; r < c.rows(); ++r) {
        for (std::size_t col = 0; col < c.cols(); ++col, ++k) c(r, col) = f2.from_int(bits >> k & 1);
      }
      f.components.push_back(std::move(c));
    }
    count += is_morphism(m, n, f);
  }
  int d = 0;
  while ((std::size_t{1} << d) < count) ++d;
  REQUIRE((std::size_t{1} << d) == count);
  return d;
}

template <typename F>
std::vector<Representation<F>> indecomposables(Quiver const& q, F const& field) {
  std::vector<Representation<F>> out;
  for (auto const& d : indecomposable_dims(q)) out.push_back(base_change(tree_module(q, d), field));
  return out;
}

// Hom(X, -) for all indecomposables X separates isoclasses, and is additive.
template <typename F>
std::vector<int> hom_profile(std::vector<Representation<F>> const& inds, Representation<F> const& m) {
  std::vector<int> out;
  for (auto const& x : inds) out.push_back(hom_dim(x, m));
  return out;
}

}  // namespace

TEST_CASE("Euler form") {
  auto const q = Quiver::parse(DynkinType::parse("A2"), "1>2");
  CHECK(euler_form(q, {1, 0}, {0, 1}) == -1);
  CHECK(euler_form(q, {0, 1}, {1, 0}) == 0);
  CHECK(euler_form(q, {1, 1}, {1, 1}) == 1);
  auto const d4 = Quiver::standard(DynkinType::parse("D4"));
  for (auto const& d : indecomposable_dims(d4)) CHECK(euler_form(d4, d, d) == 1);
}

TEST_CASE("quiver parsing and orientation") {
  auto const a3 = DynkinType::parse("A3");
  auto const q = Quiver::parse(a3, "1>2,3>2");
  CHECK(q.is_sink(1));
  CHECK(q.is_source(0));
  CHECK(q.is_source(2));
  CHECK(q.sink_first_order() == std::vector<int>{1, 0, 2});
  CHECK(Quiver::parse(a3, "2<1,2<3") == q);
  CHECK(Quiver::parse(a3, "") == Quiver::standard(a3));
  CHECK_THROWS_AS(Quiver::parse(a3, "1>3"), Error);
  CHECK_THROWS_AS(Quiver::parse(a3, "1>2"), Error);
  CHECK_THROWS_AS(Quiver::parse(a3, "1>2,2>1,2>3"), Error);
  CHECK_THROWS_AS(Quiver::parse(a3, "1>x,2>3"), Error);
  CHECK(q.reflected_at(1).is_source(1));
  auto const order = Quiver::parse(a3, "2>1,2>3").sink_first_order();
  CHECK(order.back() == 1);
}

TEST_CASE("indecomposable dimension vectors are the positive roots") {
  CHECK(indecomposable_dims(Quiver::standard(DynkinType::parse("A1"))).size() == 1);
  CHECK(indecomposable_dims(Quiver::standard(DynkinType::parse("A2"))).size() == 3);
  CHECK(indecomposable_dims(Quiver::standard(DynkinType::parse("A3"))).size() == 6);
  CHECK(indecomposable_dims(Quiver::standard(DynkinType::parse("A4"))).size() == 10);
  CHECK(indecomposable_dims(Quiver::standard(DynkinType::parse("D4"))).size() == 12);
  auto const d4 = indecomposable_dims(Quiver::standard(DynkinType::parse("D4")));
  CHECK(std::find(d4.begin(), d4.end(), DimVector{1, 2, 1, 1}) != d4.end());
}

TEST_CASE("tree modules are 0/1 bricks without self-extensions") {
  std::vector<Field> const fields{Field::prime(2), Field::prime(3), Field::prime(5),
                                  Field::rationals()};
  for (auto name : {"A1", "A2", "A3", "A4", "D4"}) {
    auto const t = DynkinType::parse(name);
    for (auto const& q : all_orientations(t)) {
      CAPTURE(q.orientation_string());
      for (auto const& d : indecomposable_dims(q)) {
        CAPTURE(format_dim(d));
        auto const m = tree_module(q, d);
        CHECK(m.zero_one());
        CHECK(m.dim == d);
        for (auto const& field : fields) {
          auto const rep = base_change(m, field);
          CHECK(hom_dim(rep, rep) == 1);
          CHECK(ext_dim(rep, rep) == 0);
        }
      }
    }
  }
}

TEST_CASE("tree modules of E types") {
  for (auto name : {"E6", "E7", "E8"}) {
    auto const q = Quiver::standard(DynkinType::parse(name));
    auto const dims = indecomposable_dims(q);
    auto const& top = dims.back();
    auto const m = tree_module(q, top);
    CHECK(m.zero_one());
    auto const rep = base_change(m, PrimeField(2));
    CHECK(hom_dim(rep, rep) == 1);
    CHECK(ext_dim(rep, rep) == 0);
  }
}

TEST_CASE("tree_module rejects non-roots") {
  auto const q = Quiver::standard(DynkinType::parse("A3"));
  CHECK_THROWS_AS(tree_module(q, {1, 0, 1}), Error);
  CHECK_THROWS_AS(tree_module(q, {0, 0, 0}), Error);
  CHECK_THROWS_AS(tree_module(q, {1, 1}), Error);
  CHECK_THROWS_AS(tree_module(q, {2, 1, 1}), Error);
}

TEST_CASE("hom dimension against brute force over GF(2)") {
  PrimeField const f2(2);
  for (auto orient : {"1>2,2>3", "1>2,3>2", "2>1,2>3"}) {
    auto const q = Quiver::parse(DynkinType::parse("A3"), orient);
    auto const inds = indecomposables(q, f2);
    for (auto const& x : inds) {
      for (auto const& y : inds) {
        CHECK(hom_dim(x, y) == brute_hom_dim_gf2(x, y));
      }
    }
  }
}

TEST_CASE("hom minus ext is the Euler form") {
  for (auto name : {"A3", "D4"}) {
    for (auto const& q : all_orientations(DynkinType::parse(name))) {
      PrimeField const f3(3);
      auto const inds = indecomposables(q, f3);
      for (auto const& x : inds) {
        for (auto const& y : inds) {
          auto const ext = ext_dim_via_resolution(x, y);
          CHECK(hom_dim(x, y) - ext == euler_form(q, x.dim, y.dim));
          CHECK(ext == ext_dim(x, y));
          CHECK(static_cast<int>(ext_basis(x, y).size()) == ext);
        }
      }
    }
  }
}

TEST_CASE("Ext between indecomposables is 0 or 1 and extensions have the right dims") {
  PrimeField const f2(2);
  auto const q = Quiver::standard(DynkinType::parse("A2"));
  auto const s1 = base_change(tree_module(q, {1, 0}), f2);
  auto const s2 = base_change(tree_module(q, {0, 1}), f2);
  // Arrow 1 -> 2: the nonsplit extension 0 -> S2 -> P1 -> S1 -> 0.
  CHECK(ext_dim(s1, s2) == 1);
  CHECK(ext_dim(s2, s1) == 0);
  auto const eta = ext_basis(s1, s2).front();
  auto const e = extension(s1, s2, eta);
  CHECK(e.dim == DimVector{1, 1});
  CHECK(decompose(e) == std::vector<DimVector>{{1, 1}});
  CHECK(decompose(direct_sum(s1, s2)) == std::vector<DimVector>{{0, 1}, {1, 0}});
}

TEST_CASE("decomposition agrees with the Hom-profile oracle") {
  std::mt19937 rng(11);
  for (auto name : {"A3", "D4"}) {
    auto const q = Quiver::standard(DynkinType::parse(name));
    PrimeField const f3(3);
    auto const inds = indecomposables(q, f3);
    for (std::size_t i = 0; i < inds.size(); ++i) {
      for (std::size_t j = 0; j < inds.size(); ++j) {
        auto const& x = inds[i];
        auto const& y = inds[j];
        std::vector<Representation<PrimeField>> middles{direct_sum(x, y)};
        auto const classes = ext_basis(x, y);
        if (!classes.empty()) middles.push_back(extension(x, y, classes[rng() % classes.size()]));
        for (auto const& e : middles) {
          auto const parts = decompose(e);
          std::vector<int> expected(inds.size(), 0);
          int total = 0;
          for (auto const& d : parts) {
            auto it = std::find_if(inds.begin(), inds.end(),
                                   [&](auto const& r) { return r.dim == d; });
            REQUIRE(it != inds.end());
            auto const prof = hom_profile(inds, *it);
            for (std::size_t k = 0; k < prof.size(); ++k) expected[k] += prof[k];
            for (int v : d) total += v;
          }
          CHECK(total == e.total_dim());
          CHECK(hom_profile(inds, e) == expected);
        }
      }
    }
  }
}

TEST_CASE("kernels, images and cokernels of morphisms") {
  PrimeField const f5(5);
  auto const q = Quiver::parse(DynkinType::parse("A3"), "1>2,3>2");
  auto const inds = indecomposables(q, f5);
  for (auto const& x : inds) {
    for (auto const& y : inds) {
      for (auto const& f : hom_basis(x, y)) {
        REQUIRE(is_morphism(x, y, f));
        auto const k = kernel(x, f);
        auto const im = image(y, f);
        auto const ck = cokernel(y, f);
        for (std::size_t v = 0; v < x.dim.size(); ++v) {
          CHECK(k.dim[v] + im.dim[v] == x.dim[v]);
          CHECK(im.dim[v] + ck.dim[v] == y.dim[v]);
        }
        CHECK(is_injective(f, f5) == (k.total_dim() == 0));
      }
    }
  }
}

TEST_CASE("representation validation") {
  PrimeField const f2(2);
  auto const q = Quiver::standard(DynkinType::parse("A2"));
  using Rep = Representation<PrimeField>;
  CHECK_THROWS_AS(Rep(q, f2, {1}, {}), Error);
  CHECK_THROWS_AS(Rep(q, f2, {1, -1}, {Matrix<ModInt>(0, 1, f2.zero())}), Error);
  CHECK_THROWS_AS(Rep(q, f2, {1, 1}, {Matrix<ModInt>(2, 1, f2.zero())}), Error);
  CHECK_THROWS_AS(Rep(q, f2, {1, 1}, {}), Error);
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(101), Error);
  auto const a = base_change(tree_module(q, {1, 1}), Field::prime(2));
  auto const b = base_change(tree_module(q, {1, 1}), Field::prime(3));
  CHECK_THROWS_AS(hom_dim(a, b), Error);
}
