#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "thicklat/error.hpp"
#include "thicklat/noncrossing.hpp"
#include "thicklat/root_system.hpp"

using namespace thicklat;

namespace {

RootSystem rs_of(char const* name) { return build_root_system(DynkinType::parse(name)); }

NcLattice lattice_of(char const* name) {
  auto rs = rs_of(name);
  auto c = coxeter_element(rs, Quiver::standard(rs.type()));
  return NcLattice(std::move(rs), std::move(c));
}

}  // namespace

TEST_CASE("Dynkin type validation") {
  CHECK_NOTHROW(DynkinType(Family::A, 1));
  CHECK_THROWS_AS(DynkinType(Family::A, 0), Error);
  CHECK_THROWS_AS(DynkinType(Family::D, 3), Error);
  CHECK_THROWS_AS(DynkinType(Family::E, 5), Error);
  CHECK_THROWS_AS(DynkinType(Family::E, 9), Error);
  CHECK_THROWS_AS(DynkinType::parse("B3"), Error);
  CHECK_THROWS_AS(DynkinType::parse("A"), Error);
  CHECK(DynkinType::parse("e6").name() == "E6");
}

TEST_CASE("positive roots match the norm-2 oracle") {
  for (auto name : {"A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6"}) {
    CAPTURE(name);
    auto const rs = rs_of(name);
    auto const oracle_roots = oracle::roots_by_norm(rs.cartan());
    std::set<IntVector> const got(rs.positive_roots().begin(), rs.positive_roots().end());
    CHECK(got == oracle_roots);
    CHECK(rs.positive_roots().size() == expected_positive_root_count(rs.type()));
  }
  CHECK(rs_of("A1").positive_roots().size() == 1);
  CHECK(rs_of("A2").positive_roots().size() == 3);
  CHECK(rs_of("D4").positive_roots().size() == 12);
  CHECK(rs_of("E7").positive_roots().size() == 63);
  CHECK(rs_of("E8").positive_roots().size() == 120);
}

TEST_CASE("Cartan matrix shape") {
  for (auto name : {"A3", "D5", "E6", "E8"}) {
    auto const rs = rs_of(name);
    auto const& c = rs.cartan();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      CHECK(c(i, i) == 2);
      for (std::size_t j = 0; j < rs.rank(); ++j) {
        CHECK(c(i, j) == c(j, i));
        if (i != j) CHECK((c(i, j) == 0 || c(i, j) == -1));
      }
    }
  }
}

TEST_CASE("reflections") {
  auto const rs = rs_of("A2");
  auto const s1 = reflection(rs, {1, 0});
  CHECK(s1.apply({1, 0}) == IntVector{-1, 0});
  // (alpha_1, alpha_1 + 2 alpha_2) = 0 spans the fixed line.
  CHECK(s1.apply({1, 2}) == IntVector{1, 2});
  CHECK(reflection_length(rs, s1) == 1);
  CHECK(reflection_length(rs, reflection(rs, {1, 1})) == 1);
  CHECK_THROWS_AS(reflection(rs, {2, 1}), Error);
  CHECK(reflection(rs, {-1, -1}) == reflection(rs, {1, 1}));
  for (auto name : {"A3", "D4", "E6"}) {
    auto const r = rs_of(name);
    auto const id = WeylElement::identity(r.rank());
    for (auto const& t : r.reflections()) {
      CHECK(t * t == id);
      CHECK(reflection_length(r, t) == 1);
      CHECK(r.is_weyl_element(t));
      CHECK(r.inverse(t) == t);
    }
    CHECK(reflection_length(r, id) == 0);
  }
}

TEST_CASE("reflection length equals shortest reflection word") {
  for (auto name : {"A3", "D4"}) {
    auto const rs = rs_of(name);
    auto const lengths = oracle::reflection_word_lengths(rs.reflections(), rs.rank());
    CHECK(lengths.size() == (std::string(name) == "A3" ? 24U : 192U));
    for (auto const& [mat, len] : lengths) {
      CHECK(reflection_length(rs, WeylElement(mat)) == len);
    }
  }
  // Coxeter element of A3 has absolute length 3.
  auto const rs = rs_of("A3");
  auto const c = coxeter_element(rs, Quiver::standard(rs.type()));
  CHECK(reflection_length(rs, c) == 3);
  auto const lengths = oracle::reflection_word_lengths(rs.reflections(), rs.rank());
  CHECK(lengths.at(c.mat()) == 3);
}

TEST_CASE("Coxeter element from orientation") {
  auto const rs = rs_of("A2");
  auto const q = Quiver::parse(rs.type(), "1>2");
  CHECK(coxeter_element(rs, q) == rs.simple_reflection(1) * rs.simple_reflection(0));
  auto const q2 = Quiver::parse(rs.type(), "2>1");
  CHECK(coxeter_element(rs, q2) == rs.simple_reflection(0) * rs.simple_reflection(1));
  auto const a1 = rs_of("A1");
  CHECK(coxeter_element(a1, Quiver::standard(a1.type())) == a1.simple_reflection(0));
  CHECK_THROWS_AS(coxeter_element(rs_of("A3"), q), Error);
  for (auto name : {"A3", "A4", "D4", "D5", "E6", "E7", "E8"}) {
    auto const r = rs_of(name);
    auto const c = coxeter_element(r, Quiver::standard(r.type()));
    CHECK(reflection_length(r, c) == static_cast<int>(r.rank()));
    CHECK(r.is_weyl_element(c));
  }
}

TEST_CASE("NC counts equal the W-Catalan numbers") {
  for (auto name : {"A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6"}) {
    CAPTURE(name);
    auto const rs = rs_of(name);
    auto const c = coxeter_element(rs, Quiver::standard(rs.type()));
    auto const nc = enumerate_nc(rs, c);
    CHECK(static_cast<std::int64_t>(nc.size()) == oracle::w_catalan(rs.type()));
  }
  CHECK(oracle::w_catalan(DynkinType::parse("A2")) == 5);
  CHECK(oracle::w_catalan(DynkinType::parse("D4")) == 50);
  CHECK(oracle::w_catalan(DynkinType::parse("E6")) == 833);
}

TEST_CASE("NC enumeration rejects short elements") {
  auto const rs = rs_of("A3");
  CHECK_THROWS_AS(enumerate_nc(rs, rs.simple_reflection(0)), Error);
}

TEST_CASE("NC enumeration ignores reflection order") {
  std::mt19937 rng(7);
  for (auto name : {"A3", "D4"}) {
    auto const rs = rs_of(name);
    auto const c = coxeter_element(rs, Quiver::standard(rs.type()));
    auto const base = enumerate_nc(rs, c);
    auto refl = rs.reflections();
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(refl.begin(), refl.end(), rng);
      CHECK(enumerate_nc(rs, c, refl) == base);
    }
  }
}

TEST_CASE("NC of other orientations has the same size") {
  auto const rs = rs_of("D4");
  for (auto const* o : {"1>2,3>2,4>2", "2>1,2>3,2>4", "1>2,2>3,4>2"}) {
    auto const c = coxeter_element(rs, Quiver::parse(rs.type(), o));
    CHECK(enumerate_nc(rs, c).size() == 50);
  }
}

TEST_CASE("absolute order is a partial order") {
  for (auto name : {"A3", "A4", "D4"}) {
    CAPTURE(name);
    auto const l = lattice_of(name);
    auto const n = l.size();
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) le[i][j] = l.leq(i, j);
    }
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      ok = ok && le[i][i] && le[l.bottom()][i] && le[i][l.top()];
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && le[i][j] && le[j][i]) ok = false;
        if (!le[i][j]) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (le[j][k] && !le[i][k]) ok = false;
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("meet and join obey lattice laws") {
  for (auto name : {"A3", "D4"}) {
    CAPTURE(name);
    auto const l = lattice_of(name);
    bool ok = true;
    for (std::size_t i = 0; i < l.size(); ++i) {
      ok = ok && l.meet(i, i) == i && l.join(i, i) == i;
      ok = ok && l.meet(i, l.bottom()) == l.bottom() && l.join(i, l.top()) == l.top();
      for (std::size_t j = 0; j < l.size(); ++j) {
        auto const m = l.meet(i, j);
        auto const jn = l.join(i, j);
        ok = ok && m == l.meet(j, i) && jn == l.join(j, i);
        ok = ok && l.join(i, m) == i && l.meet(i, jn) == i;
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("A2 atoms are pairwise incomparable and join to c") {
  auto const l = lattice_of("A2");
  std::vector<std::size_t> atoms;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l.length(i) == 1) atoms.push_back(i);
  }
  REQUIRE(atoms.size() == 3);
  for (auto a : atoms) {
    for (auto b : atoms) {
      if (a == b) continue;
      CHECK_FALSE(l.leq(a, b));
      CHECK(l.join(a, b) == l.top());
      CHECK(l.meet(a, b) == l.bottom());
    }
  }
  auto const h = l.hasse();
  CHECK(h.covers.size() == 6);
}

TEST_CASE("free-function meet and join agree with the lattice") {
  auto const l = lattice_of("A3");
  auto const& rs = l.root_system();
  auto const& e = l.elements();
  CHECK(nc_meet(rs, e[3], e[7]) == e[l.meet(3, 7)]);
  CHECK(nc_join(rs, e[3], e[7]) == e[l.join(3, 7)]);
  CHECK(nc_leq(rs, e[l.bottom()], e[5]));
  NcElement const foreign{e[0].elem, WeylElement::identity(rs.rank())};
  CHECK_THROWS_AS(nc_leq(rs, e[0], foreign), Error);
}

TEST_CASE("Kreweras complement stays in NC") {
  for (auto name : {"A3", "A4", "D4"}) {
    auto const l = lattice_of(name);
    auto const& rs = l.root_system();
    for (auto const& x : l.elements()) {
      auto const complement = rs.inverse(x.elem) * l.coxeter();
      CHECK(l.index_of(complement).has_value());
    }
  }
}

TEST_CASE("type A set partitions") {
  auto const l = lattice_of("A2");
  auto const& rs = l.root_system();
  std::set<std::string> labels;
  for (auto const& x : l.elements()) labels.insert(format_partition(nc_to_set_partition(rs, x)));
  CHECK(labels == std::set<std::string>{"(1),(2),(3)", "(1,2),(3)", "(1),(2,3)", "(1,3),(2)",
                                        "(1,2,3)"});
  CHECK(format_partition(nc_to_set_partition(rs, l.elements()[l.bottom()])) == "(1),(2),(3)");
  CHECK(format_partition(nc_to_set_partition(rs, l.elements()[l.top()])) == "(1,2,3)");
  CHECK(format_partition(nc_to_set_partition(rs, {reflection(rs, {1, 0}), l.coxeter()})) ==
        "(1,2),(3)");
  CHECK(format_partition(nc_to_set_partition(rs, {reflection(rs, {0, 1}), l.coxeter()})) ==
        "(1),(2,3)");
  CHECK(format_partition(nc_to_set_partition(rs, {reflection(rs, {1, 1}), l.coxeter()})) ==
        "(1,3),(2)");

  auto const d4 = rs_of("D4");
  CHECK_THROWS_AS(nc_to_set_partition(d4, {WeylElement::identity(4), WeylElement::identity(4)}),
                  Error);
}

TEST_CASE("type A partitions are injective, noncrossing, with the right block count") {
  for (auto name : {"A3", "A4", "A5"}) {
    auto const l = lattice_of(name);
    auto const& rs = l.root_system();
    std::vector<int> natural(rs.rank() + 1);
    std::iota(natural.begin(), natural.end(), 1);
    std::set<SetPartition> images;
    for (std::size_t i = 0; i < l.size(); ++i) {
      auto const p = nc_to_set_partition(rs, l.elements()[i]);
      CHECK(is_noncrossing(p, natural));
      CHECK(p.size() == rs.rank() + 1 - static_cast<std::size_t>(l.length(i)));
      images.insert(p);
    }
    CHECK(images.size() == l.size());
  }
  CHECK_FALSE(is_noncrossing({{1, 3}, {2, 4}}, {1, 2, 3, 4}));
  CHECK(is_noncrossing({{1, 4}, {2, 3}}, {1, 2, 3, 4}));
}

TEST_CASE("reflection factorizations are minimal and multiply back") {
  auto const l = lattice_of("D4");
  auto const& rs = l.root_system();
  for (std::size_t i = 0; i < l.size(); ++i) {
    auto const factors = reflection_factorization(rs, l.elements()[i].elem);
    CHECK(factors.size() == static_cast<std::size_t>(l.length(i)));
    auto w = WeylElement::identity(rs.rank());
    for (auto const& r : factors) w = w * reflection(rs, r);
    CHECK(w == l.elements()[i].elem);
  }
}
