#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thicklat/matrix.hpp"

namespace thicklat {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = Matrix<std::int64_t>;

enum class Family { A, D, E };

// A simply-laced Dynkin type: A_n (n >= 1), D_n (n >= 4), E_6, E_7, E_8.
class DynkinType {
 public:
  DynkinType(Family family, int rank);

  // "A3", "D4", "E6" (case-insensitive family letter).
  static DynkinType parse(std::string const& text);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  std::string name() const;

  // Edges of the Dynkin diagram in Bourbaki labelling, 0-based, each pair
  // listed once with first < second.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(DynkinType const&, DynkinType const&) = default;

 private:
  Family family_;
  int rank_;
};

// An element of the Weyl group, as its matrix on root-basis coordinates.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(IntMatrix mat) : mat_(std::move(mat)) {}

  static WeylElement identity(std::size_t rank) {
    return WeylElement(IntMatrix::identity(rank, 0, 1));
  }

  IntMatrix const& mat() const noexcept { return mat_; }
  std::size_t rank() const noexcept { return mat_.rows(); }

  IntVector apply(IntVector const& v) const;

  friend WeylElement operator*(WeylElement const& a, WeylElement const& b) {
    return WeylElement(a.mat_ * b.mat_);
  }
  friend bool operator==(WeylElement const& a, WeylElement const& b) {
    return a.mat_ == b.mat_;
  }
  friend bool operator<(WeylElement const& a, WeylElement const& b) {
    return a.mat_ < b.mat_;
  }

 private:
  IntMatrix mat_;
};

class RootSystem {
 public:
  explicit RootSystem(DynkinType type);

  DynkinType const& type() const noexcept { return type_; }
  std::size_t rank() const noexcept { return static_cast<std::size_t>(type_.rank()); }
  IntMatrix const& cartan() const noexcept { return cartan_; }
  std::vector<IntVector> const& simple_roots() const noexcept { return simple_; }
  // Ordered by height, ties broken by reverse lexicographic order so that
  // e_1 precedes e_2.
  std::vector<IntVector> const& positive_roots() const noexcept { return positive_; }

  std::optional<std::size_t> positive_root_index(IntVector const& v) const;
  bool is_root(IntVector const& v) const;

  // Symmetric bilinear form v^T C w.
  std::int64_t form(IntVector const& v, IntVector const& w) const;

  WeylElement simple_reflection(std::size_t i) const;
  // Reflections in all positive roots, in positive_roots() order.
  std::vector<WeylElement> const& reflections() const noexcept { return reflections_; }

  WeylElement inverse(WeylElement const& w) const;
  // True when w maps the root set onto itself.
  bool is_weyl_element(WeylElement const& w) const;

 private:
  DynkinType type_;
  IntMatrix cartan_;
  std::vector<IntVector> simple_;
  std::vector<IntVector> positive_;
  std::map<IntVector, std::size_t> index_;
  std::vector<WeylElement> reflections_;
};

RootSystem build_root_system(DynkinType const& type);

// Reflection s_root(v) = v - (root, v) root. Accepts positive or negative
// roots; anything else is an Error.
WeylElement reflection(RootSystem const& rs, IntVector const& root);

// Absolute length: rank minus the dimension of the fixed space.
int reflection_length(RootSystem const& rs, WeylElement const& w);

// Number of positive roots for the type (closed form).
std::size_t expected_positive_root_count(DynkinType const& type);

std::string format_vector(IntVector const& v);

}  // namespace thicklat
