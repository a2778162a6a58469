#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "thicklat/hasse.hpp"

namespace thicklat {

// A finite poset on named points. Stored as the full reflexive-transitive
// order; construction from generating relations closes them.
class FinitePoset {
 public:
  FinitePoset() = default;
  // relations are strict pairs (a, b) meaning a < b. Throws Error on a cycle
  // or an out-of-range index.
  FinitePoset(std::vector<std::string> names,
              std::vector<std::pair<std::size_t, std::size_t>> const& relations);

  static FinitePoset point();
  static FinitePoset chain(std::size_t n);      // p1 < p2 < ... < pn
  static FinitePoset antichain(std::size_t n);  // p1, ..., pn
  static FinitePoset diamond();                 // bottom < left, right < top

  // "point", "chainN", "antichainN", "diamond", or "@path" for a file.
  static FinitePoset from_spec(std::string const& spec);
  // One "a<b" relation or "point NAME" declaration per line; '#' starts a
  // comment. Points named in relations are declared implicitly.
  static FinitePoset parse(std::string const& text);

  std::size_t size() const noexcept { return names_.size(); }
  std::string const& name(std::size_t i) const { return names_[i]; }
  std::vector<std::string> const& names() const noexcept { return names_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  // Strict pairs a < b.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;
  HasseDiagram hasse() const;

  FinitePoset opposite() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
};

}  // namespace thicklat
