#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "thicklat/field.hpp"

namespace thicklat {

// Q[x_1, ..., x_n] with named variables.
class PolyRing {
 public:
  // Throws Error on an empty, invalid or repeated name.
  explicit PolyRing(std::vector<std::string> variables);
  // Comma-separated names, e.g. "x,y".
  static PolyRing parse(std::string const& text);

  std::size_t size() const noexcept { return vars_.size(); }
  std::vector<std::string> const& variables() const noexcept { return vars_; }
  // Index of a variable, or size() if absent.
  std::size_t index_of(std::string const& name) const;

  friend bool operator==(PolyRing const&, PolyRing const&) = default;

 private:
  std::vector<std::string> vars_;
};

using Exponents = std::vector<int>;

// Sparse polynomial with exact rational coefficients; no zero terms stored.
class Polynomial {
 public:
  Polynomial() = default;  // zero, in any ring
  Polynomial(std::size_t nvars, Rational const& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  std::map<Exponents, Rational> const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational evaluate(std::vector<Rational> const& point) const;
  std::string to_string(PolyRing const& ring) const;

  Polynomial& operator+=(Polynomial const& o);
  Polynomial& operator-=(Polynomial const& o);
  friend Polynomial operator+(Polynomial a, Polynomial const& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, Polynomial const& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a);
  friend Polynomial operator*(Polynomial const& a, Polynomial const& b);
  Polynomial pow(unsigned e, std::size_t nvars) const;

  friend bool operator==(Polynomial const&, Polynomial const&) = default;

 private:
  void add_term(Exponents const& e, Rational const& c);
  std::map<Exponents, Rational> terms_;
};

// Variables print as x1, x2, ... since no ring is attached.
std::ostream& operator<<(std::ostream& os, Polynomial const& p);

// Integer or rational literals (3, 2/5), variables, + - * ^, parentheses.
// Juxtaposition is rejected. Throws ParseError with the offending offset.
Polynomial parse_polynomial(PolyRing const& ring, std::string const& text);

// Comma-separated rationals, e.g. "0,1/2,-3".
std::vector<Rational> parse_point(std::string const& text);

}  // namespace thicklat
