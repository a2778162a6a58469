#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "thicklat/error.hpp"

namespace thicklat {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Element of GF(p). The modulus travels with the value so that generic
// linear algebra can use plain operators.
class ModInt {
 public:
  ModInt() = default;
  ModInt(std::int64_t value, std::uint32_t modulus) : p_(modulus) {
    auto const m = static_cast<std::int64_t>(modulus);
    v_ = static_cast<std::uint32_t>(((value % m) + m) % m);
  }

  std::uint32_t value() const noexcept { return v_; }
  std::uint32_t modulus() const noexcept { return p_; }

  friend ModInt operator+(ModInt a, ModInt b) {
    return raw((a.v_ + b.v_) % a.p_, a.p_);
  }
  friend ModInt operator-(ModInt a, ModInt b) {
    return raw((a.v_ + a.p_ - b.v_) % a.p_, a.p_);
  }
  friend ModInt operator*(ModInt a, ModInt b) {
    return raw(static_cast<std::uint32_t>(
                   (static_cast<std::uint64_t>(a.v_) * b.v_) % a.p_),
               a.p_);
  }
  ModInt operator-() const { return raw((p_ - v_) % p_, p_); }

  ModInt inverse() const {
    if (v_ == 0) {
      throw Error("division by zero in GF(" + std::to_string(p_) + ")");
    }
    // Fermat; p <= 97 so the exponent is tiny.
    std::uint64_t result = 1;
    std::uint64_t base = v_;
    std::uint32_t e = p_ - 2;
    while (e) {
      if (e & 1U) result = result * base % p_;
      base = base * base % p_;
      e >>= 1U;
    }
    return raw(static_cast<std::uint32_t>(result), p_);
  }
  friend ModInt operator/(ModInt a, ModInt b) { return a * b.inverse(); }

  friend bool operator==(ModInt a, ModInt b) { return a.v_ == b.v_; }
  friend bool operator<(ModInt a, ModInt b) { return a.v_ < b.v_; }

  friend std::ostream& operator<<(std::ostream& os, ModInt a) {
    return os << a.v_;
  }

 private:
  static ModInt raw(std::uint32_t v, std::uint32_t p) {
    ModInt m;
    m.v_ = v;
    m.p_ = p;
    return m;
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 1;
};

bool is_prime(std::uint32_t n);

// Largest prime field supported by the representation routines.
inline constexpr std::uint32_t kMaxPrime = 97;

class PrimeField {
 public:
  using value_type = ModInt;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  ModInt zero() const { return ModInt(0, p_); }
  ModInt one() const { return ModInt(1, p_); }
  ModInt from_int(std::int64_t v) const { return ModInt(v, p_); }
  ModInt from_rational(Rational const& r) const;
  std::vector<ModInt> elements() const;
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(PrimeField const&, PrimeField const&) = default;

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using value_type = Rational;

  std::uint32_t characteristic() const noexcept { return 0; }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t v) const { return Rational(v); }
  Rational from_rational(Rational const& r) const { return r; }
  std::string name() const { return "Q"; }

  friend bool operator==(RationalField const&, RationalField const&) = default;
};

// Runtime choice of coefficient field: GF(p) for prime p <= 97, or Q.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);
  // "2", "GF(3)", "Q", "QQ", "0"
  static Field parse(std::string const& text);

  std::uint32_t characteristic() const noexcept { return characteristic_; }
  bool is_finite() const noexcept { return characteristic_ != 0; }
  std::string name() const;

  friend bool operator==(Field const&, Field const&) = default;

 private:
  explicit Field(std::uint32_t c) : characteristic_(c) {}
  std::uint32_t characteristic_;
};

}  // namespace thicklat
