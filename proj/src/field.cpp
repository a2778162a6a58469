#include "thicklat/field.hpp"

#include <cctype>

namespace thicklat {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p > kMaxPrime) {
    throw Error("unsupported prime field characteristic " + std::to_string(p) +
                " (need a prime <= " + std::to_string(kMaxPrime) + ")");
  }
}

ModInt PrimeField::from_rational(Rational const& r) const {
  BigInt const num = numerator(r) % p_;
  BigInt const den = denominator(r) % p_;
  if (den == 0) {
    throw Error("denominator divisible by " + std::to_string(p_));
  }
  return from_int(num.convert_to<std::int64_t>()) /
         from_int(den.convert_to<std::int64_t>());
}

std::vector<ModInt> PrimeField::elements() const {
  std::vector<ModInt> out;
  out.reserve(p_);
  for (std::uint32_t i = 0; i < p_; ++i) {
    out.emplace_back(i, p_);
  }
  return out;
}

Field Field::prime(std::uint32_t p) {
  PrimeField const check(p);
  return Field(check.characteristic());
}

Field Field::parse(std::string const& text) {
  if (text == "Q" || text == "QQ" || text == "0" || text == "rationals") {
    return rationals();
  }
  std::string digits = text;
  if (digits.rfind("GF(", 0) == 0 && digits.size() > 4 && digits.back() == ')') {
    digits = digits.substr(3, digits.size() - 4);
  }
  if (digits.empty() || digits.size() > 6) {
    throw Error("cannot parse field '" + text + "'");
  }
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error("cannot parse field '" + text + "'");
    }
  }
  return prime(static_cast<std::uint32_t>(std::stoul(digits)));
}

std::string Field::name() const {
  return characteristic_ == 0 ? "Q"
                              : "GF(" + std::to_string(characteristic_) + ")";
}

}  // namespace thicklat
