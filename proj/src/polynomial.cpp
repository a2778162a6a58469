#include "thicklat/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "thicklat/error.hpp"

namespace thicklat {

namespace {

bool valid_identifier(std::string const& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (unsigned char c : s) {
    if (!std::isalnum(c) && c != '_') return false;
  }
  return true;
}

std::vector<std::string> split_commas(std::string const& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

PolyRing::PolyRing(std::vector<std::string> variables) : vars_(std::move(variables)) {
  std::set<std::string> seen;
  for (auto const& v : vars_) {
    if (!valid_identifier(v)) throw Error("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error("variable '" + v + "' declared twice");
  }
}

PolyRing PolyRing::parse(std::string const& text) {
  if (text.find_first_not_of(" \t") == std::string::npos) return PolyRing({});
  return PolyRing(split_commas(text));
}

std::size_t PolyRing::index_of(std::string const& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return vars_.size();
}

Polynomial::Polynomial(std::size_t nvars, Rational const& c) {
  if (c != 0) terms_.emplace(Exponents(nvars, 0), c);
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Polynomial p;
  Exponents e(nvars, 0);
  e[i] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

void Polynomial::add_term(Exponents const& e, Rational const& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(Polynomial const& o) {
  for (auto const& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(Polynomial const& o) {
  for (auto const& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

Polynomial operator*(Polynomial const& a, Polynomial const& b) {
  Polynomial out;
  for (auto const& [ea, ca] : a.terms_) {
    for (auto const& [eb, cb] : b.terms_) {
      if (ea.size() != eb.size()) throw Error("multiplying polynomials from different rings");
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned e, std::size_t nvars) const {
  Polynomial out(nvars, Rational(1));
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

Rational Polynomial::evaluate(std::vector<Rational> const& point) const {
  Rational total = 0;
  for (auto const& [e, c] : terms_) {
    if (e.size() != point.size()) {
      throw Error("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                  std::to_string(e.size()) + " variables");
    }
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    }
    total += t;
  }
  return total;
}

std::string Polynomial::to_string(PolyRing const& ring) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest total degree first, then reverse lexicographic exponents.
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.rbegin(), terms_.rend());
  std::stable_sort(ordered.begin(), ordered.end(), [](auto const& a, auto const& b) {
    int da = 0;
    int db = 0;
    for (int x : a.first) da += x;
    for (int x : b.first) db += x;
    return da > db;
  });
  for (auto const& [e, c] : ordered) {
    bool const constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string body;
    if (constant || mag != 1) {
      std::ostringstream s;
      s << mag;
      body = s.str();
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += ring.variables().at(i);
      if (e[i] > 1) body += "^" + std::to_string(e[i]);
    }
    out += body;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, Polynomial const& p) {
  if (p.terms().empty()) return os << "0";
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.terms().begin()->first.size(); ++i) names.push_back("x" + std::to_string(i + 1));
  return os << p.to_string(PolyRing(names));
}

namespace {

constexpr int kMaxExponent = 64;

class Parser {
 public:
  Parser(PolyRing const& ring, std::string const& text) : ring_(ring), text_(text) {}

  Polynomial run() {
    auto p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(std::string const& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    auto p = term();
    for (;;) {
      auto const c = peek();
      if (c == '+') {
        ++pos_;
        p += term();
      } else if (c == '-') {
        ++pos_;
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    auto p = factor();
    for (;;) {
      auto const c = peek();
      if (c == '*') {
        ++pos_;
        p = p * factor();
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_') {
        fail("juxtaposition is not allowed; write '*' between factors");
      } else {
        return p;
      }
    }
  }

  Polynomial factor() {
    auto const c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    auto base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      auto const start = pos_;
      auto const digits = read_digits();
      if (digits.empty()) fail("expected a nonnegative integer exponent");
      if (digits.size() > 3 || std::stoi(digits) > kMaxExponent) {
        pos_ = start;
        fail("exponent larger than " + std::to_string(kMaxExponent));
      }
      if (peek() == '^') fail("chained exponents need parentheses");
      base = base.pow(static_cast<unsigned>(std::stoi(digits)), ring_.size());
    }
    return base;
  }

  std::string read_digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out += text_[pos_++];
    }
    return out;
  }

  Polynomial primary() {
    auto const c = peek();
    auto const n = ring_.size();
    if (c == '(') {
      ++pos_;
      auto p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value{BigInt(read_digits())};
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        auto const den = read_digits();
        if (den.empty()) fail("expected a denominator");
        BigInt const d(den);
        if (d == 0) fail("zero denominator");
        value /= Rational(d);
      }
      return Polynomial(n, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      auto const start = pos_;
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        name += text_[pos_++];
      }
      auto const i = ring_.index_of(name);
      if (i == n) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(n, i);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  PolyRing const& ring_;
  std::string const& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(PolyRing const& ring, std::string const& text) {
  return Parser(ring, text).run();
}

std::vector<Rational> parse_point(std::string const& text) {
  std::vector<Rational> out;
  std::size_t offset = 0;
  for (auto const& item : split_commas(text)) {
    auto const slash = item.find('/');
    auto const num = item.substr(0, slash);
    auto const den = slash == std::string::npos ? std::string("1") : item.substr(slash + 1);
    auto const digits = [](std::string const& s, bool sign) {
      std::size_t start = sign && !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
      return s.size() > start &&
             std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                         [](unsigned char ch) { return std::isdigit(ch); });
    };
    if (!digits(num, true) || !digits(den, false)) {
      throw ParseError("expected a rational coordinate, got '" + item + "'", offset);
    }
    BigInt const d(den);
    if (d == 0) throw ParseError("zero denominator in '" + item + "'", offset);
    BigInt const nn(num[0] == '+' ? num.substr(1) : num);
    out.push_back(Rational(nn) / Rational(d));
    offset += item.size() + 1;
  }
  return out;
}

}  // namespace thicklat
