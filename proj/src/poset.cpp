#include "thicklat/poset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "thicklat/error.hpp"

namespace thicklat {

FinitePoset::FinitePoset(std::vector<std::string> names,
                         std::vector<std::pair<std::size_t, std::size_t>> const& relations)
    : names_(std::move(names)) {
  auto const n = names_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (names_[i] == names_[j]) throw Error("duplicate poset point '" + names_[i] + "'");
    }
  }
  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
  for (auto [a, b] : relations) {
    if (a >= n || b >= n) throw Error("poset relation refers to an unknown point");
    leq_[a][b] = true;
  }
  // Warshall.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq_[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq_[k][j]) leq_[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq_[i][j] && leq_[j][i]) {
        throw Error("poset relations form a cycle through '" + names_[i] + "' and '" +
                    names_[j] + "'");
      }
    }
  }
}

FinitePoset FinitePoset::point() { return FinitePoset({"p"}, {}); }

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("p" + std::to_string(i + 1));
    if (i) rel.emplace_back(i - 1, i);
  }
  return FinitePoset(std::move(names), rel);
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i + 1));
  return FinitePoset(std::move(names), {});
}

FinitePoset FinitePoset::diamond() {
  return FinitePoset({"bottom", "left", "right", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

namespace {

std::size_t parse_count(std::string const& spec, std::size_t offset) {
  auto const digits = spec.substr(offset);
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError("expected a point count in poset '" + spec + "'", offset);
  }
  return static_cast<std::size_t>(std::stoul(digits));
}

std::string trim(std::string const& s) {
  auto const first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  auto const last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool valid_name(std::string const& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.' || c == '\'';
  });
}

}  // namespace

FinitePoset FinitePoset::from_spec(std::string const& spec) {
  if (spec == "point") return point();
  if (spec == "diamond") return diamond();
  if (spec.rfind("antichain", 0) == 0) return antichain(parse_count(spec, 9));
  if (spec.rfind("chain", 0) == 0) return chain(parse_count(spec, 5));
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw Error("cannot read poset file '" + spec.substr(1) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
  }
  throw Error("unknown poset '" + spec + "' (expected point, chainN, antichainN, diamond or @file)");
}

FinitePoset FinitePoset::parse(std::string const& text) {
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  auto declare = [&](std::string const& name, std::size_t pos) {
    if (!valid_name(name)) throw ParseError("invalid point name '" + name + "'", pos);
    auto const [it, fresh] = index.emplace(name, names.size());
    if (fresh) names.push_back(name);
    return it->second;
  };

  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    auto line_end = text.find('\n', line_start);
    if (line_end == std::string::npos) line_end = text.size();
    auto line = text.substr(line_start, line_end - line_start);
    if (auto const hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto const body = trim(line);
    auto const pos = line_start + line.find_first_not_of(" \t");
    if (!body.empty()) {
      if (body.rfind("point", 0) == 0 && body.size() > 5 && (body[5] == ' ' || body[5] == '\t')) {
        declare(trim(body.substr(5)), pos + 6);
      } else if (auto const lt = body.find('<'); lt != std::string::npos) {
        auto const a = trim(body.substr(0, lt));
        auto const b = trim(body.substr(lt + 1));
        if (b.find('<') != std::string::npos) {
          throw ParseError("one relation per line", pos + lt + 1);
        }
        auto const ia = declare(a, pos);
        auto const ib = declare(b, pos + lt + 1);
        if (ia == ib) throw ParseError("relation '" + body + "' is not strict", pos);
        rel.emplace_back(ia, ib);
      } else {
        throw ParseError("expected 'a<b' or 'point NAME', got '" + body + "'", pos);
      }
    }
    line_start = line_end + 1;
  }
  return FinitePoset(std::move(names), rel);
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (i != j && leq_[i][j]) out.emplace_back(i, j);
    }
  }
  return out;
}

HasseDiagram FinitePoset::hasse() const {
  return transitive_reduction(size(), [&](std::size_t a, std::size_t b) { return leq_[a][b]; });
}

FinitePoset FinitePoset::opposite() const {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (auto [a, b] : strict_pairs()) rel.emplace_back(b, a);
  return FinitePoset(names_, rel);
}

}  // namespace thicklat
