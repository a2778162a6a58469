#include "thicklat/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

#include "thicklat/error.hpp"
#include "thicklat/linalg.hpp"

namespace thicklat {

DynkinType::DynkinType(Family family, int rank) : family_(family), rank_(rank) {
  switch (family) {
    case Family::A:
      if (rank < 1) throw Error("type A needs rank >= 1");
      break;
    case Family::D:
      if (rank < 4) throw Error("type D needs rank >= 4");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw Error("type E needs rank 6, 7 or 8");
      break;
  }
}

DynkinType DynkinType::parse(std::string const& text) {
  if (text.size() < 2) throw Error("cannot parse Dynkin type '" + text + "'");
  Family family;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A':
      family = Family::A;
      break;
    case 'D':
      family = Family::D;
      break;
    case 'E':
      family = Family::E;
      break;
    default:
      throw Error("unsupported Dynkin family in '" + text + "' (need A, D or E)");
  }
  auto const digits = text.substr(1);
  if (digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error("cannot parse Dynkin type '" + text + "'");
  }
  return DynkinType(family, std::stoi(digits));
}

std::string DynkinType::name() const {
  char const letter = family_ == Family::A ? 'A' : family_ == Family::D ? 'D' : 'E';
  return std::string(1, letter) + std::to_string(rank_);
}

std::vector<std::pair<int, int>> DynkinType::edges() const {
  std::vector<std::pair<int, int>> out;
  int const n = rank_;
  switch (family_) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) out.emplace_back(i, i + 1);
      break;
    case Family::D:
      // 1 - 2 - ... - (n-2), with n-1 and n both attached to n-2.
      for (int i = 0; i + 3 < n; ++i) out.emplace_back(i, i + 1);
      out.emplace_back(n - 3, n - 2);
      out.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      // 1 - 3 - 4 - 5 - ... with 2 attached to 4.
      out.emplace_back(0, 2);
      out.emplace_back(1, 3);
      for (int i = 2; i + 1 < n; ++i) out.emplace_back(i, i + 1);
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntVector WeylElement::apply(IntVector const& v) const {
  if (v.size() != mat_.cols()) throw Error("Weyl element applied to wrong-length vector");
  IntVector out(mat_.rows(), 0);
  for (std::size_t r = 0; r < mat_.rows(); ++r) {
    for (std::size_t c = 0; c < mat_.cols(); ++c) out[r] += mat_(r, c) * v[c];
  }
  return out;
}

namespace {

bool is_positive(IntVector const& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x >= 0; }) &&
         std::any_of(v.begin(), v.end(), [](auto x) { return x > 0; });
}

std::int64_t height(IntVector const& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

}  // namespace

RootSystem::RootSystem(DynkinType type) : type_(type) {
  auto const n = rank();
  cartan_ = IntMatrix::identity(n, 0, 2);
  for (auto [i, j] : type_.edges()) {
    cartan_(i, j) = -1;
    cartan_(j, i) = -1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    simple_.push_back(e);
  }

  // Orbit closure of the simple roots under simple reflections, keeping the
  // positive ones.
  std::set<IntVector> seen(simple_.begin(), simple_.end());
  std::deque<IntVector> queue(simple_.begin(), simple_.end());
  while (!queue.empty()) {
    auto const beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t pairing = 0;
      for (std::size_t c = 0; c < n; ++c) pairing += cartan_(i, c) * beta[c];
      auto image = beta;
      image[i] -= pairing;
      if (is_positive(image) && seen.insert(image).second) queue.push_back(image);
    }
  }
  positive_.assign(seen.begin(), seen.end());
  std::sort(positive_.begin(), positive_.end(), [](auto const& a, auto const& b) {
    auto const ha = height(a);
    auto const hb = height(b);
    if (ha != hb) return ha < hb;
    return b < a;
  });
  for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = k;
  THICKLAT_ASSERT(positive_.size() == expected_positive_root_count(type_),
                  "positive root count for " + type_.name());

  for (auto const& beta : positive_) reflections_.push_back(reflection(*this, beta));
}

std::optional<std::size_t> RootSystem::positive_root_index(IntVector const& v) const {
  auto const it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(IntVector const& v) const {
  if (positive_root_index(v)) return true;
  IntVector neg(v.size());
  std::transform(v.begin(), v.end(), neg.begin(), [](auto x) { return -x; });
  return positive_root_index(neg).has_value();
}

std::int64_t RootSystem::form(IntVector const& v, IntVector const& w) const {
  if (v.size() != rank() || w.size() != rank()) throw Error("form: wrong vector length");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) total += v[i] * cartan_(i, j) * w[j];
  }
  return total;
}

WeylElement RootSystem::simple_reflection(std::size_t i) const {
  if (i >= rank()) throw Error("simple reflection index out of range");
  return reflections_[*positive_root_index(simple_[i])];
}

WeylElement RootSystem::inverse(WeylElement const& w) const {
  RationalField const q;
  auto const inv = linalg::inverse(q, linalg::convert(q, w.mat()));
  THICKLAT_ASSERT(inv.has_value(), "Weyl element must be invertible");
  IntMatrix out(rank(), rank(), 0);
  for (std::size_t r = 0; r < rank(); ++r) {
    for (std::size_t c = 0; c < rank(); ++c) {
      auto const& x = (*inv)(r, c);
      THICKLAT_ASSERT(denominator(x) == 1, "Weyl inverse must be integral");
      out(r, c) = numerator(x).convert_to<std::int64_t>();
    }
  }
  return WeylElement(std::move(out));
}

bool RootSystem::is_weyl_element(WeylElement const& w) const {
  if (w.rank() != rank() || w.mat().cols() != rank()) return false;
  std::set<IntVector> images;
  for (auto const& beta : positive_) {
    auto const image = w.apply(beta);
    if (!is_root(image)) return false;
    images.insert(image);
  }
  return images.size() == positive_.size();
}

RootSystem build_root_system(DynkinType const& type) { return RootSystem(type); }

WeylElement reflection(RootSystem const& rs, IntVector const& root) {
  if (root.size() != rs.rank() || !rs.is_root(root)) {
    throw Error("not a root of " + rs.type().name() + ": " + format_vector(root));
  }
  // s(v) = v - (root^T C v) root, so the matrix is I - root (root^T C).
  auto const n = rs.rank();
  IntVector row(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) row[j] += root[i] * rs.cartan()(i, j);
  }
  IntMatrix m = IntMatrix::identity(n, 0, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= root[i] * row[j];
  }
  return WeylElement(std::move(m));
}

int reflection_length(RootSystem const& rs, WeylElement const& w) {
  if (w.rank() != rs.rank()) throw Error("reflection_length: rank mismatch");
  return static_cast<int>(integer_rank(w.mat() - IntMatrix::identity(rs.rank(), 0, 1)));
}

std::size_t expected_positive_root_count(DynkinType const& type) {
  auto const n = static_cast<std::size_t>(type.rank());
  switch (type.family()) {
    case Family::A:
      return n * (n + 1) / 2;
    case Family::D:
      return n * (n - 1);
    case Family::E:
      return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  return 0;
}

std::string format_vector(IntVector const& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace thicklat
