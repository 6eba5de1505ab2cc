#include "psweyl/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace psw {

namespace {

bool valid_rank(CartanType type, int rank) {
  switch (type) {
    case CartanType::A: return rank >= 1;
    case CartanType::B: return rank >= 2;
    case CartanType::C: return rank >= 2;
    case CartanType::D: return rank >= 4;
    case CartanType::E: return rank >= 6 && rank <= 8;
    case CartanType::F: return rank == 4;
    case CartanType::G: return rank == 2;
  }
  return false;
}

std::string type_string(CartanType type, int rank) {
  return std::string(1, static_cast<char>(type)) + std::to_string(rank);
}

// Symmetric Gram matrix (alpha_i, alpha_j) with short roots of squared length 2.
IntMatrix bourbaki_gram(CartanType type, int rank) {
  const auto n = static_cast<std::size_t>(rank);
  IntMatrix g(n);
  auto link = [&](int i, int j, IntMatrix::value_type v) {  // 1-based
    g(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = v;
    g(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = v;
  };
  for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;

  switch (type) {
    case CartanType::A:
      for (int i = 1; i < rank; ++i) link(i, i + 1, -1);
      break;
    case CartanType::B:
      // alpha_1 .. alpha_{r-1} long, alpha_r short
      for (int i = 1; i < rank; ++i) g(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) = 4;
      for (int i = 1; i < rank; ++i) link(i, i + 1, -2);
      break;
    case CartanType::C:
      // alpha_1 .. alpha_{r-1} short, alpha_r long
      g(n - 1, n - 1) = 4;
      for (int i = 1; i < rank - 1; ++i) link(i, i + 1, -1);
      link(rank - 1, rank, -2);
      break;
    case CartanType::D:
      for (int i = 1; i < rank - 1; ++i) link(i, i + 1, -1);
      link(rank - 2, rank, -1);
      break;
    case CartanType::E:
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < rank; ++i) link(i, i + 1, -1);
      break;
    case CartanType::F:
      g(0, 0) = 4;
      g(1, 1) = 4;
      link(1, 2, -2);
      link(2, 3, -2);
      link(3, 4, -1);
      break;
    case CartanType::G:
      g(1, 1) = 6;
      link(1, 2, -3);
      break;
  }
  return g;
}

std::vector<int> negated(std::span<const int> v) {
  std::vector<int> out(v.begin(), v.end());
  for (auto& x : out) x = -x;
  return out;
}

}  // namespace

std::string CartanDatum::label() const { return type_string(type, rank); }

IntMatrix CartanDatum::gram() const {
  const auto n = static_cast<std::size_t>(rank);
  IntMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = symmetrizers[i] * cartan(i, j);
  return g;
}

CartanDatum make_cartan_datum(CartanType type, int rank) {
  if (!valid_rank(type, rank)) {
    throw std::invalid_argument("no finite root system of type " + type_string(type, rank));
  }
  const IntMatrix g = bourbaki_gram(type, rank);
  const auto n = static_cast<std::size_t>(rank);
  CartanDatum d;
  d.type = type;
  d.rank = rank;
  d.cartan = IntMatrix(n);
  d.symmetrizers.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    d.symmetrizers[i] = static_cast<int>(g(i, i) / 2);
    for (std::size_t j = 0; j < n; ++j) d.cartan(i, j) = 2 * g(i, j) / g(i, i);
  }
  return d;
}

std::pair<CartanType, int> parse_type_label(std::string_view label) {
  auto bad = [&] { return std::invalid_argument("malformed root system label '" + std::string(label) + "'"); };
  if (label.size() < 2) throw bad();
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(label.front())));
  if (letter < 'A' || letter > 'G') throw bad();
  int rank = 0;
  for (char c : label.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    rank = rank * 10 + (c - '0');
    if (rank > 1000) throw bad();
  }
  const auto type = static_cast<CartanType>(letter);
  if (!valid_rank(type, rank)) {
    throw std::invalid_argument("no finite root system of type " + type_string(type, rank));
  }
  return {type, rank};
}

int Root::height() const {
  int h = 0;
  for (int c : coords) h += c;
  return h;
}

bool Root::is_positive() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; }) &&
         std::any_of(coords.begin(), coords.end(), [](int c) { return c > 0; });
}

RootSystem RootSystem::build(std::string_view label) {
  auto [type, rank] = parse_type_label(label);
  return build(type, rank);
}

RootSystem RootSystem::build(CartanType type, int rank) {
  RootSystem rs;
  rs.datum_ = make_cartan_datum(type, rank);
  rs.gram_ = rs.datum_.gram();
  const auto n = static_cast<std::size_t>(rank);
  const IntMatrix& a = rs.datum_.cartan;

  // Breadth-first closure of the simple roots under simple reflections.
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(std::move(e));
  }
  while (!queue.empty()) {
    std::vector<int> v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      // s_i(v) = v - (v, alpha_i^vee) alpha_i, with (alpha_j, alpha_i^vee) = a(i, j)
      std::int64_t pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += a(i, j) * v[j];
      std::vector<int> w = v;
      w[i] -= static_cast<int>(pairing);
      if (w[i] < 0) continue;  // only alpha_i itself leaves the positive cone
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }

  std::vector<std::vector<int>> roots(seen.begin(), seen.end());
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    int hx = 0, hy = 0;
    for (int c : x) hx += c;
    for (int c : y) hy += c;
    if (hx != hy) return hx < hy;
    return x > y;
  });
  rs.positive_.reserve(roots.size());
  for (auto& coords : roots) rs.positive_.push_back(Root{std::move(coords), {}});
  rs.finish_construction();
  return rs;
}

void RootSystem::finish_construction() {
  const auto n = static_cast<std::size_t>(datum_.rank);
  simple_index_.assign(n, 0);
  reflections_.clear();
  coroot_functionals_.clear();
  reflection_lookup_.clear();

  for (std::size_t k = 0; k < positive_.size(); ++k) {
    Root& root = positive_[k];
    if (root.height() == 1) {
      for (std::size_t i = 0; i < n; ++i)
        if (root.coords[i] == 1) simple_index_[i] = k;
    }
    // (alpha, alpha) = 2 d_alpha
    const std::int64_t norm = inner_product(root.coords, root.coords);
    if (norm % 2 != 0) throw std::logic_error("root of odd squared length");
    const std::int64_t d_alpha = norm / 2;

    root.coroot_coords.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t num = static_cast<std::int64_t>(root.coords[i]) * datum_.symmetrizers[i];
      if (num % d_alpha != 0) throw std::logic_error("non-integral coroot coordinate");
      root.coroot_coords[i] = static_cast<int>(num / d_alpha);
    }

    // phi_j = (alpha_j, alpha^vee) = (G alpha)_j / d_alpha
    std::vector<IntMatrix::value_type> phi(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc += gram_(j, i) * root.coords[i];
      if (acc % d_alpha != 0) throw std::logic_error("non-integral coroot pairing");
      phi[j] = acc / d_alpha;
    }
    IntMatrix s = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s(i, j) -= root.coords[i] * phi[j];
    reflection_lookup_.emplace(s, k);
    reflections_.push_back(std::move(s));
    coroot_functionals_.push_back(std::move(phi));
  }
}

std::optional<std::size_t> RootSystem::find_positive(std::span<const int> coords) const {
  if (coords.size() != static_cast<std::size_t>(datum_.rank)) return std::nullopt;
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    if (std::equal(coords.begin(), coords.end(), positive_[k].coords.begin())) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> RootSystem::find_positive(std::span<const IntMatrix::value_type> coords) const {
  if (coords.size() != static_cast<std::size_t>(datum_.rank)) return std::nullopt;
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    if (std::equal(coords.begin(), coords.end(), positive_[k].coords.begin(),
                   [](IntMatrix::value_type a, int b) { return a == b; }))
      return k;
  }
  return std::nullopt;
}

bool RootSystem::is_root(std::span<const int> coords) const {
  if (find_positive(coords)) return true;
  const auto neg = negated(coords);
  return find_positive(std::span<const int>(neg)).has_value();
}

std::optional<std::size_t> RootSystem::reflection_root(const IntMatrix& m) const {
  auto it = reflection_lookup_.find(m);
  if (it == reflection_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> RootSystem::chevalley_coefficients(std::span<const int> alpha) const {
  auto k = find_positive(alpha);
  if (!k) throw std::invalid_argument("chevalley_coefficients: not a positive root of " + label());
  return positive_[*k].coroot_coords;
}

std::vector<Rational> RootSystem::reflect(std::span<const int> alpha, std::span<const Rational> v) const {
  const auto n = static_cast<std::size_t>(datum_.rank);
  if (alpha.size() != n || v.size() != n) throw std::invalid_argument("reflect: dimension mismatch");
  auto k = find_positive(alpha);
  if (!k) {
    const auto neg = negated(alpha);
    k = find_positive(std::span<const int>(neg));
  }
  if (!k) throw std::invalid_argument("reflect: not a root of " + label());
  // s_alpha = s_{-alpha}
  const auto& phi = coroot_functionals_[*k];
  const auto& root = positive_[*k].coords;
  Rational pairing = 0;
  for (std::size_t j = 0; j < n; ++j) pairing += v[j] * static_cast<long>(phi[j]);
  std::vector<Rational> out(v.begin(), v.end());
  for (std::size_t i = 0; i < n; ++i) out[i] -= pairing * root[i];
  return out;
}

Rational RootSystem::inner_product(std::span<const Rational> a, std::span<const Rational> b) const {
  const auto n = static_cast<std::size_t>(datum_.rank);
  if (a.size() != n || b.size() != n) throw std::invalid_argument("inner_product: dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (gram_(i, j) != 0) acc += a[i] * b[j] * static_cast<long>(gram_(i, j));
  return acc;
}

std::int64_t RootSystem::inner_product(std::span<const int> a, std::span<const int> b) const {
  const auto n = static_cast<std::size_t>(datum_.rank);
  if (a.size() != n || b.size() != n) throw std::invalid_argument("inner_product: dimension mismatch");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) acc += static_cast<std::int64_t>(a[i]) * gram_(i, j) * b[j];
  return acc;
}

std::size_t classical_positive_root_count(CartanType type, int rank) {
  const auto r = static_cast<std::size_t>(rank);
  switch (type) {
    case CartanType::A: return r * (r + 1) / 2;
    case CartanType::B:
    case CartanType::C: return r * r;
    case CartanType::D: return r * (r - 1);
    case CartanType::E: return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    case CartanType::F: return 24;
    case CartanType::G: return 6;
  }
  return 0;
}

}  // namespace psw
