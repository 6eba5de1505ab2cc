#include "psweyl/weyl_group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>

namespace psw {

GroupTooLarge::GroupTooLarge(std::string label, std::size_t order, std::size_t cap)
    : std::length_error("Weyl group " + label + " has " + std::to_string(order) +
                        " elements, more than the configured cap of " + std::to_string(cap) +
                        "; use a smaller rank or raise the cap"),
      order_(order),
      cap_(cap) {}

std::size_t classical_group_order(CartanType type, int rank) {
  auto fact = [](int n) {
    std::size_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
    return f;
  };
  const auto r = static_cast<std::size_t>(rank);
  switch (type) {
    case CartanType::A: return fact(rank + 1);
    case CartanType::B:
    case CartanType::C: return (std::size_t{1} << r) * fact(rank);
    case CartanType::D: return (std::size_t{1} << (r - 1)) * fact(rank);
    case CartanType::E: return rank == 6 ? 51840 : rank == 7 ? 2903040 : 696729600;
    case CartanType::F: return 1152;
    case CartanType::G: return 12;
  }
  return 0;
}

WeylGroup::WeylGroup(RootSystem system, std::size_t max_order) : system_(std::move(system)) {
  build_elements(max_order);
  build_covers();
}

int WeylGroup::inversion_count(const IntMatrix& m) const {
  const auto n = static_cast<std::size_t>(rank());
  int count = 0;
  for (const Root& root : system_.positive_roots()) {
    // sign of m * alpha: every root is sign-coherent, so the first nonzero
    // coordinate decides
    for (std::size_t i = 0; i < n; ++i) {
      IntMatrix::value_type acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * root.coords[j];
      if (acc != 0) {
        if (acc < 0) ++count;
        break;
      }
    }
  }
  return count;
}

void WeylGroup::build_elements(std::size_t max_order) {
  const auto& datum = system_.datum();
  const std::size_t expected = classical_group_order(datum.type, datum.rank);
  if (expected > max_order) throw GroupTooLarge(label(), expected, max_order);

  const auto r = static_cast<std::size_t>(rank());
  elements_.reserve(expected);
  depth_.reserve(expected);
  index_.reserve(expected);
  right_simple_.assign(expected * r, std::numeric_limits<ElementId>::max());

  IntMatrix id = IntMatrix::identity(r);
  elements_.push_back({id, 0});
  depth_.push_back(0);
  index_.emplace(std::move(id), 0);

  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (std::size_t i = 0; i < r; ++i) {
      IntMatrix next = elements_[head].action * system_.simple_reflection(static_cast<int>(i));
      auto it = index_.find(next);
      ElementId target;
      if (it == index_.end()) {
        if (elements_.size() >= expected) {
          throw std::logic_error("Weyl group generation exceeded the classical order");
        }
        target = static_cast<ElementId>(elements_.size());
        const int len = inversion_count(next);
        index_.emplace(next, target);
        elements_.push_back({std::move(next), len});
        depth_.push_back(depth_[head] + 1);
      } else {
        target = it->second;
      }
      right_simple_[head * r + i] = target;
    }
  }
  if (elements_.size() != expected) {
    throw std::logic_error("Weyl group generation produced the wrong order");
  }
  const int top = max_length();
  for (ElementId v = 0; v < elements_.size(); ++v) {
    if (elements_[v].length == top) longest_ = v;
  }
}

void WeylGroup::build_covers() {
  const auto n = static_cast<std::size_t>(rank());
  const auto roots = system_.positive_roots();
  up_offsets_.assign(order() + 1, 0);

  for (ElementId v = 0; v < order(); ++v) {
    up_offsets_[v] = edges_.size();
    const IntMatrix& m = elements_[v].action;
    const int len = elements_[v].length;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      // l(v s_alpha) > l(v) iff v(alpha) > 0
      const auto image = m.apply(std::vector<IntMatrix::value_type>(roots[k].coords.begin(), roots[k].coords.end()));
      if (std::any_of(image.begin(), image.end(), [](auto x) { return x < 0; })) continue;
      // v s_alpha = v - (v alpha) phi^T
      const auto phi = system_.coroot_functional(k);
      IntMatrix prod = m;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) prod(i, j) -= image[i] * phi[j];
      auto it = index_.find(prod);
      if (it == index_.end()) throw std::logic_error("reflection product left the group");
      if (elements_[it->second].length != len + 1) continue;
      edges_.push_back(CoverEdge{v, it->second, k, roots[k].coroot_coords});
    }
  }
  up_offsets_[order()] = edges_.size();

  down_offsets_.assign(order() + 1, 0);
  for (const auto& e : edges_) ++down_offsets_[e.upper + 1];
  for (std::size_t v = 0; v < order(); ++v) down_offsets_[v + 1] += down_offsets_[v];
  down_edges_.assign(edges_.size(), 0);
  std::vector<std::size_t> fill(down_offsets_.begin(), down_offsets_.end() - 1);
  for (std::size_t e = 0; e < edges_.size(); ++e) down_edges_[fill[edges_[e].upper]++] = e;
}

std::optional<ElementId> WeylGroup::find(const IntMatrix& action) const {
  auto it = index_.find(action);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId WeylGroup::multiply(ElementId a, ElementId b) const {
  auto id = find(element(a).action * element(b).action);
  if (!id) throw std::logic_error("product left the group");
  return *id;
}

ElementId WeylGroup::inverse(ElementId id) const {
  auto word = reduced_word(id);
  std::reverse(word.begin(), word.end());
  return from_word(word);
}

std::span<const CoverEdge> WeylGroup::covers(ElementId id) const {
  if (id >= order()) throw std::out_of_range("covers: element not in group");
  return std::span<const CoverEdge>(edges_).subspan(up_offsets_[id], up_offsets_[id + 1] - up_offsets_[id]);
}

std::span<const std::size_t> WeylGroup::down_cover_edges(ElementId id) const {
  if (id >= order()) throw std::out_of_range("down_cover_edges: element not in group");
  return std::span<const std::size_t>(down_edges_).subspan(down_offsets_[id], down_offsets_[id + 1] - down_offsets_[id]);
}

std::vector<bool> WeylGroup::upset(ElementId u, std::optional<int> max_len) const {
  std::vector<bool> seen(order(), false);
  const int cap = max_len.value_or(max_length());
  if (length(u) > cap) return seen;
  std::vector<ElementId> stack{u};
  seen[u] = true;
  while (!stack.empty()) {
    ElementId v = stack.back();
    stack.pop_back();
    if (length(v) >= cap) continue;
    for (const auto& e : covers(v)) {
      if (!seen[e.upper]) {
        seen[e.upper] = true;
        stack.push_back(e.upper);
      }
    }
  }
  return seen;
}

std::vector<bool> WeylGroup::downset(ElementId w, std::optional<int> min_len) const {
  std::vector<bool> seen(order(), false);
  const int floor = min_len.value_or(0);
  if (length(w) < floor) return seen;
  std::vector<ElementId> stack{w};
  seen[w] = true;
  while (!stack.empty()) {
    ElementId v = stack.back();
    stack.pop_back();
    if (length(v) <= floor) continue;
    for (std::size_t e : down_cover_edges(v)) {
      const ElementId lower = edges_[e].lower;
      if (!seen[lower]) {
        seen[lower] = true;
        stack.push_back(lower);
      }
    }
  }
  return seen;
}

bool WeylGroup::leq(ElementId u, ElementId w) const {
  if (u >= order() || w >= order()) throw std::out_of_range("leq: element not in group");
  if (length(u) > length(w)) return false;
  if (length(u) == length(w)) return u == w;
  return downset(w, length(u))[u];
}

BruhatInterval WeylGroup::interval(ElementId u, ElementId w) const { return BruhatInterval(*this, u, w); }

std::vector<int> WeylGroup::reduced_word(ElementId id) const {
  const auto n = static_cast<std::size_t>(rank());
  const IntMatrix& cartan = system_.datum().cartan;
  std::vector<int> word;
  ElementId cur = id;
  while (length(cur) > 0) {
    const IntMatrix& m = element(cur).action;
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i) {
      // s_i * m only changes row i: row_i -= sum_j a(i, j) row_j
      IntMatrix left = m;
      for (std::size_t c = 0; c < n; ++c) {
        IntMatrix::value_type acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += cartan(i, j) * m(j, c);
        left(i, c) = m(i, c) - acc;
      }
      auto next = find(left);
      if (next && length(*next) < length(cur)) {
        word.push_back(static_cast<int>(i) + 1);
        cur = *next;
        found = true;
      }
    }
    if (!found) throw std::logic_error("reduced_word: no left descent");
  }
  return word;
}

ElementId WeylGroup::from_word(std::span<const int> word) const {
  ElementId cur = identity();
  for (int letter : word) {
    if (letter < 1 || letter > rank()) {
      throw std::invalid_argument("generator index " + std::to_string(letter) + " outside 1.." +
                                  std::to_string(rank()));
    }
    cur = times_simple(cur, letter - 1);
  }
  return cur;
}

std::vector<int> WeylGroup::to_permutation(ElementId id) const {
  if (system_.datum().type != CartanType::A) throw std::invalid_argument("one-line notation is only defined for type A");
  std::vector<int> perm(static_cast<std::size_t>(rank()) + 1);
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i) + 1;
  // right multiplication by s_i swaps positions i and i+1
  for (int letter : reduced_word(id)) std::swap(perm[static_cast<std::size_t>(letter - 1)], perm[static_cast<std::size_t>(letter)]);
  return perm;
}

ElementId WeylGroup::from_permutation(std::span<const int> perm) const {
  if (system_.datum().type != CartanType::A) throw std::invalid_argument("one-line notation is only defined for type A");
  const std::size_t n = static_cast<std::size_t>(rank()) + 1;
  if (perm.size() != n) {
    throw std::invalid_argument("permutation must have " + std::to_string(n) + " entries for " + label());
  }
  std::vector<bool> used(n + 1, false);
  for (int p : perm) {
    if (p < 1 || static_cast<std::size_t>(p) > n || used[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    used[static_cast<std::size_t>(p)] = true;
  }
  // w = w' s_i whenever w has a descent at i; peel descents off the right
  std::vector<int> w(perm.begin(), perm.end());
  std::vector<int> reversed_word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        reversed_word.push_back(static_cast<int>(i) + 1);
        changed = true;
      }
    }
  }
  std::reverse(reversed_word.begin(), reversed_word.end());
  return from_word(reversed_word);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<int> parse_int_list(std::string_view body, std::string_view whole) {
  std::vector<int> out;
  body = trim(body);
  if (body.empty()) return out;
  std::size_t start = 0;
  while (start <= body.size()) {
    auto comma = body.find(',', start);
    auto piece = trim(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (piece.empty()) throw std::invalid_argument("malformed element '" + std::string(whole) + "'");
    int value = 0;
    for (char c : piece) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("malformed element '" + std::string(whole) + "'");
      }
      value = value * 10 + (c - '0');
      if (value > 1'000'000) throw std::invalid_argument("malformed element '" + std::string(whole) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

ElementId WeylGroup::parse_element(std::string_view spec) const {
  const std::string_view s = trim(spec);
  if (s == "id" || s == "e") return identity();
  if (s == "w0") return longest_element();
  if (s.starts_with("word:")) return from_word(parse_int_list(s.substr(5), spec));
  if (s.starts_with("perm:")) {
    if (system_.datum().type != CartanType::A) {
      throw std::invalid_argument("perm: notation is only available for type A; use word:");
    }
    const auto body = trim(s.substr(5));
    std::vector<int> perm;
    if (body.find(',') != std::string_view::npos) {
      perm = parse_int_list(body, spec);
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw std::invalid_argument("malformed element '" + std::string(spec) + "'");
        }
        perm.push_back(c - '0');
      }
    }
    return from_permutation(perm);
  }
  throw std::invalid_argument("malformed element '" + std::string(spec) + "' (expected word:..., perm:..., id or w0)");
}

std::string WeylGroup::format_element(ElementId id) const {
  std::string out;
  if (system_.datum().type == CartanType::A) {
    const auto perm = to_permutation(id);
    const bool compact = perm.size() <= 9;
    out = "perm:";
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (!compact && i > 0) out += ',';
      out += std::to_string(perm[i]);
    }
    return out;
  }
  out = "word:";
  const auto word = reduced_word(id);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

BruhatInterval::BruhatInterval(const WeylGroup& group, ElementId bottom, ElementId top)
    : group_(&group), bottom_(bottom), top_(top) {
  if (bottom >= group.order() || top >= group.order()) throw std::out_of_range("interval: element not in group");
  const int lo = group.length(bottom);
  const int hi = group.length(top);
  if (lo > hi) return;
  const auto down = group.downset(top, lo);
  if (!down[bottom]) return;
  const auto up = group.upset(bottom, hi);

  for (ElementId v = 0; v < group.order(); ++v)
    if (up[v] && down[v]) elements_.push_back(v);
  std::stable_sort(elements_.begin(), elements_.end(),
                   [&](ElementId a, ElementId b) { return group.length(a) < group.length(b); });

  strata_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    local_.emplace(elements_[i], i);
    strata_[static_cast<std::size_t>(group.length(elements_[i]) - lo)].push_back(elements_[i]);
  }
  out_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (const auto& e : group.covers(elements_[i])) {
      if (local_.count(e.upper)) {
        out_[i].push_back(edges_.size());
        edges_.push_back(e);
      }
    }
  }
}

std::span<const std::size_t> BruhatInterval::out_edges(ElementId v) const {
  auto it = local_.find(v);
  if (it == local_.end()) throw std::out_of_range("out_edges: element not in interval");
  return out_[it->second];
}

// ---------------------------------------------------------------------------

ChainStream::ChainStream(const BruhatInterval& interval) : interval_(&interval) {
  done_ = interval.empty();
}

// vertices on the current path are recovered from path_edges_; cursor_[k]
// is the next out-edge to try from the k-th vertex
bool ChainStream::advance() {
  const auto& iv = *interval_;
  auto vertex_at = [&](std::size_t depth) {
    return depth == 0 ? iv.bottom() : iv.edges()[path_edges_[depth - 1]].upper;
  };
  if (!started_) {
    started_ = true;
    cursor_.assign(1, 0);
    if (iv.bottom() == iv.top()) return true;
  } else {
    // backtrack from the leaf just produced
    cursor_.pop_back();
    if (cursor_.empty()) return false;
    path_edges_.pop_back();
  }
  while (!cursor_.empty()) {
    const std::size_t depth = cursor_.size() - 1;
    const auto outs = iv.out_edges(vertex_at(depth));
    auto& c = cursor_.back();
    if (c < outs.size()) {
      const std::size_t e = outs[c++];
      path_edges_.push_back(e);
      cursor_.push_back(0);
      if (iv.edges()[e].upper == iv.top()) return true;
    } else {
      cursor_.pop_back();
      if (!path_edges_.empty()) path_edges_.pop_back();
    }
  }
  return false;
}

std::optional<Chain> ChainStream::next() {
  if (done_) return std::nullopt;
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  Chain chain;
  chain.reserve(path_edges_.size());
  for (std::size_t e : path_edges_) chain.push_back(interval_->edges()[e]);
  return chain;
}

std::uint64_t ChainStream::count_remaining() {
  std::uint64_t count = 0;
  while (!done_) {
    if (advance()) {
      ++count;
    } else {
      done_ = true;
    }
  }
  return count;
}

}  // namespace psw
