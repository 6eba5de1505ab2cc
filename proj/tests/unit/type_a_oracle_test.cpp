// Type A computed from permutations alone: covers w < w t_ij with
// w(i) < w(j) and no w(k) in between, labelled x_i + ... + x_{j-1}.
#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "psweyl/ps_calc.hpp"

using psw::Rational;
using psw::SparsePoly;

namespace {

using Perm = std::vector<int>;

struct PermCover {
  Perm upper;
  std::size_t i;
  std::size_t j;
};

std::vector<PermCover> perm_covers(const Perm& w) {
  std::vector<PermCover> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) continue;
      bool gap = true;
      for (std::size_t k = i + 1; k < j; ++k)
        if (w[k] > w[i] && w[k] < w[j]) gap = false;
      if (!gap) continue;
      Perm v = w;
      std::swap(v[i], v[j]);
      out.push_back({v, i, j});
    }
  }
  return out;
}

// Tableau criterion.
bool perm_leq(const Perm& u, const Perm& w) {
  for (std::size_t k = 1; k <= u.size(); ++k) {
    Perm a(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k));
    Perm b(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t t = 0; t < k; ++t)
      if (a[t] > b[t]) return false;
  }
  return true;
}

int inversions(const Perm& p) {
  int n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) n += p[i] > p[j];
  return n;
}

SparsePoly perm_ps(const Perm& u, const Perm& w) {
  const std::size_t r = u.size() - 1;
  SparsePoly total(r);
  const int ell = inversions(w) - inversions(u);
  if (ell < 0) return total;
  auto dfs = [&](auto&& self, const Perm& v, const SparsePoly& acc) -> void {
    if (inversions(v) == inversions(w)) {
      if (v == w) total += acc;
      return;
    }
    for (const auto& c : perm_covers(v)) {
      if (!perm_leq(c.upper, w)) continue;
      SparsePoly label(r);
      for (std::size_t k = c.i; k < c.j; ++k) label += SparsePoly::variable(r, k);
      self(self, c.upper, acc * label);
    }
  };
  dfs(dfs, u, SparsePoly::constant(r, 1));
  return total / Rational(psw::factorial(static_cast<unsigned>(ell)));
}

std::vector<Perm> all_perms(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST(TypeAOracle, BruhatOrderMatchesTableauCriterion) {
  for (int r : {2, 3, 4}) {
    const psw::WeylGroup g(psw::RootSystem::build("A" + std::to_string(r)));
    const auto perms = all_perms(r + 1);
    for (const auto& u : perms)
      for (const auto& w : perms) ASSERT_EQ(g.leq(g.from_permutation(u), g.from_permutation(w)), perm_leq(u, w));
  }
}

TEST(TypeAOracle, CoversMatchTranspositions) {
  const psw::WeylGroup g(psw::RootSystem::build("A3"));
  for (const auto& p : all_perms(4)) {
    const auto id = g.from_permutation(p);
    std::map<Perm, std::vector<int>> expected;
    for (const auto& c : perm_covers(p)) {
      std::vector<int> label(3, 0);
      for (std::size_t k = c.i; k < c.j; ++k) label[k] = 1;
      expected[c.upper] = label;
    }
    std::map<Perm, std::vector<int>> actual;
    for (const auto& e : g.covers(id)) actual[g.to_permutation(e.upper)] = e.multiplicity;
    EXPECT_EQ(actual, expected);
  }
}

TEST(TypeAOracle, PolynomialsMatchOnA3) {
  const psw::WeylGroup g(psw::RootSystem::build("A3"));
  const auto perms = all_perms(4);
  for (const auto& u : perms) {
    for (const auto& w : perms) {
      const auto expected = perm_ps(u, w);
      const auto got = psw::ps_by_chains(g, g.from_permutation(u), g.from_permutation(w));
      ASSERT_EQ(got.poly, expected);
    }
  }
}

TEST(TypeAOracle, PolynomialsMatchOnA4FromIdentity) {
  const psw::WeylGroup g(psw::RootSystem::build("A4"));
  const Perm id{1, 2, 3, 4, 5};
  for (const auto& w : all_perms(5)) {
    if (inversions(w) > 6) continue;
    ASSERT_EQ(psw::ps_by_chevalley(g, g.identity(), g.from_permutation(w)).poly, perm_ps(id, w));
  }
}
