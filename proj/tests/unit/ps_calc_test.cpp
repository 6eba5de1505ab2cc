#include <gtest/gtest.h>

#include "poly_helpers.hpp"
#include "psweyl/ps_calc.hpp"

using psw::ElementId;
using psw::Rational;
using psw::RootSystem;
using psw::SparsePoly;
using psw::WeylGroup;
using namespace psw::testing;

namespace {

WeylGroup group(const char* label) { return WeylGroup(RootSystem::build(label)); }

psw::Integer scaled_value(const WeylGroup& g, const SparsePoly& d, std::vector<long> lambda) {
  std::vector<Rational> pt(lambda.begin(), lambda.end());
  const Rational v = d.evaluate(pt) * Rational(psw::factorial(static_cast<unsigned>(g.max_length())));
  EXPECT_TRUE(psw::is_integral(v));
  return v.get_num();
}

}  // namespace

TEST(PsCalc, A2IntervalFrom213To321) {
  const auto g = group("A2");
  const ElementId u = g.parse_element("perm:213");
  const ElementId w = g.parse_element("perm:321");
  const SparsePoly expected = x(2, 1) * x(2, 2) + rat(2, 1, 2) * x(2, 2) * x(2, 2);
  for (const auto& r : {psw::ps_by_chains(g, u, w), psw::ps_by_chevalley(g, u, w)}) {
    EXPECT_EQ(r.poly, expected) << to_string(r.method);
    EXPECT_EQ(r.chain_count, 2u);
    EXPECT_TRUE(r.comparable);
    EXPECT_EQ(r.length_difference, 2);
  }
}

TEST(PsCalc, EqualEndpointsGiveOne) {
  const auto g = group("A2");
  const ElementId v = g.parse_element("perm:213");
  for (const auto& r : {psw::ps_by_chains(g, v, v), psw::ps_by_chevalley(g, v, v)}) {
    EXPECT_EQ(r.poly, rat(2, 1));
    EXPECT_EQ(r.chain_count, 1u);
    EXPECT_TRUE(r.comparable);
  }
}

TEST(PsCalc, IncomparablePairGivesZeroWithoutError) {
  const auto g = group("A2");
  const ElementId u = g.parse_element("perm:231");
  const ElementId w = g.parse_element("perm:312");
  for (const auto& r : {psw::ps_by_chains(g, u, w), psw::ps_by_chevalley(g, u, w)}) {
    EXPECT_TRUE(r.poly.is_zero());
    EXPECT_FALSE(r.comparable);
    EXPECT_EQ(r.chain_count, 0u);
  }
  // w below u
  const auto r = psw::ps_by_chevalley(g, g.longest_element(), g.identity());
  EXPECT_TRUE(r.poly.is_zero());
  EXPECT_EQ(r.length_difference, -3);
}

TEST(PsCalc, TopCellPolynomials) {
  {
    const auto g = group("A2");
    const auto d = psw::ps_by_chains(g, g.identity(), g.longest_element());
    EXPECT_EQ(d.poly, rat(2, 1, 2) * x(2, 1) * x(2, 2) * (x(2, 1) + x(2, 2)));
    EXPECT_EQ(d.chain_count, 4u);
  }
  {
    const auto g = group("A3");
    const auto d = psw::ps_by_chevalley(g, g.identity(), g.longest_element());
    const SparsePoly expected = rat(3, 1, 12) * x(3, 1) * x(3, 2) * x(3, 3) * lin({1, 1, 0}) * lin({0, 1, 1}) *
                                lin({1, 1, 1});
    EXPECT_EQ(d.poly, expected);
    EXPECT_EQ(scaled_value(g, d.poly, {1, 1, 1}), 720);
  }
  {
    const auto g = group("B2");
    const auto d = psw::ps_by_chains(g, g.identity(), g.longest_element());
    EXPECT_EQ(d.poly, term({3, 1}, 1, 3) + term({2, 2}, 1, 2) + term({1, 3}, 1, 6));
    EXPECT_EQ(d.chain_count, 8u);
  }
  {
    const auto g = group("G2");
    const auto d = psw::ps_by_chains(g, g.identity(), g.longest_element());
    EXPECT_EQ(d.poly, term({5, 1}, 1, 60) + term({4, 2}, 1, 8) + term({3, 3}, 1, 3) + term({2, 4}, 3, 8) +
                          term({1, 5}, 3, 20));
    EXPECT_EQ(d.chain_count, 32u);
    EXPECT_EQ(scaled_value(g, d.poly, {1, 1}), 720);
  }
  {
    const auto g = group("B3");
    const auto d = psw::ps_by_chevalley(g, g.identity(), g.longest_element());
    EXPECT_EQ(d.poly.num_terms(), 24u);
    EXPECT_EQ(d.chain_count, 6656u);
    EXPECT_EQ(scaled_value(g, d.poly, {1, 1, 1}), 362880);
    EXPECT_EQ(scaled_value(g, d.poly, {1, 2, 3}), 137168640);
    EXPECT_EQ(d.poly.coefficient({3, 3, 3}), Rational(1, 9));
    EXPECT_EQ(d.poly.coefficient({2, 4, 3}), Rational(19, 144));
    EXPECT_EQ(d.poly.coefficient({2, 1, 6}), Rational(1, 720));
    EXPECT_EQ(d.poly.coefficient({1, 7, 1}), Rational(1, 90));
  }
}

TEST(PsCalc, BothAlgorithmsAgreeOnEveryPair) {
  for (const char* label : {"A1", "A2", "A3", "B2", "C3", "G2"}) {
    const auto g = group(label);
    for (ElementId u = 0; u < g.order(); ++u) {
      for (ElementId w = 0; w < g.order(); ++w) {
        const auto a = psw::ps_by_chains(g, u, w);
        const auto b = psw::ps_by_chevalley(g, u, w);
        ASSERT_EQ(a.poly, b.poly) << label << " " << u << " " << w;
        ASSERT_EQ(a.chain_count, b.chain_count);
        ASSERT_EQ(a.comparable, g.leq(u, w));
      }
    }
  }
}

TEST(PsCalc, CoverGivesTheMultiplicityForm) {
  for (const char* label : {"B3", "G2", "C3"}) {
    const auto g = group(label);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const auto& edge = g.edge(e);
      psw::LinearForm form;
      for (int c : edge.multiplicity) form.coeffs.emplace_back(c);
      EXPECT_EQ(psw::ps_by_chains(g, edge.lower, edge.upper).poly, form.to_poly());
    }
  }
}

TEST(PsCalc, ChainCountSplitsOverFirstSteps) {
  const auto g = group("B3");
  const ElementId w = g.longest_element();
  for (ElementId u = 0; u < g.order(); ++u) {
    if (u == w) continue;
    std::uint64_t total = 0;
    for (const auto& e : g.covers(u)) total += psw::ps_by_chevalley(g, e.upper, w).chain_count;
    EXPECT_EQ(psw::ps_by_chevalley(g, u, w).chain_count, total);
  }
}

TEST(PsCalc, LeftMultiplicationByLongestElementReversesIntervals) {
  // v -> w0 v is an order-reversing bijection that keeps right cover labels
  for (const char* label : {"A3", "G2"}) {
    const auto g = group(label);
    const ElementId w0 = g.longest_element();
    for (ElementId u = 0; u < g.order(); ++u) {
      for (ElementId w = 0; w < g.order(); ++w) {
        if (!g.leq(u, w)) continue;
        EXPECT_EQ(psw::ps_by_chevalley(g, u, w).poly,
                  psw::ps_by_chevalley(g, g.multiply(w0, w), g.multiply(w0, u)).poly);
      }
    }
  }
}

TEST(PsCalc, RichardsonDegree) {
  const auto g = group("A2");
  const ElementId u = g.parse_element("perm:213");
  const ElementId w = g.parse_element("perm:321");
  const std::vector<long> ones{1, 1};
  EXPECT_EQ(psw::richardson_degree(g, u, w, ones).degree, 3);
  EXPECT_EQ(psw::richardson_degree(g, g.identity(), g.longest_element(), ones).degree, 6);

  const auto empty = psw::richardson_degree(g, g.parse_element("perm:231"), g.parse_element("perm:312"), ones);
  EXPECT_TRUE(empty.empty_variety);
  EXPECT_EQ(empty.degree, 0);

  EXPECT_EQ(psw::richardson_degree(g, u, u, ones).degree, 1);
  const std::vector<long> zero{0, 0};
  EXPECT_EQ(psw::richardson_degree(g, u, w, zero).degree, 0);

  const std::vector<long> wrong_size{1, 1, 1};
  const std::vector<long> negative{1, -1};
  EXPECT_THROW(psw::richardson_degree(g, u, w, wrong_size), std::invalid_argument);
  EXPECT_THROW(psw::richardson_degree(g, u, w, negative), std::invalid_argument);
}

TEST(PsCalc, RichardsonDegreesArePositiveIntegers) {
  const auto g = group("G2");
  const std::vector<std::vector<long>> lambdas{{1, 1}, {2, 1}, {1, 5}, {3, 7}};
  for (ElementId u = 0; u < g.order(); ++u)
    for (ElementId w = 0; w < g.order(); ++w) {
      if (!g.leq(u, w)) continue;
      for (const auto& lambda : lambdas) EXPECT_GT(psw::richardson_degree(g, u, w, lambda).degree, 0);
    }
}

TEST(PsCalc, IntervalDistributionMatchesPairwiseResults) {
  const auto g = group("B3");
  for (ElementId u : {ElementId{0}, ElementId{4}, ElementId{17}}) {
    for (int ell = 0; ell <= g.max_length() - g.length(u); ++ell) {
      const auto dist = psw::interval_distribution(g, u, ell);
      for (ElementId w = 0; w < g.order(); ++w) {
        if (g.length(w) != g.length(u) + ell) continue;
        const auto d = psw::ps_by_chevalley(g, u, w).poly;
        auto it = dist.find(w);
        EXPECT_EQ(it == dist.end() ? SparsePoly(3) : it->second, d);
      }
    }
  }
  EXPECT_EQ(psw::interval_distribution(g, 0, 0).at(0), rat(3, 1));
  EXPECT_TRUE(psw::interval_distribution(g, 0, 10).empty());
  EXPECT_THROW(psw::interval_distribution(g, 0, -1), std::invalid_argument);
}

TEST(PsCalc, OutOfRangeElementsThrow) {
  const auto g = group("A2");
  EXPECT_THROW(psw::ps_by_chains(g, 0, 6), std::out_of_range);
  EXPECT_THROW(psw::ps_by_chevalley(g, 6, 0), std::out_of_range);
  EXPECT_THROW(psw::CohomClass::schubert(g, 6), std::out_of_range);
}

TEST(CohomClass, AddAndCancel) {
  psw::CohomClass c(2);
  c.add(3, x(2, 1));
  c.add(3, -x(2, 1));
  EXPECT_TRUE(c.coefficients().empty());
  c.add(1, SparsePoly(2));
  EXPECT_TRUE(c.coefficients().empty());
  EXPECT_THROW(c.add(1, x(3, 1)), std::invalid_argument);
}

TEST(CohomClass, ChevalleyFormulaOnIdentity) {
  const auto g = group("A2");
  const auto c = psw::CohomClass::schubert(g, g.identity()).times_lambda(g);
  EXPECT_EQ(c.coefficient(g.parse_element("perm:213")), x(2, 1));
  EXPECT_EQ(c.coefficient(g.parse_element("perm:132")), x(2, 2));
  EXPECT_EQ(c.coefficients().size(), 2u);
}
