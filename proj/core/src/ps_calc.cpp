#include "psweyl/ps_calc.hpp"

#include <stdexcept>

namespace psw {

namespace {

void check_member(const WeylGroup& group, ElementId v) {
  if (v >= group.order()) {
    throw std::out_of_range("element " + std::to_string(v) + " is not in " + group.label());
  }
}

// p * (sum_i c_i x_i)
SparsePoly times_linear(const SparsePoly& p, std::span<const int> c) {
  SparsePoly out(p.num_vars());
  Exponent shifted;
  for (const auto& [e, coeff] : p.terms()) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      shifted = e;
      ++shifted[i];
      out.add_term(shifted, coeff * c[i]);
    }
  }
  return out;
}

}  // namespace

std::string to_string(PsMethod m) {
  return m == PsMethod::ChainEnumeration ? "chain-enumeration" : "chevalley-recursion";
}

PSResult ps_by_chains(const WeylGroup& group, ElementId u, ElementId w) {
  check_member(group, u);
  check_member(group, w);
  const auto r = static_cast<std::size_t>(group.rank());
  PSResult res;
  res.u = u;
  res.w = w;
  res.method = PsMethod::ChainEnumeration;
  res.poly = SparsePoly(r);
  res.length_difference = group.length(w) - group.length(u);

  const BruhatInterval iv(group, u, w);
  if (iv.empty()) return res;
  res.comparable = true;
  const int ell = group.length(w) - group.length(u);

  // integer-coefficient accumulation; the factorial is divided out once
  SparsePoly total(r);
  std::vector<SparsePoly> prefix;
  prefix.reserve(static_cast<std::size_t>(ell) + 1);
  prefix.push_back(SparsePoly::constant(r, 1));
  std::uint64_t count = 0;

  auto dfs = [&](auto&& self, ElementId v) -> void {
    if (v == w) {
      total += prefix.back();
      ++count;
      return;
    }
    for (std::size_t e : iv.out_edges(v)) {
      const CoverEdge& edge = iv.edges()[e];
      prefix.push_back(times_linear(prefix.back(), edge.multiplicity));
      self(self, edge.upper);
      prefix.pop_back();
    }
  };
  dfs(dfs, u);

  res.chain_count = count;
  res.poly = total / Rational(factorial(static_cast<unsigned>(ell)));
  return res;
}

PSResult ps_by_chevalley(const WeylGroup& group, ElementId u, ElementId w) {
  check_member(group, u);
  check_member(group, w);
  const auto r = static_cast<std::size_t>(group.rank());
  PSResult res;
  res.u = u;
  res.w = w;
  res.method = PsMethod::ChevalleyRecursion;
  res.poly = SparsePoly(r);
  res.length_difference = group.length(w) - group.length(u);

  const int ell = res.length_difference;
  if (ell < 0) return res;

  // nothing outside the down-set of w can climb back to w
  const auto keep = group.downset(w);
  if (!keep[u]) return res;

  CohomClass cls = CohomClass::schubert(group, u);
  std::map<ElementId, std::uint64_t> paths{{u, 1}};
  for (int step = 0; step < ell; ++step) {
    cls = cls.times_lambda(group, keep);
    std::map<ElementId, std::uint64_t> next;
    for (const auto& [v, n] : paths) {
      for (const auto& e : group.covers(v)) {
        if (keep[e.upper]) next[e.upper] += n;
      }
    }
    paths = std::move(next);
  }

  auto it = paths.find(w);
  res.chain_count = it == paths.end() ? 0 : it->second;
  res.comparable = res.chain_count > 0;
  res.poly = cls.coefficient(w) / Rational(factorial(static_cast<unsigned>(ell)));
  return res;
}

CohomClass CohomClass::schubert(const WeylGroup& group, ElementId u) {
  check_member(group, u);
  const auto r = static_cast<std::size_t>(group.rank());
  CohomClass c(r);
  c.add(u, SparsePoly::constant(r, 1));
  return c;
}

SparsePoly CohomClass::coefficient(ElementId v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? SparsePoly(num_vars_) : it->second;
}

void CohomClass::add(ElementId v, const SparsePoly& p) {
  if (p.num_vars() != num_vars_) throw std::invalid_argument("CohomClass::add: num_vars mismatch");
  if (p.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(v, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

CohomClass CohomClass::times_lambda(const WeylGroup& group, const std::vector<bool>& keep) const {
  CohomClass out(num_vars_);
  for (const auto& [v, p] : coeffs_) {
    for (const auto& e : group.covers(v)) {
      if (!keep.empty() && !keep[e.upper]) continue;
      out.add(e.upper, times_linear(p, e.multiplicity));
    }
  }
  return out;
}

DegreeResult richardson_degree(const WeylGroup& group, ElementId u, ElementId w, std::span<const long> lambda) {
  if (lambda.size() != static_cast<std::size_t>(group.rank())) {
    throw std::invalid_argument("lambda must have " + std::to_string(group.rank()) + " entries");
  }
  for (long x : lambda) {
    if (x < 0) throw std::invalid_argument("lambda must be dominant (all entries >= 0)");
  }
  const PSResult ps = ps_by_chains(group, u, w);
  if (!ps.comparable) return DegreeResult{Integer(0), true};

  std::vector<Rational> point(lambda.begin(), lambda.end());
  const int ell = group.length(w) - group.length(u);
  const Rational value = ps.poly.evaluate(point) * Rational(factorial(static_cast<unsigned>(ell)));
  if (!is_integral(value)) throw std::logic_error("non-integral Richardson degree " + to_string(value));
  return DegreeResult{value.get_num(), false};
}

std::map<ElementId, SparsePoly> interval_distribution(const WeylGroup& group, ElementId u, int ell) {
  check_member(group, u);
  if (ell < 0) throw std::invalid_argument("interval_distribution: ell must be nonnegative");
  if (ell > group.max_length() - group.length(u)) return {};
  CohomClass cls = CohomClass::schubert(group, u);
  for (int step = 0; step < ell; ++step) cls = cls.times_lambda(group);
  const Rational norm(factorial(static_cast<unsigned>(ell)));
  std::map<ElementId, SparsePoly> out;
  for (const auto& [v, p] : cls.coefficients()) out.emplace(v, p / norm);
  return out;
}

}  // namespace psw
