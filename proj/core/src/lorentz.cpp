#include "psweyl/lorentz.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace psw {

// ---------------------------------------------------------------------------
// M-convexity

namespace {

bool exchange_exists(const std::set<Exponent>& set, const Exponent& a, const Exponent& b, std::size_t i) {
  Exponent a2 = a;
  Exponent b2 = b;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] >= b[j]) continue;
    // a - e_i + e_j and b - e_j + e_i
    --a2[i];
    ++a2[j];
    --b2[j];
    ++b2[i];
    const bool ok = set.count(a2) && set.count(b2);
    ++a2[i];
    --a2[j];
    ++b2[j];
    --b2[i];
    if (ok) return true;
  }
  return false;
}

std::set<Exponent> as_set(std::span<const Exponent> points) {
  std::set<Exponent> set;
  std::size_t n = points.empty() ? 0 : points.front().size();
  for (const auto& p : points) {
    if (p.size() != n) throw std::invalid_argument("check_mconvex: vectors of different lengths");
    set.insert(p);
  }
  return set;
}

}  // namespace

MConvexReport check_mconvex(std::span<const Exponent> points) {
  const std::set<Exponent> set = as_set(points);
  std::vector<const Exponent*> unique;
  {
    std::set<Exponent> seen;
    for (const auto& p : points)
      if (seen.insert(p).second) unique.push_back(&p);
  }
  for (const Exponent* a : unique) {
    for (const Exponent* b : unique) {
      if (a == b) continue;
      for (std::size_t i = 0; i < a->size(); ++i) {
        if ((*a)[i] <= (*b)[i]) continue;
        if (!exchange_exists(set, *a, *b, i)) {
          return MConvexReport{false, MConvexViolation{*a, *b, i}};
        }
      }
    }
  }
  return MConvexReport{true, std::nullopt};
}

bool violation_holds(std::span<const Exponent> points, const MConvexViolation& v) {
  const std::set<Exponent> set = as_set(points);
  if (!set.count(v.alpha) || !set.count(v.beta)) return false;
  if (v.index >= v.alpha.size() || v.alpha.size() != v.beta.size()) return false;
  if (v.alpha[v.index] <= v.beta[v.index]) return false;
  return !exchange_exists(set, v.alpha, v.beta, v.index);
}

// ---------------------------------------------------------------------------
// Inertia

Inertia symmetric_inertia(RationalMatrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("symmetric_inertia: matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a[i][j] != a[j][i]) throw std::invalid_argument("symmetric_inertia: matrix is not symmetric");

  Inertia inertia;
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  while (!active.empty()) {
    auto diag = std::find_if(active.begin(), active.end(), [&](std::size_t k) { return a[k][k] != 0; });
    if (diag != active.end()) {
      const std::size_t k = *diag;
      const Rational pivot = a[k][k];
      if (pivot > 0) {
        ++inertia.positive;
      } else {
        ++inertia.negative;
      }
      active.erase(diag);
      for (std::size_t r : active) {
        if (a[r][k] == 0) continue;
        const Rational f = a[r][k] / pivot;
        for (std::size_t c : active) a[r][c] -= f * a[k][c];
      }
      continue;
    }

    // zero diagonal: look for a hyperbolic 2x2 block [[0, b], [b, 0]]
    std::optional<std::pair<std::size_t, std::size_t>> block;
    for (std::size_t x = 0; x < active.size() && !block; ++x)
      for (std::size_t y = x + 1; y < active.size() && !block; ++y)
        if (a[active[x]][active[y]] != 0) block = std::make_pair(active[x], active[y]);
    if (!block) {
      inertia.zero += active.size();
      break;
    }
    const auto [i, j] = *block;
    const Rational b = a[i][j];
    ++inertia.positive;
    ++inertia.negative;
    std::erase_if(active, [&](std::size_t k) { return k == i || k == j; });
    // Schur complement: A_rs -= (A_ri A_js + A_rj A_is) / b
    std::vector<Rational> ri(n), rj(n);
    for (std::size_t r : active) {
      ri[r] = a[r][i];
      rj[r] = a[r][j];
    }
    for (std::size_t r : active)
      for (std::size_t s : active) a[r][s] -= (ri[r] * rj[s] + rj[r] * ri[s]) / b;
  }
  return inertia;
}

RationalMatrix quadratic_form_matrix(const SparsePoly& q) {
  const std::size_t n = q.num_vars();
  RationalMatrix a(n, std::vector<Rational>(n, Rational(0)));
  for (const auto& [e, c] : q.terms()) {
    if (total_degree(e) != 2) throw std::invalid_argument("quadratic_form_matrix: term of degree != 2");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      a[idx[0]][idx[0]] += c;
    } else {
      const Rational half = c / 2;
      a[idx[0]][idx[1]] += half;
      a[idx[1]][idx[0]] += half;
    }
  }
  return a;
}

Inertia quadratic_inertia(const SparsePoly& q) {
  const auto h = is_homogeneous(q);
  if (!h.homogeneous) throw std::invalid_argument("quadratic_inertia: form is not homogeneous");
  if (h.degree && *h.degree > 2) throw std::invalid_argument("quadratic_inertia: form has degree > 2");
  if (!h.degree || *h.degree < 2) return Inertia{0, 0, q.num_vars()};
  return symmetric_inertia(quadratic_form_matrix(q));
}

// ---------------------------------------------------------------------------
// Lorentzian decision

std::string to_string(LorentzFailure f) {
  switch (f) {
    case LorentzFailure::NegativeCoefficient: return "negative-coefficient";
    case LorentzFailure::NotHomogeneous: return "not-homogeneous";
    case LorentzFailure::SupportNotMConvex: return "support-not-M-convex";
    case LorentzFailure::BadSignature: return "bad-signature";
  }
  return "unknown";
}

namespace {

// Nondecreasing index sequences of the given size over n variables, in
// lexicographic order.
std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(size, 0);
  if (size == 0) {
    out.push_back(cur);
    return out;
  }
  while (true) {
    out.push_back(cur);
    std::size_t k = size;
    while (k > 0 && cur[k - 1] == n - 1) --k;
    if (k == 0) break;
    const std::size_t v = cur[k - 1] + 1;
    for (std::size_t t = k - 1; t < size; ++t) cur[t] = v;
  }
  return out;
}

// Checks items [begin, end) of the multiset list, reusing derivatives along
// shared prefixes. Stops once an earlier failure is known.
void check_signatures(const SparsePoly& p, const std::vector<std::vector<std::size_t>>& sets, std::size_t begin,
                      std::size_t end, std::vector<Inertia>& results, std::atomic<std::size_t>& first_failure) {
  std::vector<SparsePoly> chain{p};  // chain[k] = derivative by the first k indices
  const std::vector<std::size_t>* prev = nullptr;
  for (std::size_t idx = begin; idx < end; ++idx) {
    if (idx > first_failure.load(std::memory_order_relaxed)) return;
    const auto& ms = sets[idx];
    std::size_t common = 0;
    if (prev) {
      while (common < ms.size() && (*prev)[common] == ms[common]) ++common;
    }
    chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(common) + 1, chain.end());
    for (std::size_t k = common; k < ms.size(); ++k) chain.push_back(chain.back().derivative(ms[k]));
    prev = &ms;
    results[idx] = quadratic_inertia(chain.back());
    if (results[idx].positive > 1) {
      std::size_t cur = first_failure.load();
      while (idx < cur && !first_failure.compare_exchange_weak(cur, idx)) {
      }
      return;
    }
  }
}

}  // namespace

LorentzianReport is_lorentzian(const SparsePoly& p, unsigned jobs) {
  LorentzianReport report;
  if (!p.is_zero()) report.degree = total_degree(p.terms().begin()->first);

  for (const auto& [e, c] : p.terms()) {
    if (c < 0) {
      report.verdict = false;
      report.reason = LorentzFailure::NegativeCoefficient;
      report.certificate = NegativeCoefficientCertificate{e, c};
      return report;
    }
  }

  const auto& terms = p.terms();
  if (!terms.empty()) {
    const Exponent& first = terms.begin()->first;
    for (const auto& [e, c] : terms) {
      if (total_degree(e) != report.degree) {
        report.verdict = false;
        report.reason = LorentzFailure::NotHomogeneous;
        report.certificate = InhomogeneityCertificate{first, e};
        return report;
      }
    }
  }

  const auto supp = support(p);
  auto mc = check_mconvex(supp);
  if (!mc.verdict) {
    report.verdict = false;
    report.reason = LorentzFailure::SupportNotMConvex;
    report.certificate = *mc.violation;
    return report;
  }

  if (p.is_zero() || report.degree < 2) return report;

  const auto sets = multisets(p.num_vars(), report.degree - 2);
  std::vector<Inertia> results(sets.size());
  std::atomic<std::size_t> first_failure{std::numeric_limits<std::size_t>::max()};
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, sets.size());
  if (workers == 1) {
    check_signatures(p, sets, 0, sets.size(), results, first_failure);
  } else {
    std::vector<std::thread> threads;
    const std::size_t chunk = (sets.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(sets.size(), begin + chunk);
      if (begin >= end) break;
      threads.emplace_back(check_signatures, std::cref(p), std::cref(sets), begin, end, std::ref(results),
                           std::ref(first_failure));
    }
    for (auto& t : threads) t.join();
  }

  const std::size_t fail = first_failure.load();
  if (fail == std::numeric_limits<std::size_t>::max()) {
    report.forms_checked = sets.size();
    return report;
  }
  report.verdict = false;
  report.reason = LorentzFailure::BadSignature;
  report.forms_checked = fail + 1;
  report.certificate = SignatureCertificate{sets[fail], results[fail]};
  return report;
}

bool replay_certificate(const SparsePoly& p, const LorentzianReport& report) {
  if (report.verdict || !report.reason) return false;
  switch (*report.reason) {
    case LorentzFailure::NegativeCoefficient: {
      const auto* c = std::get_if<NegativeCoefficientCertificate>(&report.certificate);
      return c && c->coefficient < 0 && p.coefficient(c->exponent) == c->coefficient;
    }
    case LorentzFailure::NotHomogeneous: {
      const auto* c = std::get_if<InhomogeneityCertificate>(&report.certificate);
      return c && p.coefficient(c->first) != 0 && p.coefficient(c->second) != 0 &&
             total_degree(c->first) != total_degree(c->second);
    }
    case LorentzFailure::SupportNotMConvex: {
      const auto* c = std::get_if<MConvexViolation>(&report.certificate);
      return c && violation_holds(support(p), *c);
    }
    case LorentzFailure::BadSignature: {
      const auto* c = std::get_if<SignatureCertificate>(&report.certificate);
      if (!c) return false;
      const auto h = is_homogeneous(p);
      if (!h.homogeneous || !h.degree || *h.degree < 2 || c->derivatives.size() != *h.degree - 2) return false;
      SparsePoly q = p;
      for (std::size_t i : c->derivatives) {
        if (i >= p.num_vars()) return false;
        q = q.derivative(i);
      }
      const Inertia in = quadratic_inertia(q);
      return in == c->inertia && in.positive > 1;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Numeric log-concavity sampling

namespace {

struct DoubleTerm {
  std::vector<int> exponent;
  double coefficient;
};

std::vector<DoubleTerm> to_double_terms(const SparsePoly& p) {
  double scale = 0.0;
  for (const auto& [e, c] : p.terms()) scale = std::max(scale, std::abs(c.get_d()));
  std::vector<DoubleTerm> out;
  for (const auto& [e, c] : p.terms()) {
    out.push_back({std::vector<int>(e.begin(), e.end()), c.get_d() / scale});
  }
  return out;
}

double eval(const std::vector<DoubleTerm>& terms, const std::vector<double>& x) {
  double total = 0.0;
  for (const auto& t : terms) {
    double v = t.coefficient;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (int k = 0; k < t.exponent[i]; ++k) v *= x[i];
    total += v;
  }
  return total;
}

}  // namespace

bool log_concavity_spot_check(const SparsePoly& p, std::size_t samples, std::uint64_t seed, SpotCheckOptions options) {
  if (samples == 0) throw std::invalid_argument("log_concavity_spot_check: sample count must be positive");
  for (const auto& [e, c] : p.terms()) {
    if (c < 0) throw std::invalid_argument("log_concavity_spot_check: negative coefficient");
  }
  if (p.is_zero()) return true;

  const std::size_t n = p.num_vars();
  unsigned degree = 0;
  for (const auto& [e, c] : p.terms()) degree = std::max(degree, total_degree(e));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.05, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::uniform_int_distribution<unsigned> order(0, degree == 0 ? 0 : degree - 1);

  std::map<std::vector<std::size_t>, std::vector<DoubleTerm>> cache;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<std::size_t> ms(order(rng));
    for (auto& i : ms) i = var(rng);
    std::sort(ms.begin(), ms.end());
    auto it = cache.find(ms);
    if (it == cache.end()) {
      SparsePoly q = p;
      for (std::size_t i : ms) q = q.derivative(i);
      it = cache.emplace(ms, q.is_zero() ? std::vector<DoubleTerm>{} : to_double_terms(q)).first;
    }
    const auto& q = it->second;

    std::vector<double> x(n), v(n);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = coord(rng);
      v[i] = gauss(rng);
      norm += v[i] * v[i];
    }
    if (q.empty() || norm == 0.0) continue;
    norm = std::sqrt(norm);
    for (auto& vi : v) vi /= norm;

    auto at = [&](double t) {
      std::vector<double> y(n);
      for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + t * v[i];
      return std::log(eval(q, y));
    };
    const double f0 = at(0.0);
    const double fp = at(options.step);
    const double fm = at(-options.step);
    if (!std::isfinite(f0) || !std::isfinite(fp) || !std::isfinite(fm)) continue;
    const double second = fp - 2.0 * f0 + fm;
    if (second > options.tolerance * std::max(1.0, std::abs(f0))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const Inertia& inertia) {
  return {{"positive", inertia.positive}, {"negative", inertia.negative}, {"zero", inertia.zero}};
}

namespace {

nlohmann::json violation_json(const MConvexViolation& v) {
  return {{"alpha", v.alpha}, {"beta", v.beta}, {"i", v.index + 1}};
}

}  // namespace

nlohmann::json to_json(const MConvexReport& report) {
  nlohmann::json j{{"verdict", report.verdict}};
  j["violation"] = report.violation ? violation_json(*report.violation) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const LorentzianReport& report) {
  nlohmann::json j{{"verdict", report.verdict}, {"degree", report.degree}, {"forms_checked", report.forms_checked}};
  j["reason"] = report.reason ? nlohmann::json(to_string(*report.reason)) : nlohmann::json(nullptr);
  nlohmann::json cert = nullptr;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, NegativeCoefficientCertificate>) {
          cert = {{"exp", c.exponent},
                  {"num", to_string(Integer(c.coefficient.get_num()))},
                  {"den", to_string(Integer(c.coefficient.get_den()))}};
        } else if constexpr (std::is_same_v<T, InhomogeneityCertificate>) {
          cert = {{"first", c.first}, {"second", c.second}};
        } else if constexpr (std::is_same_v<T, MConvexViolation>) {
          cert = violation_json(c);
        } else if constexpr (std::is_same_v<T, SignatureCertificate>) {
          std::vector<std::size_t> one_based;
          for (auto i : c.derivatives) one_based.push_back(i + 1);
          cert = {{"derivatives", one_based}, {"inertia", to_json(c.inertia)}};
        }
      },
      report.certificate);
  j["certificate"] = cert;
  return j;
}

}  // namespace psw
