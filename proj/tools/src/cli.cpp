#include "psweyl/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "psweyl/lorentz.hpp"
#include "psweyl/ps_calc.hpp"
#include "psweyl/weyl_group.hpp"

namespace psw::cli {

namespace {

using nlohmann::json;

// Thrown for anything the user typed wrong; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string group;
  std::string u;
  std::string w;
  std::vector<long> lambda;
  std::string output = "text";
  unsigned jobs = 0;
  std::uint64_t seed = 0;
  bool count_only = false;
  std::string poly;
  std::size_t spot_check = 0;
  std::string input;
  std::size_t max_order = WeylGroup::kDefaultMaxOrder;
};

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::unique_ptr<WeylGroup> make_group(const std::string& label, std::size_t max_order) {
  RootSystem system = [&] {
    try {
      return RootSystem::build(label);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  try {
    return std::make_unique<WeylGroup>(std::move(system), max_order);
  } catch (const GroupTooLarge& e) {
    throw UsageError("group " + label + " has order " + std::to_string(e.order()) + ", above the cap of " +
                     std::to_string(e.cap()) + "; use a smaller rank");
  }
}

ElementId parse_element(const WeylGroup& group, const std::string& spec, const char* what) {
  try {
    return group.parse_element(spec);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--") + what + ": " + e.what());
  }
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open " + path);
  return read_all(file);
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(what + ": " + e.what());
  }
}

/// Runs body(i) for i in [0, n) over `workers` threads, claiming indices in
/// increasing order. Once stop(i) reports a failure, indices above the lowest
/// failing one are no longer started, so every index below it still runs.
template <class Body>
std::size_t parallel_until_failure(std::size_t n, unsigned workers, Body body) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{kNone};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || i > first_failure.load()) return;
      if (!body(i)) {
        std::size_t cur = first_failure.load();
        while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < count; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  return first_failure.load();
}

json linear_form_json(const std::vector<int>& m) { return m; }

// ---------------------------------------------------------------------------
// ps

struct PsOutcome {
  PSResult chains;
  PSResult chevalley;
  bool agree() const {
    return chains.poly == chevalley.poly && chains.chain_count == chevalley.chain_count &&
           chains.comparable == chevalley.comparable;
  }
};

PsOutcome compute_ps(const WeylGroup& g, ElementId u, ElementId w) {
  return PsOutcome{ps_by_chains(g, u, w), ps_by_chevalley(g, u, w)};
}

json ps_json(const WeylGroup& g, const PsOutcome& r) {
  return {{"group", g.label()},
          {"u", g.format_element(r.chains.u)},
          {"w", g.format_element(r.chains.w)},
          {"comparable", r.chains.comparable},
          {"length", r.chains.length_difference},
          {"chains", r.chains.chain_count},
          {"methods_agree", r.agree()},
          {"text", r.chains.poly.to_string()},
          {"poly", to_json(r.chains.poly)}};
}

std::string ps_text(const PsOutcome& r) {
  std::ostringstream s;
  if (!r.chains.comparable) {
    s << "0 (incomparable)\n";
  } else {
    s << r.chains.poly.to_string() << "\n";
  }
  s << "chains=" << r.chains.chain_count << " length=" << r.chains.length_difference
    << " methods_agree=" << (r.agree() ? "true" : "false") << "\n";
  return s.str();
}

int cmd_ps(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = make_group(o.group, o.max_order);
  const ElementId u = parse_element(*g, o.u, "u");
  const ElementId w = parse_element(*g, o.w, "w");
  const PsOutcome r = compute_ps(*g, u, w);
  if (o.output == "json") {
    out << ps_json(*g, r).dump(2) << "\n";
  } else {
    out << ps_text(r);
  }
  if (!r.agree()) {
    err << "chain enumeration and the Chevalley recursion disagree\n";
    return kViolation;
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------
// degree

std::vector<long> lambda_or_default(const WeylGroup& g, const std::vector<long>& lambda) {
  if (lambda.empty()) return std::vector<long>(static_cast<std::size_t>(g.rank()), 1);
  if (lambda.size() != static_cast<std::size_t>(g.rank())) {
    throw UsageError("--lambda needs " + std::to_string(g.rank()) + " entries for " + g.label());
  }
  for (long x : lambda) {
    if (x < 0) throw UsageError("--lambda must be dominant (nonnegative entries)");
  }
  return lambda;
}

int cmd_degree(const Options& o, std::ostream& out, std::ostream&) {
  const auto g = make_group(o.group, o.max_order);
  const ElementId u = parse_element(*g, o.u, "u");
  const ElementId w = parse_element(*g, o.w, "w");
  const auto lambda = lambda_or_default(*g, o.lambda);
  const DegreeResult d = richardson_degree(*g, u, w, lambda);
  if (o.output == "json") {
    out << json{{"group", g->label()},
                {"u", g->format_element(u)},
                {"w", g->format_element(w)},
                {"lambda", lambda},
                {"degree", to_string(d.degree)},
                {"empty_variety", d.empty_variety}}
               .dump(2)
        << "\n";
  } else {
    out << to_string(d.degree) << (d.empty_variety ? " (empty Richardson variety)" : "") << "\n";
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------
// interval / chains

int cmd_interval(const Options& o, std::ostream& out, std::ostream&) {
  const auto g = make_group(o.group, o.max_order);
  const ElementId u = parse_element(*g, o.u, "u");
  const ElementId w = parse_element(*g, o.w, "w");
  const BruhatInterval iv(*g, u, w);
  const auto& roots = g->root_system();
  if (o.output == "json") {
    json strata = json::array();
    for (const auto& level : iv.strata()) {
      json row = json::array();
      for (ElementId v : level) row.push_back(g->format_element(v));
      strata.push_back(row);
    }
    json edges = json::array();
    for (const auto& e : iv.edges()) {
      edges.push_back({{"lower", g->format_element(e.lower)},
                       {"upper", g->format_element(e.upper)},
                       {"root", roots.positive_root(e.root).coords},
                       {"multiplicity", linear_form_json(e.multiplicity)}});
    }
    out << json{{"group", g->label()},
                {"u", g->format_element(u)},
                {"w", g->format_element(w)},
                {"empty", iv.empty()},
                {"size", iv.elements().size()},
                {"strata", strata},
                {"edges", edges}}
               .dump(2)
        << "\n";
    return kSuccess;
  }
  if (iv.empty()) {
    out << "empty (incomparable)\n";
    return kSuccess;
  }
  out << "size=" << iv.elements().size() << " rank=" << iv.rank() << " edges=" << iv.edges().size() << "\n";
  for (std::size_t k = 0; k < iv.strata().size(); ++k) {
    out << "l=" << g->length(u) + static_cast<int>(k) << ":";
    for (ElementId v : iv.strata()[k]) out << " " << g->format_element(v);
    out << "\n";
  }
  return kSuccess;
}

int cmd_chains(const Options& o, std::ostream& out, std::ostream&) {
  const auto g = make_group(o.group, o.max_order);
  const ElementId u = parse_element(*g, o.u, "u");
  const ElementId w = parse_element(*g, o.w, "w");
  const BruhatInterval iv(*g, u, w);
  auto stream = saturated_chains(iv);
  if (o.count_only) {
    const auto n = stream.count_remaining();
    if (o.output == "json") {
      out << json{{"count", n}}.dump() << "\n";
    } else {
      out << n << "\n";
    }
    return kSuccess;
  }
  json all = json::array();
  std::uint64_t n = 0;
  while (auto chain = stream.next()) {
    ++n;
    if (o.output == "json") {
      json steps = json::array();
      steps.push_back(g->format_element(u));
      json mult = json::array();
      for (const auto& e : *chain) {
        steps.push_back(g->format_element(e.upper));
        mult.push_back(e.multiplicity);
      }
      all.push_back({{"elements", steps}, {"multiplicities", mult}});
    } else {
      out << g->format_element(u);
      for (const auto& e : *chain) out << " < " << g->format_element(e.upper);
      out << "\n";
    }
  }
  if (o.output == "json") {
    out << json{{"count", n}, {"chains", all}}.dump(2) << "\n";
  } else {
    out << "count=" << n << "\n";
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------
// lorentzian

std::string exponent_text(const Exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

std::string certificate_text(const LorentzianReport& r) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, NegativeCoefficientCertificate>) {
          return "coefficient " + to_string(c.coefficient) + " at " + exponent_text(c.exponent);
        } else if constexpr (std::is_same_v<T, InhomogeneityCertificate>) {
          return "degrees differ at " + exponent_text(c.first) + " and " + exponent_text(c.second);
        } else if constexpr (std::is_same_v<T, MConvexViolation>) {
          return "alpha=" + exponent_text(c.alpha) + " beta=" + exponent_text(c.beta) +
                 " i=" + std::to_string(c.index + 1);
        } else if constexpr (std::is_same_v<T, SignatureCertificate>) {
          std::string d;
          for (auto i : c.derivatives) d += (d.empty() ? "" : ",") + std::to_string(i + 1);
          return "derivatives=[" + d + "] inertia=(" + std::to_string(c.inertia.positive) + "," +
                 std::to_string(c.inertia.negative) + "," + std::to_string(c.inertia.zero) + ")";
        } else {
          return "";
        }
      },
      r.certificate);
}

int cmd_lorentzian(const Options& o, std::ostream& out, std::ostream&, std::istream& in) {
  const std::string text = o.poly == "-" ? read_all(in) : o.poly;
  SparsePoly p = [&] {
    try {
      return poly_from_json(parse_json(text, "--poly"));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const LorentzianReport r = is_lorentzian(p, worker_count(o.jobs));

  std::optional<bool> spot;
  const bool nonnegative =
      std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second >= 0; });
  if (o.spot_check > 0 && nonnegative) spot = log_concavity_spot_check(p, o.spot_check, o.seed);

  if (o.output == "json") {
    json j = to_json(r);
    j["poly"] = to_json(p);
    if (o.spot_check > 0) {
      j["spot_check"] = {{"samples", o.spot_check},
                         {"seed", o.seed},
                         {"result", spot ? json(*spot ? "pass" : "fail") : json("skipped")}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << (r.verdict ? "true" : "false");
    if (r.reason) out << ", " << to_string(*r.reason);
    out << "\n";
    out << "degree=" << r.degree << " forms_checked=" << r.forms_checked << "\n";
    if (!r.verdict) out << "certificate: " << certificate_text(r) << "\n";
    if (o.spot_check > 0) {
      out << "spot_check=" << (spot ? (*spot ? "pass" : "fail") : "skipped") << " samples=" << o.spot_check
          << " seed=" << o.seed << "\n";
    }
  }
  return r.verdict ? kSuccess : kViolation;
}

// ---------------------------------------------------------------------------
// verify-theorem

struct PairOutcome {
  ElementId u = 0;
  ElementId w = 0;
  int length = 0;
  std::uint64_t chains = 0;
  std::size_t terms = 0;
  std::uint64_t forms_checked = 0;
  Integer degree;
  std::string failure;  // empty when every check passed
  json certificate = nullptr;
};

PairOutcome check_pair(const WeylGroup& g, ElementId u, ElementId w) {
  PairOutcome r;
  r.u = u;
  r.w = w;
  const PsOutcome ps = compute_ps(g, u, w);
  const SparsePoly& d = ps.chains.poly;
  r.length = ps.chains.length_difference;
  r.chains = ps.chains.chain_count;
  r.terms = d.num_terms();
  auto fail = [&](std::string why) {
    r.failure = std::move(why);
    return r;
  };

  if (!ps.agree()) {
    r.certificate = {{"chain_enumeration", to_json(d)}, {"chevalley_recursion", to_json(ps.chevalley.poly)}};
    return fail("methods-disagree");
  }
  if (!ps.chains.comparable || d.is_zero()) return fail("zero-polynomial");

  const auto h = is_homogeneous(d);
  if (!h.homogeneous || !h.degree || static_cast<int>(*h.degree) != r.length) return fail("wrong-degree");

  const Rational ell_factorial(factorial(static_cast<unsigned>(r.length)));
  for (const auto& [e, c] : d.terms()) {
    if (c < 0) return fail("negative-coefficient");
    if (!is_integral(c * ell_factorial)) return fail("non-integral-degree-polynomial");
  }

  if (r.length == 1) {
    const auto cover = std::find_if(g.covers(u).begin(), g.covers(u).end(),
                                    [&](const CoverEdge& e) { return e.upper == w; });
    LinearForm form;
    for (int c : cover->multiplicity) form.coeffs.emplace_back(c);
    if (d != form.to_poly()) return fail("cover-not-multiplicity");
  }

  const std::vector<long> rho(static_cast<std::size_t>(g.rank()), 1);
  const DegreeResult deg = richardson_degree(g, u, w, rho);
  r.degree = deg.degree;
  if (deg.empty_variety || deg.degree <= 0) return fail("nonpositive-degree");

  const LorentzianReport lz = is_lorentzian(d);
  r.forms_checked = lz.forms_checked;
  if (!lz.verdict) {
    r.certificate = to_json(lz);
    return fail("not-lorentzian");
  }
  const MConvexReport mc = check_mconvex(support(d));
  if (!mc.verdict) {
    r.certificate = to_json(mc);
    return fail("support-not-M-convex");
  }
  return r;
}

json pair_json(const WeylGroup& g, const PairOutcome& r) {
  json j{{"u", g.format_element(r.u)},
         {"w", g.format_element(r.w)},
         {"length", r.length},
         {"chains", r.chains},
         {"terms", r.terms},
         {"forms_checked", r.forms_checked},
         {"degree_at_rho", to_string(r.degree)}};
  if (!r.failure.empty()) {
    j["failure"] = r.failure;
    j["certificate"] = r.certificate;
  }
  return j;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = make_group(o.group, o.max_order);

  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (ElementId u = 0; u < g->order(); ++u) {
    const auto up = g->upset(u);
    for (ElementId w = 0; w < g->order(); ++w) {
      if (up[w]) pairs.emplace_back(u, w);
    }
  }

  std::vector<PairOutcome> results(pairs.size());
  const std::size_t first_failure =
      parallel_until_failure(pairs.size(), worker_count(o.jobs), [&](std::size_t i) {
        results[i] = check_pair(*g, pairs[i].first, pairs[i].second);
        return results[i].failure.empty();
      });
  const bool passed = first_failure >= pairs.size();
  const std::size_t tested = passed ? pairs.size() : first_failure + 1;

  std::uint64_t forms = 0;
  for (std::size_t i = 0; i < tested; ++i) forms += results[i].forms_checked;

  if (o.output == "json") {
    json list = json::array();
    for (std::size_t i = 0; i < tested; ++i) list.push_back(pair_json(*g, results[i]));
    json report{{"group", g->label()},
                {"order", g->order()},
                {"pairs_tested", tested},
                {"forms_checked", forms},
                {"status", passed ? "pass" : "fail"},
                {"pairs", list}};
    if (!passed) report["failure"] = pair_json(*g, results[first_failure]);
    out << report.dump(2) << "\n";
  } else {
    out << "group=" << g->label() << " order=" << g->order() << " pairs_tested=" << tested
        << " forms_checked=" << forms << "\n";
    out << "status=" << (passed ? "pass" : "fail") << "\n";
    if (!passed) {
      const auto& f = results[first_failure];
      out << "failure: " << f.failure << " at u=" << g->format_element(f.u) << " w=" << g->format_element(f.w)
          << "\n";
      if (!f.certificate.is_null()) out << "certificate: " << f.certificate.dump() << "\n";
    }
  }
  if (!passed) {
    err << "check failed for pair " << first_failure << "\n";
    return kViolation;
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepTask {
  const WeylGroup* group = nullptr;
  ElementId u = 0;
  ElementId w = 0;
  std::optional<std::vector<long>> lambda;
};

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err, std::istream& in) {
  json doc = parse_json(read_source(o.input, in), "--input");
  if (doc.is_object() && doc.contains("tasks")) doc = doc.at("tasks");
  if (!doc.is_array()) throw UsageError("--input must hold a JSON array of tasks");

  std::map<std::string, std::unique_ptr<WeylGroup>> groups;
  std::vector<SweepTask> tasks;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& t = doc[i];
    const std::string where = "task " + std::to_string(i);
    if (!t.is_object()) throw UsageError(where + ": not an object");
    std::string label = o.group;
    for (const char* key : {"group", "type"}) {
      if (t.contains(key) && t.at(key).is_string()) label = t.at(key).get<std::string>();
    }
    if (label.empty()) throw UsageError(where + ": no group given");
    if (!t.contains("u") || !t.contains("w") || !t.at("u").is_string() || !t.at("w").is_string()) {
      throw UsageError(where + ": 'u' and 'w' must be element strings");
    }
    auto& slot = groups[label];
    if (!slot) slot = make_group(label, o.max_order);
    SweepTask task;
    task.group = slot.get();
    task.u = parse_element(*slot, t.at("u").get<std::string>(), "u");
    task.w = parse_element(*slot, t.at("w").get<std::string>(), "w");
    if (t.contains("lambda")) {
      if (!t.at("lambda").is_array()) throw UsageError(where + ": 'lambda' must be an array");
      std::vector<long> lambda;
      for (const auto& x : t.at("lambda")) {
        if (!x.is_number_integer()) throw UsageError(where + ": 'lambda' entries must be integers");
        lambda.push_back(x.get<long>());
      }
      task.lambda = lambda_or_default(*slot, lambda);
    }
    tasks.push_back(std::move(task));
  }

  std::vector<PsOutcome> results(tasks.size());
  std::vector<std::optional<DegreeResult>> degrees(tasks.size());
  parallel_until_failure(tasks.size(), worker_count(o.jobs), [&](std::size_t i) {
    const auto& t = tasks[i];
    results[i] = compute_ps(*t.group, t.u, t.w);
    if (t.lambda) degrees[i] = richardson_degree(*t.group, t.u, t.w, *t.lambda);
    return true;
  });

  bool all_agree = true;
  json list = json::array();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    all_agree = all_agree && results[i].agree();
    if (o.output == "json") {
      json j = ps_json(*tasks[i].group, results[i]);
      j["index"] = i;
      if (degrees[i]) j["degree"] = to_string(degrees[i]->degree);
      list.push_back(j);
    } else {
      const auto& g = *tasks[i].group;
      out << i << " " << g.label() << " " << g.format_element(tasks[i].u) << " " << g.format_element(tasks[i].w)
          << ": " << (results[i].chains.comparable ? results[i].chains.poly.to_string() : "0 (incomparable)")
          << " chains=" << results[i].chains.chain_count;
      if (degrees[i]) out << " degree=" << to_string(degrees[i]->degree);
      if (!results[i].agree()) out << " METHODS DISAGREE";
      out << "\n";
    }
  }
  if (o.output == "json") out << list.dump(2) << "\n";
  if (!all_agree) {
    err << "chain enumeration and the Chevalley recursion disagree on at least one task\n";
    return kViolation;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Postnikov-Stanley polynomials of finite Weyl groups", "psweyl"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", o.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_group = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--group", o.group, "Cartan type and rank, e.g. A3, B2, G2");
    if (required) opt->required();
    sub->add_option("--max-order", o.max_order, "refuse groups with more elements than this");
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--u", o.u, "lower element (perm:213, word:1,2, id, w0)")->required();
    sub->add_option("--w", o.w, "upper element")->required();
  };

  auto* ps = app.add_subcommand("ps", "D_u^w by both algorithms");
  add_group(ps);
  add_pair(ps);
  add_output(ps);

  auto* degree = app.add_subcommand("degree", "lambda-degree of the Richardson variety R_u^w");
  add_group(degree);
  add_pair(degree);
  degree->add_option("--lambda", o.lambda, "fundamental-weight coordinates (default all ones)")->delimiter(',');
  add_output(degree);

  auto* interval = app.add_subcommand("interval", "Bruhat interval [u, w]");
  add_group(interval);
  add_pair(interval);
  add_output(interval);

  auto* chains = app.add_subcommand("chains", "saturated chains u -> w");
  add_group(chains);
  add_pair(chains);
  chains->add_flag("--count-only", o.count_only, "print only the number of chains");
  add_output(chains);

  auto* lorentzian = app.add_subcommand("lorentzian", "exact Lorentzian test of a polynomial");
  lorentzian->add_option("--poly", o.poly, "polynomial JSON, or - for stdin")->required();
  lorentzian->add_option("--spot-check", o.spot_check, "numeric log-concavity samples");
  lorentzian->add_option("--seed", o.seed, "seed for the spot check");
  lorentzian->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
  add_output(lorentzian);

  auto* verify = app.add_subcommand("verify-theorem", "check every pair u <= w of a group");
  add_group(verify);
  verify->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
  add_output(verify);

  auto* sweep = app.add_subcommand("sweep", "batch of {group,u,w,lambda?} tasks from JSON");
  add_group(sweep, false);
  sweep->add_option("--input", o.input, "task file, or - for stdin")->required();
  sweep->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
  add_output(sweep);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
  }

  try {
    if (ps->parsed()) return cmd_ps(o, out, err);
    if (degree->parsed()) return cmd_degree(o, out, err);
    if (interval->parsed()) return cmd_interval(o, out, err);
    if (chains->parsed()) return cmd_chains(o, out, err);
    if (lorentzian->parsed()) return cmd_lorentzian(o, out, err, in);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (sweep->parsed()) return cmd_sweep(o, out, err, in);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}

}  // namespace psw::cli
