#include "psweyl/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace psw {

unsigned total_degree(const Exponent& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

SparsePoly::SparsePoly(std::size_t num_vars) : num_vars_(num_vars) {
  if (num_vars == 0) throw std::invalid_argument("SparsePoly needs at least one variable");
}

SparsePoly SparsePoly::constant(std::size_t num_vars, const Rational& c) {
  SparsePoly p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t num_vars, std::size_t var) {
  if (var >= num_vars) throw std::out_of_range("variable index out of range");
  Exponent e(num_vars, 0);
  e[var] = 1;
  SparsePoly p(num_vars);
  p.add_term(e, 1);
  return p;
}

SparsePoly SparsePoly::monomial(Exponent exponent, const Rational& c) {
  SparsePoly p(exponent.size());
  p.add_term(exponent, c);
  return p;
}

Rational SparsePoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != num_vars_) throw std::invalid_argument("exponent length does not match num_vars");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void check_vars(const SparsePoly& a, const SparsePoly& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("polynomials have different num_vars");
}

}  // namespace

SparsePoly& SparsePoly::operator+=(const SparsePoly& rhs) {
  check_vars(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& rhs) {
  check_vars(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  check_vars(a, b);
  SparsePoly out(a.num_vars());
  Exponent e(a.num_vars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.terms_.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& term) { return term.second == 0; });
  return out;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& rhs) { return *this = *this * rhs; }

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePoly& SparsePoly::operator/=(const Rational& c) {
  if (c == 0) throw std::domain_error("division of a polynomial by zero");
  for (auto& [e, coeff] : terms_) coeff /= c;
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

SparsePoly SparsePoly::derivative(std::size_t var) const {
  if (var >= num_vars_) throw std::out_of_range("derivative: variable index out of range");
  SparsePoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    out.terms_.emplace(std::move(d), c * static_cast<unsigned long>(e[var]));
  }
  return out;
}

Rational SparsePoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) throw std::invalid_argument("evaluate: point has wrong length");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

double SparsePoly::evaluate(std::span<const double> point) const {
  if (point.size() != num_vars_) throw std::invalid_argument("evaluate: point has wrong length");
  double total = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] != 0) term *= std::pow(point[i], static_cast<double>(e[i]));
    }
    total += term;
  }
  return total;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << psw::to_string(mag);
    } else if (mag == 1) {
      out << mono;
    } else {
      out << psw::to_string(mag) << '*' << mono;
    }
  }
  return out.str();
}

SparsePoly LinearForm::to_poly() const {
  SparsePoly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

std::vector<Exponent> support(const SparsePoly& p) {
  std::vector<Exponent> out;
  out.reserve(p.num_terms());
  for (const auto& [e, c] : p.terms()) out.push_back(e);
  return out;
}

Homogeneity is_homogeneous(const SparsePoly& p) {
  Homogeneity h;
  for (const auto& [e, c] : p.terms()) {
    const unsigned d = total_degree(e);
    if (!h.degree) {
      h.degree = d;
    } else if (*h.degree != d) {
      return Homogeneity{false, std::nullopt};
    }
  }
  return h;
}

nlohmann::json to_json(const SparsePoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"exp", e}, {"num", psw::to_string(Integer(c.get_num()))}, {"den", psw::to_string(Integer(c.get_den()))}});
  }
  return {{"vars", p.num_vars()}, {"terms", std::move(terms)}};
}

namespace {

Integer json_integer(const nlohmann::json& v, const char* field) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    auto q = parse_rational(s);
    if (!is_integral(q) || s.find('/') != std::string::npos) {
      throw std::invalid_argument(std::string("polynomial JSON: '") + field + "' must be an integer string");
    }
    return q.get_num();
  }
  if (v.is_number_integer()) return Integer(v.get<long>());
  throw std::invalid_argument(std::string("polynomial JSON: '") + field + "' must be a decimal string");
}

}  // namespace

SparsePoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) {
    throw std::invalid_argument("polynomial JSON must be an object with 'vars' and 'terms'");
  }
  if (!j.at("vars").is_number_integer() || j.at("vars").get<long>() <= 0) {
    throw std::invalid_argument("polynomial JSON: 'vars' must be a positive integer");
  }
  const auto n = j.at("vars").get<std::size_t>();
  if (!j.at("terms").is_array()) throw std::invalid_argument("polynomial JSON: 'terms' must be an array");
  SparsePoly p(n);
  for (const auto& term : j.at("terms")) {
    if (!term.is_object() || !term.contains("exp") || !term.at("exp").is_array()) {
      throw std::invalid_argument("polynomial JSON: each term needs an 'exp' array");
    }
    Exponent e;
    for (const auto& x : term.at("exp")) {
      if (!x.is_number_integer() || x.get<long>() < 0) {
        throw std::invalid_argument("polynomial JSON: exponents must be nonnegative integers");
      }
      e.push_back(x.get<std::uint32_t>());
    }
    if (e.size() != n) throw std::invalid_argument("polynomial JSON: exponent length differs from 'vars'");
    const Integer num = term.contains("num") ? json_integer(term.at("num"), "num") : Integer(1);
    const Integer den = term.contains("den") ? json_integer(term.at("den"), "den") : Integer(1);
    p.add_term(e, make_rational(num, den));
  }
  return p;
}

}  // namespace psw
