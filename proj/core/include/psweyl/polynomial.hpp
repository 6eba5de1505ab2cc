#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "psweyl/rational.hpp"

namespace psw {

using Exponent = std::vector<std::uint32_t>;

unsigned total_degree(const Exponent& e);

/// Graded lexicographic order, largest first: higher total degree first, ties
/// broken lexicographically with x1 > x2 > ... .
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Exact sparse polynomial in x1..xn over Q. Zero coefficients are never
/// stored, so two polynomials are equal iff their term maps are equal.
class SparsePoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexGreater>;

  explicit SparsePoly(std::size_t num_vars);

  static SparsePoly constant(std::size_t num_vars, const Rational& c);
  /// x_{var+1}; var is 0-based.
  static SparsePoly variable(std::size_t num_vars, std::size_t var);
  static SparsePoly monomial(Exponent exponent, const Rational& c);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;

  /// Adds c x^e, pruning the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  SparsePoly& operator+=(const SparsePoly& rhs);
  SparsePoly& operator-=(const SparsePoly& rhs);
  SparsePoly& operator*=(const SparsePoly& rhs);
  SparsePoly& operator*=(const Rational& c);
  SparsePoly& operator/=(const Rational& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
  friend SparsePoly operator/(SparsePoly a, const Rational& c) { return a /= c; }
  SparsePoly operator-() const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  /// d/dx_{var+1}; var is 0-based.
  SparsePoly derivative(std::size_t var) const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  /// "x1*x2 + 1/2*x2^2"; terms in GrlexGreater order, "0" for the zero polynomial.
  std::string to_string() const;

 private:
  std::size_t num_vars_;
  TermMap terms_;
};

/// c_1 x_1 + ... + c_r x_r with integer coefficients.
struct LinearForm {
  std::vector<int> coeffs;

  SparsePoly to_poly() const;
};

inline SparsePoly scale(const SparsePoly& p, const Rational& c) { return p * c; }

/// Exponent vectors with nonzero coefficient, in GrlexGreater order.
std::vector<Exponent> support(const SparsePoly& p);

struct Homogeneity {
  bool homogeneous = true;
  /// Common total degree; empty for the zero polynomial.
  std::optional<unsigned> degree;
};

Homogeneity is_homogeneous(const SparsePoly& p);

/// {"vars": r, "terms": [{"exp": [...], "num": "p", "den": "q"}, ...]}
nlohmann::json to_json(const SparsePoly& p);
/// Inverse of to_json. Repeated exponents are summed. Throws
/// std::invalid_argument on malformed input.
SparsePoly poly_from_json(const nlohmann::json& j);

}  // namespace psw
