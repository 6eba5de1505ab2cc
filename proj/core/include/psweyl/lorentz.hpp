#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "psweyl/polynomial.hpp"

namespace psw {

/// Witness that the exchange axiom fails: alpha_i > beta_i and no j with
/// alpha_j < beta_j has both alpha - e_i + e_j and beta - e_j + e_i in the set.
/// index is 0-based (variable x_{index+1}).
struct MConvexViolation {
  Exponent alpha;
  Exponent beta;
  std::size_t index = 0;
};

struct MConvexReport {
  bool verdict = true;
  std::optional<MConvexViolation> violation;
};

/// Exhaustive exchange-axiom test over all ordered pairs and indices.
/// Throws std::invalid_argument on mixed vector lengths.
MConvexReport check_mconvex(std::span<const Exponent> points);

/// Re-checks a violation against the set from scratch.
bool violation_holds(std::span<const Exponent> points, const MConvexViolation& v);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact inertia of a symmetric rational matrix by symmetric congruence
/// (diagonal pivots, 2x2 blocks when the remaining diagonal vanishes).
/// Throws std::invalid_argument if the matrix is not square and symmetric.
Inertia symmetric_inertia(RationalMatrix a);

/// Symmetric A with q = x^T A x.
RationalMatrix quadratic_form_matrix(const SparsePoly& q);

/// Inertia of a quadratic form. Forms of degree < 2 count as the zero form;
/// anything not homogeneous of degree <= 2 is rejected.
Inertia quadratic_inertia(const SparsePoly& q);

enum class LorentzFailure { NegativeCoefficient, NotHomogeneous, SupportNotMConvex, BadSignature };

std::string to_string(LorentzFailure f);

struct NegativeCoefficientCertificate {
  Exponent exponent;
  Rational coefficient;
};

/// Two support exponents of different total degree.
struct InhomogeneityCertificate {
  Exponent first;
  Exponent second;
};

/// 0-based variable indices, nondecreasing, and the inertia of the
/// resulting quadratic form.
struct SignatureCertificate {
  std::vector<std::size_t> derivatives;
  Inertia inertia;
};

using LorentzCertificate = std::variant<std::monostate, NegativeCoefficientCertificate, InhomogeneityCertificate,
                                        MConvexViolation, SignatureCertificate>;

struct LorentzianReport {
  bool verdict = true;
  unsigned degree = 0;
  std::optional<LorentzFailure> reason;
  LorentzCertificate certificate;
  /// Derivative multisets whose quadratic form was examined.
  std::uint64_t forms_checked = 0;
};

/// Decides the Lorentzian property exactly: nonnegative coefficients,
/// homogeneity, M-convex support, then every (d-2)-fold derivative (over
/// multisets of indices) must be a quadratic form with at most one positive
/// eigenvalue. Stops at the first failing clause. The signature checks are
/// split over `jobs` threads; the reported failure is always the first one
/// in enumeration order.
LorentzianReport is_lorentzian(const SparsePoly& p, unsigned jobs = 1);

/// Replays a failure certificate against p; true iff it reproduces the
/// reported failure. Passing reports replay as false.
bool replay_certificate(const SparsePoly& p, const LorentzianReport& report);

struct SpotCheckOptions {
  double step = 1e-4;
  double tolerance = 1e-9;
};

/// Numeric aid: samples positive points and unit directions and checks that
/// t -> log q(x + t v) has nonpositive second difference for q = p and random
/// derivatives of p. False only on a violation beyond tolerance. Throws
/// std::invalid_argument for samples == 0 or a negative coefficient.
bool log_concavity_spot_check(const SparsePoly& p, std::size_t samples, std::uint64_t seed,
                              SpotCheckOptions options = {});

nlohmann::json to_json(const Inertia& inertia);
nlohmann::json to_json(const MConvexReport& report);
nlohmann::json to_json(const LorentzianReport& report);

}  // namespace psw
