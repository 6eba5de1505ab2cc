#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "psweyl/polynomial.hpp"
#include "psweyl/weyl_group.hpp"

namespace psw {

enum class PsMethod { ChainEnumeration, ChevalleyRecursion };

std::string to_string(PsMethod m);

/// D_u^w together with how it was obtained.
struct PSResult {
  ElementId u = 0;
  ElementId w = 0;
  SparsePoly poly{1};
  /// Number of saturated chains u -> w (0 when u is not below w).
  std::uint64_t chain_count = 0;
  PsMethod method = PsMethod::ChainEnumeration;
  /// False when u is not below w; poly is then zero.
  bool comparable = false;
  /// l(w) - l(u), possibly negative.
  int length_difference = 0;
};

/// Sum over the saturated chains u -> w of the product of the Chevalley
/// multiplicities along the chain, divided by (l(w) - l(u))!.
PSResult ps_by_chains(const WeylGroup& group, ElementId u, ElementId w);

/// Same polynomial, obtained by applying the Chevalley formula
/// l(w) - l(u) times to the Schubert class of u and reading off the
/// coefficient of the class of w. Classes are pruned to [u, w] at each step.
PSResult ps_by_chevalley(const WeylGroup& group, ElementId u, ElementId w);

/// Element of H*(G/B) in the Schubert basis with polynomial coefficients in
/// the symbolic weight coordinates x1..xr. Absent elements mean zero.
class CohomClass {
 public:
  explicit CohomClass(std::size_t num_vars) : num_vars_(num_vars) {}

  static CohomClass schubert(const WeylGroup& group, ElementId u);

  const std::map<ElementId, SparsePoly>& coefficients() const { return coeffs_; }
  SparsePoly coefficient(ElementId v) const;
  void add(ElementId v, const SparsePoly& p);

  /// Multiplication by the class of lambda (Chevalley formula). If keep is
  /// non-empty, only elements with keep[v] survive.
  CohomClass times_lambda(const WeylGroup& group, const std::vector<bool>& keep = {}) const;

 private:
  std::size_t num_vars_;
  std::map<ElementId, SparsePoly> coeffs_;
};

struct DegreeResult {
  /// (l(w) - l(u))! * D_u^w(lambda); 0 for an empty variety.
  Integer degree;
  /// Set when u is not below w, so the Richardson variety is empty.
  bool empty_variety = false;
};

/// Degree of the Richardson variety R_u^w in the embedding given by the
/// dominant weight lambda = sum x_i omega_i (fundamental-weight coordinates).
/// Throws std::invalid_argument for negative or wrongly sized lambda.
DegreeResult richardson_degree(const WeylGroup& group, ElementId u, ElementId w, std::span<const long> lambda);

/// All D_u^{w'} with l(w') = l(u) + ell, from one Chevalley sweep. Entries
/// with zero polynomial are omitted; ell beyond l(w0) - l(u) gives an empty map.
std::map<ElementId, SparsePoly> interval_distribution(const WeylGroup& group, ElementId u, int ell);

}  // namespace psw
