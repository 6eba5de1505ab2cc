#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "psweyl/int_matrix.hpp"
#include "psweyl/rational.hpp"

namespace psw {

enum class CartanType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Cartan datum of an irreducible finite crystallographic root system.
///
/// Simple roots follow the Bourbaki numbering:
///   A_r  1 - 2 - ... - r
///   B_r  1 - ... - (r-1) => r        alpha_r short
///   C_r  1 - ... - (r-1) <= r        alpha_r long
///   D_r  1 - ... - (r-2) < (r-1), r  branch at r-2
///   E_r  1 - 3 - 4 - 5 - ... - r,   2 attached to 4
///   F_4  1 - 2 => 3 - 4              alpha_1, alpha_2 long
///   G_2  1 <= 2                      alpha_1 short, alpha_2 long
///
/// cartan(i, j) = (alpha_j, alpha_i^vee) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
/// The inner product is normalized so that short roots have (alpha, alpha) = 2,
/// hence (alpha_i, alpha_i) = 2 * symmetrizers[i].
struct CartanDatum {
  CartanType type = CartanType::A;
  int rank = 0;
  IntMatrix cartan;
  std::vector<int> symmetrizers;

  /// "A3", "G2", ...
  std::string label() const;

  /// Gram matrix (alpha_i, alpha_j) = symmetrizers[i] * cartan(i, j).
  IntMatrix gram() const;
};

/// Throws std::invalid_argument for combinations that are not finite types
/// (A_r r>=1, B_r r>=2, C_r r>=2, D_r r>=4, E_6..E_8, F_4, G_2).
CartanDatum make_cartan_datum(CartanType type, int rank);

/// Parses labels such as "A3", "b2", "E6".
std::pair<CartanType, int> parse_type_label(std::string_view label);

struct Root {
  /// Expansion in the simple-root basis.
  std::vector<int> coords;
  /// alpha^vee = sum_i coroot_coords[i] alpha_i^vee.
  std::vector<int> coroot_coords;

  int height() const;
  bool is_positive() const;
};

class RootSystem {
 public:
  /// Positive roots are the closure of the simple roots under simple
  /// reflections, restricted to positive roots, ordered by height and then
  /// lexicographically descending (so alpha_1, ..., alpha_r come first).
  static RootSystem build(CartanType type, int rank);
  static RootSystem build(std::string_view label);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank; }
  std::string label() const { return datum_.label(); }

  std::span<const Root> positive_roots() const { return positive_; }
  const Root& positive_root(std::size_t index) const { return positive_.at(index); }
  std::size_t num_positive_roots() const { return positive_.size(); }

  /// Index of the positive root with the given simple-root coordinates.
  std::optional<std::size_t> find_positive(std::span<const int> coords) const;
  /// Same, with the coordinates given as int64 (matrix-action output).
  std::optional<std::size_t> find_positive(std::span<const IntMatrix::value_type> coords) const;

  /// True if coords is a root (positive or negative).
  bool is_root(std::span<const int> coords) const;

  /// Index of alpha_i (0-based i) among the positive roots.
  std::size_t simple_root_index(int i) const { return simple_index_.at(static_cast<std::size_t>(i)); }

  const IntMatrix& reflection(std::size_t root_index) const { return reflections_.at(root_index); }
  const IntMatrix& simple_reflection(int i) const { return reflection(simple_root_index(i)); }

  /// Positive root whose reflection matrix equals m, if any.
  std::optional<std::size_t> reflection_root(const IntMatrix& m) const;

  /// Expansion of alpha^vee in simple coroots. alpha must be a positive root.
  std::vector<int> chevalley_coefficients(std::span<const int> alpha) const;

  /// s_alpha(v) = v - (v, alpha^vee) alpha in the simple-root basis. alpha may
  /// be positive or negative.
  std::vector<Rational> reflect(std::span<const int> alpha, std::span<const Rational> v) const;

  /// (a, b) for vectors in the simple-root basis.
  Rational inner_product(std::span<const Rational> a, std::span<const Rational> b) const;
  std::int64_t inner_product(std::span<const int> a, std::span<const int> b) const;

  /// Row vector phi with phi . v = (v, alpha^vee) for the positive root at index.
  std::span<const IntMatrix::value_type> coroot_functional(std::size_t root_index) const {
    return coroot_functionals_.at(root_index);
  }

 private:
  RootSystem() = default;
  void finish_construction();

  CartanDatum datum_;
  IntMatrix gram_;
  std::vector<Root> positive_;
  std::vector<std::size_t> simple_index_;
  std::vector<IntMatrix> reflections_;
  std::vector<std::vector<IntMatrix::value_type>> coroot_functionals_;
  std::unordered_map<IntMatrix, std::size_t, IntMatrixHash> reflection_lookup_;
};

/// Number of positive roots for the type, from the classical formulas.
std::size_t classical_positive_root_count(CartanType type, int rank);

}  // namespace psw
