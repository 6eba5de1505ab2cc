#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "psweyl/int_matrix.hpp"
#include "psweyl/root_system.hpp"

namespace psw {

using ElementId = std::uint32_t;

struct WeylElement {
  /// Action on the root lattice, simple-root basis, acting on columns.
  IntMatrix action;
  /// Number of positive roots sent to negative roots.
  int length = 0;
};

/// u <. u s_alpha, labelled by the positive root alpha.
struct CoverEdge {
  ElementId lower = 0;
  ElementId upper = 0;
  std::size_t root = 0;  ///< index into RootSystem::positive_roots()
  /// Chevalley multiplicity (lambda, alpha^vee) = sum_i multiplicity[i] x_i.
  std::vector<int> multiplicity;
};

class GroupTooLarge : public std::length_error {
 public:
  GroupTooLarge(std::string label, std::size_t order, std::size_t cap);
  std::size_t order() const { return order_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t order_;
  std::size_t cap_;
};

class BruhatInterval;

/// A finite Weyl group with every element materialized, plus the full cover
/// graph of the strong Bruhat order. Immutable after construction.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 1'000'000;

  explicit WeylGroup(RootSystem system, std::size_t max_order = kDefaultMaxOrder);

  const RootSystem& root_system() const { return system_; }
  int rank() const { return system_.rank(); }
  std::string label() const { return system_.label(); }

  std::size_t order() const { return elements_.size(); }
  const WeylElement& element(ElementId id) const { return elements_.at(id); }
  int length(ElementId id) const { return elements_.at(id).length; }
  /// Distance from the identity in the right Cayley graph (BFS discovery).
  int cayley_depth(ElementId id) const { return depth_.at(id); }
  int max_length() const { return static_cast<int>(system_.num_positive_roots()); }

  ElementId identity() const { return 0; }
  ElementId longest_element() const { return longest_; }

  std::optional<ElementId> find(const IntMatrix& action) const;
  /// id * s_i (i is 0-based).
  ElementId times_simple(ElementId id, int i) const {
    return right_simple_[static_cast<std::size_t>(id) * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(i)];
  }
  ElementId inverse(ElementId id) const;
  ElementId multiply(ElementId a, ElementId b) const;

  std::span<const CoverEdge> covers(ElementId id) const;
  /// Edges v <. id.
  std::span<const std::size_t> down_cover_edges(ElementId id) const;
  const CoverEdge& edge(std::size_t edge_index) const { return edges_.at(edge_index); }
  std::size_t num_edges() const { return edges_.size(); }

  /// Strong Bruhat order, by reachability through cover edges.
  bool leq(ElementId u, ElementId w) const;
  /// {v : v >= u}, as a membership mask indexed by ElementId.
  std::vector<bool> upset(ElementId u, std::optional<int> max_len = std::nullopt) const;
  /// {v : v <= w}.
  std::vector<bool> downset(ElementId w, std::optional<int> min_len = std::nullopt) const;

  BruhatInterval interval(ElementId u, ElementId w) const;

  /// Lexicographically first reduced word (1-based generator indices).
  std::vector<int> reduced_word(ElementId id) const;
  /// Product s_{w[0]} s_{w[1]} ... of 1-based indices; need not be reduced.
  ElementId from_word(std::span<const int> word) const;

  /// One-line notation for type A_r, a permutation of 1..r+1.
  std::vector<int> to_permutation(ElementId id) const;
  ElementId from_permutation(std::span<const int> perm) const;

  /// "word:1,2,1" (all types), "perm:213" or "perm:2,1,3" (type A), "id", "w0".
  ElementId parse_element(std::string_view spec) const;
  /// "perm:..." for type A, "word:..." otherwise; parse_element inverts it.
  std::string format_element(ElementId id) const;

 private:
  int inversion_count(const IntMatrix& m) const;
  void build_elements(std::size_t max_order);
  void build_covers();

  RootSystem system_;
  std::vector<WeylElement> elements_;
  std::vector<int> depth_;
  std::unordered_map<IntMatrix, ElementId, IntMatrixHash> index_;
  std::vector<ElementId> right_simple_;
  ElementId longest_ = 0;

  std::vector<CoverEdge> edges_;  // grouped by lower element
  std::vector<std::size_t> up_offsets_;
  std::vector<std::size_t> down_offsets_;
  std::vector<std::size_t> down_edges_;
};

/// Group order from the classical formulas; used to refuse oversized groups
/// before generating anything.
std::size_t classical_group_order(CartanType type, int rank);

/// The interval [bottom, top] with its labelled cover edges. Empty when
/// bottom is not below top.
class BruhatInterval {
 public:
  BruhatInterval(const WeylGroup& group, ElementId bottom, ElementId top);

  const WeylGroup& group() const { return *group_; }
  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }
  bool empty() const { return elements_.empty(); }

  /// Elements sorted by (length, id).
  std::span<const ElementId> elements() const { return elements_; }
  /// strata()[k] holds the elements of length l(bottom) + k.
  const std::vector<std::vector<ElementId>>& strata() const { return strata_; }
  std::span<const CoverEdge> edges() const { return edges_; }
  bool contains(ElementId v) const { return local_.count(v) != 0; }
  /// Edge indices (into edges()) leaving v upward inside the interval.
  std::span<const std::size_t> out_edges(ElementId v) const;
  int rank() const { return static_cast<int>(strata_.empty() ? 0 : strata_.size() - 1); }

 private:
  const WeylGroup* group_;
  ElementId bottom_;
  ElementId top_;
  std::vector<ElementId> elements_;
  std::vector<std::vector<ElementId>> strata_;
  std::vector<CoverEdge> edges_;
  std::unordered_map<ElementId, std::size_t> local_;
  std::vector<std::vector<std::size_t>> out_;
};

using Chain = std::vector<CoverEdge>;

/// Depth-first stream over the saturated chains bottom -> top of an interval.
/// Each stream owns its traversal state; the interval must outlive it.
class ChainStream {
 public:
  explicit ChainStream(const BruhatInterval& interval);

  /// Next chain, or nullopt once exhausted.
  std::optional<Chain> next();
  /// Counts the chains not yet produced without materializing them, and
  /// exhausts the stream.
  std::uint64_t count_remaining();

 private:
  bool advance();

  const BruhatInterval* interval_;
  // cursor_[k]: next out-edge to try from the k-th vertex of the path
  std::vector<std::size_t> cursor_;
  std::vector<std::size_t> path_edges_;
  bool started_ = false;
  bool done_ = false;
};

inline ChainStream saturated_chains(const BruhatInterval& interval) { return ChainStream(interval); }

}  // namespace psw
