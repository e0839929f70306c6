#pragma once

#include "poset_tower/complex.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace poset_tower {

/// Position in the label-sorted element list of a poset.
using ElementIndex = std::size_t;

/// Finite partial order. The relation is kept twice: as up/down bitsets of
/// the full (reflexive, transitive) order for O(1) comparisons, and as its
/// Hasse diagram (upper and lower covers).
class FinitePoset {
 public:
  using Bits = boost::dynamic_bitset<>;

  FinitePoset() = default;

  /// Closes an arbitrary generating relation (reflexive pairs implied).
  /// Throws ElementNotFound for pairs naming unknown elements and
  /// NotAntisymmetric when the closure is only a preorder.
  static FinitePoset from_relation(std::vector<std::string> elements,
                                   const std::vector<std::pair<std::string, std::string>>& leq);

  /// Builds from up-sets that are already transitive; `up[i]` lists every j
  /// with i <= j and must be indexed consistently with the sorted labels.
  /// Reflexivity, antisymmetry and transitivity are verified.
  static FinitePoset from_up_sets(std::vector<std::string> elements,
                                  const std::vector<std::vector<ElementIndex>>& up);

  /// Calls `leq(i, j)` for every pair; same verification as from_up_sets.
  static FinitePoset from_order(std::vector<std::string> elements,
                                const std::function<bool(ElementIndex, ElementIndex)>& leq);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(ElementIndex i) const { return labels_.at(i); }
  std::optional<ElementIndex> find(std::string_view label) const;
  /// Throws ElementNotFound.
  ElementIndex index_of(std::string_view label) const;

  bool leq(ElementIndex a, ElementIndex b) const { return up_[a][b]; }
  bool less(ElementIndex a, ElementIndex b) const { return a != b && up_[a][b]; }

  const Bits& up_bits(ElementIndex a) const { return up_.at(a); }
  const Bits& down_bits(ElementIndex a) const { return down_.at(a); }

  const std::vector<ElementIndex>& upper_covers(ElementIndex a) const { return covers_.at(a); }
  const std::vector<ElementIndex>& lower_covers(ElementIndex a) const { return cocovers_.at(a); }

  /// Cover pairs (lower, upper) in canonical order.
  std::vector<std::pair<ElementIndex, ElementIndex>> hasse_edges() const;

  /// Subposet on `keep` (any order); labels keep their relative order.
  FinitePoset induced(const std::vector<ElementIndex>& keep) const;

  bool operator==(const FinitePoset& other) const {
    return labels_ == other.labels_ && up_ == other.up_;
  }

 private:
  static FinitePoset from_bits(std::vector<std::string> labels, std::vector<Bits> up,
                               bool verify_transitive);
  void finish();

  std::vector<std::string> labels_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<std::vector<ElementIndex>> covers_;
  std::vector<std::vector<ElementIndex>> cocovers_;
};

/// Element assignment between two posets.
struct PosetMap {
  std::shared_ptr<const FinitePoset> source;
  std::shared_ptr<const FinitePoset> target;
  std::vector<ElementIndex> assignment;
};

/// {y | y >= x}: the basic open set in the up-set convention.
std::vector<ElementIndex> up_set(const FinitePoset& x, ElementIndex e);
/// {y | y <= x}: the minimal open set in the down-set convention.
std::vector<ElementIndex> min_open(const FinitePoset& x, ElementIndex e);

bool is_up_set(const FinitePoset& x, const std::vector<ElementIndex>& subset);

bool is_order_preserving(const FinitePoset& source, const FinitePoset& target,
                         const std::vector<ElementIndex>& assignment);
bool is_order_preserving(const PosetMap& f);

/// Whether `x` is an up or down beat point of the subposet on `alive`.
bool is_beat_point(const FinitePoset& x, const FinitePoset::Bits& alive, ElementIndex e);

/// Stong core: repeatedly removes the first beat point in canonical order.
FinitePoset core(const FinitePoset& x);

/// Simplicial complex of nonempty chains; vertices keep the element labels.
SimplicialComplex order_complex(const FinitePoset& x);

/// Simplices of K ordered by inclusion. Each simplex is labelled by
/// barycenter_label, so order_complex(face_poset(K)) carries the same vertex
/// labels as the first subdivision of K.
FinitePoset face_poset(const SimplicialComplex& k);

/// Checks that `map` is a bijection with x <= y iff map(x) <= map(y).
bool is_isomorphism(const FinitePoset& a, const FinitePoset& b,
                    const std::vector<ElementIndex>& map);

/// Isomorphism search by colour refinement plus backtracking.
std::optional<std::vector<ElementIndex>> find_isomorphism(const FinitePoset& a,
                                                          const FinitePoset& b);
bool are_isomorphic(const FinitePoset& a, const FinitePoset& b);

}  // namespace poset_tower
