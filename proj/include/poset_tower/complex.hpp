#pragma once

#include "poset_tower/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace poset_tower {

/// Position of a vertex in a complex's label-sorted vertex list. Since labels
/// are sorted, index order is the canonical (lexicographic label) order.
using VertexIndex = std::uint32_t;

/// Strictly increasing, nonempty list of vertex indices.
using Simplex = std::vector<VertexIndex>;

/// Position of a simplex in a complex's canonical simplex list.
using SimplexId = std::size_t;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// Canonical simplex order: by dimension, then lexicographically.
bool canonical_less(const Simplex& a, const Simplex& b);

/// Unvalidated complex as read from input.
struct RawComplex {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> simplices;
};

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Trusted builder for code that produces face-closed families by
  /// construction. `labels` must be strictly increasing; simplices may come in
  /// any order and with repeats.
  static SimplicialComplex assemble(std::vector<std::string> labels,
                                    std::vector<Simplex> simplices);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_simplices() const { return simplices_.size(); }
  bool empty() const { return labels_.empty(); }

  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(f_vector_.size()) - 1; }

  /// Number of simplices per dimension.
  const std::vector<std::size_t>& f_vector() const { return f_vector_; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexIndex v) const { return labels_.at(v); }
  std::optional<VertexIndex> find_vertex(std::string_view label) const;
  /// Throws UnknownVertex.
  VertexIndex vertex(std::string_view label) const;

  const std::vector<Simplex>& simplices() const { return simplices_; }
  const Simplex& simplex(SimplexId id) const { return simplices_.at(id); }
  std::optional<SimplexId> find(const Simplex& s) const;
  bool contains(const Simplex& s) const { return find(s).has_value(); }
  /// Throws SimplexNotInComplex.
  SimplexId id_of(const Simplex& s) const;

  /// Simplices containing vertex v, in canonical order.
  const std::vector<SimplexId>& incident(VertexIndex v) const { return incident_.at(v); }

  /// Builds a simplex from labels (any order); throws UnknownVertex.
  Simplex simplex_from_labels(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const Simplex& s) const;

  bool operator==(const SimplicialComplex& other) const {
    return labels_ == other.labels_ && simplices_ == other.simplices_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexIndex> vertex_index_;
  std::vector<Simplex> simplices_;
  std::unordered_map<Simplex, SimplexId, SimplexHash> simplex_index_;
  std::vector<std::vector<SimplexId>> incident_;
  std::vector<std::size_t> f_vector_;
};

/// Checks face closure and vertex consistency; throws MissingFace,
/// UnknownVertex or InvalidInput.
SimplicialComplex validate_complex(const RawComplex& raw);

/// "{a,b}" in canonical vertex order.
std::string format_simplex(const SimplicialComplex& k, const Simplex& s);

/// Label of the barycenter of `s` as a vertex of the next subdivision stage:
/// a vertex keeps its own label, a larger simplex becomes "b{u,v,...}".
std::string barycenter_label(const SimplicialComplex& k, const Simplex& s);

bool is_subset(const Simplex& small, const Simplex& large);
Simplex simplex_union(const Simplex& a, const Simplex& b);
bool disjoint(const Simplex& a, const Simplex& b);

std::vector<SimplexId> maximal_simplices(const SimplicialComplex& k);

/// Subcomplex spanned by a face-closed subset of simplex ids; only the
/// vertices that occur are kept.
SimplicialComplex subcomplex(const SimplicialComplex& k, const std::vector<SimplexId>& ids);

/// Closed star {τ | σ∪τ ∈ K}; throws SimplexNotInComplex.
SimplicialComplex star(const SimplicialComplex& k, const Simplex& sigma);
/// Simplices of the star disjoint from σ; throws SimplexNotInComplex.
SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma);
/// {τ ∈ K | σ ⊆ τ}, canonical order; throws SimplexNotInComplex.
std::vector<SimplexId> open_star(const SimplicialComplex& k, const Simplex& sigma);

/// A point of |K| in exact barycentric coordinates. Only the positive
/// coordinates are stored, sorted by vertex. A point carries no reference to
/// its complex; it is meaningful relative to the complex it was made for.
class RationalPoint {
 public:
  using Entry = std::pair<VertexIndex, Rational>;

  RationalPoint() = default;

  /// Validates against `k`: nonnegative, summing to 1, support a simplex.
  static RationalPoint make(const SimplicialComplex& k, std::vector<Entry> coords);
  static RationalPoint from_labels(const SimplicialComplex& k,
                                   const std::map<std::string, Rational>& coords);
  /// No validation; zero weights are dropped.
  static RationalPoint unchecked(const std::map<VertexIndex, Rational>& weights);

  static RationalPoint at_vertex(VertexIndex v);
  static RationalPoint barycenter(const Simplex& s);

  const std::vector<Entry>& coords() const { return coords_; }
  Rational coord(VertexIndex v) const;

  bool operator==(const RationalPoint& other) const { return coords_ == other.coords_; }

 private:
  std::vector<Entry> coords_;
};

Simplex support(const RationalPoint& p);

/// Σ_v (p_v − q_v)²; throws NoCommonSimplex unless the supports span a simplex.
Rational dist_sq(const SimplicialComplex& k, const RationalPoint& p, const RationalPoint& q);

std::map<std::string, Rational> point_labels(const SimplicialComplex& k, const RationalPoint& p);

}  // namespace poset_tower
