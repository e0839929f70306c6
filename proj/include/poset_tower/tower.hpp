#pragma once

#include "poset_tower/complex.hpp"
#include "poset_tower/poset.hpp"
#include "poset_tower/subdivision.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace poset_tower {

/// The finite space X_n: its points are the vertices of K_n, ordered by
/// inclusion of the closed carrier simplices they sit in at stage n-1.
/// Element indices coincide with stage-n vertex indices.
struct TowerLevel {
  int n = 0;
  std::shared_ptr<const FinitePoset> poset;
  /// Element -> vertex set of its closed carrier simplex in K_{n-1}.
  std::vector<Simplex> closure;
};

/// Orders the stage-n vertices by closed-carrier inclusion.
TowerLevel build_level(const SubdividedComplex& stages, int n);

/// X_1, ..., X_N over K, together with K_0, ..., K_N.
class Tower {
 public:
  /// `max_simplices` (0 = unbounded) caps every subdivision stage.
  Tower(const SimplicialComplex& k, int depth, std::size_t max_simplices = 0);
  explicit Tower(SubdividedComplex stages);

  int depth() const { return stages_.stage(); }
  const SimplicialComplex& base() const { return stages_.base(); }
  const SubdividedComplex& stages() const { return stages_; }

  /// Throws LevelOutOfRange unless 1 <= n <= depth.
  const TowerLevel& level(int n) const;
  const FinitePoset& poset(int n) const { return *level(n).poset; }
  std::shared_ptr<const FinitePoset> shared_poset(int n) const { return level(n).poset; }

  /// σ_x: the simplex of K_{n-1} whose open simplex is p_n^{-1}(x).
  SimplexId carrier(int n, ElementIndex x) const;
  /// The level-n element sitting at the barycenter of simplex s of K_{n-1}.
  ElementIndex element_of(int n, SimplexId s) const;

 private:
  SubdividedComplex stages_;
  std::vector<TowerLevel> levels_;
};

/// p_n: the level-n element whose carrier open simplex contains p (a stage-0
/// point).
ElementIndex project_point(const Tower& t, const RationalPoint& p, int n);

/// f_n^m(x) for x in level m; q is "the largest member of the carrier chain".
/// Throws LevelOutOfRange unless 1 <= n <= m <= depth.
ElementIndex bond(const Tower& t, int m, ElementIndex x, int n);

/// {σ_y | y >= x} as simplex ids of K_{n-1}.
std::vector<SimplexId> basic_preimage(const Tower& t, int n, ElementIndex x);

/// Finite prefix (x_1, ..., x_N) of a thread; entries[k] lies in level k+1.
struct ThreadPrefix {
  std::vector<ElementIndex> entries;
  bool operator==(const ThreadPrefix&) const = default;
};

ThreadPrefix encode_thread(const Tower& t, const RationalPoint& p, int depth);

/// q_n(x_n) == x_{n-1} for every consecutive pair.
bool validate_thread(const Tower& t, const ThreadPrefix& thread);

struct DecodedRegion {
  /// Closed carriers σ_{x_n} as simplices of K_{n-1}, n = 1..N.
  std::vector<Simplex> chain;
  /// Stage-0 coordinates of the barycenter of the last carrier.
  RationalPoint representative;
  /// Squared radius within which every extension's limit point lies.
  Rational err_sq_bound;
};

/// Throws IncoherentThread.
DecodedRegion decode_thread(const Tower& t, const ThreadPrefix& thread);

/// Least n with p_n(p) != p_n(q). Throws EqualPoints, or NotSeparated when
/// the tower is too shallow.
int separation_stage(const Tower& t, const RationalPoint& p, const RationalPoint& q);

/// A union of open simplices of one subdivision stage.
struct OpenSimplexSet {
  int stage = 0;
  std::vector<SimplexId> simplices;
};

/// True iff the union is open, i.e. the family is closed under cofaces.
bool is_open_union(const SimplicialComplex& k, const std::vector<SimplexId>& simplices);

/// p_n(U) for an open union U at stage m >= n-1. Throws StageTooCoarse,
/// NotOpen, or LevelOutOfRange.
std::vector<ElementIndex> image_of_open(const Tower& t, const OpenSimplexSet& u, int n);

/// Element labels, one per level.
std::vector<std::string> thread_labels(const Tower& t, const ThreadPrefix& thread);

/// Accepts level labels ("b{a,b}") or carrier simplex notation ("{a,b}");
/// throws ElementNotFound.
ThreadPrefix parse_thread(const Tower& t, const std::vector<std::string>& labels);

}  // namespace poset_tower
