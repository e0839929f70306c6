#pragma once

#include "poset_tower/complex.hpp"
#include "poset_tower/simplicial_map.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace poset_tower {

/// One barycentric subdivision stage with provenance relative to the stage
/// before it. Stage 0 carries empty tables.
struct Stage {
  std::shared_ptr<const SimplicialComplex> complex;
  /// Vertex of this stage -> simplex of the previous stage it is the
  /// barycenter of.
  std::vector<SimplexId> carrier;
  /// Simplex of the previous stage -> its barycenter vertex here.
  std::vector<VertexIndex> barycenter;
};

/// K_0 = K, K_1, ..., K_n with the full provenance chain. Stages are
/// materialized eagerly.
class SubdividedComplex {
 public:
  explicit SubdividedComplex(std::shared_ptr<const SimplicialComplex> base);

  int stage() const { return static_cast<int>(stages_.size()) - 1; }

  const SimplicialComplex& base() const { return *stages_.front().complex; }
  const SimplicialComplex& complex() const { return *stages_.back().complex; }
  const SimplicialComplex& complex(int k) const { return *at(k).complex; }
  std::shared_ptr<const SimplicialComplex> shared(int k) const { return at(k).complex; }

  /// Throws LevelOutOfRange.
  const Stage& at(int k) const;

  /// Simplex of stage k-1 whose barycenter is vertex v of stage k (k >= 1).
  SimplexId carrier(int k, VertexIndex v) const { return at(k).carrier.at(v); }
  /// Vertex of stage k at the barycenter of simplex s of stage k-1 (k >= 1).
  VertexIndex barycenter(int k, SimplexId s) const { return at(k).barycenter.at(s); }

  /// A copy subdivided further to stage n (shares existing stages).
  /// `max_simplices` (0 = unbounded) caps the size of any new stage.
  SubdividedComplex deepened(int n, std::size_t max_simplices = 0) const;

 private:
  std::vector<Stage> stages_;
};

/// First barycentric subdivision: vertices are the simplices of K, simplices
/// are the chains of faces. Throws LabelCollision if a barycenter label
/// clashes with an existing vertex label, ResourceLimit past `max_simplices`.
Stage subdivide_once(std::shared_ptr<const SimplicialComplex> k, std::size_t max_simplices = 0);

SubdividedComplex subdivide(const SimplicialComplex& k, int n, std::size_t max_simplices = 0);

/// Re-expresses a point of stage n-1 over the vertices of stage n.
RationalPoint sd_coordinates(const SubdividedComplex& s, int n, const RationalPoint& p);

/// Applies sd_coordinates from stage `from` up to stage `to` (from <= to).
RationalPoint refine_point(const SubdividedComplex& s, const RationalPoint& p, int from, int to);

/// Expands stage vertices into barycenters from stage `from` down to `to`.
RationalPoint coarsen_point(const SubdividedComplex& s, const RationalPoint& p, int from, int to);

/// The stage-0 coordinates of a point given at stage n.
RationalPoint embed_point(const SubdividedComplex& s, int n, const RationalPoint& p);

/// Upper bound on the squared diameter, measured at stage 0, of any closed
/// simplex of K_n: 2 (d/(d+1))^{2n} for d = dim K >= 1, and 0 without edges.
Rational mesh_sq_bound(const SimplicialComplex& k, int n);

/// Subdivided map K_1 -> T_1: bary(τ) ↦ bary(g(τ)). `source_next` and
/// `target_next` are the first stages over g.source and g.target.
/// Throws NotSimplicial.
SimplicialMap sd_map(const SimplicialMap& g, const Stage& source_next, const Stage& target_next);

/// sd_map iterated n times; the subdivisions must be over g's source and
/// target and reach stage n.
SimplicialMap sd_map(const SimplicialMap& g, const SubdividedComplex& source,
                     const SubdividedComplex& target, int n);

}  // namespace poset_tower
