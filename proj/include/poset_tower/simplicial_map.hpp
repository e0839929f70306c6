#pragma once

#include "poset_tower/complex.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace poset_tower {

/// Vertex-to-vertex map between complexes. Whether simplices go to
/// simplices is checked by validate_simplicial, not enforced on construction.
struct SimplicialMap {
  std::shared_ptr<const SimplicialComplex> source;
  std::shared_ptr<const SimplicialComplex> target;
  std::vector<VertexIndex> vertex_map;
};

/// From labels; throws UnknownVertex, or InvalidInput if not total.
SimplicialMap make_simplicial_map(std::shared_ptr<const SimplicialComplex> source,
                                  std::shared_ptr<const SimplicialComplex> target,
                                  const std::map<std::string, std::string>& assignment);

SimplicialMap identity_map(std::shared_ptr<const SimplicialComplex> k);
SimplicialMap constant_map(std::shared_ptr<const SimplicialComplex> source,
                           std::shared_ptr<const SimplicialComplex> target, VertexIndex value);

/// Vertex image set of `s` (duplicates collapsed), in canonical order.
Simplex image(const SimplicialMap& g, const Simplex& s);

bool validate_simplicial(const SimplicialMap& g);

/// Every simplex goes either injectively or onto a single vertex. Exactly
/// then |g| sends barycenters of faces to barycenters, so |sd g| = |g|; a map
/// folding a triangle onto an edge is simplicial but not rigid.
bool is_rigid(const SimplicialMap& g);

/// outer ∘ inner.
SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);

/// |g| at a point of |source|.
RationalPoint apply_map(const SimplicialMap& g, const RationalPoint& p);

}  // namespace poset_tower
