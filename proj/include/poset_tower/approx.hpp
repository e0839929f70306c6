#pragma once

#include "poset_tower/complex.hpp"
#include "poset_tower/poset.hpp"
#include "poset_tower/simplicial_map.hpp"
#include "poset_tower/subdivision.hpp"
#include "poset_tower/tower.hpp"

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace poset_tower {

/// Piecewise-linear map |K| -> |T|: a point of |T| for every vertex of K_r,
/// extended affinely over the simplices of K_r.
struct PLMap {
  std::shared_ptr<const SubdividedComplex> source;  // K, subdivided to at least `stage`
  int stage = 0;
  std::shared_ptr<const SimplicialComplex> target;
  std::vector<RationalPoint> vertex_images;  // indexed by stage-r vertex
};

/// Validates that the images of each stage-r simplex share a closed simplex
/// of T; throws NotSimplicial otherwise, UnknownVertex / InvalidInput for
/// malformed assignments.
PLMap make_pl_map(const SimplicialComplex& source, int stage,
                  std::shared_ptr<const SimplicialComplex> target,
                  const std::map<std::string, RationalPoint>& images);

/// The PL map induced by a simplicial map K -> T at stage 0.
PLMap pl_map_of(const SimplicialMap& g);

/// h at a stage-0 point of K.
RationalPoint evaluate(const PLMap& h, const RationalPoint& x);

/// h at every vertex of K_n (n >= r), given a subdivision of K reaching n.
std::vector<RationalPoint> vertex_values(const PLMap& h, const SubdividedComplex& stages, int n);

struct Approximation {
  int n = 0;
  std::shared_ptr<const SubdividedComplex> stages;  // K_0..K_n
  SimplicialMap f;                                  // K_n -> T
};

/// Least n in [r, cap] admitting f with h(closed star of v) inside the open
/// star of f(v) for every vertex v of K_n; f(v) is the least admissible
/// vertex. Throws SearchExhausted.
Approximation approximate(const PLMap& h, int cap);

/// Stage-0 points at every vertex of K_n and every edge midpoint of K_n.
std::vector<RationalPoint> standard_samples(const SubdividedComplex& stages, int n);

/// For every sample (stage-0 points of K) plus every vertex of K_n: h(x) and
/// |f|(x) lie in a common closed simplex of T. `stages` ends at f's source.
bool carrier_homotopy_check(const PLMap& h, const SubdividedComplex& stages,
                            const SimplicialMap& f, std::span<const RationalPoint> samples);

/// g_n: level n of the source tower -> level n of the target tower, sending
/// the vertex over σ to the vertex over g_{n-1}(σ). Towers must be built over
/// g's source and target. Throws NotSimplicial.
PosetMap induce_level_map(const SimplicialMap& g, const Tower& source, const Tower& target, int n);

/// Both routes around the projection square agree on every sample, and for
/// n >= 2 the bonds intertwine g_n and g_{n-1} on every level-n element.
/// Beyond level 1 the square needs |sd^{n-1} g| = |g|, i.e. a rigid g.
bool check_naturality(const SimplicialMap& g, const Tower& source, const Tower& target, int n,
                      std::span<const RationalPoint> samples);

/// {g_n} as a morphism of the two inverse systems, up to a common depth.
struct SystemMorphism {
  SimplicialMap g;
  std::shared_ptr<const Tower> source;
  std::shared_ptr<const Tower> target;
  std::vector<PosetMap> levels;  // levels[k] is g_{k+1}
};

SystemMorphism induce_system_morphism(const SimplicialMap& g, std::shared_ptr<const Tower> source,
                                      std::shared_ptr<const Tower> target);

/// Entrywise (g_1(x_1), ..., g_N(x_N)); throws IncoherentThread or
/// LevelOutOfRange.
ThreadPrefix limit_map(const SystemMorphism& m, const ThreadPrefix& thread);

}  // namespace poset_tower
