#include "poset_tower/approx.hpp"

#include "poset_tower/error.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace poset_tower {

namespace {

RationalPoint affine_combination(const std::vector<RationalPoint>& values, const RationalPoint& weights) {
  std::map<VertexIndex, Rational> acc;
  for (const auto& [v, w] : weights.coords()) {
    for (const auto& [u, c] : values.at(v).coords()) acc[u] += w * c;
  }
  return RationalPoint::unchecked(acc);
}

Simplex intersect(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

PLMap make_pl_map(const SimplicialComplex& source, int stage,
                  std::shared_ptr<const SimplicialComplex> target,
                  const std::map<std::string, RationalPoint>& images) {
  if (stage < 0) throw Error(ErrorKind::InvalidInput, "negative stage");
  PLMap h;
  h.source = std::make_shared<const SubdividedComplex>(subdivide(source, stage));
  h.stage = stage;
  h.target = std::move(target);
  const SimplicialComplex& k = h.source->complex(stage);
  h.vertex_images.resize(k.num_vertices());
  std::vector<bool> seen(k.num_vertices(), false);
  for (const auto& [label, point] : images) {
    const VertexIndex v = k.vertex(label);
    h.vertex_images[v] = point;
    seen[v] = true;
  }
  for (VertexIndex v = 0; v < k.num_vertices(); ++v) {
    if (!seen[v]) throw Error(ErrorKind::InvalidInput, "no image for vertex " + k.label(v));
  }
  for (SimplexId id : maximal_simplices(k)) {
    Simplex span;
    for (VertexIndex v : k.simplex(id)) span = simplex_union(span, support(h.vertex_images[v]));
    if (!h.target->contains(span)) {
      throw Error(ErrorKind::NotSimplicial, "images of " + format_simplex(k, k.simplex(id)) +
                                                " span " + format_simplex(*h.target, span));
    }
  }
  return h;
}

PLMap pl_map_of(const SimplicialMap& g) {
  PLMap h;
  h.source = std::make_shared<const SubdividedComplex>(g.source);
  h.stage = 0;
  h.target = g.target;
  for (VertexIndex w : g.vertex_map) h.vertex_images.push_back(RationalPoint::at_vertex(w));
  return h;
}

RationalPoint evaluate(const PLMap& h, const RationalPoint& x) {
  return affine_combination(h.vertex_images, refine_point(*h.source, x, 0, h.stage));
}

std::vector<RationalPoint> vertex_values(const PLMap& h, const SubdividedComplex& stages, int n) {
  if (n < h.stage) throw Error(ErrorKind::StageTooCoarse, "stage below the map's stage");
  // h is affine on every simplex of K_r, hence on every simplex of K_n.
  std::vector<RationalPoint> values = h.vertex_images;
  for (int k = h.stage + 1; k <= n; ++k) {
    const Stage& st = stages.at(k);
    const SimplicialComplex& prev = stages.complex(k - 1);
    std::vector<RationalPoint> next;
    next.reserve(st.complex->num_vertices());
    for (VertexIndex v = 0; v < st.complex->num_vertices(); ++v) {
      next.push_back(affine_combination(values, RationalPoint::barycenter(prev.simplex(st.carrier[v]))));
    }
    values = std::move(next);
  }
  return values;
}

Approximation approximate(const PLMap& h, int cap) {
  SubdividedComplex stages = *h.source;
  for (int n = h.stage; n <= cap; ++n) {
    stages = stages.deepened(n);
    const SimplicialComplex& k = stages.complex(n);
    const std::vector<RationalPoint> values = vertex_values(h, stages, n);

    // h(st̄(v)) is the union of the hulls of the images of the simplices at v;
    // it lies in the open star of w iff every closed-star vertex image has a
    // positive w coordinate.
    std::vector<VertexIndex> assignment(k.num_vertices());
    bool ok = true;
    for (VertexIndex v = 0; v < k.num_vertices() && ok; ++v) {
      Simplex admissible = support(values[v]);
      for (SimplexId id : k.incident(v)) {
        for (VertexIndex u : k.simplex(id)) admissible = intersect(admissible, support(values[u]));
      }
      if (admissible.empty()) {
        ok = false;
      } else {
        assignment[v] = admissible.front();
      }
    }
    if (!ok) continue;
    Approximation result;
    result.n = n;
    result.stages = std::make_shared<const SubdividedComplex>(stages);
    result.f = SimplicialMap{stages.shared(n), h.target, std::move(assignment)};
    if (!validate_simplicial(result.f)) {
      throw std::logic_error("star condition held but the vertex map is not simplicial");
    }
    return result;
  }
  throw Error(ErrorKind::SearchExhausted, "no simplicial approximation up to stage " + std::to_string(cap));
}

std::vector<RationalPoint> standard_samples(const SubdividedComplex& stages, int n) {
  const SimplicialComplex& k = stages.complex(n);
  std::vector<RationalPoint> out;
  for (VertexIndex v = 0; v < k.num_vertices(); ++v) {
    out.push_back(embed_point(stages, n, RationalPoint::at_vertex(v)));
  }
  for (const Simplex& s : k.simplices()) {
    if (s.size() == 2) out.push_back(embed_point(stages, n, RationalPoint::barycenter(s)));
  }
  return out;
}

bool carrier_homotopy_check(const PLMap& h, const SubdividedComplex& stages,
                            const SimplicialMap& f, std::span<const RationalPoint> samples) {
  const int n = stages.stage();
  if (!(stages.complex(n) == *f.source)) {
    throw Error(ErrorKind::InvalidInput, "map source is not the last subdivision stage");
  }
  auto common_simplex = [&](const RationalPoint& x) {
    const RationalPoint hx = evaluate(h, x);
    const RationalPoint fx = apply_map(f, refine_point(stages, x, 0, n));
    return h.target->contains(simplex_union(support(hx), support(fx)));
  };
  for (VertexIndex v = 0; v < f.source->num_vertices(); ++v) {
    if (!common_simplex(embed_point(stages, n, RationalPoint::at_vertex(v)))) return false;
  }
  for (const RationalPoint& x : samples) {
    if (!common_simplex(x)) return false;
  }
  return true;
}

PosetMap induce_level_map(const SimplicialMap& g, const Tower& source, const Tower& target, int n) {
  if (!(source.base() == *g.source) || !(target.base() == *g.target)) {
    throw Error(ErrorKind::InvalidInput, "towers are not built over the map's complexes");
  }
  if (n < 1 || n > source.depth() || n > target.depth()) {
    throw Error(ErrorKind::LevelOutOfRange, "level " + std::to_string(n));
  }
  const SimplicialMap below = sd_map(g, source.stages(), target.stages(), n - 1);
  const SimplicialComplex& from = source.stages().complex(n - 1);
  const SimplicialComplex& onto = target.stages().complex(n - 1);
  PosetMap m{source.shared_poset(n), target.shared_poset(n), {}};
  m.assignment.reserve(m.source->size());
  for (ElementIndex x = 0; x < m.source->size(); ++x) {
    const Simplex img = image(below, from.simplex(source.carrier(n, x)));
    auto id = onto.find(img);
    if (!id) throw Error(ErrorKind::NotSimplicial, format_simplex(onto, img));
    m.assignment.push_back(target.element_of(n, *id));
  }
  return m;
}

bool check_naturality(const SimplicialMap& g, const Tower& source, const Tower& target, int n,
                      std::span<const RationalPoint> samples) {
  const PosetMap gn = induce_level_map(g, source, target, n);
  for (const RationalPoint& x : samples) {
    const ElementIndex via_image = project_point(target, apply_map(g, x), n);
    const ElementIndex via_level = gn.assignment[project_point(source, x, n)];
    if (via_image != via_level) return false;
  }
  if (n >= 2) {
    const PosetMap below = induce_level_map(g, source, target, n - 1);
    for (ElementIndex e = 0; e < gn.assignment.size(); ++e) {
      if (bond(target, n, gn.assignment[e], n - 1) != below.assignment[bond(source, n, e, n - 1)]) {
        return false;
      }
    }
  }
  return true;
}

SystemMorphism induce_system_morphism(const SimplicialMap& g, std::shared_ptr<const Tower> source,
                                      std::shared_ptr<const Tower> target) {
  SystemMorphism m{g, source, target, {}};
  const int depth = std::min(source->depth(), target->depth());
  for (int n = 1; n <= depth; ++n) m.levels.push_back(induce_level_map(g, *source, *target, n));
  return m;
}

ThreadPrefix limit_map(const SystemMorphism& m, const ThreadPrefix& thread) {
  if (thread.entries.size() > m.levels.size()) {
    throw Error(ErrorKind::LevelOutOfRange, "thread deeper than the morphism");
  }
  if (!validate_thread(*m.source, thread)) throw Error(ErrorKind::IncoherentThread, "bond mismatch");
  ThreadPrefix out;
  for (std::size_t i = 0; i < thread.entries.size(); ++i) {
    out.entries.push_back(m.levels[i].assignment.at(thread.entries[i]));
  }
  return out;
}

}  // namespace poset_tower
