#include "poset_tower/simplicial_map.hpp"

#include "poset_tower/error.hpp"

#include <algorithm>

namespace poset_tower {

SimplicialMap make_simplicial_map(std::shared_ptr<const SimplicialComplex> source,
                                  std::shared_ptr<const SimplicialComplex> target,
                                  const std::map<std::string, std::string>& assignment) {
  SimplicialMap g{source, target, std::vector<VertexIndex>(source->num_vertices())};
  std::vector<bool> seen(source->num_vertices(), false);
  for (const auto& [from, to] : assignment) {
    const VertexIndex v = source->vertex(from);
    g.vertex_map[v] = target->vertex(to);
    seen[v] = true;
  }
  for (VertexIndex v = 0; v < seen.size(); ++v) {
    if (!seen[v]) throw Error(ErrorKind::InvalidInput, "no image for vertex " + source->label(v));
  }
  return g;
}

SimplicialMap identity_map(std::shared_ptr<const SimplicialComplex> k) {
  SimplicialMap g{k, k, std::vector<VertexIndex>(k->num_vertices())};
  for (VertexIndex v = 0; v < g.vertex_map.size(); ++v) g.vertex_map[v] = v;
  return g;
}

SimplicialMap constant_map(std::shared_ptr<const SimplicialComplex> source,
                           std::shared_ptr<const SimplicialComplex> target, VertexIndex value) {
  const std::size_t n = source->num_vertices();
  return SimplicialMap{std::move(source), std::move(target), std::vector<VertexIndex>(n, value)};
}

Simplex image(const SimplicialMap& g, const Simplex& s) {
  Simplex out;
  out.reserve(s.size());
  for (VertexIndex v : s) out.push_back(g.vertex_map.at(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool validate_simplicial(const SimplicialMap& g) {
  if (g.vertex_map.size() != g.source->num_vertices()) return false;
  for (VertexIndex w : g.vertex_map) {
    if (w >= g.target->num_vertices()) return false;
  }
  for (const Simplex& s : g.source->simplices()) {
    if (!g.target->contains(image(g, s))) return false;
  }
  return true;
}

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner) {
  SimplicialMap g{inner.source, outer.target, std::vector<VertexIndex>(inner.vertex_map.size())};
  for (std::size_t v = 0; v < inner.vertex_map.size(); ++v) {
    g.vertex_map[v] = outer.vertex_map.at(inner.vertex_map[v]);
  }
  return g;
}

RationalPoint apply_map(const SimplicialMap& g, const RationalPoint& p) {
  std::map<VertexIndex, Rational> weights;
  for (const auto& [v, w] : p.coords()) weights[g.vertex_map.at(v)] += w;
  return RationalPoint::unchecked(weights);
}

bool is_rigid(const SimplicialMap& g) {
  for (const Simplex& s : g.source->simplices()) {
    const std::size_t size = image(g, s).size();
    if (size != 1 && size != s.size()) return false;
  }
  return true;
}

}  // namespace poset_tower
