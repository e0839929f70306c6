#include "poset_tower/subdivision.hpp"

#include "poset_tower/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace poset_tower {

SubdividedComplex::SubdividedComplex(std::shared_ptr<const SimplicialComplex> base) {
  stages_.push_back(Stage{std::move(base), {}, {}});
}

const Stage& SubdividedComplex::at(int k) const {
  if (k < 0 || k > stage()) {
    throw Error(ErrorKind::LevelOutOfRange,
                "stage " + std::to_string(k) + " of " + std::to_string(stage()));
  }
  return stages_[static_cast<std::size_t>(k)];
}

SubdividedComplex SubdividedComplex::deepened(int n, std::size_t max_simplices) const {
  SubdividedComplex out = *this;
  while (out.stage() < n) {
    out.stages_.push_back(subdivide_once(out.stages_.back().complex, max_simplices));
  }
  return out;
}

Stage subdivide_once(std::shared_ptr<const SimplicialComplex> k, std::size_t max_simplices) {
  const std::size_t count = k->num_simplices();
  std::vector<std::string> names(count);
  for (SimplexId id = 0; id < count; ++id) names[id] = barycenter_label(*k, k->simplex(id));

  std::vector<SimplexId> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](SimplexId a, SimplexId b) { return names[a] < names[b]; });

  Stage st;
  st.carrier = order;
  st.barycenter.resize(count);
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t r = 0; r < count; ++r) {
    if (r > 0 && names[order[r]] == names[order[r - 1]]) {
      throw Error(ErrorKind::LabelCollision, "two stage vertices named '" + names[order[r]] + "'");
    }
    st.barycenter[order[r]] = static_cast<VertexIndex>(r);
    labels.push_back(std::move(names[order[r]]));
  }

  // Proper nonempty faces of every simplex, as ids.
  std::vector<std::vector<SimplexId>> faces(count);
  for (SimplexId id = 0; id < count; ++id) {
    const Simplex& s = k->simplex(id);
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) f.push_back(s[i]);
      }
      faces[id].push_back(k->id_of(f));
    }
  }

  // Each chain σ_0 ⊋ σ_1 ⊋ ... is visited once, from its largest member down.
  std::vector<Simplex> simplices;
  std::vector<VertexIndex> chain;
  std::function<void(SimplexId)> descend = [&](SimplexId top) {
    Simplex s = chain;
    std::sort(s.begin(), s.end());
    simplices.push_back(std::move(s));
    if (max_simplices != 0 && simplices.size() > max_simplices) {
      throw Error(ErrorKind::ResourceLimit,
                  "subdivision exceeds " + std::to_string(max_simplices) + " simplices");
    }
    for (SimplexId f : faces[top]) {
      chain.push_back(st.barycenter[f]);
      descend(f);
      chain.pop_back();
    }
  };
  for (SimplexId id = 0; id < count; ++id) {
    chain.assign(1, st.barycenter[id]);
    descend(id);
  }
  st.complex = std::make_shared<const SimplicialComplex>(
      SimplicialComplex::assemble(std::move(labels), std::move(simplices)));
  return st;
}

SubdividedComplex subdivide(const SimplicialComplex& k, int n, std::size_t max_simplices) {
  return SubdividedComplex(std::make_shared<const SimplicialComplex>(k)).deepened(n, max_simplices);
}

RationalPoint sd_coordinates(const SubdividedComplex& s, int n, const RationalPoint& p) {
  const Stage& next = s.at(n);
  const SimplicialComplex& prev = s.complex(n - 1);
  std::vector<RationalPoint::Entry> sorted = p.coords();
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });

  // Weight j (a_(j) - a_(j+1)) on the barycenter of the j largest
  // coordinates; ties give zero weight, so the output support is the chain of
  // strict descents.
  std::map<VertexIndex, Rational> weights;
  Simplex prefix;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), sorted[j].first),
                  sorted[j].first);
    Rational drop = sorted[j].second;
    if (j + 1 < sorted.size()) drop -= sorted[j + 1].second;
    if (sgn(drop) == 0) continue;
    const Rational weight = drop * static_cast<unsigned long>(j + 1);
    weights[next.barycenter.at(prev.id_of(prefix))] = weight;
  }
  return RationalPoint::unchecked(weights);
}

RationalPoint refine_point(const SubdividedComplex& s, const RationalPoint& p, int from, int to) {
  RationalPoint q = p;
  for (int k = from + 1; k <= to; ++k) q = sd_coordinates(s, k, q);
  return q;
}

RationalPoint coarsen_point(const SubdividedComplex& s, const RationalPoint& p, int from, int to) {
  RationalPoint q = p;
  for (int k = from; k > to; --k) {
    const Stage& st = s.at(k);
    const SimplicialComplex& prev = s.complex(k - 1);
    std::map<VertexIndex, Rational> weights;
    for (const auto& [v, w] : q.coords()) {
      const Simplex& carrier = prev.simplex(st.carrier.at(v));
      const Rational share = w / static_cast<unsigned long>(carrier.size());
      for (VertexIndex u : carrier) weights[u] += share;
    }
    q = RationalPoint::unchecked(weights);
  }
  return q;
}

RationalPoint embed_point(const SubdividedComplex& s, int n, const RationalPoint& p) {
  return coarsen_point(s, p, n, 0);
}

Rational mesh_sq_bound(const SimplicialComplex& k, int n) {
  const int d = k.dimension();
  if (d < 1) return 0;
  Rational factor(d, d + 1);
  Rational bound = 2;
  for (int i = 0; i < 2 * n; ++i) bound *= factor;
  return bound;
}

SimplicialMap sd_map(const SimplicialMap& g, const Stage& source_next, const Stage& target_next) {
  SimplicialMap out{source_next.complex, target_next.complex,
                    std::vector<VertexIndex>(source_next.complex->num_vertices())};
  for (VertexIndex v = 0; v < out.vertex_map.size(); ++v) {
    const Simplex img = image(g, g.source->simplex(source_next.carrier.at(v)));
    auto id = g.target->find(img);
    if (!id) {
      throw Error(ErrorKind::NotSimplicial,
                  "image " + format_simplex(*g.target, img) + " is not a simplex");
    }
    out.vertex_map[v] = target_next.barycenter.at(*id);
  }
  return out;
}

SimplicialMap sd_map(const SimplicialMap& g, const SubdividedComplex& source,
                     const SubdividedComplex& target, int n) {
  SimplicialMap current = g;
  for (int k = 1; k <= n; ++k) current = sd_map(current, source.at(k), target.at(k));
  return current;
}

}  // namespace poset_tower
