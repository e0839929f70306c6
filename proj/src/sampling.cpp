#include "poset_tower/sampling.hpp"

#include "poset_tower/error.hpp"

namespace poset_tower {

namespace {

RationalPoint point_in(const Simplex& s, SampleRng& rng, unsigned max_weight) {
  std::vector<unsigned long> weights(s.size());
  unsigned long total = 0;
  for (auto& w : weights) {
    w = rng.below(max_weight + 1);
    total += w;
  }
  if (total == 0) {
    weights[rng.below(weights.size())] = 1;
    total = 1;
  }
  std::map<VertexIndex, Rational> coords;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Rational r(weights[i], total);
    r.canonicalize();
    coords[s[i]] = r;
  }
  return RationalPoint::unchecked(coords);
}

}  // namespace

RationalPoint random_point(const SimplicialComplex& k, SampleRng& rng, unsigned max_weight) {
  if (k.empty()) throw Error(ErrorKind::InvalidInput, "cannot sample an empty complex");
  const std::vector<SimplexId> tops = maximal_simplices(k);
  return point_in(k.simplex(tops[rng.below(tops.size())]), rng, max_weight);
}

std::vector<RationalPoint> random_points(const SimplicialComplex& k, std::size_t count,
                                         std::uint64_t seed) {
  SampleRng rng(seed);
  std::vector<RationalPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_point(k, rng));
  return out;
}

std::pair<RationalPoint, RationalPoint> random_pair(const SimplicialComplex& k, SampleRng& rng,
                                                    unsigned max_weight) {
  const std::vector<SimplexId> tops = maximal_simplices(k);
  for (;;) {
    const Simplex& s = k.simplex(tops[rng.below(tops.size())]);
    if (s.size() < 2) {
      // Isolated vertices cannot host two distinct points; try another top.
      bool any_edge = false;
      for (SimplexId t : tops) any_edge = any_edge || k.simplex(t).size() >= 2;
      if (!any_edge) throw Error(ErrorKind::InvalidInput, "no simplex holds two distinct points");
      continue;
    }
    RationalPoint p = point_in(s, rng, max_weight);
    RationalPoint q = point_in(s, rng, max_weight);
    if (!(p == q)) return {std::move(p), std::move(q)};
  }
}

}  // namespace poset_tower
