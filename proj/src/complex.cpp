#include "poset_tower/complex.hpp"

#include "poset_tower/error.hpp"

#include <algorithm>
#include <set>

namespace poset_tower {

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (VertexIndex v : s) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool canonical_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

SimplicialComplex SimplicialComplex::assemble(std::vector<std::string> labels,
                                              std::vector<Simplex> simplices) {
  SimplicialComplex k;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (!(labels[i - 1] < labels[i])) {
      throw Error(ErrorKind::LabelCollision,
                  "vertex labels not strictly increasing at '" + labels[i] + "'");
    }
  }
  k.labels_ = std::move(labels);
  k.vertex_index_.reserve(k.labels_.size());
  for (std::size_t i = 0; i < k.labels_.size(); ++i) {
    k.vertex_index_.emplace(k.labels_[i], static_cast<VertexIndex>(i));
  }

  std::sort(simplices.begin(), simplices.end(), canonical_less);
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  k.simplices_ = std::move(simplices);

  k.simplex_index_.reserve(k.simplices_.size());
  k.incident_.assign(k.labels_.size(), {});
  for (SimplexId id = 0; id < k.simplices_.size(); ++id) {
    const Simplex& s = k.simplices_[id];
    k.simplex_index_.emplace(s, id);
    const std::size_t dim = s.size() - 1;
    if (k.f_vector_.size() <= dim) k.f_vector_.resize(dim + 1, 0);
    ++k.f_vector_[dim];
    for (VertexIndex v : s) k.incident_.at(v).push_back(id);
  }
  return k;
}

std::optional<VertexIndex> SimplicialComplex::find_vertex(std::string_view label) const {
  auto it = vertex_index_.find(std::string(label));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

VertexIndex SimplicialComplex::vertex(std::string_view label) const {
  auto v = find_vertex(label);
  if (!v) throw Error(ErrorKind::UnknownVertex, "'" + std::string(label) + "'");
  return *v;
}

std::optional<SimplexId> SimplicialComplex::find(const Simplex& s) const {
  auto it = simplex_index_.find(s);
  if (it == simplex_index_.end()) return std::nullopt;
  return it->second;
}

SimplexId SimplicialComplex::id_of(const Simplex& s) const {
  auto id = find(s);
  if (!id) {
    std::string text = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) text += ",";
      text += s[i] < labels_.size() ? labels_[s[i]] : "#" + std::to_string(s[i]);
    }
    throw Error(ErrorKind::SimplexNotInComplex, text + "}");
  }
  return *id;
}

Simplex SimplicialComplex::simplex_from_labels(const std::vector<std::string>& labels) const {
  Simplex s;
  s.reserve(labels.size());
  for (const auto& l : labels) s.push_back(vertex(l));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<std::string> SimplicialComplex::labels_of(const Simplex& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (VertexIndex v : s) out.push_back(labels_.at(v));
  return out;
}

SimplicialComplex validate_complex(const RawComplex& raw) {
  std::vector<std::string> labels = raw.vertices;
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw Error(ErrorKind::InvalidInput, "empty vertex label");
    if (i > 0 && labels[i] == labels[i - 1]) {
      throw Error(ErrorKind::InvalidInput, "duplicate vertex '" + labels[i] + "'");
    }
  }
  std::unordered_map<std::string, VertexIndex> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<VertexIndex>(i));

  std::vector<Simplex> simplices;
  simplices.reserve(raw.simplices.size());
  for (const auto& raw_simplex : raw.simplices) {
    if (raw_simplex.empty()) throw Error(ErrorKind::InvalidInput, "empty simplex");
    Simplex s;
    for (const auto& l : raw_simplex) {
      auto it = index.find(l);
      if (it == index.end()) throw Error(ErrorKind::UnknownVertex, "'" + l + "'");
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw Error(ErrorKind::InvalidInput, "repeated vertex in a simplex");
    }
    simplices.push_back(std::move(s));
  }
  std::sort(simplices.begin(), simplices.end(), canonical_less);
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());

  const std::set<Simplex> present(simplices.begin(), simplices.end());
  auto show = [&](const Simplex& s) {
    std::string text = "{";
    for (std::size_t i = 0; i < s.size(); ++i) text += (i ? "," : "") + labels[s[i]];
    return text + "}";
  };
  // Facet closure implies closure under all nonempty faces, by induction on
  // dimension.
  for (const Simplex& s : simplices) {
    if (s.size() < 2) continue;
    std::vector<Simplex> facets;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex f;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != drop) f.push_back(s[i]);
      }
      facets.push_back(std::move(f));
    }
    std::sort(facets.begin(), facets.end());
    for (const Simplex& f : facets) {
      if (!present.count(f)) {
        throw Error(ErrorKind::MissingFace, "face " + show(f) + " of " + show(s) + " is absent");
      }
    }
  }
  for (VertexIndex v = 0; v < labels.size(); ++v) {
    if (!present.count(Simplex{v})) {
      throw Error(ErrorKind::MissingFace, "vertex " + labels[v] + " has no singleton simplex");
    }
  }
  return SimplicialComplex::assemble(std::move(labels), std::move(simplices));
}

std::string format_simplex(const SimplicialComplex& k, const Simplex& s) {
  std::string text = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) text += ",";
    text += k.label(s[i]);
  }
  return text + "}";
}

std::string barycenter_label(const SimplicialComplex& k, const Simplex& s) {
  if (s.size() == 1) return k.label(s.front());
  return "b" + format_simplex(k, s);
}

bool is_subset(const Simplex& small, const Simplex& large) {
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

Simplex simplex_union(const Simplex& a, const Simplex& b) {
  Simplex out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint(const Simplex& a, const Simplex& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

std::vector<SimplexId> maximal_simplices(const SimplicialComplex& k) {
  std::vector<SimplexId> out;
  for (SimplexId id = 0; id < k.num_simplices(); ++id) {
    const Simplex& s = k.simplex(id);
    bool maximal = true;
    for (SimplexId other : k.incident(s.front())) {
      if (k.simplex(other).size() > s.size() && is_subset(s, k.simplex(other))) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(id);
  }
  return out;
}

SimplicialComplex subcomplex(const SimplicialComplex& k, const std::vector<SimplexId>& ids) {
  std::vector<VertexIndex> used;
  for (SimplexId id : ids) {
    for (VertexIndex v : k.simplex(id)) used.push_back(v);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  std::vector<std::string> labels;
  labels.reserve(used.size());
  for (VertexIndex v : used) labels.push_back(k.label(v));

  std::vector<Simplex> simplices;
  simplices.reserve(ids.size());
  for (SimplexId id : ids) {
    Simplex s;
    for (VertexIndex v : k.simplex(id)) {
      s.push_back(static_cast<VertexIndex>(
          std::lower_bound(used.begin(), used.end(), v) - used.begin()));
    }
    simplices.push_back(std::move(s));
  }
  return SimplicialComplex::assemble(std::move(labels), std::move(simplices));
}

std::vector<SimplexId> open_star(const SimplicialComplex& k, const Simplex& sigma) {
  k.id_of(sigma);
  std::vector<SimplexId> out;
  for (SimplexId id : k.incident(sigma.front())) {
    if (is_subset(sigma, k.simplex(id))) out.push_back(id);
  }
  return out;
}

namespace {

// Every face of a simplex containing σ is a simplex τ with σ∪τ ∈ K, and
// conversely σ∪τ is such a simplex; so the closed star is the face closure of
// the open star.
std::vector<SimplexId> star_ids(const SimplicialComplex& k, const Simplex& sigma) {
  std::set<SimplexId> ids;
  for (SimplexId top : open_star(k, sigma)) {
    const Simplex& s = k.simplex(top);
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) face.push_back(s[i]);
      }
      ids.insert(k.id_of(face));
    }
  }
  return {ids.begin(), ids.end()};
}

}  // namespace

SimplicialComplex star(const SimplicialComplex& k, const Simplex& sigma) {
  return subcomplex(k, star_ids(k, sigma));
}

SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma) {
  std::vector<SimplexId> ids;
  for (SimplexId id : star_ids(k, sigma)) {
    if (disjoint(k.simplex(id), sigma)) ids.push_back(id);
  }
  return subcomplex(k, ids);
}

RationalPoint RationalPoint::make(const SimplicialComplex& k, std::vector<Entry> coords) {
  std::sort(coords.begin(), coords.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Rational total = 0;
  RationalPoint p;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].first >= k.num_vertices()) {
      throw Error(ErrorKind::UnknownVertex, "vertex #" + std::to_string(coords[i].first));
    }
    if (i > 0 && coords[i].first == coords[i - 1].first) {
      throw Error(ErrorKind::InvalidPoint, "repeated coordinate for " + k.label(coords[i].first));
    }
    if (sgn(coords[i].second) < 0) {
      throw Error(ErrorKind::InvalidPoint, "negative coordinate for " + k.label(coords[i].first));
    }
    total += coords[i].second;
    if (sgn(coords[i].second) > 0) p.coords_.push_back(std::move(coords[i]));
  }
  if (total != 1) {
    throw Error(ErrorKind::InvalidPoint, "coordinates sum to " + format_rational(total));
  }
  if (!k.contains(support(p))) {
    throw Error(ErrorKind::InvalidPoint, "support " + format_simplex(k, support(p)) +
                                             " is not a simplex");
  }
  return p;
}

RationalPoint RationalPoint::from_labels(const SimplicialComplex& k,
                                         const std::map<std::string, Rational>& coords) {
  std::vector<Entry> entries;
  for (const auto& [label, value] : coords) entries.emplace_back(k.vertex(label), value);
  return make(k, std::move(entries));
}

RationalPoint RationalPoint::unchecked(const std::map<VertexIndex, Rational>& weights) {
  RationalPoint p;
  for (const auto& [v, w] : weights) {
    if (sgn(w) != 0) p.coords_.emplace_back(v, w);
  }
  return p;
}

RationalPoint RationalPoint::at_vertex(VertexIndex v) {
  RationalPoint p;
  p.coords_.emplace_back(v, Rational(1));
  return p;
}

RationalPoint RationalPoint::barycenter(const Simplex& s) {
  RationalPoint p;
  const Rational w(1, static_cast<unsigned long>(s.size()));
  for (VertexIndex v : s) p.coords_.emplace_back(v, w);
  return p;
}

Rational RationalPoint::coord(VertexIndex v) const {
  auto it = std::lower_bound(coords_.begin(), coords_.end(), v,
                             [](const Entry& e, VertexIndex x) { return e.first < x; });
  if (it != coords_.end() && it->first == v) return it->second;
  return 0;
}

Simplex support(const RationalPoint& p) {
  Simplex s;
  s.reserve(p.coords().size());
  for (const auto& [v, w] : p.coords()) s.push_back(v);
  return s;
}

Rational dist_sq(const SimplicialComplex& k, const RationalPoint& p, const RationalPoint& q) {
  const Simplex carrier = simplex_union(support(p), support(q));
  if (!k.contains(carrier)) {
    throw Error(ErrorKind::NoCommonSimplex, format_simplex(k, carrier));
  }
  Rational total = 0;
  for (VertexIndex v : carrier) {
    Rational d = p.coord(v) - q.coord(v);
    total += d * d;
  }
  return total;
}

std::map<std::string, Rational> point_labels(const SimplicialComplex& k, const RationalPoint& p) {
  std::map<std::string, Rational> out;
  for (const auto& [v, w] : p.coords()) out.emplace(k.label(v), w);
  return out;
}

}  // namespace poset_tower
