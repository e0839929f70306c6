#include "poset_tower/tower.hpp"

#include "poset_tower/error.hpp"

#include <algorithm>
#include <set>

namespace poset_tower {

TowerLevel build_level(const SubdividedComplex& stages, int n) {
  if (n < 1 || n > stages.stage()) {
    throw Error(ErrorKind::LevelOutOfRange, "level " + std::to_string(n));
  }
  const SimplicialComplex& prev = stages.complex(n - 1);
  const SimplicialComplex& here = stages.complex(n);
  TowerLevel level;
  level.n = n;
  level.closure.reserve(here.num_vertices());
  for (VertexIndex v = 0; v < here.num_vertices(); ++v) {
    level.closure.push_back(prev.simplex(stages.carrier(n, v)));
  }
  // x <= y iff the closed carrier of x lies in that of y, i.e. σ_x ⊆ σ_y.
  // Candidates for y all contain the first vertex of σ_x.
  std::vector<std::vector<ElementIndex>> up(here.num_vertices());
  for (VertexIndex x = 0; x < here.num_vertices(); ++x) {
    const Simplex& sx = level.closure[x];
    for (SimplexId cand : prev.incident(sx.front())) {
      if (is_subset(sx, prev.simplex(cand))) up[x].push_back(stages.barycenter(n, cand));
    }
  }
  level.poset = std::make_shared<const FinitePoset>(FinitePoset::from_up_sets(here.labels(), up));
  return level;
}

Tower::Tower(const SimplicialComplex& k, int depth, std::size_t max_simplices)
    : Tower(subdivide(k, depth, max_simplices)) {}

Tower::Tower(SubdividedComplex stages) : stages_(std::move(stages)) {
  for (int n = 1; n <= stages_.stage(); ++n) levels_.push_back(build_level(stages_, n));
}

const TowerLevel& Tower::level(int n) const {
  if (n < 1 || n > depth()) {
    throw Error(ErrorKind::LevelOutOfRange,
                "level " + std::to_string(n) + " of depth " + std::to_string(depth()));
  }
  return levels_[static_cast<std::size_t>(n - 1)];
}

SimplexId Tower::carrier(int n, ElementIndex x) const {
  level(n);
  return stages_.carrier(n, static_cast<VertexIndex>(x));
}

ElementIndex Tower::element_of(int n, SimplexId s) const {
  level(n);
  return stages_.barycenter(n, s);
}

ElementIndex project_point(const Tower& t, const RationalPoint& p, int n) {
  t.level(n);
  const RationalPoint at_stage = refine_point(t.stages(), p, 0, n - 1);
  return t.element_of(n, t.stages().complex(n - 1).id_of(support(at_stage)));
}

namespace {

// q_m: the vertices of σ_x are barycenters of a chain of stage-(m-2)
// simplices, and x lies in the open simplex of the largest of them.
ElementIndex step_down(const Tower& t, int m, ElementIndex x) {
  const SubdividedComplex& s = t.stages();
  const Simplex& sigma = s.complex(m - 1).simplex(t.carrier(m, x));
  VertexIndex best = sigma.front();
  std::size_t best_size = 0;
  for (VertexIndex w : sigma) {
    const std::size_t size = s.complex(m - 2).simplex(s.carrier(m - 1, w)).size();
    if (size > best_size) {
      best = w;
      best_size = size;
    }
  }
  return best;
}

}  // namespace

ElementIndex bond(const Tower& t, int m, ElementIndex x, int n) {
  if (n < 1 || n > m || m > t.depth()) {
    throw Error(ErrorKind::LevelOutOfRange,
                "bond from level " + std::to_string(m) + " to " + std::to_string(n));
  }
  if (x >= t.poset(m).size()) {
    throw Error(ErrorKind::ElementNotFound, "#" + std::to_string(x) + " in level " + std::to_string(m));
  }
  for (int k = m; k > n; --k) x = step_down(t, k, x);
  return x;
}

std::vector<SimplexId> basic_preimage(const Tower& t, int n, ElementIndex x) {
  std::vector<SimplexId> out;
  for (ElementIndex y : up_set(t.poset(n), x)) out.push_back(t.carrier(n, y));
  std::sort(out.begin(), out.end());
  return out;
}

ThreadPrefix encode_thread(const Tower& t, const RationalPoint& p, int depth) {
  if (depth > t.depth()) {
    throw Error(ErrorKind::LevelOutOfRange, "thread depth " + std::to_string(depth));
  }
  ThreadPrefix thread;
  RationalPoint q = p;
  for (int n = 1; n <= depth; ++n) {
    if (n >= 2) q = sd_coordinates(t.stages(), n - 1, q);
    thread.entries.push_back(t.element_of(n, t.stages().complex(n - 1).id_of(support(q))));
  }
  return thread;
}

bool validate_thread(const Tower& t, const ThreadPrefix& thread) {
  const int length = static_cast<int>(thread.entries.size());
  if (length > t.depth()) {
    throw Error(ErrorKind::LevelOutOfRange, "thread longer than tower depth");
  }
  for (int n = 1; n <= length; ++n) {
    if (thread.entries[n - 1] >= t.poset(n).size()) {
      throw Error(ErrorKind::ElementNotFound, "entry " + std::to_string(n));
    }
  }
  for (int n = 2; n <= length; ++n) {
    if (bond(t, n, thread.entries[n - 1], n - 1) != thread.entries[n - 2]) return false;
  }
  return true;
}

DecodedRegion decode_thread(const Tower& t, const ThreadPrefix& thread) {
  if (thread.entries.empty()) throw Error(ErrorKind::InvalidInput, "empty thread");
  if (!validate_thread(t, thread)) throw Error(ErrorKind::IncoherentThread, "bond mismatch");
  const int depth = static_cast<int>(thread.entries.size());
  DecodedRegion region;
  for (int n = 1; n <= depth; ++n) {
    region.chain.push_back(t.stages().complex(n - 1).simplex(t.carrier(n, thread.entries[n - 1])));
  }
  // The level-N entry is itself the barycenter of its carrier.
  region.representative = embed_point(
      t.stages(), depth, RationalPoint::at_vertex(static_cast<VertexIndex>(thread.entries.back())));
  region.err_sq_bound = mesh_sq_bound(t.base(), depth - 1);
  return region;
}

int separation_stage(const Tower& t, const RationalPoint& p, const RationalPoint& q) {
  if (p == q) throw Error(ErrorKind::EqualPoints, "points coincide");
  const ThreadPrefix a = encode_thread(t, p, t.depth());
  const ThreadPrefix b = encode_thread(t, q, t.depth());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i] != b.entries[i]) return static_cast<int>(i) + 1;
  }
  throw Error(ErrorKind::NotSeparated, "same element up to depth " + std::to_string(t.depth()));
}

bool is_open_union(const SimplicialComplex& k, const std::vector<SimplexId>& simplices) {
  const std::set<SimplexId> members(simplices.begin(), simplices.end());
  for (SimplexId id : members) {
    if (id >= k.num_simplices()) return false;
    for (SimplexId coface : open_star(k, k.simplex(id))) {
      if (!members.count(coface)) return false;
    }
  }
  return true;
}

std::vector<ElementIndex> image_of_open(const Tower& t, const OpenSimplexSet& u, int n) {
  t.level(n);
  if (u.stage < n - 1) {
    throw Error(ErrorKind::StageTooCoarse, "stage " + std::to_string(u.stage) +
                                               " is coarser than " + std::to_string(n - 1));
  }
  const SimplicialComplex& k = t.stages().complex(u.stage);
  if (!is_open_union(k, u.simplices)) throw Error(ErrorKind::NotOpen, "family not closed under cofaces");
  const SimplicialComplex& carrier_stage = t.stages().complex(n - 1);
  std::vector<ElementIndex> out;
  for (SimplexId id : u.simplices) {
    const RationalPoint centre =
        coarsen_point(t.stages(), RationalPoint::barycenter(k.simplex(id)), u.stage, n - 1);
    out.push_back(t.element_of(n, carrier_stage.id_of(support(centre))));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> thread_labels(const Tower& t, const ThreadPrefix& thread) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < thread.entries.size(); ++i) {
    out.push_back(t.poset(static_cast<int>(i) + 1).label(thread.entries[i]));
  }
  return out;
}

namespace {

// "{a,b{a,b}}" -> {"a", "b{a,b}"}; commas inside nested braces are kept.
std::vector<std::string> split_simplex_notation(const std::string& text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw Error(ErrorKind::InvalidInput, "bad simplex notation '" + text + "'");
  }
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (std::size_t i = 1; i + 1 < text.size(); ++i) {
    const char c = text[i];
    if (c == ',' && depth == 0) {
      parts.push_back(std::move(current));
      current.clear();
      continue;
    }
    if (c == '{') ++depth;
    if (c == '}') --depth;
    current += c;
  }
  parts.push_back(std::move(current));
  return parts;
}

}  // namespace

ThreadPrefix parse_thread(const Tower& t, const std::vector<std::string>& labels) {
  ThreadPrefix thread;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    const std::string& label = labels[i];
    if (!label.empty() && label.front() == '{') {
      const SimplicialComplex& prev = t.stages().complex(n - 1);
      Simplex s;
      try {
        s = prev.simplex_from_labels(split_simplex_notation(label));
      } catch (const Error&) {
        throw Error(ErrorKind::ElementNotFound, "'" + label + "' in level " + std::to_string(n));
      }
      auto id = prev.find(s);
      if (!id) throw Error(ErrorKind::ElementNotFound, "'" + label + "' in level " + std::to_string(n));
      thread.entries.push_back(t.element_of(n, *id));
    } else {
      thread.entries.push_back(t.poset(n).index_of(label));
    }
  }
  return thread;
}

}  // namespace poset_tower
