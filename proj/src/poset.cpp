#include "poset_tower/poset.hpp"

#include "poset_tower/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace poset_tower {

namespace {

using Bits = FinitePoset::Bits;

template <typename F>
void for_each_bit(const Bits& bits, F&& f) {
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) f(i);
}

std::vector<ElementIndex> bits_to_list(const Bits& bits) {
  std::vector<ElementIndex> out;
  out.reserve(bits.count());
  for_each_bit(bits, [&](std::size_t i) { out.push_back(i); });
  return out;
}

}  // namespace

FinitePoset FinitePoset::from_bits(std::vector<std::string> labels, std::vector<Bits> up,
                                   bool verify_transitive) {
  const std::size_t n = labels.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

  FinitePoset p;
  p.labels_.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && labels[order[r]] == labels[order[r - 1]]) {
      throw Error(ErrorKind::InvalidInput, "duplicate element '" + labels[order[r]] + "'");
    }
    p.labels_.push_back(std::move(labels[order[r]]));
  }
  p.up_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for_each_bit(up[i], [&](std::size_t j) { p.up_[rank[i]].set(rank[j]); });
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!p.up_[i][i]) {
      throw Error(ErrorKind::InvalidInput, "relation not reflexive at '" + p.labels_[i] + "'");
    }
    for_each_bit(p.up_[i], [&](std::size_t j) {
      if (j != i && p.up_[j][i]) {
        throw Error(ErrorKind::NotAntisymmetric,
                    "'" + p.labels_[i] + "' and '" + p.labels_[j] + "' precede each other");
      }
      if (verify_transitive && !p.up_[j].is_subset_of(p.up_[i])) {
        throw Error(ErrorKind::InvalidInput, "relation not transitive through '" + p.labels_[j] + "'");
      }
    });
  }
  p.finish();
  return p;
}

void FinitePoset::finish() {
  const std::size_t n = labels_.size();
  down_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for_each_bit(up_[i], [&](std::size_t j) { down_[j].set(i); });
  }
  covers_.assign(n, {});
  cocovers_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    for_each_bit(up_[a], [&](std::size_t b) {
      if (b != a && (up_[a] & down_[b]).count() == 2) {
        covers_[a].push_back(b);
        cocovers_[b].push_back(a);
      }
    });
  }
  for (auto& c : cocovers_) std::sort(c.begin(), c.end());
}

FinitePoset FinitePoset::from_relation(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& leq) {
  const std::size_t n = elements.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(elements[i], i).second) {
      throw Error(ErrorKind::InvalidInput, "duplicate element '" + elements[i] + "'");
    }
  }
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (const auto& [lo, hi] : leq) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) throw Error(ErrorKind::ElementNotFound, "'" + lo + "'");
    if (b == index.end()) throw Error(ErrorKind::ElementNotFound, "'" + hi + "'");
    up[a->second].set(b->second);
  }
  // Warshall closure on rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i][k]) up[i] |= up[k];
    }
  }
  return from_bits(std::move(elements), std::move(up), false);
}

FinitePoset FinitePoset::from_up_sets(std::vector<std::string> elements,
                                      const std::vector<std::vector<ElementIndex>>& up_lists) {
  const std::size_t n = elements.size();
  if (up_lists.size() != n) throw Error(ErrorKind::InvalidInput, "up-set count mismatch");
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (ElementIndex j : up_lists[i]) {
      if (j >= n) throw Error(ErrorKind::ElementNotFound, "#" + std::to_string(j));
      up[i].set(j);
    }
  }
  return from_bits(std::move(elements), std::move(up), true);
}

FinitePoset FinitePoset::from_order(std::vector<std::string> elements,
                                    const std::function<bool(ElementIndex, ElementIndex)>& leq) {
  const std::size_t n = elements.size();
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (leq(i, j)) up[i].set(j);
    }
  }
  return from_bits(std::move(elements), std::move(up), true);
}

std::optional<ElementIndex> FinitePoset::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<ElementIndex>(it - labels_.begin());
}

ElementIndex FinitePoset::index_of(std::string_view label) const {
  auto i = find(label);
  if (!i) throw Error(ErrorKind::ElementNotFound, "'" + std::string(label) + "'");
  return *i;
}

std::vector<std::pair<ElementIndex, ElementIndex>> FinitePoset::hasse_edges() const {
  std::vector<std::pair<ElementIndex, ElementIndex>> out;
  for (ElementIndex a = 0; a < size(); ++a) {
    for (ElementIndex b : covers_[a]) out.emplace_back(a, b);
  }
  return out;
}

FinitePoset FinitePoset::induced(const std::vector<ElementIndex>& keep) const {
  std::vector<ElementIndex> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::size_t n = sorted.size();
  FinitePoset p;
  p.labels_.reserve(n);
  for (ElementIndex e : sorted) p.labels_.push_back(label(e));
  p.up_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (up_[sorted[i]][sorted[j]]) p.up_[i].set(j);
    }
  }
  p.finish();
  return p;
}

std::vector<ElementIndex> up_set(const FinitePoset& x, ElementIndex e) {
  if (e >= x.size()) throw Error(ErrorKind::ElementNotFound, "#" + std::to_string(e));
  return bits_to_list(x.up_bits(e));
}

std::vector<ElementIndex> min_open(const FinitePoset& x, ElementIndex e) {
  if (e >= x.size()) throw Error(ErrorKind::ElementNotFound, "#" + std::to_string(e));
  return bits_to_list(x.down_bits(e));
}

bool is_up_set(const FinitePoset& x, const std::vector<ElementIndex>& subset) {
  Bits member(x.size());
  for (ElementIndex e : subset) member.set(e);
  for (ElementIndex e : subset) {
    if (!x.up_bits(e).is_subset_of(member)) return false;
  }
  return true;
}

bool is_order_preserving(const FinitePoset& source, const FinitePoset& target,
                         const std::vector<ElementIndex>& assignment) {
  if (assignment.size() != source.size()) return false;
  for (ElementIndex a : assignment) {
    if (a >= target.size()) return false;
  }
  // Checking the Hasse diagram suffices: the order is its transitive closure.
  for (const auto& [lo, hi] : source.hasse_edges()) {
    if (!target.leq(assignment[lo], assignment[hi])) return false;
  }
  return true;
}

bool is_order_preserving(const PosetMap& f) {
  return is_order_preserving(*f.source, *f.target, f.assignment);
}

bool is_beat_point(const FinitePoset& x, const Bits& alive, ElementIndex e) {
  auto has_extremum = [&](Bits strict, bool upward) {
    strict &= alive;
    strict.reset(e);
    if (strict.none()) return false;
    bool found = false;
    for_each_bit(strict, [&](std::size_t m) {
      if (found) return;
      const Bits& reach = upward ? x.up_bits(m) : x.down_bits(m);
      if (strict.is_subset_of(reach)) found = true;
    });
    return found;
  };
  return has_extremum(x.up_bits(e), true) || has_extremum(x.down_bits(e), false);
}

FinitePoset core(const FinitePoset& x) {
  Bits alive(x.size());
  alive.set();
  bool removed = true;
  while (removed) {
    removed = false;
    for (auto e = alive.find_first(); e != Bits::npos; e = alive.find_next(e)) {
      if (is_beat_point(x, alive, e)) {
        alive.reset(e);
        removed = true;
        break;
      }
    }
  }
  return x.induced(bits_to_list(alive));
}

SimplicialComplex order_complex(const FinitePoset& x) {
  std::vector<Simplex> simplices;
  std::vector<VertexIndex> chain;
  std::function<void(ElementIndex)> extend = [&](ElementIndex last) {
    for_each_bit(x.up_bits(last), [&](std::size_t next) {
      if (next == last) return;
      chain.push_back(static_cast<VertexIndex>(next));
      Simplex s = chain;
      std::sort(s.begin(), s.end());
      simplices.push_back(std::move(s));
      extend(next);
      chain.pop_back();
    });
  };
  for (ElementIndex e = 0; e < x.size(); ++e) {
    chain.assign(1, static_cast<VertexIndex>(e));
    simplices.push_back(chain);
    extend(e);
  }
  return SimplicialComplex::assemble(x.labels(), std::move(simplices));
}

FinitePoset face_poset(const SimplicialComplex& k) {
  std::vector<std::string> labels;
  std::vector<std::vector<ElementIndex>> up;
  labels.reserve(k.num_simplices());
  up.reserve(k.num_simplices());
  for (SimplexId id = 0; id < k.num_simplices(); ++id) {
    labels.push_back(barycenter_label(k, k.simplex(id)));
    up.push_back(open_star(k, k.simplex(id)));
  }
  return FinitePoset::from_up_sets(std::move(labels), up);
}

bool is_isomorphism(const FinitePoset& a, const FinitePoset& b,
                    const std::vector<ElementIndex>& map) {
  if (a.size() != b.size() || map.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (ElementIndex m : map) {
    if (m >= b.size() || hit[m]) return false;
    hit[m] = true;
  }
  for (ElementIndex i = 0; i < a.size(); ++i) {
    for (ElementIndex j = 0; j < a.size(); ++j) {
      if (a.leq(i, j) != b.leq(map[i], map[j])) return false;
    }
  }
  return true;
}

namespace {

// Joint colour refinement so that colours are comparable across the posets.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colours(
    const FinitePoset& a, const FinitePoset& b) {
  using Key = std::vector<std::size_t>;
  auto initial = [](const FinitePoset& p) {
    std::vector<Key> keys;
    for (ElementIndex e = 0; e < p.size(); ++e) {
      keys.push_back({p.up_bits(e).count(), p.down_bits(e).count()});
    }
    return keys;
  };
  auto compress = [](const std::vector<Key>& ka, const std::vector<Key>& kb,
                     std::vector<std::size_t>& ca, std::vector<std::size_t>& cb) {
    std::map<Key, std::size_t> ids;
    for (const auto& k : ka) ids.emplace(k, 0);
    for (const auto& k : kb) ids.emplace(k, 0);
    std::size_t next = 0;
    for (auto& [k, id] : ids) id = next++;
    ca.clear();
    cb.clear();
    for (const auto& k : ka) ca.push_back(ids[k]);
    for (const auto& k : kb) cb.push_back(ids[k]);
    return ids.size();
  };

  std::vector<std::size_t> ca, cb;
  std::size_t classes = compress(initial(a), initial(b), ca, cb);
  while (true) {
    auto step = [](const FinitePoset& p, const std::vector<std::size_t>& colour) {
      std::vector<Key> keys;
      for (ElementIndex e = 0; e < p.size(); ++e) {
        Key k{colour[e]};
        std::vector<std::size_t> ups, downs;
        for (ElementIndex u : p.upper_covers(e)) ups.push_back(colour[u]);
        for (ElementIndex d : p.lower_covers(e)) downs.push_back(colour[d]);
        std::sort(ups.begin(), ups.end());
        std::sort(downs.begin(), downs.end());
        k.push_back(ups.size());
        k.insert(k.end(), ups.begin(), ups.end());
        k.push_back(downs.size());
        k.insert(k.end(), downs.begin(), downs.end());
        keys.push_back(std::move(k));
      }
      return keys;
    };
    std::vector<std::size_t> na, nb;
    const std::size_t refined = compress(step(a, ca), step(b, cb), na, nb);
    ca = std::move(na);
    cb = std::move(nb);
    if (refined == classes) break;
    classes = refined;
  }
  return {ca, cb};
}

}  // namespace

std::optional<std::vector<ElementIndex>> find_isomorphism(const FinitePoset& a,
                                                          const FinitePoset& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  auto [ca, cb] = refine_colours(a, b);
  {
    std::vector<std::size_t> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;
  }
  std::map<std::size_t, std::size_t> class_size;
  for (std::size_t c : ca) ++class_size[c];
  std::vector<ElementIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](ElementIndex x, ElementIndex y) {
    return class_size[ca[x]] < class_size[ca[y]];
  });

  std::vector<ElementIndex> map(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> assign = [&](std::size_t pos) {
    if (pos == n) return true;
    const ElementIndex x = order[pos];
    for (ElementIndex y = 0; y < n; ++y) {
      if (used[y] || cb[y] != ca[x]) continue;
      bool consistent = true;
      for (std::size_t q = 0; q < pos && consistent; ++q) {
        const ElementIndex u = order[q];
        consistent = a.leq(u, x) == b.leq(map[u], y) && a.leq(x, u) == b.leq(y, map[u]);
      }
      if (!consistent) continue;
      map[x] = y;
      used[y] = true;
      if (assign(pos + 1)) return true;
      used[y] = false;
      map[x] = n;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return map;
}

bool are_isomorphic(const FinitePoset& a, const FinitePoset& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace poset_tower
