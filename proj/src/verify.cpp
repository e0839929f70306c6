#include "poset_tower/verify.hpp"

#include "poset_tower/error.hpp"
#include "poset_tower/homology.hpp"
#include "poset_tower/poset.hpp"
#include "poset_tower/sampling.hpp"
#include "poset_tower/subdivision.hpp"
#include "poset_tower/approx.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace poset_tower {

namespace {

struct Alias {
  std::string_view alias;
  std::string_view name;
};

constexpr Alias kAliases[] = {
    {"diagram-4.2", "bond-commutes"},
    {"eq-4.1", "preimage-star"},
    {"lemma-4.1", "up-set-core"},
    {"lemma-4.2", "preimage-acyclic"},
};

std::string level_name(int n) { return "X_" + std::to_string(n); }

class Recorder {
 public:
  explicit Recorder(VerificationReport& r) : report_(r) {}

  void add(std::string name, bool passed, std::string detail = {}) {
    report_.checks.push_back({std::move(name), passed, std::move(detail)});
  }

  // Runs `body`; library errors become a failed check rather than aborting
  // the suite.
  template <typename F>
  void run(std::string name, F&& body) {
    try {
      std::string detail;
      const bool ok = body(detail);
      add(std::move(name), ok, std::move(detail));
    } catch (const Error& e) {
      add(std::move(name), false, std::string(to_string(e.kind())) + ": " + e.what());
    }
  }

 private:
  VerificationReport& report_;
};

void level_oracle(const Tower& t, Recorder& rec) {
  for (int n = 1; n <= t.depth(); ++n) {
    rec.run(level_name(n) + " is the face poset of K_" + std::to_string(n - 1), [&](std::string& detail) {
      const SimplicialComplex& below = t.stages().complex(n - 1);
      const FinitePoset chi = face_poset(below);
      const FinitePoset& x = t.poset(n);
      std::vector<ElementIndex> map(x.size());
      for (ElementIndex e = 0; e < x.size(); ++e) {
        map[e] = chi.index_of(barycenter_label(below, below.simplex(t.carrier(n, e))));
      }
      detail = std::to_string(x.size()) + " elements";
      return is_isomorphism(x, chi, map);
    });
  }
}

void bond_commutes(const Tower& t, const SuiteConfig& cfg, Recorder& rec) {
  const std::vector<RationalPoint> points = random_points(t.base(), cfg.samples, cfg.seed);
  for (int m = 1; m <= t.depth(); ++m) {
    std::vector<ElementIndex> top;
    for (const RationalPoint& p : points) top.push_back(project_point(t, p, m));
    for (int n = 1; n <= m; ++n) {
      rec.run("f_" + std::to_string(n) + "^" + std::to_string(m) + " after p_" + std::to_string(m) +
                  " is p_" + std::to_string(n),
              [&](std::string& detail) {
                std::size_t bad = 0;
                for (std::size_t i = 0; i < points.size(); ++i) {
                  if (bond(t, m, top[i], n) != project_point(t, points[i], n)) ++bad;
                }
                detail = std::to_string(points.size()) + " points, " + std::to_string(bad) + " mismatches";
                return bad == 0;
              });
    }
  }
  for (int m = 1; m <= t.depth(); ++m) {
    rec.run("bond composition into " + level_name(m), [&](std::string& detail) {
      std::size_t bad = 0;
      for (ElementIndex x = 0; x < t.poset(m).size(); ++x) {
        for (int k = 1; k <= m; ++k) {
          for (int n = 1; n <= k; ++n) {
            if (bond(t, m, x, n) != bond(t, k, bond(t, m, x, k), n)) ++bad;
          }
        }
      }
      detail = std::to_string(bad) + " mismatches";
      return bad == 0;
    });
  }
}

void preimage_star(const Tower& t, Recorder& rec) {
  for (int n = 1; n <= t.depth(); ++n) {
    rec.run("p_" + std::to_string(n) + " preimage of B_x is the open star of its carrier",
            [&](std::string& detail) {
              const SimplicialComplex& below = t.stages().complex(n - 1);
              std::size_t bad = 0;
              for (ElementIndex x = 0; x < t.poset(n).size(); ++x) {
                std::vector<SimplexId> expected = open_star(below, below.simplex(t.carrier(n, x)));
                std::sort(expected.begin(), expected.end());
                if (basic_preimage(t, n, x) != expected) ++bad;
              }
              detail = std::to_string(t.poset(n).size()) + " elements, " + std::to_string(bad) + " mismatches";
              return bad == 0;
            });
  }
}

void up_set_core(const Tower& t, Recorder& rec) {
  for (int n = 1; n <= t.depth(); ++n) {
    rec.run("core of every B_x in " + level_name(n) + " is a point", [&](std::string& detail) {
      const FinitePoset& x = t.poset(n);
      std::size_t bad = 0;
      for (ElementIndex e = 0; e < x.size(); ++e) {
        if (core(x.induced(up_set(x, e))).size() != 1) ++bad;
      }
      detail = std::to_string(bad) + " failures";
      return bad == 0;
    });
  }
}

void preimage_acyclic(const Tower& t, Recorder& rec) {
  for (int n = 1; n <= t.depth(); ++n) {
    rec.run("order complex of every B_x in " + level_name(n) + " is acyclic", [&](std::string& detail) {
      const FinitePoset& x = t.poset(n);
      std::size_t bad = 0;
      for (ElementIndex e = 0; e < x.size(); ++e) {
        if (!is_acyclic(order_complex(x.induced(up_set(x, e))))) ++bad;
      }
      detail = std::to_string(bad) + " failures";
      return bad == 0;
    });
    rec.run("closed star of every carrier in K_" + std::to_string(n - 1) + " is acyclic",
            [&](std::string& detail) {
              const SimplicialComplex& below = t.stages().complex(n - 1);
              std::size_t bad = 0;
              for (ElementIndex e = 0; e < t.poset(n).size(); ++e) {
                if (!is_acyclic(star(below, below.simplex(t.carrier(n, e))))) ++bad;
              }
              detail = std::to_string(bad) + " failures";
              return bad == 0;
            });
  }
}

std::vector<std::vector<SimplexId>> immediate_cofaces(const SimplicialComplex& k) {
  std::vector<std::vector<SimplexId>> up(k.num_simplices());
  for (SimplexId id = 0; id < k.num_simplices(); ++id) {
    const Simplex& s = k.simplex(id);
    for (SimplexId c : k.incident(s.front())) {
      if (k.simplex(c).size() == s.size() + 1 && is_subset(s, k.simplex(c))) up[id].push_back(c);
    }
  }
  return up;
}

std::vector<SimplexId> random_open_family(const SimplicialComplex& k,
                                          const std::vector<std::vector<SimplexId>>& up,
                                          SampleRng& rng) {
  std::vector<bool> in(k.num_simplices(), false);
  for (SimplexId id = 0; id < k.num_simplices(); ++id) {
    if (rng.below(4) == 0) in[id] = true;
    // Canonical order lists faces before cofaces, so one pass closes upward.
    if (in[id]) {
      for (SimplexId c : up[id]) in[c] = true;
    }
  }
  std::vector<SimplexId> out;
  for (SimplexId id = 0; id < in.size(); ++id) {
    if (in[id]) out.push_back(id);
  }
  return out;
}

constexpr std::size_t kOpenFamilyBudget = 1u << 18;

void openness(const Tower& t, const SuiteConfig& cfg, Recorder& rec) {
  SampleRng rng(cfg.seed);
  for (int n = 1; n <= t.depth(); ++n) {
    for (int m : {n - 1, n}) {
      rec.run("p_" + std::to_string(n) + " of open unions at stage " + std::to_string(m) + " are up-sets",
              [&](std::string& detail) {
                const SimplicialComplex& k = t.stages().complex(m);
                std::size_t tested = 0, bad = 0;
                auto test = [&](const std::vector<SimplexId>& family) {
                  ++tested;
                  if (!is_up_set(t.poset(n), image_of_open(t, OpenSimplexSet{m, family}, n))) ++bad;
                };
                // Count first so that an over-budget stage is sampled instead.
                std::size_t total = 0;
                const bool small =
                    for_each_open_family(k, kOpenFamilyBudget, [&](const std::vector<SimplexId>&) { ++total; });
                if (small) {
                  for_each_open_family(k, kOpenFamilyBudget, test);
                  detail = "all " + std::to_string(tested) + " open families";
                } else {
                  const auto up = immediate_cofaces(k);
                  for (std::size_t i = 0; i < cfg.samples; ++i) test(random_open_family(k, up, rng));
                  detail = std::to_string(tested) + " sampled open families";
                }
                detail += ", " + std::to_string(bad) + " failures";
                return bad == 0;
              });
    }
  }
}

void roundtrip(const Tower& t, const SuiteConfig& cfg, Recorder& rec) {
  for (int n = 1; n <= t.depth(); ++n) {
    rec.run("encode inverts decode on every thread of depth " + std::to_string(n), [&](std::string& detail) {
      std::size_t bad = 0;
      for (ElementIndex x = 0; x < t.poset(n).size(); ++x) {
        const ThreadPrefix thread = thread_through(t, n, x);
        if (!validate_thread(t, thread)) {
          ++bad;
          continue;
        }
        if (!(encode_thread(t, decode_thread(t, thread).representative, n) == thread)) ++bad;
      }
      detail = std::to_string(t.poset(n).size()) + " threads, " + std::to_string(bad) + " failures";
      return bad == 0;
    });
  }

  if (t.base().dimension() < 1) return;
  SampleRng rng(cfg.seed);
  std::vector<std::pair<RationalPoint, RationalPoint>> pairs;
  for (std::size_t i = 0; i < cfg.samples; ++i) pairs.push_back(random_pair(t.base(), rng));

  rec.run("separation stage within the mesh bound", [&](std::string& detail) {
    std::size_t bad = 0, beyond = 0;
    for (const auto& [p, q] : pairs) {
      const Rational d = dist_sq(t.base(), p, q);
      int first = 0;
      while (!(mesh_sq_bound(t.base(), first) < d)) ++first;
      if (first + 1 > t.depth()) {
        ++beyond;
        continue;
      }
      if (separation_stage(t, p, q) > first + 1) ++bad;
    }
    detail = std::to_string(pairs.size() - beyond) + " pairs within depth, " + std::to_string(beyond) +
             " beyond, " + std::to_string(bad) + " failures";
    return bad == 0;
  });
  rec.run("shared projections lie within the mesh bound", [&](std::string& detail) {
    std::size_t bad = 0;
    for (const auto& [p, q] : pairs) {
      const Rational d = dist_sq(t.base(), p, q);
      for (int n = 1; n <= t.depth(); ++n) {
        if (project_point(t, p, n) == project_point(t, q, n) && d > mesh_sq_bound(t.base(), n - 1)) ++bad;
      }
    }
    detail = std::to_string(bad) + " failures";
    return bad == 0;
  });
}

void homology_suite(const Tower& t, Recorder& rec) {
  const BettiProfile base = betti(t.base());
  for (int n = 0; n <= t.depth(); ++n) {
    const SimplicialComplex& k = t.stages().complex(n);
    rec.run("boundary squares to zero on K_" + std::to_string(n),
            [&](std::string&) { return boundary_squares_to_zero(chain_complex(k)); });
    rec.run("betti numbers of K_" + std::to_string(n) + " match K_0", [&](std::string& detail) {
      const BettiProfile here = betti(k);
      std::ostringstream out;
      out << "betti (";
      for (std::size_t i = 0; i < here.betti.size(); ++i) out << (i ? "," : "") << here.betti[i];
      out << ")";
      detail = out.str();
      return here == base;
    });
  }
}

void naturality(const Tower& t, const SuiteConfig& cfg, Recorder& rec) {
  auto target = std::make_shared<const Tower>(t.stages());
  for (const NamedMap& named : fixture_maps(t.stages().shared(0))) {
    const SimplicialMap& g = named.map;
    std::shared_ptr<const Tower> source = target;
    if (!(*g.source == t.base())) source = std::make_shared<const Tower>(*g.source, t.depth(), cfg.max_simplices);
    const std::vector<RationalPoint> samples = random_points(*g.source, cfg.samples, cfg.seed);
    for (int n = 1; n <= t.depth(); ++n) {
      rec.run(named.name + ": g_" + std::to_string(n) + " is order preserving",
              [&](std::string&) { return is_order_preserving(induce_level_map(g, *source, *target, n)); });
      rec.run(named.name + ": naturality at level " + std::to_string(n), [&](std::string& detail) {
        detail = std::to_string(samples.size()) + " samples";
        return check_naturality(g, *source, *target, n, samples);
      });
    }
    rec.run(named.name + ": limit map keeps threads coherent", [&](std::string& detail) {
      const SystemMorphism m = induce_system_morphism(g, source, target);
      const int n = static_cast<int>(m.levels.size());
      std::size_t bad = 0;
      for (ElementIndex x = 0; x < source->poset(n).size(); ++x) {
        if (!validate_thread(*target, limit_map(m, thread_through(*source, n, x)))) ++bad;
      }
      detail = std::to_string(source->poset(n).size()) + " threads, " + std::to_string(bad) + " failures";
      return bad == 0;
    });
  }
}

}  // namespace

int VerificationReport::exit_status() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }) ? 0 : 1;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const Check& c : report.checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["status"] = c.passed ? "pass" : "fail";
    entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  nlohmann::ordered_json out;
  out["suite"] = report.suite;
  out["checks"] = std::move(checks);
  out["exit_status"] = report.exit_status();
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "level-oracle", "bond-commutes", "preimage-star", "up-set-core", "preimage-acyclic",
      "openness",     "roundtrip",     "homology",      "naturality",
  };
  return names;
}

std::string canonical_suite_name(std::string_view name) {
  for (const Alias& a : kAliases) {
    if (a.alias == name) return std::string(a.name);
  }
  for (const std::string& s : suite_names()) {
    if (s == name) return s;
  }
  throw Error(ErrorKind::UnknownSuite, "unknown suite \"" + std::string(name) + "\"");
}

int depth_guard(const SimplicialComplex& k) {
  if (k.dimension() <= 1) return 4;
  if (k.dimension() == 2) return 3;
  return 2;
}

VerificationReport verify_suite(const SuiteConfig& cfg) {
  const std::string name = canonical_suite_name(cfg.suite);
  if (!cfg.complex || cfg.complex->empty()) throw Error(ErrorKind::InvalidInput, "empty complex");
  if (cfg.depth < 1) throw Error(ErrorKind::LevelOutOfRange, "depth must be at least 1");
  if (cfg.depth > depth_guard(*cfg.complex)) {
    throw Error(ErrorKind::DepthTooLarge, "depth " + std::to_string(cfg.depth) + " exceeds the guard " +
                                              std::to_string(depth_guard(*cfg.complex)));
  }
  VerificationReport report;
  report.suite = name;
  Recorder rec(report);
  const Tower t(*cfg.complex, cfg.depth, cfg.max_simplices);
  if (name == "level-oracle") level_oracle(t, rec);
  else if (name == "bond-commutes") bond_commutes(t, cfg, rec);
  else if (name == "preimage-star") preimage_star(t, rec);
  else if (name == "up-set-core") up_set_core(t, rec);
  else if (name == "preimage-acyclic") preimage_acyclic(t, rec);
  else if (name == "openness") openness(t, cfg, rec);
  else if (name == "roundtrip") roundtrip(t, cfg, rec);
  else if (name == "homology") homology_suite(t, rec);
  else naturality(t, cfg, rec);
  return report;
}

std::vector<NamedMap> fixture_maps(std::shared_ptr<const SimplicialComplex> k) {
  std::vector<NamedMap> out;
  out.push_back({"identity", identity_map(k)});
  const auto count = static_cast<VertexIndex>(k->num_vertices());
  std::vector<VertexIndex> shift(count), reverse(count);
  for (VertexIndex v = 0; v < count; ++v) {
    shift[v] = (v + 1) % count;
    reverse[v] = count - 1 - v;
  }
  SimplicialMap shifted{k, k, shift};
  if (count > 1 && validate_simplicial(shifted)) out.push_back({"shift", shifted});
  SimplicialMap reversed{k, k, reverse};
  if (count > 2 && validate_simplicial(reversed)) out.push_back({"reverse", reversed});
  out.push_back({"constant", constant_map(k, k, 0)});

  const Stage next = subdivide_once(k);
  std::vector<VertexIndex> least(next.complex->num_vertices());
  for (VertexIndex v = 0; v < least.size(); ++v) least[v] = k->simplex(next.carrier[v]).front();
  SimplicialMap collapse{next.complex, k, least};
  if (is_rigid(collapse)) out.push_back({"collapse", collapse});
  return out;
}

ThreadPrefix thread_through(const Tower& t, int n, ElementIndex x) {
  ThreadPrefix thread;
  for (int k = 1; k <= n; ++k) thread.entries.push_back(bond(t, n, x, k));
  return thread;
}

bool for_each_open_family(const SimplicialComplex& k, std::size_t budget,
                          const std::function<void(const std::vector<SimplexId>&)>& visit) {
  const auto up = immediate_cofaces(k);
  const std::size_t total = k.num_simplices();
  std::vector<bool> in(total, false);
  std::vector<SimplexId> family;
  std::size_t produced = 0;
  // Decide simplices from the top of the canonical order downward, so every
  // coface is settled before its faces.
  std::function<bool(std::size_t)> walk = [&](std::size_t remaining) -> bool {
    if (remaining == 0) {
      if (produced == budget) return false;
      ++produced;
      std::vector<SimplexId> sorted(family.rbegin(), family.rend());
      visit(sorted);
      return true;
    }
    const SimplexId id = remaining - 1;
    if (!walk(remaining - 1)) return false;
    if (std::all_of(up[id].begin(), up[id].end(), [&](SimplexId c) { return static_cast<bool>(in[c]); })) {
      in[id] = true;
      family.push_back(id);
      const bool ok = walk(remaining - 1);
      family.pop_back();
      in[id] = false;
      if (!ok) return false;
    }
    return true;
  };
  return walk(total);
}

}  // namespace poset_tower
