// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include "support.hpp"

#include "poset_tower/approx.hpp"
#include "poset_tower/error.hpp"
#include "poset_tower/homology.hpp"
#include "poset_tower/io.hpp"
#include "poset_tower/poset.hpp"
#include "poset_tower/sampling.hpp"
#include "poset_tower/subdivision.hpp"
#include "poset_tower/tower.hpp"
#include "poset_tower/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>

using namespace test_support;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  // Records a failure with context; later failures are not listed.
  void require(bool ok, const std::string& what) {
    if (ok || !passed) {
      passed = passed && ok;
      return;
    }
    passed = false;
    detail << "first failure: " << what << "; ";
  }
};

// Depth used for per-level criteria: 3 up to dimension 1, 2 above.
int small_depth(const SimplicialComplex& k) { return k.dimension() <= 1 ? 3 : 2; }

std::map<std::string, std::shared_ptr<const Tower>> depth3_towers() {
  std::map<std::string, std::shared_ptr<const Tower>> out;
  for (const auto& [name, k] : fixtures()) out[name] = std::make_shared<const Tower>(*k, 3);
  return out;
}

const std::map<std::string, std::shared_ptr<const Tower>>& towers() {
  static const auto t = depth3_towers();
  return t;
}

void level_oracle(Outcome& out) {
  std::size_t levels = 0;
  for (const auto& [name, k] : fixtures()) {
    const Tower& t = *towers().at(name);
    for (int n = 1; n <= small_depth(*k); ++n) {
      const SimplicialComplex& below = t.stages().complex(n - 1);
      const FinitePoset chi = face_poset(below);
      const FinitePoset& x = t.poset(n);
      std::vector<ElementIndex> map(x.size());
      for (ElementIndex e = 0; e < x.size(); ++e) {
        map[e] = chi.index_of(barycenter_label(below, below.simplex(t.carrier(n, e))));
      }
      out.require(x.size() == below.num_simplices() && is_isomorphism(x, chi, map),
                  name + " level " + std::to_string(n));
      ++levels;
    }
  }
  out.detail << levels << " levels";
}

void diagram(Outcome& out) {
  std::size_t checks = 0;
  for (const auto& [name, k] : fixtures()) {
    const Tower& t = *towers().at(name);
    for (const RationalPoint& p : random_points(*k, 200, 2024)) {
      for (int m = 1; m <= 3; ++m) {
        const ElementIndex top = project_point(t, p, m);
        for (int n = 1; n <= m; ++n) {
          out.require(bond(t, m, top, n) == project_point(t, p, n), name + " n=" + std::to_string(n) +
                                                                        " m=" + std::to_string(m));
          ++checks;
        }
      }
    }
  }
  out.detail << checks << " point checks";
}

void preimage_star(Outcome& out) {
  std::size_t elements = 0;
  for (const auto& [name, k] : fixtures()) {
    const Tower& t = *towers().at(name);
    for (int n = 1; n <= 3; ++n) {
      const SimplicialComplex& below = t.stages().complex(n - 1);
      for (ElementIndex x = 0; x < t.poset(n).size(); ++x) {
        std::vector<SimplexId> expected = open_star(below, below.simplex(t.carrier(n, x)));
        std::sort(expected.begin(), expected.end());
        out.require(basic_preimage(t, n, x) == expected, name + " level " + std::to_string(n));
        ++elements;
      }
    }
  }
  out.detail << elements << " elements";
}

void up_set_core(Outcome& out) {
  std::size_t elements = 0;
  for (const auto& [name, k] : fixtures()) {
    const Tower& t = *towers().at(name);
    for (int n = 1; n <= t.depth(); ++n) {
      const FinitePoset& x = t.poset(n);
      for (ElementIndex e = 0; e < x.size(); ++e) {
        out.require(core(x.induced(up_set(x, e))).size() == 1, name + " " + x.label(e));
        ++elements;
      }
    }
  }
  out.detail << elements << " up-sets";
}

// Reduced homology vanishes: H_0 = Z, everything else zero, no torsion.
bool reduced_trivial(const SimplicialComplex& k) {
  const BettiProfile b = betti(k);
  if (b.betti.empty() || b.betti[0] != 1) return false;
  for (std::size_t d = 1; d < b.betti.size(); ++d) {
    if (b.betti[d] != 0) return false;
  }
  return std::all_of(b.torsion.begin(), b.torsion.end(), [](const auto& t) { return t.empty(); });
}

void preimage_acyclic(Outcome& out) {
  std::size_t elements = 0;
  for (const auto& [name, k] : fixtures()) {
    const Tower& t = *towers().at(name);
    for (int n = 1; n <= 2; ++n) {
      const FinitePoset& x = t.poset(n);
      const SimplicialComplex& below = t.stages().complex(n - 1);
      for (ElementIndex e = 0; e < x.size(); ++e) {
        out.require(reduced_trivial(order_complex(x.induced(up_set(x, e)))), name + " B_" + x.label(e));
        out.require(reduced_trivial(star(below, below.simplex(t.carrier(n, e)))), name + " st " + x.label(e));
        ++elements;
      }
    }
  }
  out.detail << elements << " elements";
}

void homology_invariance(Outcome& out) {
  const std::map<std::string, std::vector<std::size_t>> expected = {
      {"PT", {1}}, {"E", {1, 0}}, {"S1", {1, 1}}, {"D2", {1, 0, 0}}, {"dD3", {1, 0, 1}}};
  for (const auto& [name, k] : fixtures()) {
    const Tower& t = *towers().at(name);
    for (int n = 0; n <= 2; ++n) {
      const BettiProfile b = betti(t.stages().complex(n));
      const bool torsion_free =
          std::all_of(b.torsion.begin(), b.torsion.end(), [](const auto& tor) { return tor.empty(); });
      out.require(b.betti == expected.at(name) && torsion_free, name + " K_" + std::to_string(n));
    }
  }
  out.detail << "5 fixtures, stages 0..2";
}

// Every coherent sequence (x_1, ..., x_N) found by brute force over the
// product of the levels.
std::vector<ThreadPrefix> all_threads(const Tower& t, int depth) {
  std::vector<ThreadPrefix> out;
  ThreadPrefix cur;
  std::function<void()> extend = [&] {
    if (static_cast<int>(cur.entries.size()) == depth) {
      out.push_back(cur);
      return;
    }
    const int level = static_cast<int>(cur.entries.size()) + 1;
    for (ElementIndex x = 0; x < t.poset(level).size(); ++x) {
      cur.entries.push_back(x);
      if (validate_thread(t, cur)) extend();
      cur.entries.pop_back();
    }
  };
  extend();
  return out;
}

void roundtrip(Outcome& out) {
  std::size_t threads = 0;
  for (const auto& [name, depth] : std::vector<std::pair<std::string, int>>{{"E", 3}, {"S1", 3}, {"D2", 2}}) {
    const Tower& t = *towers().at(name);
    for (int n = 1; n <= depth; ++n) {
      const std::vector<ThreadPrefix> all = all_threads(t, n);
      // Threads of depth n correspond to the elements of level n.
      out.require(all.size() == t.poset(n).size(), name + " thread count at depth " + std::to_string(n));
      for (const ThreadPrefix& th : all) {
        out.require(encode_thread(t, decode_thread(t, th).representative, n) == th,
                    name + " depth " + std::to_string(n));
      }
      threads += all.size();
    }
  }
  out.detail << threads << " threads";
}

void separation(Outcome& out) {
  // Deep enough that most seeded pairs resolve inside the tower; pairs that
  // would need more levels are redrawn and counted.
  const std::vector<std::pair<std::string, int>> plan = {{"E", 12}, {"S1", 10}, {"D2", 5}, {"dD3", 4}};
  for (const auto& [name, depth] : plan) {
    ComplexPtr k;
    for (const auto& f : fixtures()) {
      if (f.name == name) k = f.k;
    }
    const Tower t(*k, depth);
    SampleRng rng(77);
    std::size_t kept = 0, redrawn = 0, worst = 0;
    while (kept < 100 && redrawn < 100000) {
      const auto [p, q] = random_pair(*k, rng);
      const Rational d = dist_sq(*k, p, q);
      int first = 0;
      while (!(mesh_sq_bound(*k, first) < d)) ++first;
      if (first + 1 > depth) {
        ++redrawn;
        continue;
      }
      ++kept;
      try {
        const int s = separation_stage(t, p, q);
        out.require(s <= first + 1, name + " pair separated late");
        worst = std::max<std::size_t>(worst, s);
      } catch (const Error& e) {
        out.require(false, name + " " + e.what());
      }
    }
    out.require(kept == 100, name + " too few pairs within depth");
    out.detail << name << ": 100 pairs (" << redrawn << " redrawn, deepest stage " << worst << "); ";
  }
}

void openness(Outcome& out) {
  constexpr std::size_t budget = 1u << 18;
  std::size_t exhaustive = 0, sampled = 0;
  for (const auto& [name, depth] : std::vector<std::pair<std::string, int>>{{"E", 3}, {"S1", 3}, {"D2", 2}}) {
    const Tower& t = *towers().at(name);
    SampleRng rng(99);
    for (int n = 1; n <= depth; ++n) {
      for (int m : {n - 1, n}) {
        const SimplicialComplex& k = t.stages().complex(m);
        auto test = [&](const std::vector<SimplexId>& family) {
          out.require(is_up_set(t.poset(n), image_of_open(t, OpenSimplexSet{m, family}, n)),
                      name + " n=" + std::to_string(n) + " stage " + std::to_string(m));
        };
        std::size_t total = 0;
        const bool small = name != "D2" &&
                           for_each_open_family(k, budget, [&](const std::vector<SimplexId>&) { ++total; });
        if (small) {
          for_each_open_family(k, budget, test);
          exhaustive += total;
          continue;
        }
        // Random coface-closed families: seed simplices, then close upward.
        for (int i = 0; i < 200; ++i) {
          std::vector<bool> in(k.num_simplices(), false);
          for (SimplexId id = 0; id < k.num_simplices(); ++id) {
            if (rng.below(4) != 0) continue;
            for (SimplexId c : open_star(k, k.simplex(id))) in[c] = true;
          }
          std::vector<SimplexId> family;
          for (SimplexId id = 0; id < in.size(); ++id) {
            if (in[id]) family.push_back(id);
          }
          out.require(is_open_union(k, family), name + " sampled family not open");
          test(family);
          ++sampled;
        }
        out.detail << name << " n=" << n << " stage " << m << " sampled; ";
      }
    }
  }
  out.detail << exhaustive << " families exhaustively, " << sampled << " sampled";
}

void thread_criteria(Outcome& out) {
  Outcome a, b, c;
  roundtrip(a);
  separation(b);
  openness(c);
  out.passed = a.passed && b.passed && c.passed;
  out.detail << "(a) " << (a.passed ? "ok " : "FAIL ") << a.detail.str() << " | (b) " << (b.passed ? "ok " : "FAIL ")
             << b.detail.str() << "| (c) " << (c.passed ? "ok " : "FAIL ") << c.detail.str();
}

void naturality(Outcome& out) {
  std::size_t maps = 0;
  for (const auto& [name, k] : fixtures()) {
    auto target = towers().at(name);
    std::vector<NamedMap> set = fixture_maps(k);
    // Constant maps into the point as well.
    set.push_back({"to PT", constant_map(k, pt(), 0)});
    for (const NamedMap& named : set) {
      const SimplicialMap& g = named.map;
      std::shared_ptr<const Tower> source = target;
      if (!(*g.source == *k)) source = std::make_shared<const Tower>(*g.source, 3);
      std::shared_ptr<const Tower> into = target;
      if (!(*g.target == *k)) into = std::make_shared<const Tower>(*g.target, 3);
      const std::vector<RationalPoint> samples = random_points(*g.source, 100, 5);
      for (int n = 1; n <= 3; ++n) {
        const std::string where = name + " " + named.name + " n=" + std::to_string(n);
        out.require(is_order_preserving(induce_level_map(g, *source, *into, n)), where + " order");
        out.require(check_naturality(g, *source, *into, n, samples), where + " naturality");
      }
      ++maps;
    }
  }
  out.detail << maps << " maps";
}

std::string map_family(const std::string& file) { return file.substr(0, file.find('_')); }

void pipeline(Outcome& out) {
  const std::map<std::string, int> dims = {{"pt", 0}, {"edge", 1}, {"circle", 1}, {"triangle", 2}, {"tetra", 2}};
  std::map<std::string, int> count, deeper;
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(fixture_path("maps"))) {
    files.push_back(entry.path().filename().string());
  }
  std::sort(files.begin(), files.end());
  std::size_t threads = 0;
  for (const std::string& file : files) {
    const PLMap h = pl_map_from_json(read_json(fixture_path("maps/" + file)));
    const std::string fam = map_family(file);
    ++count[fam];
    try {
      const Approximation a = approximate(h, 4);
      out.require(a.n <= 4, file + " stage");
      if (a.n >= h.stage + 1) ++deeper[fam];
      out.require(validate_simplicial(a.f), file + " not simplicial");
      out.require(carrier_homotopy_check(h, *a.stages, a.f, standard_samples(*a.stages, a.n)),
                  file + " carrier check");
      auto source = std::make_shared<const Tower>(*a.f.source, 3);
      auto target = std::make_shared<const Tower>(*a.f.target, 3);
      const SystemMorphism m = induce_system_morphism(a.f, source, target);
      for (ElementIndex x = 0; x < source->poset(3).size(); ++x) {
        out.require(validate_thread(*target, limit_map(m, thread_through(*source, 3, x))), file + " thread");
      }
      threads += source->poset(3).size();
      out.detail << file.substr(0, file.size() - 5) << " n=" << a.n << "; ";
    } catch (const Error& e) {
      out.require(false, file + " " + e.what());
    }
  }
  for (const auto& [fam, dim] : dims) {
    out.require(count[fam] >= 3, fam + " has fewer than 3 maps");
    // Maps out of a point are approximated at their own stage.
    if (dim > 0) out.require(deeper[fam] >= 1, fam + " has no map needing a finer stage");
  }
  out.detail << threads << " threads mapped (pt exempt from the finer-stage requirement)";
}

void determinism(Outcome& out) {
  std::size_t reports = 0;
  for (const auto& [name, k] : fixtures()) {
    for (const std::string& suite : suite_names()) {
      SuiteConfig cfg;
      cfg.suite = suite;
      cfg.complex = k;
      cfg.depth = 2;
      cfg.seed = 1234;
      const std::string first = dump(report_to_json(verify_suite(cfg)));
      const std::string second = dump(report_to_json(verify_suite(cfg)));
      out.require(first == second, name + " " + suite);
      ++reports;
    }
  }
  out.detail << reports << " report pairs";
}

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "level oracle", 10, level_oracle},
      {2, "projection and bonds commute", 30, diagram},
      {3, "basic preimages are open stars", 10, preimage_star},
      {4, "up-sets have a one-point core", 10, up_set_core},
      {5, "up-sets and stars are acyclic", 60, preimage_acyclic},
      {6, "homology is subdivision invariant", 60, homology_invariance},
      {7, "threads encode points", 120, thread_criteria},
      {8, "induced level maps are natural", 60, naturality},
      {9, "approximation and limit maps", 120, pipeline},
      {10, "reports are deterministic", 0, determinism},
  };
  // Shared towers are built once, outside the timed criteria.
  towers();
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const Error& e) {
      out.require(false, std::string("uncaught ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) out.require(false, "over the time budget");
    if (!out.passed) ++failures;
    std::printf("%s %2d %s (%.2f s): %s\n", out.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                out.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
