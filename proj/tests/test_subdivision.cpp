#include "support.hpp"

#include "poset_tower/error.hpp"
#include "poset_tower/poset.hpp"
#include "poset_tower/sampling.hpp"
#include "poset_tower/simplicial_map.hpp"
#include "poset_tower/subdivision.hpp"

#include <doctest.h>

using namespace test_support;

namespace {

// Chains of faces of K counted by length, straight from the inclusion order.
std::vector<std::size_t> face_chain_counts(const SimplicialComplex& k) {
  std::vector<std::size_t> counts;
  // ending[s][len-1]: chains of that length whose top is simplex s.
  std::vector<std::vector<std::size_t>> ending(k.num_simplices());
  for (SimplexId s = 0; s < k.num_simplices(); ++s) {
    ending[s].assign(k.simplex(s).size(), 0);
    ending[s][0] = 1;
    for (SimplexId f = 0; f < s; ++f) {
      const Simplex& face = k.simplex(f);
      if (face.size() >= k.simplex(s).size() || !is_subset(face, k.simplex(s))) continue;
      for (std::size_t len = 0; len < ending[f].size(); ++len) ending[s][len + 1] += ending[f][len];
    }
    for (std::size_t len = 0; len < ending[s].size(); ++len) {
      if (ending[s][len] == 0) continue;
      if (counts.size() <= len) counts.resize(len + 1, 0);
      counts[len] += ending[s][len];
    }
  }
  return counts;
}

std::map<VertexIndex, Rational> as_map(const RationalPoint& p) {
  return {p.coords().begin(), p.coords().end()};
}

}  // namespace

TEST_CASE("subdivision sizes") {
  const SubdividedComplex p = subdivide(*pt(), 5);
  CHECK(p.complex() == *pt());
  CHECK(subdivide(*edge(), 1).complex().f_vector() == std::vector<std::size_t>{3, 2});
  CHECK(subdivide(*triangle(), 1).complex().f_vector() == std::vector<std::size_t>{7, 12, 6});
}

TEST_CASE("subdivision simplices are the chains of faces") {
  for (const auto& [name, k] : fixtures()) {
    CAPTURE(name);
    const SubdividedComplex s = subdivide(*k, 2);
    for (int n = 1; n <= 2; ++n) CHECK(s.complex(n).f_vector() == face_chain_counts(s.complex(n - 1)));
  }
}

TEST_CASE("subdivision labels and provenance") {
  const SubdividedComplex s = subdivide(*edge(), 2);
  CHECK(s.complex(1).labels() == std::vector<std::string>{"a", "b", "b{a,b}"});
  const SimplicialComplex& k2 = s.complex(2);
  CHECK(k2.find_vertex("b{a,b{a,b}}").has_value());
  CHECK(k2.find_vertex("b{b,b{a,b}}").has_value());
  const VertexIndex v = k2.vertex("b{a,b{a,b}}");
  CHECK(s.complex(1).labels_of(s.complex(1).simplex(s.carrier(2, v))) == std::vector<std::string>{"a", "b{a,b}"});
  for (int n = 1; n <= 2; ++n) {
    for (SimplexId id = 0; id < s.complex(n - 1).num_simplices(); ++id) {
      CHECK(s.carrier(n, s.barycenter(n, id)) == id);
    }
  }
}

TEST_CASE("label collisions are reported") {
  auto k = closure({"a", "b", "b{a,b}"}, {{"a", "b"}, {"b{a,b}"}});
  try {
    subdivide(*k, 1);
    FAIL("collision not detected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LabelCollision);
  }
}

TEST_CASE("resource cap") {
  CHECK_THROWS_AS(subdivide(*tetra_boundary(), 3, 100), Error);
  CHECK_NOTHROW(subdivide(*tetra_boundary(), 1, 100));
}

TEST_CASE("coordinates after subdivision") {
  auto e = edge();
  const SubdividedComplex s = subdivide(*e, 2);
  const SimplicialComplex& k1 = s.complex(1);
  const RationalPoint p = point(*e, {{"a", "2/3"}, {"b", "1/3"}});
  CHECK(sd_coordinates(s, 1, p) == point(k1, {{"a", "1/3"}, {"b{a,b}", "2/3"}}));
  CHECK(sd_coordinates(s, 1, point(*e, {{"a", "1/2"}, {"b", "1/2"}})) == point(k1, {{"b{a,b}", "1"}}));
  CHECK(sd_coordinates(s, 1, point(*e, {{"a", "1"}})) == point(k1, {{"a", "1"}}));

  CHECK(coarsen_point(s, point(k1, {{"b{a,b}", "1"}}), 1, 0) == point(*e, {{"a", "1/2"}, {"b", "1/2"}}));
  CHECK(coarsen_point(s, point(k1, {{"a", "1/3"}, {"b{a,b}", "2/3"}}), 1, 0) == p);
  const SimplicialComplex& k2 = s.complex(2);
  CHECK(embed_point(s, 2, point(k2, {{"b{a,b{a,b}}", "1"}})) == point(*e, {{"a", "3/4"}, {"b", "1/4"}}));
}

TEST_CASE("refining then embedding returns the point") {
  for (const auto& [name, k] : fixtures()) {
    CAPTURE(name);
    const SubdividedComplex s = subdivide(*k, 3);
    for (const RationalPoint& p : random_points(*k, 50, 17)) {
      for (int n = 0; n <= 3; ++n) {
        const RationalPoint r = refine_point(s, p, 0, n);
        // The refined point is a valid point of K_n...
        CHECK(s.complex(n).contains(support(r)));
        // ...and sits exactly where p is.
        CHECK(embed_point(s, n, r) == p);
      }
    }
  }
}

TEST_CASE("refined support is the open simplex that contains the point") {
  for (const auto& [name, k] : fixtures()) {
    CAPTURE(name);
    const SubdividedComplex s = subdivide(*k, 2);
    for (const RationalPoint& p : random_points(*k, 25, 23)) {
      for (int n = 1; n <= 2; ++n) {
        const SimplicialComplex& kn = s.complex(n);
        std::size_t hits = 0;
        SimplexId hit = 0;
        for (SimplexId id = 0; id < kn.num_simplices(); ++id) {
          std::vector<std::map<VertexIndex, Rational>> corners;
          for (VertexIndex v : kn.simplex(id)) corners.push_back(as_map(embed_point(s, n, RationalPoint::at_vertex(v))));
          if (in_open_simplex(corners, as_map(p))) {
            ++hits;
            hit = id;
          }
        }
        CHECK(hits == 1);
        CHECK(kn.simplex(hit) == support(refine_point(s, p, 0, n)));
      }
    }
  }
}

TEST_CASE("mesh bound") {
  CHECK(mesh_sq_bound(*pt(), 3) == 0);
  CHECK(mesh_sq_bound(*edge(), 0) == 2);
  CHECK(mesh_sq_bound(*edge(), 1) == q("1/2"));
  for (const auto& [name, k] : fixtures()) {
    CAPTURE(name);
    const SubdividedComplex s = subdivide(*k, 3);
    for (int n = 0; n <= 3; ++n) {
      const SimplicialComplex& kn = s.complex(n);
      Rational worst = 0;
      for (const Simplex& sigma : kn.simplices()) {
        for (std::size_t i = 0; i < sigma.size(); ++i) {
          for (std::size_t j = i + 1; j < sigma.size(); ++j) {
            const Rational d = dist_sq(*k, embed_point(s, n, RationalPoint::at_vertex(sigma[i])),
                                       embed_point(s, n, RationalPoint::at_vertex(sigma[j])));
            if (d > worst) worst = d;
          }
        }
      }
      CHECK(worst <= mesh_sq_bound(*k, n));
    }
  }
}

TEST_CASE("subdivided maps") {
  auto e = edge();
  const SubdividedComplex s = subdivide(*e, 2);
  auto p = pt();
  const SubdividedComplex sp = subdivide(*p, 2);

  const SimplicialMap c = constant_map(e, p, 0);
  const SimplicialMap c1 = sd_map(c, s.at(1), sp.at(1));
  CHECK(c1.vertex_map == std::vector<VertexIndex>(3, 0));

  const SimplicialMap id1 = sd_map(identity_map(e), s.at(1), s.at(1));
  CHECK(id1.vertex_map == identity_map(s.shared(1)).vertex_map);

  const SimplicialMap swap = make_simplicial_map(e, e, {{"a", "b"}, {"b", "a"}});
  const SimplicialMap swap1 = sd_map(swap, s.at(1), s.at(1));
  const SimplicialComplex& k1 = s.complex(1);
  CHECK(swap1.vertex_map[k1.vertex("a")] == k1.vertex("b"));
  CHECK(swap1.vertex_map[k1.vertex("b")] == k1.vertex("a"));
  CHECK(swap1.vertex_map[k1.vertex("b{a,b}")] == k1.vertex("b{a,b}"));
}

TEST_CASE("sd is functorial") {
  auto c = circle();
  const SubdividedComplex s = subdivide(*c, 2);
  const SimplicialMap rot = make_simplicial_map(c, c, {{"0", "1"}, {"1", "2"}, {"2", "0"}});
  const SimplicialMap fold = make_simplicial_map(c, c, {{"0", "0"}, {"1", "1"}, {"2", "0"}});
  REQUIRE(validate_simplicial(fold));
  for (int n = 1; n <= 2; ++n) {
    const SimplicialMap lhs = sd_map(compose(fold, rot), s, s, n);
    const SimplicialMap rhs = compose(sd_map(fold, s, s, n), sd_map(rot, s, s, n));
    CHECK(lhs.vertex_map == rhs.vertex_map);
    CHECK(sd_map(identity_map(c), s, s, n).vertex_map == identity_map(s.shared(n)).vertex_map);
  }
}

TEST_CASE("validate_simplicial") {
  auto e = edge();
  CHECK(validate_simplicial(make_simplicial_map(e, e, {{"a", "b"}, {"b", "a"}})));
  CHECK(validate_simplicial(make_simplicial_map(e, e, {{"a", "a"}, {"b", "a"}})));
  auto c = circle();
  CHECK(validate_simplicial(make_simplicial_map(c, c, {{"0", "0"}, {"1", "1"}, {"2", "0"}})));
  auto missing = closure({"0", "1", "2"}, {{"1", "2"}, {"0", "2"}});
  CHECK_FALSE(validate_simplicial(make_simplicial_map(c, missing, {{"0", "0"}, {"1", "1"}, {"2", "0"}})));
  CHECK_THROWS_AS(make_simplicial_map(e, e, {{"a", "b"}}), Error);
}
