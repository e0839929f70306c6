#pragma once

#include "poset_tower/complex.hpp"
#include "poset_tower/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace test_support {

using namespace poset_tower;

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

// Face closure of the given top simplices, built through the validating path.
inline ComplexPtr closure(std::vector<std::string> vertices,
                          const std::vector<std::vector<std::string>>& tops) {
  RawComplex raw;
  raw.vertices = std::move(vertices);
  std::vector<std::vector<std::string>> all;
  for (const auto& top : tops) {
    const std::size_t n = top.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::string> face;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) face.push_back(top[i]);
      }
      std::sort(face.begin(), face.end());
      all.push_back(face);
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  raw.simplices = all;
  return std::make_shared<const SimplicialComplex>(validate_complex(raw));
}

inline ComplexPtr pt() { return closure({"v"}, {{"v"}}); }
inline ComplexPtr edge() { return closure({"a", "b"}, {{"a", "b"}}); }
inline ComplexPtr circle() { return closure({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}}); }
inline ComplexPtr triangle() { return closure({"0", "1", "2"}, {{"0", "1", "2"}}); }
inline ComplexPtr tetra_boundary() {
  return closure({"0", "1", "2", "3"}, {{"0", "1", "2"}, {"0", "1", "3"}, {"0", "2", "3"}, {"1", "2", "3"}});
}

// Six-vertex projective plane.
inline ComplexPtr projective_plane() {
  return closure({"1", "2", "3", "4", "5", "6"},
                 {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"}, {"1", "2", "6"},
                  {"2", "3", "5"}, {"2", "4", "5"}, {"2", "4", "6"}, {"3", "4", "6"}, {"3", "5", "6"}});
}

struct NamedComplex {
  std::string name;
  ComplexPtr k;
};

inline std::vector<NamedComplex> fixtures() {
  return {{"PT", pt()}, {"E", edge()}, {"S1", circle()}, {"D2", triangle()}, {"dD3", tetra_boundary()}};
}

inline Rational q(const char* text) { return parse_rational(text); }

inline RationalPoint point(const SimplicialComplex& k, const std::map<std::string, std::string>& coords) {
  std::map<std::string, Rational> weights;
  for (const auto& [label, value] : coords) weights[label] = parse_rational(value);
  return RationalPoint::from_labels(k, weights);
}

inline Simplex simplex(const SimplicialComplex& k, const std::vector<std::string>& labels) {
  return k.simplex_from_labels(labels);
}

inline std::string fixture_path(const std::string& rel) { return std::string(FIXTURE_DIR) + "/" + rel; }

// Independent point location: solves Σ λ_i u_i = p over the rationals for
// the stage-0 images u_i of a simplex's vertices and reports whether the
// solution exists with every λ_i > 0.
inline bool in_open_simplex(const std::vector<std::map<VertexIndex, Rational>>& corners,
                            const std::map<VertexIndex, Rational>& p) {
  std::vector<VertexIndex> coords;
  for (const auto& c : corners) {
    for (const auto& [v, w] : c) coords.push_back(v);
  }
  for (const auto& [v, w] : p) coords.push_back(v);
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  const std::size_t unknowns = corners.size();
  // Augmented matrix, one row per coordinate.
  std::vector<std::vector<Rational>> m;
  for (VertexIndex c : coords) {
    std::vector<Rational> row(unknowns + 1, Rational(0));
    for (std::size_t i = 0; i < unknowns; ++i) {
      auto it = corners[i].find(c);
      if (it != corners[i].end()) row[i] = it->second;
    }
    auto it = p.find(c);
    if (it != p.end()) row[unknowns] = it->second;
    m.push_back(row);
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < unknowns && rank < m.size(); ++col) {
    std::size_t r = rank;
    while (r < m.size() && m[r][col] == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[rank]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][col] == 0) continue;
      const Rational f = m[i][col] / m[rank][col];
      for (std::size_t j = col; j <= unknowns; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < m.size(); ++i) {
    if (m[i][unknowns] != 0) return false;
  }
  if (rank != unknowns) return false;
  for (std::size_t i = 0; i < rank; ++i) {
    if (m[i][unknowns] / m[i][pivot_col[i]] <= 0) return false;
  }
  return true;
}

}  // namespace test_support
