#include "poset_tower/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace poset_tower {

long IntMatrix::entry(std::size_t r, std::size_t c) const {
  for (const auto& [row, value] : columns.at(c)) {
    if (row == r) return value;
  }
  return 0;
}

ChainComplexZ chain_complex(const SimplicialComplex& k) {
  ChainComplexZ c;
  c.dims = k.f_vector();
  std::vector<SimplexId> offset(c.dims.size() + 1, 0);
  for (std::size_t d = 0; d < c.dims.size(); ++d) offset[d + 1] = offset[d] + c.dims[d];

  for (std::size_t d = 1; d < c.dims.size(); ++d) {
    IntMatrix m;
    m.rows = c.dims[d - 1];
    m.cols = c.dims[d];
    m.columns.resize(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) {
      const Simplex& s = k.simplex(offset[d] + j);
      auto& column = m.columns[j];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        face.reserve(s.size() - 1);
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i != drop) face.push_back(s[i]);
        }
        column.emplace_back(k.id_of(face) - offset[d - 1], drop % 2 == 0 ? 1L : -1L);
      }
      std::sort(column.begin(), column.end());
    }
    c.boundaries.push_back(std::move(m));
  }
  return c;
}

bool boundary_squares_to_zero(const ChainComplexZ& c) {
  for (std::size_t k = 0; k + 1 < c.boundaries.size(); ++k) {
    const IntMatrix& lower = c.boundaries[k];
    const IntMatrix& upper = c.boundaries[k + 1];
    for (const auto& column : upper.columns) {
      std::map<std::size_t, long> acc;
      for (const auto& [mid, a] : column) {
        for (const auto& [row, b] : lower.columns[mid]) acc[row] += a * b;
      }
      for (const auto& [row, value] : acc) {
        if (value != 0) return false;
      }
    }
  }
  return true;
}

namespace {

bool is_unit(const Integer& x) { return x == 1 || x == -1; }

// Smith normal form of a small dense matrix; returns the nonzero diagonal.
std::vector<Integer> dense_smith(std::vector<std::vector<Integer>> a) {
  std::vector<Integer> out;
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  auto smallest = [&](std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (sgn(a[i][j]) != 0 && (!found || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
          found = true;
        }
      }
    }
    return found;
  };
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t pr = t, pc = t;
    if (!smallest(t, pr, pc)) break;
    while (true) {
      std::swap(a[t], a[pr]);
      for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (sgn(a[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (sgn(a[t][j]) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot is left in row or column t.
        pr = t;
        pc = t;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (sgn(a[i][t]) != 0 && abs(a[i][t]) < abs(a[pr][pc])) { pr = i; pc = t; }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (sgn(a[t][j]) != 0 && abs(a[t][j]) < abs(a[pr][pc])) { pr = t; pc = j; }
        }
        continue;
      }
      // Enforce divisibility of the remaining block by the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (sgn(a[i][j]) != 0 && !mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            for (std::size_t jj = t; jj < n; ++jj) a[t][jj] += a[i][jj];
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
      pr = t;
      pc = t;
    }
    out.push_back(abs(a[t][t]));
  }
  return out;
}

}  // namespace

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  // Sparse phase: eliminate unit pivots with column operations. Once the
  // pivot row holds only the pivot, clearing its column by row operations
  // touches nothing else, so row and column are simply dropped.
  std::vector<std::map<std::size_t, Integer>> cols(m.cols);
  std::vector<std::set<std::size_t>> rows(m.rows);
  for (std::size_t c = 0; c < m.cols; ++c) {
    for (const auto& [r, v] : m.columns[c]) {
      if (v == 0) continue;
      cols[c].emplace(r, Integer(v));
      rows[r].insert(c);
    }
  }
  std::size_t units = 0;
  std::vector<bool> alive(m.cols, true);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (!alive[c] || cols[c].empty()) continue;
      std::size_t pivot_row = m.rows;
      for (const auto& [r, v] : cols[c]) {
        if (is_unit(v) && (pivot_row == m.rows || rows[r].size() < rows[pivot_row].size())) {
          pivot_row = r;
        }
      }
      if (pivot_row == m.rows) continue;
      const Integer pivot = cols[c][pivot_row];
      const std::vector<std::size_t> others(rows[pivot_row].begin(), rows[pivot_row].end());
      for (std::size_t other : others) {
        if (other == c) continue;
        const Integer factor = cols[other][pivot_row] * pivot;
        for (const auto& [r, v] : cols[c]) {
          Integer updated = cols[other].count(r) ? Integer(cols[other][r] - factor * v)
                                                  : Integer(-factor * v);
          if (sgn(updated) == 0) {
            cols[other].erase(r);
            rows[r].erase(other);
          } else {
            cols[other][r] = updated;
            rows[r].insert(other);
          }
        }
      }
      for (const auto& [r, v] : cols[c]) rows[r].erase(c);
      cols[c].clear();
      alive[c] = false;
      ++units;
      progress = true;
    }
  }

  std::vector<std::size_t> rest_cols, rest_rows;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (alive[c] && !cols[c].empty()) rest_cols.push_back(c);
  }
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (!rows[r].empty()) rest_rows.push_back(r);
  }
  std::vector<std::vector<Integer>> dense(rest_rows.size(),
                                          std::vector<Integer>(rest_cols.size(), Integer(0)));
  for (std::size_t j = 0; j < rest_cols.size(); ++j) {
    for (const auto& [r, v] : cols[rest_cols[j]]) {
      const auto i = std::lower_bound(rest_rows.begin(), rest_rows.end(), r) - rest_rows.begin();
      dense[static_cast<std::size_t>(i)][j] = v;
    }
  }
  std::vector<Integer> out(units, Integer(1));
  for (Integer& d : dense_smith(std::move(dense))) out.push_back(std::move(d));
  std::sort(out.begin(), out.end());
  return out;
}

BettiProfile betti(const SimplicialComplex& k) {
  const ChainComplexZ c = chain_complex(k);
  const std::size_t top = c.dims.size();
  std::vector<std::vector<Integer>> factors(top);
  // factors[d] belongs to ∂_d (d >= 1).
  for (std::size_t d = 1; d < top; ++d) factors[d] = invariant_factors(c.boundaries[d - 1]);

  BettiProfile profile;
  profile.betti.resize(top);
  profile.torsion.resize(top);
  for (std::size_t d = 0; d < top; ++d) {
    const std::size_t rank_out = d >= 1 ? factors[d].size() : 0;
    const std::size_t rank_in = d + 1 < top ? factors[d + 1].size() : 0;
    profile.betti[d] = c.dims[d] - rank_out - rank_in;
    if (d + 1 < top) {
      for (const Integer& f : factors[d + 1]) {
        if (f > 1) profile.torsion[d].push_back(f);
      }
    }
  }
  return profile;
}

bool is_acyclic(const SimplicialComplex& k) {
  if (k.empty()) return false;
  const BettiProfile p = betti(k);
  for (std::size_t d = 0; d < p.betti.size(); ++d) {
    if (p.betti[d] != (d == 0 ? 1u : 0u) || !p.torsion[d].empty()) return false;
  }
  return true;
}

long euler_characteristic(const ChainComplexZ& c) {
  long total = 0;
  for (std::size_t d = 0; d < c.dims.size(); ++d) {
    total += (d % 2 == 0 ? 1 : -1) * static_cast<long>(c.dims[d]);
  }
  return total;
}

}  // namespace poset_tower
