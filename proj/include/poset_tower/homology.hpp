#pragma once

#include "poset_tower/complex.hpp"
#include "poset_tower/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace poset_tower {

/// Sparse integer matrix stored by columns; entries within a column are
/// sorted by row and nonzero.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, long>>> columns;

  long entry(std::size_t r, std::size_t c) const;
};

/// Simplicial chain complex over the integers. boundaries[k] is ∂_{k+1}:
/// rows are k-simplices, columns (k+1)-simplices, both in canonical order.
struct ChainComplexZ {
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> boundaries;
};

/// Signs follow the canonical vertex order: ∂[v0..vk] = Σ (-1)^i [.. v̂i ..].
ChainComplexZ chain_complex(const SimplicialComplex& k);

/// True iff ∂_k ∘ ∂_{k+1} vanishes for every k.
bool boundary_squares_to_zero(const ChainComplexZ& c);

/// Nonzero invariant factors d_1 | d_2 | ... (all positive) of the Smith
/// normal form; their count is the rank.
std::vector<Integer> invariant_factors(const IntMatrix& m);

struct BettiProfile {
  std::vector<std::size_t> betti;
  /// Invariant factors > 1 of H_k, per degree.
  std::vector<std::vector<Integer>> torsion;

  bool operator==(const BettiProfile&) const = default;
};

BettiProfile betti(const SimplicialComplex& k);

/// Reduced homology vanishes in every degree (nonempty, connected, no higher
/// Betti numbers, no torsion).
bool is_acyclic(const SimplicialComplex& k);

/// Σ (-1)^k dims_k.
long euler_characteristic(const ChainComplexZ& c);

}  // namespace poset_tower
