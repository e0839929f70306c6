#pragma once

#include "poset_tower/complex.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace poset_tower {

/// Seeded source of sample points. Only the raw mt19937_64 stream is used
/// (no std distributions), so samples are identical across platforms.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

/// A point in a random maximal simplex with integer weights in
/// [0, max_weight], normalized.
RationalPoint random_point(const SimplicialComplex& k, SampleRng& rng, unsigned max_weight = 12);

std::vector<RationalPoint> random_points(const SimplicialComplex& k, std::size_t count,
                                         std::uint64_t seed);

/// Two distinct points in one common maximal simplex.
std::pair<RationalPoint, RationalPoint> random_pair(const SimplicialComplex& k, SampleRng& rng,
                                                    unsigned max_weight = 12);

}  // namespace poset_tower
