#pragma once

#include "poset_tower/complex.hpp"
#include "poset_tower/simplicial_map.hpp"
#include "poset_tower/tower.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace poset_tower {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;

  int exit_status() const;
};

/// {"suite": ..., "checks": [{"name", "status", "detail"}], "exit_status": 0|1}.
nlohmann::ordered_json report_to_json(const VerificationReport& report);

struct SuiteConfig {
  std::string suite;
  std::shared_ptr<const SimplicialComplex> complex;
  int depth = 2;
  std::uint64_t seed = 0;
  std::size_t max_simplices = 0;
  /// Random points (or pairs, or open families) drawn by sampling checks.
  std::size_t samples = 100;
};

/// Suite names in reporting order.
const std::vector<std::string>& suite_names();

/// Resolves a suite name or one of its aliases; throws UnknownSuite.
std::string canonical_suite_name(std::string_view name);

/// Largest depth verify_suite accepts for `k`: 4 up to dimension 1,
/// 3 in dimension 2, 2 beyond.
int depth_guard(const SimplicialComplex& k);

/// Throws UnknownSuite, DepthTooLarge, or LevelOutOfRange for depth < 1.
VerificationReport verify_suite(const SuiteConfig& config);

/// Simplicial maps exercised by the naturality suite: identity, the cyclic
/// vertex shift and the order reversal when they are simplicial, a constant
/// map, and the collapse K_1 -> K sending bary(σ) to the least vertex of σ
/// when that collapse is rigid (only up to dimension 1).
struct NamedMap {
  std::string name;
  SimplicialMap map;
};
std::vector<NamedMap> fixture_maps(std::shared_ptr<const SimplicialComplex> k);

/// The thread of depth n ending at element x of level n.
ThreadPrefix thread_through(const Tower& t, int n, ElementIndex x);

/// Calls `visit` on every coface-closed family of simplices of `k` (the empty
/// family included) until `budget` families have been produced. Returns
/// false when the budget ran out before the enumeration finished.
bool for_each_open_family(const SimplicialComplex& k, std::size_t budget,
                          const std::function<void(const std::vector<SimplexId>&)>& visit);

}  // namespace poset_tower
