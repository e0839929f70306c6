#pragma once

#include "poset_tower/approx.hpp"
#include "poset_tower/complex.hpp"
#include "poset_tower/homology.hpp"
#include "poset_tower/poset.hpp"
#include "poset_tower/subdivision.hpp"
#include "poset_tower/tower.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace poset_tower {

/// Insertion-ordered so that emitted keys follow the documented layout.
using Json = nlohmann::ordered_json;

/// Parses a file, or stdin for "-". Throws InvalidInput.
Json read_json(const std::string& path);
Json parse_json(const std::string& text);
/// Two-space indented, newline terminated.
std::string dump(const Json& j);

RawComplex raw_complex_from_json(const Json& j);
/// Validated; throws whatever validate_complex throws, or InvalidInput.
SimplicialComplex complex_from_json(const Json& j);
/// {"vertices": [...], "simplices": [[...], ...]} in canonical order.
Json complex_to_json(const SimplicialComplex& k);

/// {"coords": {"a": "2/3", ...}}; zero coordinates may be given or omitted.
RationalPoint point_from_json(const SimplicialComplex& k, const Json& j);
Json point_to_json(const SimplicialComplex& k, const RationalPoint& p);

/// {"elements": [...], "leq": [[lo, hi], ...]}; the relation is closed on
/// input and emitted as its Hasse diagram.
FinitePoset poset_from_json(const Json& j);
Json poset_to_json(const FinitePoset& x);
/// Hasse diagram, edges from lower to higher, nodes in canonical order.
std::string export_dot(const FinitePoset& x);

/// The last stage with the per-stage provenance tables.
Json subdivided_to_json(const SubdividedComplex& s);

Json tower_to_json(const Tower& t);

/// {"entries": [...]} with level labels or carrier simplex notation.
ThreadPrefix thread_from_json(const Tower& t, const Json& j);
Json thread_to_json(const Tower& t, const ThreadPrefix& thread);
Json decoded_to_json(const Tower& t, const DecodedRegion& region);

Json betti_to_json(const BettiProfile& profile);

/// {"source": complex, "target": complex, "stage": r, "images": {label: point}}.
/// "target" defaults to the source complex; "complex" is accepted for "source".
PLMap pl_map_from_json(const Json& j);
Json pl_map_to_json(const PLMap& h);

/// {"n": n, "vertex_map": {stage-n label: target label}}.
Json approximation_to_json(const Approximation& a);

}  // namespace poset_tower
