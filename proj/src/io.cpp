#include "poset_tower/io.hpp"

#include "poset_tower/error.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace poset_tower {

namespace {

// Runs a reader, mapping nlohmann's type and lookup errors to InvalidInput.
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed ") + what + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::InvalidInput, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

Json labels_json(const SimplicialComplex& k, const Simplex& s) {
  Json out = Json::array();
  for (VertexIndex v : s) out.push_back(k.label(v));
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("invalid JSON: ") + e.what());
  }
}

Json read_json(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_json(text);
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

RawComplex raw_complex_from_json(const Json& j) {
  return guarded("complex", [&] {
    RawComplex raw;
    raw.vertices = field(j, "vertices").get<std::vector<std::string>>();
    raw.simplices = field(j, "simplices").get<std::vector<std::vector<std::string>>>();
    return raw;
  });
}

SimplicialComplex complex_from_json(const Json& j) { return validate_complex(raw_complex_from_json(j)); }

Json complex_to_json(const SimplicialComplex& k) {
  Json out;
  out["vertices"] = k.labels();
  Json simplices = Json::array();
  for (const Simplex& s : k.simplices()) simplices.push_back(labels_json(k, s));
  out["simplices"] = std::move(simplices);
  return out;
}

RationalPoint point_from_json(const SimplicialComplex& k, const Json& j) {
  const Json& coords = field(j, "coords");
  if (!coords.is_object()) throw Error(ErrorKind::InvalidInput, "\"coords\" must be an object");
  std::map<std::string, Rational> weights;
  guarded("point", [&] {
    for (const auto& [label, value] : coords.items()) {
      weights[label] = value.is_number_integer() ? Rational(value.get<long>())
                                                 : parse_rational(value.get<std::string>());
    }
  });
  return RationalPoint::from_labels(k, weights);
}

Json point_to_json(const SimplicialComplex& k, const RationalPoint& p) {
  Json coords = Json::object();
  for (const auto& [v, w] : p.coords()) coords[k.label(v)] = format_rational(w);
  Json out;
  out["coords"] = std::move(coords);
  return out;
}

FinitePoset poset_from_json(const Json& j) {
  return guarded("poset", [&] {
    auto elements = field(j, "elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> leq;
    if (j.contains("leq")) {
      for (const Json& pair : j.at("leq")) {
        if (!pair.is_array() || pair.size() != 2) {
          throw Error(ErrorKind::InvalidInput, "leq entries must be pairs");
        }
        leq.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
      }
    }
    return FinitePoset::from_relation(std::move(elements), leq);
  });
}

Json poset_to_json(const FinitePoset& x) {
  Json out;
  out["elements"] = x.labels();
  Json leq = Json::array();
  for (const auto& [lo, hi] : x.hasse_edges()) leq.push_back(Json::array({x.label(lo), x.label(hi)}));
  out["leq"] = std::move(leq);
  return out;
}

std::string export_dot(const FinitePoset& x) {
  std::ostringstream out;
  out << "digraph hasse {\n";
  for (const std::string& label : x.labels()) out << "  " << dot_quote(label) << ";\n";
  for (const auto& [lo, hi] : x.hasse_edges()) {
    out << "  " << dot_quote(x.label(lo)) << " -> " << dot_quote(x.label(hi)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json subdivided_to_json(const SubdividedComplex& s) {
  Json out;
  out["base"] = complex_to_json(s.base());
  out["stage"] = s.stage();
  out["complex"] = complex_to_json(s.complex());
  Json provenance = Json::array();
  for (int k = 1; k <= s.stage(); ++k) {
    const SimplicialComplex& here = s.complex(k);
    const SimplicialComplex& prev = s.complex(k - 1);
    Json table = Json::object();
    for (VertexIndex v = 0; v < here.num_vertices(); ++v) {
      table[here.label(v)] = labels_json(prev, prev.simplex(s.carrier(k, v)));
    }
    provenance.push_back(std::move(table));
  }
  out["provenance"] = std::move(provenance);
  return out;
}

Json tower_to_json(const Tower& t) {
  Json out;
  out["base"] = complex_to_json(t.base());
  out["depth"] = t.depth();
  Json levels = Json::array();
  for (int n = 1; n <= t.depth(); ++n) {
    const FinitePoset& x = t.poset(n);
    const SimplicialComplex& below = t.stages().complex(n - 1);
    Json level;
    level["level"] = n;
    level["elements"] = x.labels();
    Json hasse = Json::array();
    for (const auto& [lo, hi] : x.hasse_edges()) hasse.push_back(Json::array({x.label(lo), x.label(hi)}));
    level["hasse"] = std::move(hasse);
    Json carriers = Json::object();
    for (ElementIndex e = 0; e < x.size(); ++e) {
      carriers[x.label(e)] = labels_json(below, below.simplex(t.carrier(n, e)));
    }
    level["carriers"] = std::move(carriers);
    levels.push_back(std::move(level));
  }
  out["levels"] = std::move(levels);
  return out;
}

ThreadPrefix thread_from_json(const Tower& t, const Json& j) {
  const auto labels = guarded("thread", [&] { return field(j, "entries").get<std::vector<std::string>>(); });
  return parse_thread(t, labels);
}

Json thread_to_json(const Tower& t, const ThreadPrefix& thread) {
  Json out;
  out["entries"] = thread_labels(t, thread);
  return out;
}

Json decoded_to_json(const Tower& t, const DecodedRegion& region) {
  Json chain = Json::array();
  for (std::size_t i = 0; i < region.chain.size(); ++i) {
    chain.push_back(labels_json(t.stages().complex(static_cast<int>(i)), region.chain[i]));
  }
  Json out;
  out["chain"] = std::move(chain);
  out["representative"] = point_to_json(t.base(), region.representative);
  out["err_sq_bound"] = format_rational(region.err_sq_bound);
  return out;
}

Json betti_to_json(const BettiProfile& profile) {
  Json out;
  out["betti"] = profile.betti;
  Json torsion = Json::array();
  for (const auto& degree : profile.torsion) {
    Json factors = Json::array();
    for (const Integer& f : degree) {
      if (f.fits_slong_p()) {
        factors.push_back(f.get_si());
      } else {
        factors.push_back(f.get_str());
      }
    }
    torsion.push_back(std::move(factors));
  }
  out["torsion"] = std::move(torsion);
  return out;
}

PLMap pl_map_from_json(const Json& j) {
  const Json& source_json = j.contains("source") ? j.at("source") : field(j, "complex");
  const SimplicialComplex source = complex_from_json(source_json);
  auto target = std::make_shared<const SimplicialComplex>(
      j.contains("target") ? complex_from_json(j.at("target")) : source);
  const int stage = guarded("map", [&] { return j.contains("stage") ? j.at("stage").get<int>() : 0; });
  const Json& images = field(j, "images");
  if (!images.is_object()) throw Error(ErrorKind::InvalidInput, "\"images\" must be an object");
  std::map<std::string, RationalPoint> points;
  for (const auto& [label, value] : images.items()) {
    if (value.is_string()) {
      // Shorthand: a vertex of the target.
      points[label] = RationalPoint::at_vertex(target->vertex(value.get<std::string>()));
    } else {
      points[label] = point_from_json(*target, value);
    }
  }
  return make_pl_map(source, stage, target, points);
}

Json pl_map_to_json(const PLMap& h) {
  const SimplicialComplex& k = h.source->complex(h.stage);
  Json images = Json::object();
  for (VertexIndex v = 0; v < k.num_vertices(); ++v) {
    images[k.label(v)] = point_to_json(*h.target, h.vertex_images[v]);
  }
  Json out;
  out["source"] = complex_to_json(h.source->base());
  out["target"] = complex_to_json(*h.target);
  out["stage"] = h.stage;
  out["images"] = std::move(images);
  return out;
}

Json approximation_to_json(const Approximation& a) {
  const SimplicialComplex& k = *a.f.source;
  Json map = Json::object();
  for (VertexIndex v = 0; v < k.num_vertices(); ++v) map[k.label(v)] = a.f.target->label(a.f.vertex_map[v]);
  Json out;
  out["n"] = a.n;
  out["vertex_map"] = std::move(map);
  return out;
}

}  // namespace poset_tower
