#include "poset_tower/approx.hpp"
#include "poset_tower/error.hpp"
#include "poset_tower/homology.hpp"
#include "poset_tower/io.hpp"
#include "poset_tower/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>

using namespace poset_tower;

namespace {

std::size_t max_simplices_from_env() {
  const char* raw = std::getenv("POSET_TOWER_MAX_SIMPLICES");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0') throw Error(ErrorKind::InvalidInput, "POSET_TOWER_MAX_SIMPLICES must be an integer");
  return static_cast<std::size_t>(value);
}

std::shared_ptr<const SimplicialComplex> load_complex(const std::string& path) {
  return std::make_shared<const SimplicialComplex>(complex_from_json(read_json(path)));
}

struct Options {
  std::string input = "-";
  std::string complex_path;
  std::string point, p, q, thread, map;
  std::string format = "json";
  std::string suite = "all";
  int stage = 1;
  int depth = 2;
  int level = 0;
  int cap = 4;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
};

const std::string& complex_input(const Options& o) { return o.complex_path.empty() ? o.input : o.complex_path; }

int emit(const Json& j) {
  std::cout << dump(j);
  return 0;
}

int emit_poset(const FinitePoset& x, const Options& o) {
  if (o.format == "dot") {
    std::cout << export_dot(x);
    return 0;
  }
  return emit(poset_to_json(x));
}

int run_verify(const Options& o) {
  SuiteConfig cfg;
  cfg.complex = load_complex(complex_input(o));
  cfg.depth = o.depth;
  cfg.seed = o.seed;
  cfg.max_simplices = max_simplices_from_env();
  cfg.samples = o.samples;
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = suite_names();
  } else {
    suites.push_back(o.suite);
  }
  Json reports = Json::array();
  int status = 0;
  for (const std::string& s : suites) {
    cfg.suite = s;
    const VerificationReport report = verify_suite(cfg);
    status = std::max(status, report.exit_status());
    reports.push_back(report_to_json(report));
  }
  std::cout << dump(suites.size() == 1 ? reports.front() : reports);
  return status;
}

int run_approx(const Options& o) {
  const PLMap h = pl_map_from_json(read_json(o.map));
  const Approximation a = approximate(h, o.cap);
  VerificationReport report;
  report.suite = "approx";
  report.checks.push_back({"f is simplicial", validate_simplicial(a.f), ""});
  const std::vector<RationalPoint> samples = standard_samples(*a.stages, a.n);
  report.checks.push_back({"h and |f| share a closed simplex at every sample",
                           carrier_homotopy_check(h, *a.stages, a.f, samples),
                           std::to_string(samples.size()) + " samples"});
  Json out = approximation_to_json(a);
  out["report"] = report_to_json(report);
  std::cout << dump(out);
  return report.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite poset towers over simplicial complexes"};
  app.require_subcommand(1);
  Options o;

  auto* complex_cmd = app.add_subcommand("complex", "Validate or subdivide a complex");
  complex_cmd->require_subcommand(1);
  auto* validate_cmd = complex_cmd->add_subcommand("validate", "Check a complex and print it canonically");
  validate_cmd->add_option("file", o.input, "Complex JSON, - for stdin");
  auto* subdivide_cmd = complex_cmd->add_subcommand("subdivide", "Iterated barycentric subdivision");
  subdivide_cmd->add_option("file", o.input, "Complex JSON, - for stdin");
  subdivide_cmd->add_option("--stage", o.stage, "Number of subdivisions")->check(CLI::NonNegativeNumber);

  auto* poset_cmd = app.add_subcommand("poset", "Finite posets");
  poset_cmd->require_subcommand(1);
  auto* core_cmd = poset_cmd->add_subcommand("core", "Stong core of a poset");
  auto* oc_cmd = poset_cmd->add_subcommand("order-complex", "Order complex of a poset");
  auto* fp_cmd = poset_cmd->add_subcommand("face-poset", "Face poset of a complex");
  auto* dot_cmd = poset_cmd->add_subcommand("dot", "Hasse diagram as DOT");
  for (auto* c : {core_cmd, oc_cmd, fp_cmd, dot_cmd}) c->add_option("file", o.input, "Input JSON, - for stdin");
  for (auto* c : {core_cmd, fp_cmd}) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  }

  auto* tower_cmd = app.add_subcommand("tower", "Poset towers");
  tower_cmd->require_subcommand(1);
  auto* build_cmd = tower_cmd->add_subcommand("build", "Build X_1..X_N");
  auto* encode_cmd = tower_cmd->add_subcommand("encode", "Thread prefix of a point");
  auto* decode_cmd = tower_cmd->add_subcommand("decode", "Region and error bound of a thread");
  auto* tvalidate_cmd = tower_cmd->add_subcommand("validate", "Check thread coherence (exit 0/1)");
  auto* separate_cmd = tower_cmd->add_subcommand("separate", "First level separating two points");
  auto* verify_cmd = tower_cmd->add_subcommand("verify", "Run a verification suite");
  for (auto* c : {build_cmd, encode_cmd, decode_cmd, tvalidate_cmd, separate_cmd, verify_cmd}) {
    c->add_option("file", o.input, "Complex JSON, - for stdin");
    c->add_option("--complex", o.complex_path, "Complex JSON (alternative to the positional file)");
  }
  for (auto* c : {build_cmd, encode_cmd, separate_cmd, verify_cmd}) {
    c->add_option("--depth", o.depth, "Tower depth")->check(CLI::PositiveNumber);
  }
  build_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  build_cmd->add_option("--level", o.level, "Level for DOT output (default: deepest)");
  encode_cmd->add_option("--point", o.point, "Point JSON")->required();
  decode_cmd->add_option("--thread", o.thread, "Thread JSON")->required();
  tvalidate_cmd->add_option("--thread", o.thread, "Thread JSON")->required();
  separate_cmd->add_option("--p", o.p, "First point JSON")->required();
  separate_cmd->add_option("--q", o.q, "Second point JSON")->required();
  verify_cmd->add_option("--suite", o.suite, "Suite name, or all");
  verify_cmd->add_option("--seed", o.seed, "Sampling seed");
  verify_cmd->add_option("--samples", o.samples, "Random samples per sampling check");

  auto* homology_cmd = app.add_subcommand("homology", "Integral homology of a complex");
  homology_cmd->add_option("file", o.input, "Complex JSON, - for stdin");

  auto* approx_cmd = app.add_subcommand("approx", "Simplicial approximation of a PL map");
  approx_cmd->add_option("--map", o.map, "PL map JSON")->required();
  approx_cmd->add_option("--cap", o.cap, "Largest subdivision stage searched")->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    const std::size_t cap = max_simplices_from_env();
    if (validate_cmd->parsed()) return emit(complex_to_json(*load_complex(o.input)));
    if (subdivide_cmd->parsed()) return emit(subdivided_to_json(subdivide(*load_complex(o.input), o.stage, cap)));

    if (core_cmd->parsed()) return emit_poset(core(poset_from_json(read_json(o.input))), o);
    if (oc_cmd->parsed()) return emit(complex_to_json(order_complex(poset_from_json(read_json(o.input)))));
    if (fp_cmd->parsed()) return emit_poset(face_poset(*load_complex(o.input)), o);
    if (dot_cmd->parsed()) {
      std::cout << export_dot(poset_from_json(read_json(o.input)));
      return 0;
    }

    if (verify_cmd->parsed()) return run_verify(o);
    if (build_cmd->parsed()) {
      const Tower t(*load_complex(complex_input(o)), o.depth, cap);
      if (o.format == "dot") {
        std::cout << export_dot(t.poset(o.level == 0 ? t.depth() : o.level));
        return 0;
      }
      return emit(tower_to_json(t));
    }
    if (encode_cmd->parsed()) {
      const auto k = load_complex(complex_input(o));
      const Tower t(*k, o.depth, cap);
      return emit(thread_to_json(t, encode_thread(t, point_from_json(*k, read_json(o.point)), o.depth)));
    }
    if (decode_cmd->parsed() || tvalidate_cmd->parsed()) {
      const auto k = load_complex(complex_input(o));
      const Json thread_json = read_json(o.thread);
      const std::size_t length = thread_json.contains("entries") ? thread_json.at("entries").size() : 0;
      const Tower t(*k, std::max<int>(1, static_cast<int>(length)), cap);
      const ThreadPrefix thread = thread_from_json(t, thread_json);
      if (tvalidate_cmd->parsed()) {
        const bool ok = validate_thread(t, thread);
        Json out;
        out["valid"] = ok;
        std::cout << dump(out);
        return ok ? 0 : 1;
      }
      return emit(decoded_to_json(t, decode_thread(t, thread)));
    }
    if (separate_cmd->parsed()) {
      const auto k = load_complex(complex_input(o));
      const Tower t(*k, o.depth, cap);
      Json out;
      out["stage"] = separation_stage(t, point_from_json(*k, read_json(o.p)), point_from_json(*k, read_json(o.q)));
      return emit(out);
    }

    if (homology_cmd->parsed()) return emit(betti_to_json(betti(*load_complex(o.input))));
    if (approx_cmd->parsed()) return run_approx(o);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  }
  return 0;
}
