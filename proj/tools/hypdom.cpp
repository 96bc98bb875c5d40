// hypdom: command-line driver for the fundamental-domain search.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hypdom/angles.hpp"
#include "hypdom/enumerate.hpp"
#include "hypdom/errors.hpp"
#include "hypdom/geometry.hpp"
#include "hypdom/grouplab.hpp"
#include "hypdom/pairings.hpp"
#include "hypdom/polytope.hpp"

namespace fs = std::filesystem;
using namespace hypdom;

namespace {

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string group = "all";
  std::string out_dir = "hypdom-out";
  bool json = false;
  Tolerances tol;
  std::size_t circuit_cap = kDefaultCircuitCap;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": invalid JSON: " + e.what());
  }
}

void write_json(const fs::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

bool is_candidate(const Json& doc) { return doc.is_object() && doc.contains("polyhedron") && doc.contains("scheme"); }

std::optional<IdealRealization> try_realization(const AbstractPolyhedron& p, const Tolerances& tol) {
  try {
    return regular_ideal_cube(p, tol.geo);
  } catch (const GeometryError&) {
    return std::nullopt;
  }
}

int cmd_info(const RunConfig& cfg) {
  auto p = polyhedron_from_json(read_json(cfg.inputs.at(0)));
  Json j{{"name", p.name()}, {"vertices", p.vertex_count()}, {"edges", p.edge_count()}, {"faces", p.face_count()}};
  std::string required;
  try {
    int k = required_class_count(p);
    j["edge_classes_required"] = k;
    required = std::to_string(k);
  } catch (const ClassCountError& e) {
    j["edge_classes_required"] = nullptr;
    j["class_count_error"] = e.what();
    required = std::string("none (") + e.what() + ")";
  }
  const bool bound = edge_bound_check(p);
  j["edge_bound_ok"] = bound;
  if (cfg.json) {
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "polyhedron: " << p.name() << '\n'
            << "vertices: " << p.vertex_count() << '\n'
            << "edges: " << p.edge_count() << '\n'
            << "faces: " << p.face_count() << '\n'
            << "edge classes required: " << required << '\n';
  if (!bound)
    std::cout << "warning: edges exceed twice the vertices (" << p.edge_count() << " > " << 2 * p.vertex_count()
              << "); any torsion-free domain here needs commuting generators\n";
  return 0;
}

ClassifyOptions classify_options(const RunConfig& cfg) {
  ClassifyOptions o;
  o.circuit_cap = cfg.circuit_cap;
  return o;
}

void print_summary(const EnumerationReport& r, const std::string& group) {
  std::cout << "schemes examined: " << r.total << '\n';
  for (auto [f, n] : r.rejected) std::cout << "rejected by " << to_string(f) << ": " << n << '\n';
  std::cout << "survivors: " << r.survivors.size() << '\n';
  if (group == "rotations") {
    std::cout << "rotation classes: " << r.by_rotations.size() << '\n';
    for (std::size_t k = 0; k < r.families.size(); ++k)
      for (const auto& key : r.families[k].rotation_keys)
        std::cout << "  family " << k << " rotation class: " << r.by_rotations.at(key).size() << " schemes\n";
  } else {
    std::cout << "families (full symmetry group): " << r.families.size() << '\n';
    for (std::size_t k = 0; k < r.families.size(); ++k)
      std::cout << "  family " << k << ": " << r.families[k].members.size() << " schemes, "
                << r.families[k].rotation_keys.size() << " rotation classes\n";
  }
}

std::string candidate_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "candidate_%03zu.json", i);
  return buf;
}

int cmd_enumerate(const RunConfig& cfg) {
  auto p = polyhedron_from_json(read_json(cfg.inputs.at(0)));
  auto r = classify(p, classify_options(cfg));
  fs::create_directories(cfg.out_dir);
  Json report = report_to_json(p, r);
  report["grouping"] = cfg.group;
  write_json(fs::path(cfg.out_dir) / "report.json", report);
  for (std::size_t i = 0; i < r.survivors.size(); ++i)
    write_json(fs::path(cfg.out_dir) / candidate_name(i), candidate_to_json(p, r.survivors[i]));
  print_summary(r, cfg.group);
  return 0;
}

int cmd_angles(const RunConfig& cfg) {
  auto p = polyhedron_from_json(read_json(cfg.inputs.at(0)));
  auto scheme = scheme_from_json(p, read_json(cfg.inputs.at(1)));
  auto checked = validate_scheme(p, scheme);
  auto orbits = edge_orbits(checked);
  auto classes = orbit_classes(orbits);
  Json words = Json::array();
  for (const auto& w : relator_words(orbits)) words.push_back(w.str());
  Json out{{"classes", classes}, {"words", words}};
  try {
    auto sys = assemble_system(p, classes);
    auto res = feasible(sys, build_dual(p), {cfg.circuit_cap, kDefaultDimensionCap});
    out["rows"] = sys.rows.size();
    out["rank"] = res.solution.rank;
    out["status"] = to_string(res.solution.status);
    if (res.solution.particular) out["particular"] = angles_to_json(*res.solution.particular);
    Json basis = Json::array();
    for (const auto& v : res.solution.null_basis) basis.push_back(angles_to_json(v));
    out["null_basis"] = basis;
    out["feasible"] = res.feasible;
    out["witness"] = res.witness ? angles_to_json(*res.witness) : Json(nullptr);
  } catch (const PartitionError& e) {
    out["feasible"] = false;
    out["reason"] = e.what();
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

Json restrict_candidate(const AbstractPolyhedron& p, const CandidateDomain& c, const Tolerances& tol) {
  std::optional<GroupPresentation> gens;
  if (auto r = try_realization(p, tol)) {
    try {
      gens = face_pairing_maps(p, *r, c.scheme, tol);
    } catch (const GeometryError&) {
    }
  }
  return restriction_to_json(restriction_report(p, c, gens ? &*gens : nullptr, tol));
}

int cmd_restrict(const RunConfig& cfg) {
  auto doc = read_json(cfg.inputs.at(0));
  if (is_candidate(doc)) {
    auto [p, c] = candidate_from_json(doc);
    std::cout << restrict_candidate(p, c, cfg.tol).dump(2) << '\n';
  } else {
    auto p = polyhedron_from_json(doc);
    std::cout << restriction_to_json(restriction_report(p)).dump(2) << '\n';
  }
  return 0;
}

int cmd_realize(const RunConfig& cfg) {
  auto [p, c] = candidate_from_json(read_json(cfg.inputs.at(0)));
  auto r = regular_ideal_cube(p, cfg.tol.geo);
  auto g = face_pairing_maps(p, r, c.scheme, cfg.tol);
  Json out{{"realization", realization_to_json(p, r)}, {"generators", presentation_to_json(g)["generators"]}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  auto [p, c] = candidate_from_json(read_json(cfg.inputs.at(0)));
  auto r = regular_ideal_cube(p, cfg.tol.geo);
  auto v = verify_candidate(p, c, r, cfg.tol);
  Json out{{"status", to_string(v.status)}, {"note", v.note}, {"presentation", presentation_to_json(v.presentation)}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_pipeline(const RunConfig& cfg) {
  auto p = polyhedron_from_json(read_json(cfg.inputs.at(0)));
  fs::create_directories(cfg.out_dir);
  Json report{{"polyhedron", p.name()},
              {"census", {{"vertices", p.vertex_count()}, {"edges", p.edge_count()}, {"faces", p.face_count()}}},
              {"restrictions", restriction_to_json(restriction_report(p))},
              {"grouping", cfg.group}};
  try {
    report["census"]["edge_classes_required"] = required_class_count(p);
  } catch (const ClassCountError& e) {
    report["census"]["edge_classes_required"] = nullptr;
    report["census"]["class_count_error"] = e.what();
  }

  EnumerationReport r;
  try {
    r = classify(p, classify_options(cfg));
  } catch (const ResourceError& e) {
    report["enumeration"] = {{"error", e.what()}};
    write_json(fs::path(cfg.out_dir) / "report.json", report);
    std::cout << "enumeration skipped: " << e.what() << '\n';
    return 0;
  }
  report["enumeration"] = report_to_json(p, r);

  const auto realization = try_realization(p, cfg.tol);
  Json candidates = Json::array();
  std::vector<std::string> status(r.survivors.size());
  for (std::size_t i = 0; i < r.survivors.size(); ++i) {
    const auto& c = r.survivors[i];
    Json entry{{"file", candidate_name(i)}, {"witness", angles_to_json(c.witness)}};
    try {
      entry["restrictions"] = restrict_candidate(p, c, cfg.tol);
    } catch (const Error& e) {
      entry["restrictions"] = {{"error", e.what()}};
    }
    if (!realization) {
      status[i] = "geometric verification out of scope";
    } else {
      try {
        auto v = verify_candidate(p, c, *realization, cfg.tol);
        status[i] = v.status == Verification::out_of_scope ? "geometric verification out of scope" : to_string(v.status);
        entry["relators"] = presentation_to_json(v.presentation)["relators"];
      } catch (const GeometryError& e) {
        status[i] = "NOT_REALIZABLE";
        entry["geometry_error"] = e.what();
      }
    }
    entry["verification"] = status[i];
    candidates.push_back(std::move(entry));
    write_json(fs::path(cfg.out_dir) / candidate_name(i), candidate_to_json(p, c));
  }
  report["candidates"] = candidates;
  for (std::size_t k = 0; k < r.families.size(); ++k) {
    std::map<std::string, int> tally;
    for (auto i : r.families[k].members) ++tally[status[i]];
    report["enumeration"]["families"][k]["verification"] = tally;
  }
  write_json(fs::path(cfg.out_dir) / "report.json", report);
  print_summary(r, cfg.group);
  for (std::size_t k = 0; k < r.families.size(); ++k) {
    std::cout << "  family " << k << " verification:";
    for (auto& [s, n] : report["enumeration"]["families"][k]["verification"].items()) std::cout << ' ' << s << " x" << n;
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Face-pairing search for ideal polyhedral fundamental domains"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--tol-id", cfg.tol.id, "identity tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-geo", cfg.tol.geo, "geometric tolerance")->check(CLI::PositiveNumber);
  app.add_option("--circuit-cap", cfg.circuit_cap, "maximum number of dual circuits")->check(CLI::PositiveNumber);

  auto add = [&](const std::string& name, const std::string& help, int inputs) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", cfg.inputs, "input documents")->required()->expected(inputs);
    sub->callback([&cfg, name] { cfg.command = name; });
    return sub;
  };
  add("info", "counts and required edge classes", 1)->add_flag("--json", cfg.json, "JSON output");
  for (const char* name : {"enumerate", "pipeline"}) {
    auto* sub = add(name, name == std::string("enumerate") ? "search all pairing schemes" : "search, solve, restrict and verify", 1);
    sub->add_option("--group", cfg.group, "grouping for the summary")->check(CLI::IsMember({"rotations", "all"}));
    sub->add_option("--out", cfg.out_dir, "output directory");
  }
  add("angles", "solve the angle system of a scheme", 2);
  add("restrict", "group-theoretic restriction report", 1);
  add("realize", "generators on the regular ideal cube", 1);
  add("verify", "evaluate relators on the regular ideal cube", 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (cfg.command == "info") return cmd_info(cfg);
    if (cfg.command == "enumerate") return cmd_enumerate(cfg);
    if (cfg.command == "angles") return cmd_angles(cfg);
    if (cfg.command == "restrict") return cmd_restrict(cfg);
    if (cfg.command == "realize") return cmd_realize(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "pipeline") return cmd_pipeline(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 3;
}
