// Acceptance run: one PASS/FAIL line per criterion, followed by the measured
// quantities behind the verdict. Exits 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "hypdom/grouplab.hpp"

using namespace hypdom;
using namespace fixtures;

namespace {

// Pinned tolerances and budgets.
constexpr double kMatrixTol = 1e-9;     // generator and relator residuals
constexpr double kGeoTol = 1e-9;        // planarity and cross-ratio residuals
constexpr double kTableBudget = 1.0;    // seconds
constexpr double kSearchBudget = 60.0;  // seconds
constexpr int kCrossRatioRuns = 100;
constexpr unsigned kCrossRatioSeed = 42;
constexpr unsigned kSamplingSeed = 17;
constexpr int kSamplesPerSystem = 3000;
constexpr std::size_t kMaxFreeVariables = 4;

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void note(const std::string& s) { lines.push_back(s); }
  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

template <class Range>
std::string join(const Range& r, const char* sep = ", ") {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : r) {
    out << (first ? "" : sep) << x;
    first = false;
  }
  return out.str();
}

std::string angles_text(const AngleAssignment& q) {
  std::vector<std::string> parts;
  for (const auto& x : q) parts.push_back(to_string(x));
  return "[" + join(parts, " ") + "]";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::size_t> sorted_sizes(const std::vector<EdgeOrbit>& orbits) {
  std::vector<std::size_t> out;
  for (const auto& o : orbits) out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

Outcome platonic_table() {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  const std::vector<int> expected{1, 2, 3, 5, 9};
  std::vector<int> got;
  for (const auto& name : platonic_names()) got.push_back(required_class_count(solid(name)));
  double t = seconds_since(t0);
  for (std::size_t i = 0; i < expected.size(); ++i)
    out.require(got[i] == expected[i], platonic_names()[i] + ": " + std::to_string(got[i]) + " (expected " +
                                           std::to_string(expected[i]) + ")");
  out.require(t < kTableBudget, "runtime " + fmt(t) + " s < " + fmt(kTableBudget) + " s");
  return out;
}

Outcome cube_classification() {
  Outcome out;
  auto cube = solid("cube");
  auto t0 = std::chrono::steady_clock::now();
  auto r = classify(cube);
  double t = seconds_since(t0);
  out.note("schemes " + std::to_string(r.total) + ", survivors " + std::to_string(r.survivors.size()));
  auto group = symmetry_group(cube);
  auto key_of = [&](const char* name) {
    return canonicalize(validate_scheme(cube, bundled_scheme(cube, name)), group, SymmetryChoice::all);
  };
  const auto fd1 = key_of("fd1"), fd2 = key_of("fd2");
  std::optional<std::size_t> fd1_rot, fd2_rot, five_seven_rot;
  for (std::size_t k = 0; k < r.families.size(); ++k) {
    const auto& fam = r.families[k];
    auto sizes = sorted_sizes(r.survivors[fam.members.front()].orbits);
    std::string tag;
    if (fam.key_all == fd1) {
      tag = " = quarter-twist family";
      fd1_rot = fam.rotation_keys.size();
    } else if (fam.key_all == fd2) {
      tag = " = mixed adjacent family";
      fd2_rot = fam.rotation_keys.size();
    } else {
      tag = " (matches no bundled scheme)";
    }
    if (sizes == std::vector<std::size_t>{5, 7}) five_seven_rot = fam.rotation_keys.size();
    out.note("family " + std::to_string(k) + ": " + std::to_string(fam.members.size()) + " schemes, " +
             std::to_string(fam.rotation_keys.size()) + " rotation classes, class sizes {" + join(sizes) + "}" + tag);
  }
  out.require(r.families.size() == 3, "families under the full group: " + std::to_string(r.families.size()) + " == 3");
  out.require(fd1_rot.has_value(), "quarter-twist scheme (FD(1)) is a family");
  out.require(fd1_rot == std::size_t{2}, "FD(1) family splits into 2 rotation classes");
  out.require(fd2_rot.has_value(), "mixed scheme (FD(2)) is a family");
  out.require(five_seven_rot.has_value(), "a family with class sizes {5,7} (FD(3)) exists");
  out.require(five_seven_rot == std::size_t{2}, "FD(3) family splits into 2 rotation classes");
  // Where the {5,7} schemes went.
  const auto nf = non_facial_circuits(build_dual(cube));
  std::map<std::string, std::size_t> fate;
  for (const auto& s : enumerate_schemes(cube)) {
    SchemeEvaluation ev(cube, s, nf);
    if (!ev.passes(Filter::validity)) continue;
    if (sorted_sizes(ev.orbits()) != std::vector<std::size_t>{5, 7}) continue;
    auto why = ev.first_rejection(default_filter_order());
    ++fate[why ? to_string(*why) : "survivor"];
  }
  for (const auto& [why, n] : fate) out.note("valid schemes with sizes {5,7}: " + std::to_string(n) + " -> " + why);
  out.require(t < kSearchBudget, "runtime " + fmt(t) + " s < " + fmt(kSearchBudget) + " s");
  return out;
}

Outcome uniqueness() {
  Outcome out;
  auto cube = solid("cube");
  auto orbits = edge_orbits(validate_scheme(cube, bundled_scheme(cube, "fd1")));
  auto classes = orbit_classes(orbits);
  out.note(std::string("FD(1) classes match the drawn 6-6 partition: ") +
           (as_partition(classes) == as_partition(twelve_six_six(cube)) ? "yes" : "no"));
  auto sys = assemble_system(cube, classes);
  auto sol = solve_exact(sys);
  const auto two_thirds = constant_angles(cube, Rational(2, 3));
  out.note("status " + std::string(to_string(sol.status)) + ", rank " + std::to_string(sol.rank) + " of " +
           std::to_string(sys.variables) + " unknowns, " + std::to_string(sol.null_basis.size()) + " free");
  out.require(satisfies_rows(sys, two_thirds), "q = 2/3 on every edge solves the system");
  out.require(sol.rank == 12, "rank " + std::to_string(sol.rank) + " == 12");
  out.require(sol.status == SolutionStatus::unique, "solution is unique");
  if (sol.status == SolutionStatus::unique && sol.particular)
    out.require(*sol.particular == two_thirds, "unique solution is 2/3 everywhere");
  // An explicit second admissible solution when the set is larger.
  const auto nf = non_facial_circuits(build_dual(cube));
  for (const auto& dir : sol.null_basis) {
    for (int k : {10, 20, 50, 100}) {
      AngleAssignment q = two_thirds;
      for (std::size_t e = 0; e < q.size(); ++e) q[e] += dir[e] / k;
      if (q == two_thirds || !satisfies_rows(sys, q) || !check_inequalities(nf, q).pass) continue;
      out.note("another solution satisfying every row and strict inequality: " + angles_text(q));
      return out;
    }
  }
  return out;
}

Outcome five_seven_angles_check() {
  Outcome out;
  auto cube = solid("cube");
  auto classes = five_seven(cube);
  auto q = five_seven_angles(cube);
  auto sys = assemble_system(cube, classes);
  std::size_t vertex_rows = 0;
  bool vertices_ok = true;
  for (const auto& row : sys.rows) {
    if (row.provenance.rfind("vertex:", 0) != 0) continue;
    ++vertex_rows;
    Rational s = 0;
    for (std::size_t e = 0; e < q.size(); ++e) s += row.coeffs[e] * q[e];
    vertices_ok = vertices_ok && s == row.rhs;
  }
  out.require(vertex_rows == 8 && vertices_ok, "all 8 vertex rows sum to 2");
  std::vector<Rational> sums;
  for (const auto& c : classes) {
    Rational s = 0;
    for (int e : c) s += q[static_cast<std::size_t>(e)];
    sums.push_back(s);
  }
  out.require(sums[0] == 3, "green class (5 edges) sums to " + to_string(sums[0]) + " == 3");
  out.require(sums[1] == 5, "yellow class (7 edges) sums to " + to_string(sums[1]) + " == 5");
  out.require(satisfies_rows(sys, q), "every assembled row holds exactly");
  auto ineq = check_inequalities(non_facial_circuits(build_dual(cube)), q);
  out.require(ineq.pass, "0 < q < 1 and every non-facial circuit sums above 2 (minimum " +
                             (ineq.min_circuit_sum ? to_string(*ineq.min_circuit_sum) : std::string("n/a")) + ")");
  return out;
}

Outcome generator_reproduction() {
  Outcome out;
  auto cube = solid("cube");
  auto g = face_pairing_maps(cube, regular_ideal_cube(cube), bundled_scheme(cube, "fd1"));
  const std::map<std::string, MobiusMap> expected{{"A", published::A()}, {"B", published::B()}, {"C", published::C()}};
  for (const auto& [name, m] : expected) {
    double r = projective_distance(g.generators.at(name), m);
    out.require(r <= kMatrixTol, name + ": residual " + fmt(r) + " <= " + fmt(kMatrixTol));
  }
  return out;
}

Outcome relator_identity() {
  Outcome out;
  auto cube = solid("cube");
  auto words_of = [&](const char* name) {
    return relator_words(edge_orbits(validate_scheme(cube, bundled_scheme(cube, name))));
  };
  GroupPresentation abc{{{"A", published::A()}, {"B", published::B()}, {"C", published::C()}}, {}, {}};
  GroupPresentation pqr{{{"P", published::P()}, {"Q", published::Q()}, {"R", published::R()}}, {}, {}};
  auto check_all = [&](const char* label, const GroupPresentation& g, const std::vector<RelatorWord>& ws) {
    out.require(ws.size() == 2, std::string(label) + ": " + std::to_string(ws.size()) + " relators");
    for (const auto& w : ws) {
      double r = identity_residual(relator_product(g, w));
      out.require(r <= kMatrixTol, std::string(label) + " " + w.str() + ": residual " + fmt(r));
    }
  };
  auto matches = [&](const char* label, const std::vector<RelatorWord>& ws, std::vector<const char*> published) {
    bool all = ws.size() == published.size();
    for (const char* text : published)
      all = all && std::any_of(ws.begin(), ws.end(),
                               [&](const RelatorWord& w) { return words_equivalent(w, parse_word(text), false); });
    out.require(all, std::string(label) + " traversal words equal the published relators up to rotation and inversion");
  };
  auto fd1 = words_of("fd1");
  auto fd2 = words_of("fd2");
  matches("FD(1)", fd1, {"A B C^-1 A^-1 B C", "A B^-1 C A^-1 B^-1 C^-1"});
  matches("FD(2)", fd2, {"P R^-1 R^-1 P Q^-1 Q^-1", "P Q R^-1 P^-1 Q^-1 R"});
  check_all("FD(1)", abc, fd1);
  check_all("FD(2)", pqr, fd2);
  // Mirror: the mirror traversal reads every FD(1) relator with each letter
  // inverted, so the inverse generators satisfy it.
  auto mirror = words_of("fd1_mirror");
  std::vector<RelatorWord> flipped;
  for (const auto& w : fd1) {
    RelatorWord f;
    for (const auto& l : w.letters) f.letters.push_back(l.inverted());
    flipped.push_back(f);
  }
  bool same = mirror.size() == flipped.size();
  for (const auto& w : mirror)
    same = same && std::any_of(flipped.begin(), flipped.end(),
                               [&](const RelatorWord& f) { return words_equivalent(w, f, false); });
  out.require(same, "mirror words are the FD(1) words with every letter inverted");
  GroupPresentation inv{{{"A", published::A().inverse()}, {"B", published::B().inverse()}, {"C", published::C().inverse()}},
                        {},
                        {}};
  for (const auto& w : mirror) {
    double r = identity_residual(relator_product(inv, w));
    out.require(r <= kMatrixTol, "mirror " + w.str() + " with A^-1, B^-1, C^-1: residual " + fmt(r));
  }
  return out;
}

Outcome section_six() {
  Outcome out;
  auto cube = solid("cube");
  auto t0 = std::chrono::steady_clock::now();
  std::size_t population = 0, valid = 0;
  std::size_t sq_only = 0, adj_only = 0, both = 0;
  std::size_t size3_not_y2z = 0, y2z_not_size3 = 0, size3_and_y2z = 0;
  std::string example;
  for (const auto& s : enumerate_schemes(cube)) {
    auto checked = validate_scheme(cube, s);
    ++valid;
    if (!detect_elliptic_generator(checked).empty()) continue;
    ++population;
    auto orbits = edge_orbits(checked);
    auto ws = relator_words(orbits);
    bool sq = has_squared_term(ws).found;
    bool adj = adjacent_identified_sharing_edge(checked);
    sq_only += sq && !adj;
    adj_only += adj && !sq;
    both += sq && adj;
    auto v = y2z_class_link(orbits, ws);
    size3_not_y2z += v.has_size3_class && !v.has_y2z_word;
    y2z_not_size3 += v.has_y2z_word && !v.has_size3_class;
    size3_and_y2z += v.has_size3_class && v.has_y2z_word;
    if (example.empty() && v.has_size3_class && !v.has_y2z_word)
      for (std::size_t i : v.size3_orbits)
        if (!is_y2z_word(ws[i])) example = ws[i].str();
  }
  double t = seconds_since(t0);
  out.note("population: " + std::to_string(population) + " valid schemes without an elliptic generator (of " +
           std::to_string(valid) + " valid)");
  out.note("squared term and adjacent pair sharing an edge together: " + std::to_string(both));
  out.require(sq_only + adj_only == 0, "squared term <=> adjacent faces sharing an edge: " +
                                           std::to_string(sq_only) + " + " + std::to_string(adj_only) +
                                           " counterexamples");
  out.note("size-3 orbit with a Y^2 Z word: " + std::to_string(size3_and_y2z));
  out.require(y2z_not_size3 == 0, "Y^2 Z word => size-3 orbit: " + std::to_string(y2z_not_size3) + " counterexamples");
  out.require(size3_not_y2z == 0, "size-3 orbit => Y^2 Z word: " + std::to_string(size3_not_y2z) +
                                      " counterexamples" + (example.empty() ? "" : " (e.g. " + example + ")"));
  out.require(t < kSearchBudget, "runtime " + fmt(t) + " s < " + fmt(kSearchBudget) + " s");
  return out;
}

Outcome edge_bound() {
  Outcome out;
  auto ico = solid("icosahedron");
  out.note("E = " + std::to_string(ico.edge_count()) + ", 2V = " + std::to_string(2 * ico.vertex_count()));
  out.require(ico.edge_count() == 30 && ico.vertex_count() == 12, "icosahedron has 30 edges and 12 vertices");
  out.require(!edge_bound_check(ico), "edge_bound_check(icosahedron) == false");
  return out;
}

Outcome property_suites() {
  Outcome out;
  {
    bool ok = true;
    for (const auto& name : platonic_names()) {
      auto p = solid(name);
      auto d = dual_polyhedron(p);
      ok = ok && p.vertex_count() - p.edge_count() + p.face_count() == 2;
      ok = ok && d.vertex_count() - d.edge_count() + d.face_count() == 2;
    }
    out.require(ok, "Euler identity on the five solids and their duals");
  }
  auto cube = solid("cube");
  {
    std::size_t schemes = 0, bad_partition = 0, census_checked = 0, bad_census = 0;
    for (const auto& s : enumerate_schemes(cube)) {
      ++schemes;
      auto checked = validate_scheme(cube, s);
      auto orbits = edge_orbits(checked);
      std::size_t total = 0;
      for (const auto& o : orbits) total += o.size();
      if (total != 12 || as_partition(orbit_classes(orbits)) != as_partition(glued_edge_components(cube, s)))
        ++bad_partition;
      auto c = quotient_census(checked, orbits);
      if (c.E != required_class_count(cube)) continue;
      ++census_checked;
      bad_census += c.V == c.q && c.V - c.E + c.F - c.P == c.q ? 0 : 1;
    }
    out.require(bad_partition == 0, "orbit partition on all " + std::to_string(schemes) +
                                        " cube schemes (union-find oracle): " + std::to_string(bad_partition) +
                                        " mismatches");
    out.require(census_checked > 0 && bad_census == 0, "V = q on all " + std::to_string(census_checked) +
                                                          " schemes with the required class count: " +
                                                          std::to_string(bad_census) + " violations");
  }
  {
    std::mt19937 rng(kCrossRatioSeed);
    std::uniform_real_distribution<double> u(-3, 3);
    double worst = 0;
    int runs = 0;
    while (runs < kCrossRatioRuns) {
      Complex a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng));
      if (std::abs(a) < 0.3) continue;
      MobiusMap m(a, b, c, (1.0 + b * c) / a);
      Complex z(u(rng), u(rng)), p1(u(rng), u(rng)), p2(u(rng), u(rng)), p3(u(rng), u(rng));
      if (std::abs(p1 - p2) < 0.1 || std::abs(p1 - p3) < 0.1 || std::abs(p2 - p3) < 0.1 || std::abs(z - p3) < 0.1)
        continue;
      std::array<ExtendedComplex, 4> img{m(z), m(p1), m(p2), m(p3)};
      if (std::any_of(img.begin(), img.end(), [](const ExtendedComplex& w) { return w.is_infinite(); })) continue;
      auto before = cross_ratio(z, p1, p2, p3).value();
      auto after = cross_ratio(img[0], img[1], img[2], img[3]).value();
      worst = std::max(worst, std::abs(after - before) / std::max(1.0, std::abs(before)));
      ++runs;
    }
    out.require(worst <= kGeoTol, "cross-ratio invariance over " + std::to_string(kCrossRatioRuns) +
                                      " seeded maps: worst residual " + fmt(worst));
  }
  {
    // Inversion in the sphere of radius 2 about the north pole (0, 0, 2).
    double worst = 0;
    bool mapped = true;
    for (const auto& v : inscribed_cube_vertices()) {
      double dx = v.x, dy = v.y, dz = v.z - 2;
      double r2 = dx * dx + dy * dy + dz * dz;
      worst = std::max(worst, std::abs(2 + 4 * dz / r2));
      try {
        ball_to_uhs(v, kGeoTol);
      } catch (const std::exception&) {
        mapped = false;
      }
    }
    out.require(mapped && worst <= kGeoTol && inscribed_cube_vertices().size() == 8,
                "ball to half-space planarity of the 8 cube vertices: worst offset " + fmt(worst));
  }
  {
    const auto nf = non_facial_circuits(build_dual(cube));
    std::mt19937 rng(kSamplingSeed);
    std::uniform_int_distribution<int> num(-48, 48);
    std::size_t compared = 0, disagreements = 0, sampled = 0;
    for (const auto& s : enumerate_schemes(cube)) {
      auto classes = orbit_classes(edge_orbits(validate_scheme(cube, s)));
      if (static_cast<int>(classes.size()) != required_class_count(cube)) continue;
      if (std::any_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() < 3; })) continue;
      auto sys = assemble_system(cube, classes);
      auto res = feasible(sys, nf);
      if (res.solution.status == SolutionStatus::infeasible || res.solution.null_basis.size() > kMaxFreeVariables)
        continue;
      ++compared;
      bool hit = false;
      for (int trial = 0; trial < kSamplesPerSystem && !hit; ++trial) {
        AngleAssignment q = *res.solution.particular;
        for (const auto& dir : res.solution.null_basis) {
          Rational t(num(rng), 24);
          for (std::size_t e = 0; e < q.size(); ++e) q[e] += t * dir[e];
        }
        hit = check_inequalities(nf, q).pass;
      }
      sampled += hit;
      bool witness_ok = !res.feasible || (res.witness && satisfies_rows(sys, *res.witness) &&
                                          check_inequalities(nf, *res.witness).pass);
      if ((hit && !res.feasible) || !witness_ok) ++disagreements;
    }
    out.require(compared > 0 && disagreements == 0,
                "Fourier-Motzkin vs seeded sampling on " + std::to_string(compared) + " cube systems (<= " +
                    std::to_string(kMaxFreeVariables) + " free, " + std::to_string(sampled) +
                    " with a sampled point): " + std::to_string(disagreements) + " disagreements");
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"platonic class counts", platonic_table},
      {"cube classification", cube_classification},
      {"uniqueness of the FD(1) angle solution", uniqueness},
      {"FD(3) drawn angles", five_seven_angles_check},
      {"FD(1) generators", generator_reproduction},
      {"relator identities", relator_identity},
      {"squared-term and size-3 equivalences", section_six},
      {"icosahedron edge bound", edge_bound},
      {"property suites", property_suites},
  };
  std::size_t failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double t = seconds_since(t0);
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " ("
              << fmt(t) << " s)\n";
    for (const auto& line : o.lines) std::cout << "        " << line << '\n';
  }
  std::cout << criteria.size() - failed << " of " << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
