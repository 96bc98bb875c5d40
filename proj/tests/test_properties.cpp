#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hypdom/grouplab.hpp"

using namespace hypdom;
using namespace fixtures;

namespace {

// Seeded sample of valid schemes drawn from the full enumeration.
std::vector<PairingScheme> sample_schemes(const AbstractPolyhedron& p, std::size_t count, unsigned seed) {
  auto all = enumerate_schemes(p);
  std::mt19937 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  if (all.size() > count) all.resize(count);
  return all;
}

std::vector<AbstractPolyhedron> solids_and_duals() {
  std::vector<AbstractPolyhedron> out;
  for (const auto& name : platonic_names()) {
    out.push_back(solid(name));
    out.push_back(dual_polyhedron(out.back()));
  }
  out.push_back(load_polyhedron(read_file(std::string(HYPDOM_TEST_DIR) + "/data/asymmetric.json")));
  out.push_back(dual_polyhedron(out.back()));
  return out;
}

// Strict region test written out from the definitions: 0 < q < 1 on every
// edge and every non-facial circuit sums to more than 2.
bool in_open_region(const AngleAssignment& q, const std::vector<Circuit>& non_facial) {
  for (const auto& x : q)
    if (!(x > 0 && x < 1)) return false;
  for (const auto& c : non_facial) {
    Rational s = 0;
    for (int l : c.links) s += q[static_cast<std::size_t>(l)];
    if (!(s > 2)) return false;
  }
  return true;
}

AngleAssignment point_of(const SolutionSet& s, const std::vector<Rational>& t) {
  AngleAssignment q = *s.particular;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t e = 0; e < q.size(); ++e) q[e] += t[i] * s.null_basis[i][e];
  return q;
}

}  // namespace

TEST_CASE("Euler and degree identities") {
  for (const auto& p : solids_and_duals()) {
    CAPTURE(p.name());
    CHECK(p.vertex_count() - p.edge_count() + p.face_count() == 2);
    std::size_t degrees = 0, lengths = 0;
    for (const auto& ve : p.incidence().vertex_edges) degrees += ve.size();
    for (const auto& f : p.faces()) lengths += f.size();
    CHECK(degrees == 2 * static_cast<std::size_t>(p.edge_count()));
    CHECK(lengths == 2 * static_cast<std::size_t>(p.edge_count()));
  }
}

TEST_CASE("orbit partition, word length and census on sampled schemes") {
  for (std::string name : {"cube", "tetrahedron", "octahedron"}) {
    auto p = solid(name);
    CAPTURE(name);
    for (const auto& s : sample_schemes(p, 300, 11)) {
      auto checked = validate_scheme(p, s);
      auto orbits = edge_orbits(checked);
      std::vector<int> seen(static_cast<std::size_t>(p.edge_count()), 0);
      std::size_t total = 0;
      for (const auto& o : orbits) {
        for (int e : o.edges()) ++seen[static_cast<std::size_t>(e)];
        total += o.size();
        CHECK(relator_word(o).size() == o.size());
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](int n) { return n == 1; }));
      CHECK(total == static_cast<std::size_t>(p.edge_count()));
      CHECK(as_partition(orbit_classes(orbits)) == as_partition(glued_edge_components(p, s)));
      auto c = quotient_census(checked, orbits);
      CHECK(c.E == static_cast<int>(orbits.size()));
      CHECK(c.F == p.face_count() / 2);
      CHECK(c.P == 1);
      CHECK(c.V == static_cast<int>(vertex_orbits(checked).size()));
      CHECK(c.V - c.E + c.F - c.P == c.q);
      // q = V - E + F - 1, so V = q exactly when E = F - 1, the required count.
      CHECK((c.V == c.q) == (c.E == required_class_count(p)));
    }
  }
}

TEST_CASE("solution points of every solvable cube system") {
  auto cube = solid("cube");
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-6, 6);
  std::size_t systems = 0;
  for (const auto& s : enumerate_schemes(cube)) {
    auto classes = orbit_classes(edge_orbits(validate_scheme(cube, s)));
    if (static_cast<int>(classes.size()) != required_class_count(cube)) continue;
    if (std::any_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() < 3; })) continue;
    auto sys = assemble_system(cube, classes);
    auto sol = solve_exact(sys);
    if (sol.status == SolutionStatus::infeasible) continue;
    ++systems;
    CHECK(sol.rank == modular_rank(sys, false));
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rational> t;
      for (std::size_t i = 0; i < sol.null_basis.size(); ++i) t.emplace_back(num(rng), 7);
      auto q = point_of(sol, t);
      CHECK(satisfies_rows(sys, q));
      Rational sum = 0;
      for (const auto& x : q) sum += x;
      CHECK(sum == cube.vertex_count());
      Rational class_total = 0;
      for (const auto& cls : classes) {
        Rational cs = 0;
        for (int e : cls) cs += q[static_cast<std::size_t>(e)];
        CHECK(cs == static_cast<long>(cls.size()) - 2);
        class_total += cs;
      }
      CHECK(class_total == cube.vertex_count());
    }
  }
  CHECK(systems > 0);
}

TEST_CASE("elimination agrees with seeded sampling on cube angle systems") {
  auto cube = solid("cube");
  const auto nf = non_facial_circuits(build_dual(cube));
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-48, 48);
  std::size_t compared = 0, sampled_feasible = 0;
  for (const auto& s : enumerate_schemes(cube)) {
    auto classes = orbit_classes(edge_orbits(validate_scheme(cube, s)));
    if (static_cast<int>(classes.size()) != required_class_count(cube)) continue;
    if (std::any_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() < 3; })) continue;
    auto sys = assemble_system(cube, classes);
    auto res = feasible(sys, nf);
    if (res.solution.status == SolutionStatus::infeasible || res.solution.null_basis.size() > 4) continue;
    ++compared;
    bool hit = false;
    for (int trial = 0; trial < 3000 && !hit; ++trial) {
      std::vector<Rational> t;
      for (std::size_t i = 0; i < res.solution.null_basis.size(); ++i) t.emplace_back(num(rng), 24);
      hit = in_open_region(point_of(res.solution, t), nf);
    }
    sampled_feasible += hit ? 1 : 0;
    // A sampled point proves feasibility; elimination must not miss it.
    if (hit) CHECK(res.feasible);
    if (res.feasible) {
      REQUIRE(res.witness);
      CHECK(satisfies_rows(sys, *res.witness));
      CHECK(in_open_region(*res.witness, nf));
    }
  }
  CHECK(compared > 0);
  CHECK(sampled_feasible > 0);
}

TEST_CASE("a relator followed by its inverse is the identity") {
  auto cube = solid("cube");
  auto r = regular_ideal_cube(cube);
  for (const auto& s : sample_schemes(cube, 200, 23)) {
    auto g = face_pairing_maps(cube, r, s);
    for (const auto& w : g.relators) {
      RelatorWord both = w;
      auto inv = w.inverse();
      both.letters.insert(both.letters.end(), inv.letters.begin(), inv.letters.end());
      CHECK(identity_residual(relator_product(g, both)) <= 1e-9);
    }
  }
}

TEST_CASE("no squared term forces even orbits on every candidate") {
  for (const char* name : {"cube", "tetrahedron"}) {
    auto p = solid(name);
    for (const auto& c : classify(p).survivors) {
      if (has_squared_term(c.words).found) continue;
      for (const auto& o : c.orbits) CHECK(o.size() % 2 == 0);
      CHECK(c.census.E % 2 == 0);
      CHECK(c.census.V % 2 == 0);
    }
  }
}

TEST_CASE("a Y^2 Z relator realized as the identity forces Y and Z to commute") {
  // Y Y Z = 1 means Z = Y^-2.
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    Complex a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng));
    Complex d = (1.0 + b * c) / a;
    GroupPresentation g;
    MobiusMap Y(a, b, c, d);
    g.generators.emplace("Y", Y);
    g.generators.emplace("Z", (Y * Y).inverse());
    auto w = parse_word("Y Y Z");
    REQUIRE(identity_residual(relator_product(g, w)) <= 1e-9);
    CHECK(commute_numeric(g.generators.at("Y"), g.generators.at("Z")));
  }
  // On the regular ideal cube no Y^2 Z orbit word closes up, so the shadow
  // has no instance there.
  auto cube = solid("cube");
  auto r = regular_ideal_cube(cube);
  std::size_t words = 0;
  for (const auto& s : enumerate_schemes(cube)) {
    auto checked = validate_scheme(cube, s);
    if (!detect_elliptic_generator(checked).empty()) continue;
    auto ws = relator_words(edge_orbits(checked));
    auto g = face_pairing_maps(cube, r, s);
    for (const auto& w : ws) {
      if (!is_y2z_word(w)) continue;
      ++words;
      CHECK(!is_projective_identity(relator_product(g, w)));
    }
  }
  CHECK(words == 72);
}
