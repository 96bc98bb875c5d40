#include <doctest.h>

#include "fixtures.hpp"
#include "hypdom/grouplab.hpp"

using namespace hypdom;
using namespace fixtures;

namespace {

std::vector<RelatorWord> words(std::initializer_list<const char*> texts) {
  std::vector<RelatorWord> out;
  for (const char* t : texts) out.push_back(parse_word(t));
  return out;
}

CandidateDomain candidate(const AbstractPolyhedron& cube, const char* name) {
  return make_candidate(cube, bundled_scheme(cube, name), symmetry_group(cube), non_facial_circuits(build_dual(cube)));
}

}  // namespace

TEST_CASE("squared terms") {
  CHECK(!has_squared_term(words({"A B C^-1 A^-1 B C", "A B^-1 C A^-1 B^-1 C^-1"})).found);
  auto r = has_squared_term(words({"P R^-1 R^-1 P Q^-1 Q^-1"}));
  CHECK(r.found);
  std::set<std::string> letters;
  for (const auto& w : r.witnesses) letters.insert(w.letter.str());
  CHECK(letters == std::set<std::string>{"R^-1", "Q^-1"});
  CHECK(has_squared_term(words({"Y Y Z"})).found);
  // Cyclic: last and first letter.
  auto wrap = has_squared_term(words({"A B A"}));
  REQUIRE(wrap.found);
  CHECK(wrap.witnesses[0].position == 2);
  CHECK(!has_squared_term(words({"A A^-1"})).found);
  CHECK(has_squared_term(words({"A A"})).witnesses.size() == 1);
}

TEST_CASE("Y^2 Z shape") {
  CHECK(is_y2z_word(parse_word("Y Y Z")));
  CHECK(is_y2z_word(parse_word("Z Y Y")));
  CHECK(is_y2z_word(parse_word("Y Z^-1 Y")));
  CHECK(is_y2z_word(parse_word("Y^-1 Y^-1 Z")));
  CHECK(!is_y2z_word(parse_word("Y Y Y")));
  CHECK(!is_y2z_word(parse_word("A B C")));
  CHECK(!is_y2z_word(parse_word("Y Y Z Z")));
}

TEST_CASE("size-3 orbit link on bundled schemes") {
  auto cube = solid("cube");
  auto fd1 = candidate(cube, "fd1");
  auto v = y2z_class_link(fd1.orbits, fd1.words);
  CHECK(!v.has_size3_class);
  CHECK(!v.has_y2z_word);
  CHECK(v.consistent);
  // The literal three-pairing description has a size-3 orbit across the fold
  // of adjacent faces; its word is Y^2 Z.
  auto fd3 = validate_scheme(cube, bundled_scheme(cube, "fd3"));
  auto orbits = edge_orbits(fd3);
  auto w3 = y2z_class_link(orbits, relator_words(orbits));
  CHECK(w3.has_size3_class);
  CHECK(w3.has_y2z_word);
  CHECK(w3.consistent);
  CHECK(adjacent_identified_sharing_edge(fd3));
}

TEST_CASE("commutation") {
  CHECK(commute_numeric(MobiusMap(1, 1, 0, 1), MobiusMap(1, Complex(0, 1), 0, 1)));
  CHECK(!commute_numeric(MobiusMap(2, 0, 0, 1), MobiusMap(1, 1, 0, 1)));
  auto cube = solid("cube");
  auto g = face_pairing_maps(cube, regular_ideal_cube(cube), bundled_scheme(cube, "fd1"));
  const auto& A = g.generators.at("A");
  const auto& B = g.generators.at("B");
  const auto& C = g.generators.at("C");
  CHECK(!commute_numeric(A, B));
  CHECK(!commute_numeric(A, C));
  CHECK(!commute_numeric(B, C));
  CHECK(commute_numeric(A, A.inverse()));
}

TEST_CASE("edge bound") {
  CHECK(!edge_bound_check(solid("icosahedron")));
  CHECK(edge_bound_check(solid("cube")));
  CHECK(edge_bound_check(solid("octahedron")));
  CHECK(edge_bound_check(solid("tetrahedron")));
  CHECK(edge_bound_check(solid("dodecahedron")));
}

TEST_CASE("parity") {
  auto cube = solid("cube");
  auto fd1 = candidate(cube, "fd1");
  auto v = parity_check(cube, fd1.orbits, fd1.words);
  CHECK(v.squared_free);
  CHECK(v.orbits_even);
  CHECK(v.counts_even);
  CHECK(v.consistent);
  auto fd2 = candidate(cube, "fd2");
  auto p2 = parity_check(cube, fd2.orbits, fd2.words);
  CHECK(!p2.squared_free);
  CHECK(p2.orbits_even);
  CHECK(p2.consistent);
  // Every candidate is consistent. On the wider valid population an
  // inconsistent scheme either has a one-edge orbit (an elliptic generator)
  // or has only size-3 odd orbits, each read with three different generators.
  for (const auto& c : classify(cube).survivors) CHECK(parity_check(cube, c.orbits, c.words).consistent);
  std::size_t elliptic = 0, three_letter = 0;
  for (const auto& s : enumerate_schemes(cube)) {
    auto checked = validate_scheme(cube, s);
    auto orbits = edge_orbits(checked);
    auto ws = relator_words(orbits);
    if (parity_check(cube, orbits, ws).consistent) continue;
    bool has_singleton = std::any_of(orbits.begin(), orbits.end(), [](const EdgeOrbit& o) { return o.size() == 1; });
    CHECK(has_singleton == !detect_elliptic_generator(checked).empty());
    if (has_singleton) {
      ++elliptic;
      continue;
    }
    ++three_letter;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      if (orbits[i].size() % 2 == 0) continue;
      CHECK(orbits[i].size() == 3);
      CHECK(!is_y2z_word(ws[i]));
    }
    CHECK(!y2z_class_link(orbits, ws).consistent);
  }
  CHECK(elliptic == 32);
  CHECK(three_letter == 2);
}

TEST_CASE("squared terms track adjacent pairings") {
  auto cube = solid("cube");
  CHECK(!adjacent_identified_sharing_edge(validate_scheme(cube, bundled_scheme(cube, "fd1"))));
  CHECK(adjacent_identified_sharing_edge(validate_scheme(cube, bundled_scheme(cube, "fd2"))));
}

TEST_CASE("restriction reports") {
  auto cube = solid("cube");
  auto plain = restriction_report(solid("icosahedron"));
  CHECK(!plain.edge_bound_ok);
  CHECK(!plain.has_size3_class);
  CHECK(!plain.commuting_generator_pairs);
  auto fd1 = candidate(cube, "fd1");
  auto g = face_pairing_maps(cube, regular_ideal_cube(cube), fd1.scheme);
  auto rep = restriction_report(cube, fd1, &g);
  CHECK(rep.edge_bound_ok);
  CHECK(rep.has_size3_class == false);
  CHECK(rep.has_y2z_relator == false);
  CHECK(rep.squared_term_relators.empty());
  CHECK(rep.adjacent_identified_sharing_edge == false);
  CHECK(rep.parity_ok == true);
  REQUIRE(rep.commuting_generator_pairs);
  CHECK(rep.commuting_generator_pairs->empty());
  auto j = restriction_to_json(rep);
  CHECK(j["edge_bound_ok"] == true);
  CHECK(j["has_size3_class"] == false);
}
