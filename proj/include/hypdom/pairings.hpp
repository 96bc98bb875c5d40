#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "hypdom/polytope.hpp"

namespace hypdom {

// A generator symbol, possibly inverted.
struct Letter {
  std::string generator;
  bool inverse = false;

  Letter inverted() const { return {generator, !inverse}; }
  std::string str() const { return inverse ? generator + "^-1" : generator; }
  auto operator<=>(const Letter&) const = default;
};

Letter parse_letter(const std::string& text);

struct FacePairing {
  std::string generator;
  int source = -1;
  int target = -1;
  // image[i] is the target vertex receiving the i-th vertex of the source cycle.
  std::vector<int> image;
};

struct PairingScheme {
  std::vector<FacePairing> pairings;
};

// A scheme that passed validation, with per-face lookup tables. Keeps a
// pointer to the polyhedron, which must outlive it.
class CheckedScheme {
 public:
  CheckedScheme(const AbstractPolyhedron& p, PairingScheme s);

  const AbstractPolyhedron& polyhedron() const { return *p_; }
  const PairingScheme& scheme() const { return scheme_; }

  int partner(int face) const { return partner_[static_cast<std::size_t>(face)]; }
  int pairing_of(int face) const { return pairing_[static_cast<std::size_t>(face)]; }
  bool is_source(int face) const;
  // Image of vertex v of `face` under the map carrying `face` to its partner.
  int map_vertex(int face, int v) const;
  // Letter recorded when crossing from `face` to its partner.
  Letter letter_from(int face) const;

 private:
  const AbstractPolyhedron* p_;
  PairingScheme scheme_;
  std::vector<int> partner_;
  std::vector<int> pairing_;
  // forward_[face][v] for v on the face, -1 elsewhere.
  std::vector<std::vector<int>> forward_;
};

// Throws SchemeError describing the first violated invariant.
CheckedScheme validate_scheme(const AbstractPolyhedron& p, PairingScheme s);

struct OrbitStep {
  int edge = -1;
  int side_face = -1;
  Letter letter;
};

struct EdgeOrbit {
  std::vector<OrbitStep> steps;
  std::size_t size() const { return steps.size(); }
  std::vector<int> edges() const;
};

struct RelatorWord {
  std::vector<Letter> letters;
  std::size_t size() const { return letters.size(); }
  std::string str() const;  // letters separated by spaces
  RelatorWord inverse() const;
};

RelatorWord parse_word(const std::string& text);

std::vector<EdgeOrbit> edge_orbits(const CheckedScheme& s);
RelatorWord relator_word(const EdgeOrbit& o);
std::vector<RelatorWord> relator_words(const std::vector<EdgeOrbit>& orbits);
std::vector<std::vector<int>> orbit_classes(const std::vector<EdgeOrbit>& orbits);

std::vector<std::vector<int>> vertex_orbits(const CheckedScheme& s);

// Indices of pairings that carry some boundary edge of the source onto itself.
std::vector<std::size_t> detect_elliptic_generator(const CheckedScheme& s);

struct QuotientCensus {
  int V = 0;
  int E = 0;
  int F = 0;
  int P = 1;
  int q = 0;
};

QuotientCensus quotient_census(const CheckedScheme& s, const std::vector<EdgeOrbit>& orbits);

struct Automorphism {
  std::vector<int> vertex_map;
  std::vector<int> face_map;
  bool orientation_preserving = true;
};

std::vector<Automorphism> symmetry_group(const AbstractPolyhedron& p);

enum class SymmetryChoice { rotations, all };

PairingScheme apply_automorphism(const AbstractPolyhedron& p, const PairingScheme& s, const Automorphism& g);

// Serialization independent of generator names and pairing directions.
std::string scheme_signature(const AbstractPolyhedron& p, const PairingScheme& s);

// Minimal signature over the chosen subgroup of `group`.
std::string canonicalize(const CheckedScheme& s, const std::vector<Automorphism>& group, SymmetryChoice choice);

// Equal up to cyclic rotation and formal inversion; with renaming, also up to
// a bijective relabeling of generators where each may additionally be inverted.
bool words_equivalent(const RelatorWord& a, const RelatorWord& b, bool allow_renaming = true);

// True if two faces of the pairing share an edge.
bool pairs_adjacent_faces(const CheckedScheme& s, std::size_t pairing);

PairingScheme scheme_from_json(const AbstractPolyhedron& p, const Json& doc);
Json scheme_to_json(const AbstractPolyhedron& p, const PairingScheme& s);
Json orbits_to_json(const AbstractPolyhedron& p, const std::vector<EdgeOrbit>& orbits);

}  // namespace hypdom
