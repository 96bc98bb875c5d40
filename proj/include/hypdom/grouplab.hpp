#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypdom/enumerate.hpp"
#include "hypdom/geometry.hpp"
#include "hypdom/pairings.hpp"

namespace hypdom {

struct SquaredTerm {
  std::size_t word = 0;
  std::size_t position = 0;  // first of the two equal letters, cyclically
  Letter letter;
};

struct SquaredTermResult {
  bool found = false;
  std::vector<SquaredTerm> witnesses;
};

// Same signed letter twice in a row, reading each word cyclically.
SquaredTermResult has_squared_term(const std::vector<RelatorWord>& words);

// Length 3 with two equal consecutive letters (cyclically) and a third letter
// on a different generator.
bool is_y2z_word(const RelatorWord& w);

struct Y2ZVerdict {
  bool has_size3_class = false;
  bool has_y2z_word = false;
  bool consistent = true;  // both flags agree
  std::vector<std::size_t> size3_orbits;
  std::vector<std::size_t> y2z_words;
};

Y2ZVerdict y2z_class_link(const std::vector<EdgeOrbit>& orbits, const std::vector<RelatorWord>& words);

bool commute_numeric(const MobiusMap& g1, const MobiusMap& g2, double eps_id = Tolerances{}.id);

// E <= 2V.
bool edge_bound_check(const AbstractPolyhedron& p);

struct ParityVerdict {
  bool squared_free = false;
  bool orbits_even = false;
  bool counts_even = false;
  // False only when there is no squared term yet some size or count is odd.
  bool consistent = true;
};

ParityVerdict parity_check(const AbstractPolyhedron& p, const std::vector<EdgeOrbit>& orbits,
                           const std::vector<RelatorWord>& words);

// Some pairing joins two faces that share an edge.
bool adjacent_identified_sharing_edge(const CheckedScheme& s);

struct RestrictionReport {
  std::optional<bool> has_size3_class;
  std::optional<bool> has_y2z_relator;
  std::vector<SquaredTerm> squared_term_relators;
  std::optional<bool> adjacent_identified_sharing_edge;
  bool edge_bound_ok = true;
  std::optional<bool> parity_ok;
  std::optional<std::vector<std::pair<std::string, std::string>>> commuting_generator_pairs;
};

RestrictionReport restriction_report(const AbstractPolyhedron& p);
RestrictionReport restriction_report(const AbstractPolyhedron& p, const CandidateDomain& c,
                                     const GroupPresentation* generators = nullptr, const Tolerances& tol = {});
Json restriction_to_json(const RestrictionReport& r);

}  // namespace hypdom
