#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypdom/angles.hpp"
#include "hypdom/pairings.hpp"

namespace hypdom {

// Calls `visit` once per perfect face matching and per choice of
// orientation-reversing correspondence on each pair. Generators are named
// A, B, C, ... in pair order; the lower face index is the source.
void for_each_scheme(const AbstractPolyhedron& p, const std::function<void(const PairingScheme&)>& visit);
std::vector<PairingScheme> enumerate_schemes(const AbstractPolyhedron& p);

// Size of the search space (product over face lengths of matchings times
// correspondences).
double scheme_count(const AbstractPolyhedron& p);

enum class Filter { validity, elliptic, class_count, class_size, angle_equalities, angle_inequalities };

const char* to_string(Filter f);
const std::vector<Filter>& default_filter_order();

struct CandidateDomain {
  PairingScheme scheme;
  std::vector<EdgeOrbit> orbits;
  std::vector<RelatorWord> words;
  EdgeClasses classes;
  SolutionSet solution;
  AngleAssignment witness;
  QuotientCensus census;
  std::string key_rotations;
  std::string key_all;
};

struct Family {
  std::string key_all;
  std::vector<std::size_t> members;  // indices into survivors
  std::vector<std::string> rotation_keys;
};

struct EnumerationReport {
  std::size_t total = 0;
  std::map<Filter, std::size_t> rejected;
  std::vector<CandidateDomain> survivors;
  std::map<std::string, std::vector<std::size_t>> by_rotations;
  std::map<std::string, std::vector<std::size_t>> by_all;
  std::vector<Family> families;  // ordered by first survivor
};

struct ClassifyOptions {
  std::vector<Filter> order = default_filter_order();
  std::size_t circuit_cap = kDefaultCircuitCap;
  std::size_t dimension_cap = kDefaultDimensionCap;
};

// Lazily evaluated filter pipeline for one scheme.
class SchemeEvaluation {
 public:
  SchemeEvaluation(const AbstractPolyhedron& p, const PairingScheme& s, const std::vector<Circuit>& non_facial,
                   std::size_t dimension_cap = kDefaultDimensionCap);

  bool passes(Filter f);
  // First rejecting filter in `order`, or nullopt for a survivor.
  std::optional<Filter> first_rejection(const std::vector<Filter>& order);

  const CheckedScheme& checked();
  const std::vector<EdgeOrbit>& orbits();
  const FeasibilityResult& feasibility();

 private:
  const AbstractPolyhedron& p_;
  const PairingScheme& s_;
  const std::vector<Circuit>& non_facial_;
  std::size_t dimension_cap_;
  std::optional<bool> valid_;
  std::optional<CheckedScheme> checked_;
  std::optional<std::vector<EdgeOrbit>> orbits_;
  std::optional<FeasibilityResult> feasibility_;
};

// Builds the full candidate record; the scheme must pass every filter.
CandidateDomain make_candidate(const AbstractPolyhedron& p, const PairingScheme& s,
                               const std::vector<Automorphism>& group, const std::vector<Circuit>& non_facial,
                               std::size_t dimension_cap = kDefaultDimensionCap);

EnumerationReport classify(const AbstractPolyhedron& p, const ClassifyOptions& options = {});

Json candidate_to_json(const AbstractPolyhedron& p, const CandidateDomain& c);
// Rebuilds a candidate from its polyhedron and scheme, recomputing all
// derived fields.
std::pair<AbstractPolyhedron, CandidateDomain> candidate_from_json(const Json& doc);
Json report_to_json(const AbstractPolyhedron& p, const EnumerationReport& r);

}  // namespace hypdom
