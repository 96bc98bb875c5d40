#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypdom/fourier_motzkin.hpp"
#include "hypdom/polytope.hpp"
#include "hypdom/rational.hpp"

namespace hypdom {

// Exterior dihedral angles in units of pi, indexed by edge id.
using AngleAssignment = RationalVector;

// Each inner vector lists the edge ids of one class.
using EdgeClasses = std::vector<std::vector<int>>;

struct LinearRow {
  RationalVector coeffs;
  Rational rhs;
  std::string provenance;  // "vertex:<id>" or "class:<index>"
};

struct LinearSystem {
  std::size_t variables = 0;
  std::vector<LinearRow> rows;
};

enum class SolutionStatus { infeasible, unique, affine_family };

struct SolutionSet {
  SolutionStatus status = SolutionStatus::infeasible;
  std::optional<RationalVector> particular;
  std::vector<RationalVector> null_basis;
  std::size_t rank = 0;
};

const char* to_string(SolutionStatus s);

// (E - V) / 2; throws ClassCountError when odd or not positive.
int required_class_count(const AbstractPolyhedron& p);

// Vertex rows (sum of incident angles = 2) then class rows (sum = n - 2).
LinearSystem assemble_system(const AbstractPolyhedron& p, const EdgeClasses& classes);

SolutionSet solve_exact(const LinearSystem& sys);

bool satisfies_rows(const LinearSystem& sys, const RationalVector& q);

struct InequalityReport {
  bool pass = true;
  std::optional<int> bad_edge;
  std::optional<Circuit> bad_circuit;
  std::optional<Rational> bad_sum;
  // Smallest angle sum over non-facial circuits.
  std::optional<Rational> min_circuit_sum;
};

InequalityReport check_inequalities(const AbstractPolyhedron& p, const DualGraph& d, const AngleAssignment& q,
                                    std::size_t circuit_cap = kDefaultCircuitCap);
InequalityReport check_inequalities(const std::vector<Circuit>& non_facial, const AngleAssignment& q);

struct FeasibilityOptions {
  std::size_t circuit_cap = kDefaultCircuitCap;
  std::size_t dimension_cap = kDefaultDimensionCap;
};

struct FeasibilityResult {
  SolutionSet solution;
  bool feasible = false;
  std::optional<AngleAssignment> witness;
};

// Strict feasibility of 0 < q < 1 and the circuit inequalities over the
// solution set of `sys`.
FeasibilityResult feasible(const LinearSystem& sys, const DualGraph& d, const FeasibilityOptions& options = {});
FeasibilityResult feasible(const LinearSystem& sys, const std::vector<Circuit>& non_facial,
                           std::size_t dimension_cap = kDefaultDimensionCap);

// {"e0": "2/3", ...}
Json angles_to_json(const AngleAssignment& q);
AngleAssignment angles_from_json(const Json& doc, std::size_t edge_count);

}  // namespace hypdom
