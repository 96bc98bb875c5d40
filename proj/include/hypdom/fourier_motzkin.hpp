#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypdom/rational.hpp"

namespace hypdom {

// a . t > b
struct StrictInequality {
  RationalVector a;
  Rational b;
};

inline constexpr std::size_t kDefaultDimensionCap = 8;

// Exact Fourier-Motzkin elimination for a system of strict inequalities in
// `dims` unknowns. Returns a rational point satisfying every inequality, or
// nullopt when the open region is empty. Throws ResourceError if dims exceeds
// the cap.
std::optional<RationalVector> strict_feasible_point(const std::vector<StrictInequality>& system, std::size_t dims,
                                                    std::size_t dimension_cap = kDefaultDimensionCap);

bool satisfies(const StrictInequality& row, const RationalVector& t);

}  // namespace hypdom
