#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hypdom {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace hypdom
