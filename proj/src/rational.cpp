#include "hypdom/rational.hpp"

#include "hypdom/errors.hpp"

namespace hypdom {

std::string to_string(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0) throw ParseError("invalid rational '" + std::string(text) + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

}  // namespace hypdom
