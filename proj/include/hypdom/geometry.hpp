#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "hypdom/enumerate.hpp"
#include "hypdom/pairings.hpp"
#include "hypdom/polytope.hpp"

namespace hypdom {

using Complex = std::complex<double>;

struct Tolerances {
  double geo = 1e-9;
  double id = 1e-9;
  double cls = 1e-8;
  double det = 1e-12;
};

struct Point3 {
  double x = 0;
  double y = 0;
  double z = 0;
};

class ExtendedComplex {
 public:
  static ExtendedComplex finite(Complex z) { return ExtendedComplex(z, false); }
  static ExtendedComplex infinity() { return ExtendedComplex({}, true); }
  ExtendedComplex(Complex z) : ExtendedComplex(z, false) {}  // NOLINT: implicit on purpose

  bool is_infinite() const { return infinite_; }
  Complex value() const { return value_; }

 private:
  ExtendedComplex(Complex z, bool inf) : value_(z), infinite_(inf) {}
  Complex value_;
  bool infinite_;
};

// Distance on the extended plane: 0 between two infinities, +inf between a
// finite point and infinity.
double distance(const ExtendedComplex& a, const ExtendedComplex& b);

// z -> (a z + b) / (c z + d), defined up to a nonzero scalar.
class MobiusMap {
 public:
  MobiusMap(Complex a, Complex b, Complex c, Complex d, double eps_det = Tolerances{}.det);
  static MobiusMap identity() { return MobiusMap(1, 0, 0, 1); }

  Complex a() const { return m_[0]; }
  Complex b() const { return m_[1]; }
  Complex c() const { return m_[2]; }
  Complex d() const { return m_[3]; }
  Complex det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  Complex trace() const { return m_[0] + m_[3]; }

  ExtendedComplex operator()(const ExtendedComplex& z) const;
  MobiusMap inverse() const;
  // Determinant 1; sign chosen so the first nonzero entry has positive real
  // part (positive imaginary part if the real part vanishes).
  MobiusMap normalized() const;

  // Composition: (f * g)(z) = f(g(z)).
  friend MobiusMap operator*(const MobiusMap& f, const MobiusMap& g);

 private:
  std::array<Complex, 4> m_;
};

// min(|M - I|, |M + I|) in the max-entry norm after normalization.
double identity_residual(const MobiusMap& m);
bool is_projective_identity(const MobiusMap& m, double eps = Tolerances{}.id);
// min(|M - N|, |M + N|) after normalizing both.
double projective_distance(const MobiusMap& m, const MobiusMap& n);

enum class ElementType { identity, parabolic, elliptic, loxodromic };
const char* to_string(ElementType t);
ElementType classify_element(const MobiusMap& m, const Tolerances& tol = {});

std::vector<Point3> inscribed_cube_vertices();
ExtendedComplex ball_to_uhs(const Point3& p, double eps_geo = Tolerances{}.geo);

// Map sending p2 -> 0, p1 -> 1, p3 -> infinity.
MobiusMap cross_ratio_map(const ExtendedComplex& p1, const ExtendedComplex& p2, const ExtendedComplex& p3,
                          double eps_geo = Tolerances{}.geo);
ExtendedComplex cross_ratio(const ExtendedComplex& z, const ExtendedComplex& p1, const ExtendedComplex& p2,
                            const ExtendedComplex& p3, double eps_geo = Tolerances{}.geo);
MobiusMap mobius_from_triples(const std::array<ExtendedComplex, 3>& src, const std::array<ExtendedComplex, 3>& dst,
                              double eps_geo = Tolerances{}.geo);

struct IdealRealization {
  std::vector<ExtendedComplex> points;  // indexed by vertex
};

void check_distinct(const AbstractPolyhedron& p, const IdealRealization& r, double eps_geo = Tolerances{}.geo);
// The regular ideal cube for the bundled cube document (vertex ids from
// reference_cube.hpp).
IdealRealization regular_ideal_cube(const AbstractPolyhedron& cube, double eps_geo = Tolerances{}.geo);

struct RelatorStatus {
  ElementType type = ElementType::loxodromic;
  double residual = 0;
};

struct GroupPresentation {
  std::map<std::string, MobiusMap> generators;
  std::vector<RelatorWord> relators;
  std::vector<RelatorStatus> statuses;
};

GroupPresentation face_pairing_maps(const AbstractPolyhedron& p, const IdealRealization& r, const PairingScheme& s,
                                    const Tolerances& tol = {});

// The first letter of the word acts first: the product is M(w_n) ... M(w_1).
MobiusMap relator_product(const GroupPresentation& g, const RelatorWord& w);

enum class Verification { confirmed, not_confirmed, out_of_scope };
const char* to_string(Verification v);

struct VerificationResult {
  Verification status = Verification::out_of_scope;
  std::string note;
  GroupPresentation presentation;
};

// Needs q = 2/3 on every edge to lie in the candidate's angle solution; other
// candidates are reported out of scope.
VerificationResult verify_candidate(const AbstractPolyhedron& p, const CandidateDomain& c, const IdealRealization& r,
                                    const Tolerances& tol = {});

Json to_json(const ExtendedComplex& z);
ExtendedComplex extended_from_json(const Json& j);
Json realization_to_json(const AbstractPolyhedron& p, const IdealRealization& r);
IdealRealization realization_from_json(const AbstractPolyhedron& p, const Json& doc);
Json mobius_to_json(const MobiusMap& m);
Json presentation_to_json(const GroupPresentation& g);

}  // namespace hypdom
