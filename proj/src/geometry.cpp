#include "hypdom/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypdom/angles.hpp"
#include "hypdom/errors.hpp"
#include "hypdom/reference_cube.hpp"

namespace hypdom {

namespace {

using GKind = GeometryError::Kind;

constexpr double kPoleEps = 1e-12;

double max_abs(const std::array<Complex, 4>& m) {
  double s = 0;
  for (const auto& x : m) s = std::max(s, std::abs(x));
  return s;
}

}  // namespace

double distance(const ExtendedComplex& a, const ExtendedComplex& b) {
  if (a.is_infinite() && b.is_infinite()) return 0;
  if (a.is_infinite() || b.is_infinite()) return std::numeric_limits<double>::infinity();
  return std::abs(a.value() - b.value());
}

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d, double eps_det) : m_{a, b, c, d} {
  const double scale = max_abs(m_);
  if (!(scale > 0) || !std::isfinite(scale) || std::abs(det()) <= eps_det * scale * scale)
    throw GeometryError(GKind::singular, "singular Mobius matrix");
}

ExtendedComplex MobiusMap::operator()(const ExtendedComplex& z) const {
  const double scale = max_abs(m_);
  if (z.is_infinite()) {
    if (std::abs(m_[2]) <= kPoleEps * scale) return ExtendedComplex::infinity();
    return ExtendedComplex::finite(m_[0] / m_[2]);
  }
  const Complex num = m_[0] * z.value() + m_[1];
  const Complex den = m_[2] * z.value() + m_[3];
  if (std::abs(den) <= kPoleEps * scale * (1 + std::abs(z.value()))) return ExtendedComplex::infinity();
  return ExtendedComplex::finite(num / den);
}

MobiusMap MobiusMap::inverse() const { return MobiusMap(m_[3], -m_[1], -m_[2], m_[0], 0); }

MobiusMap MobiusMap::normalized() const {
  const Complex root = std::sqrt(det());
  std::array<Complex, 4> n{m_[0] / root, m_[1] / root, m_[2] / root, m_[3] / root};
  const double scale = max_abs(n);
  for (const auto& x : n) {
    if (std::abs(x) <= 1e-12 * scale) continue;
    bool flip = std::abs(x.real()) > 1e-12 * std::abs(x) ? x.real() < 0 : x.imag() < 0;
    if (flip)
      for (auto& y : n) y = -y;
    break;
  }
  return MobiusMap(n[0], n[1], n[2], n[3], 0);
}

MobiusMap operator*(const MobiusMap& f, const MobiusMap& g) {
  const auto& x = f.m_;
  const auto& y = g.m_;
  return MobiusMap(x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                   x[2] * y[1] + x[3] * y[3], 0);
}

double projective_distance(const MobiusMap& m, const MobiusMap& n) {
  const auto a = m.normalized();
  const auto b = n.normalized();
  double minus = 0, plus = 0;
  const std::array<std::pair<Complex, Complex>, 4> e{
      {{a.a(), b.a()}, {a.b(), b.b()}, {a.c(), b.c()}, {a.d(), b.d()}}};
  for (const auto& [x, y] : e) {
    minus = std::max(minus, std::abs(x - y));
    plus = std::max(plus, std::abs(x + y));
  }
  return std::min(minus, plus);
}

double identity_residual(const MobiusMap& m) { return projective_distance(m, MobiusMap::identity()); }

bool is_projective_identity(const MobiusMap& m, double eps) { return identity_residual(m) <= eps; }

const char* to_string(ElementType t) {
  switch (t) {
    case ElementType::identity: return "identity";
    case ElementType::parabolic: return "parabolic";
    case ElementType::elliptic: return "elliptic";
    case ElementType::loxodromic: return "loxodromic";
  }
  return "?";
}

ElementType classify_element(const MobiusMap& m, const Tolerances& tol) {
  const auto n = m.normalized();
  if (identity_residual(n) <= tol.id) return ElementType::identity;
  const Complex tau = n.trace() * n.trace();
  if (std::abs(tau - 4.0) <= tol.cls) return ElementType::parabolic;
  if (std::abs(tau.imag()) <= tol.cls && tau.real() >= -tol.cls && tau.real() < 4) return ElementType::elliptic;
  return ElementType::loxodromic;
}

std::vector<Point3> inscribed_cube_vertices() {
  const double s = 1.0 / std::sqrt(3.0);
  std::vector<Point3> out;
  for (int i : {-1, 1})
    for (int j : {-1, 1})
      for (int k : {-1, 1}) out.push_back({i * s, j * s, 1 + k * s});
  return out;
}

ExtendedComplex ball_to_uhs(const Point3& p, double eps_geo) {
  const double dx = p.x, dy = p.y, dz = p.z - 2;
  const double r2 = dx * dx + dy * dy + dz * dz;
  if (r2 <= eps_geo * eps_geo) return ExtendedComplex::infinity();
  const double f = 4 / r2;
  const double x = f * dx, y = f * dy, z = -(2 + f * dz);
  if (std::abs(z) > eps_geo) throw GeometryError(GKind::off_sphere, "point is not on the ideal boundary sphere");
  return ExtendedComplex::finite({x, y});
}

MobiusMap cross_ratio_map(const ExtendedComplex& p1, const ExtendedComplex& p2, const ExtendedComplex& p3,
                          double eps_geo) {
  if (distance(p1, p2) <= eps_geo || distance(p1, p3) <= eps_geo || distance(p2, p3) <= eps_geo)
    throw GeometryError(GKind::degenerate, "reference points of a cross ratio must be distinct");
  if (p1.is_infinite()) return MobiusMap(1, -p2.value(), 1, -p3.value());
  if (p2.is_infinite()) return MobiusMap(0, p1.value() - p3.value(), 1, -p3.value());
  if (p3.is_infinite()) return MobiusMap(1, -p2.value(), 0, p1.value() - p2.value());
  const Complex a = p1.value() - p3.value();
  const Complex c = p1.value() - p2.value();
  return MobiusMap(a, -p2.value() * a, c, -p3.value() * c);
}

ExtendedComplex cross_ratio(const ExtendedComplex& z, const ExtendedComplex& p1, const ExtendedComplex& p2,
                            const ExtendedComplex& p3, double eps_geo) {
  return cross_ratio_map(p1, p2, p3, eps_geo)(z);
}

MobiusMap mobius_from_triples(const std::array<ExtendedComplex, 3>& src, const std::array<ExtendedComplex, 3>& dst,
                              double eps_geo) {
  const auto x = cross_ratio_map(src[0], src[1], src[2], eps_geo);
  const auto y = cross_ratio_map(dst[0], dst[1], dst[2], eps_geo);
  return (y.inverse() * x).normalized();
}

void check_distinct(const AbstractPolyhedron& p, const IdealRealization& r, double eps_geo) {
  if (r.points.size() != static_cast<std::size_t>(p.vertex_count()))
    throw GeometryError(GKind::missing_vertex, "realization does not cover every vertex");
  for (std::size_t i = 0; i < r.points.size(); ++i)
    for (std::size_t j = i + 1; j < r.points.size(); ++j)
      if (distance(r.points[i], r.points[j]) <= eps_geo)
        throw GeometryError(GKind::degenerate, "realization sends two vertices to the same point", p.vertex_ids()[j]);
}

IdealRealization regular_ideal_cube(const AbstractPolyhedron& cube, double eps_geo) {
  if (cube.vertex_count() != 8 || cube.face_count() != 6)
    throw GeometryError(GKind::missing_vertex, "regular ideal cube needs the bundled cube document");
  IdealRealization r;
  for (const auto& id : cube.vertex_ids()) {
    auto c = reference_cube::corner(id);
    if (!c) throw GeometryError(GKind::missing_vertex, "vertex id '" + id + "' is not a reference cube corner", id);
    auto b = reference_cube::ball_point(*c);
    r.points.push_back(ball_to_uhs({b[0], b[1], b[2]}, eps_geo));
  }
  // Every face must be a face of the unit cube.
  for (const auto& f : cube.faces()) {
    bool planar = false;
    for (std::size_t k = 0; k < 3 && !planar; ++k) {
      planar = true;
      int first = (*reference_cube::corner(cube.vertex_ids()[static_cast<std::size_t>(f[0])]))[k];
      for (int v : f) planar = planar && (*reference_cube::corner(cube.vertex_ids()[static_cast<std::size_t>(v)]))[k] == first;
    }
    if (!planar) throw GeometryError(GKind::missing_vertex, "face does not match the reference cube");
  }
  check_distinct(cube, r, eps_geo);
  return r;
}

GroupPresentation face_pairing_maps(const AbstractPolyhedron& p, const IdealRealization& r, const PairingScheme& s,
                                    const Tolerances& tol) {
  check_distinct(p, r, tol.geo);
  GroupPresentation g;
  for (const auto& fp : s.pairings) {
    const auto& src = p.face(fp.source);
    const std::size_t n = src.size();
    const std::size_t i0 = static_cast<std::size_t>(std::min_element(src.begin(), src.end()) - src.begin());
    std::array<ExtendedComplex, 3> from{ExtendedComplex::infinity(), ExtendedComplex::infinity(), ExtendedComplex::infinity()};
    auto to = from;
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t i = (i0 + k) % n;
      from[k] = r.points[static_cast<std::size_t>(src[i])];
      to[k] = r.points[static_cast<std::size_t>(fp.image[i])];
    }
    auto m = mobius_from_triples(from, to, tol.geo);
    for (std::size_t i = 0; i < n; ++i) {
      const auto got = m(r.points[static_cast<std::size_t>(src[i])]);
      if (distance(got, r.points[static_cast<std::size_t>(fp.image[i])]) > tol.geo) {
        const auto& id = p.vertex_ids()[static_cast<std::size_t>(src[i])];
        throw GeometryError(GKind::unrealizable, "pairing " + fp.generator + " misplaces vertex " + id, id);
      }
    }
    g.generators.emplace(fp.generator, m);
  }
  return g;
}

MobiusMap relator_product(const GroupPresentation& g, const RelatorWord& w) {
  MobiusMap m = MobiusMap::identity();
  for (const auto& l : w.letters) {
    auto it = g.generators.find(l.generator);
    if (it == g.generators.end()) throw GeometryError(GKind::unknown_letter, "no generator named " + l.generator);
    m = (l.inverse ? it->second.inverse() : it->second) * m;
  }
  return m.normalized();
}

const char* to_string(Verification v) {
  switch (v) {
    case Verification::confirmed: return "CONFIRMED";
    case Verification::not_confirmed: return "NOT_CONFIRMED";
    case Verification::out_of_scope: return "OUT_OF_SCOPE";
  }
  return "?";
}

VerificationResult verify_candidate(const AbstractPolyhedron& p, const CandidateDomain& c, const IdealRealization& r,
                                    const Tolerances& tol) {
  VerificationResult out;
  const auto sys = assemble_system(p, c.classes);
  if (!satisfies_rows(sys, RationalVector(static_cast<std::size_t>(p.edge_count()), Rational(2, 3)))) {
    out.note = "geometric verification out of scope: angle solution excludes the regular ideal realization";
    return out;
  }
  out.presentation = face_pairing_maps(p, r, c.scheme, tol);
  bool all_identity = true;
  for (const auto& w : c.words) {
    const auto m = relator_product(out.presentation, w);
    RelatorStatus st{classify_element(m, tol), identity_residual(m)};
    all_identity = all_identity && st.type == ElementType::identity;
    out.presentation.relators.push_back(w);
    out.presentation.statuses.push_back(st);
  }
  out.status = all_identity ? Verification::confirmed : Verification::not_confirmed;
  out.note = all_identity ? "every relator is the identity" : "some relator is not the identity";
  return out;
}

Json to_json(const ExtendedComplex& z) {
  if (z.is_infinite()) return "inf";
  return Json::array({z.value().real(), z.value().imag()});
}

ExtendedComplex extended_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtendedComplex::infinity();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return ExtendedComplex::finite({j[0].get<double>(), j[1].get<double>()});
  throw ParseError("expected [re, im] or \"inf\"");
}

Json realization_to_json(const AbstractPolyhedron& p, const IdealRealization& r) {
  Json out = Json::object();
  for (std::size_t v = 0; v < r.points.size(); ++v) out[p.vertex_ids()[v]] = to_json(r.points[v]);
  return out;
}

IdealRealization realization_from_json(const AbstractPolyhedron& p, const Json& doc) {
  IdealRealization r;
  for (const auto& id : p.vertex_ids()) {
    if (!doc.contains(id)) throw GeometryError(GKind::missing_vertex, "realization misses vertex " + id, id);
    r.points.push_back(extended_from_json(doc.at(id)));
  }
  check_distinct(p, r);
  return r;
}

Json mobius_to_json(const MobiusMap& m) {
  const auto n = m.normalized();
  auto c = [](Complex z) { return Json::array({z.real(), z.imag()}); };
  return Json{{"a", c(n.a())}, {"b", c(n.b())}, {"c", c(n.c())}, {"d", c(n.d())}};
}

Json presentation_to_json(const GroupPresentation& g) {
  Json gens = Json::object();
  for (const auto& [name, m] : g.generators) gens[name] = mobius_to_json(m);
  Json rel = Json::array();
  for (std::size_t i = 0; i < g.relators.size(); ++i) {
    Json r{{"word", g.relators[i].str()}};
    if (i < g.statuses.size()) {
      r["type"] = to_string(g.statuses[i].type);
      r["identity_residual"] = g.statuses[i].residual;
    }
    rel.push_back(std::move(r));
  }
  return Json{{"generators", gens}, {"relators", rel}};
}

}  // namespace hypdom
