#include <algorithm>
#include <set>

#include "hypdom/errors.hpp"
#include "hypdom/pairings.hpp"

namespace hypdom {

namespace {

using SKind = SchemeError::Kind;

int resolve_face(const AbstractPolyhedron& p, const Json& ref) {
  std::optional<int> f;
  if (ref.is_number_integer()) {
    auto v = ref.get<long>();
    if (v >= 0 && v < p.face_count()) f = static_cast<int>(v);
  } else if (ref.is_string()) {
    f = p.face_index(ref.get<std::string>());
  }
  if (!f) throw SchemeError(SKind::unknown_face, "unknown face reference " + ref.dump());
  return *f;
}

Json face_ref(const AbstractPolyhedron& p, int f) {
  if (p.face_names().empty()) return f;
  return p.face_label(f);
}

// Orientation-reversing correspondence used before any twist: for faces
// sharing an edge, the fold that fixes the shared vertices; otherwise each
// vertex goes to its unique neighbour on the target.
std::vector<int> untwisted_map(const AbstractPolyhedron& p, int src, int dst) {
  const auto& inc = p.incidence();
  const auto& s = p.face(src);
  const auto& t = p.face(dst);
  const std::size_t n = s.size();
  std::vector<int> shared;
  for (int v : s)
    if (p.position_in_face(dst, v) >= 0) shared.push_back(v);
  if (shared.size() == 2) {
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<int> image(n);
      for (std::size_t i = 0; i < n; ++i) image[i] = t[(k + n - i) % n];
      bool fixes = true;
      for (int v : shared) fixes = fixes && image[static_cast<std::size_t>(p.position_in_face(src, v))] == v;
      if (fixes) return image;
    }
    throw SchemeError(SKind::twist, "no orientation-reversing fold exists between these faces");
  }
  if (!shared.empty()) throw SchemeError(SKind::twist, "twist sugar needs faces that share an edge or no vertex");
  std::vector<int> image;
  for (int u : s) {
    int found = -1;
    for (int w : t) {
      if (inc.edge_between(u, w) < 0) continue;
      if (found >= 0) throw SchemeError(SKind::twist, "twist sugar: vertex has several neighbours on the target face");
      found = w;
    }
    if (found < 0) throw SchemeError(SKind::twist, "twist sugar: vertex has no neighbour on the target face");
    image.push_back(found);
  }
  return image;
}

int view_sign(const AbstractPolyhedron& p, int dst, const Json& entry) {
  std::string view;
  if (entry.contains("view")) {
    view = entry.at("view").get<std::string>();
  } else {
    // Senses are read by an observer on the right/top/front side of the cube.
    static const std::set<std::string> outside_seen{"top", "front", "right"};
    static const std::set<std::string> inside_seen{"bottom", "back", "left"};
    const std::string name = p.face_names().empty() ? std::string() : p.face_label(dst);
    if (outside_seen.count(name)) view = "exterior";
    else if (inside_seen.count(name)) view = "interior";
    else throw SchemeError(SKind::twist, "twist on an unnamed face needs an explicit \"view\"");
  }
  if (view == "interior") return 1;
  if (view == "exterior") return -1;
  throw SchemeError(SKind::twist, "view must be \"interior\" or \"exterior\"");
}

std::vector<int> twisted_map(const AbstractPolyhedron& p, int src, int dst, const Json& entry) {
  const auto& t = p.face(dst);
  const auto n = static_cast<long>(t.size());
  if (p.face(src).size() != t.size()) throw SchemeError(SKind::length_mismatch, "twist between faces of different lengths");
  long quarter = entry.at("twist_quarter_turns").get<long>();
  if (quarter < 0 || quarter >= n) throw SchemeError(SKind::twist, "twist steps must lie in [0, face length)");
  int sense = 1;
  if (entry.contains("sense")) {
    auto s = entry.at("sense").get<std::string>();
    if (s == "ccw") sense = -1;
    else if (s != "cw") throw SchemeError(SKind::twist, "sense must be \"cw\" or \"ccw\"");
  }
  // One step along the target's outward counterclockwise order is a clockwise
  // step for a viewer inside the polyhedron.
  long shift = quarter % 2 == 0 ? quarter : quarter * sense * view_sign(p, dst, entry);
  auto base = untwisted_map(p, src, dst);
  std::vector<int> image;
  for (int w : base) {
    long j = p.position_in_face(dst, w) + shift;
    image.push_back(t[static_cast<std::size_t>(((j % n) + n) % n)]);
  }
  return image;
}

}  // namespace

PairingScheme scheme_from_json(const AbstractPolyhedron& p, const Json& doc) {
  try {
    PairingScheme s;
    for (const auto& entry : doc.at("pairings")) {
      FacePairing fp;
      fp.generator = entry.at("gen").get<std::string>();
      fp.source = resolve_face(p, entry.at("from"));
      fp.target = resolve_face(p, entry.at("to"));
      if (entry.contains("map")) {
        const auto& m = entry.at("map");
        for (int v : p.face(fp.source)) {
          const auto& id = p.vertex_ids()[static_cast<std::size_t>(v)];
          if (!m.contains(id)) throw SchemeError(SKind::not_bijective, "map of " + fp.generator + " misses vertex " + id);
          auto w = p.vertex_index(m.at(id).get<std::string>());
          if (!w) throw SchemeError(SKind::not_bijective, "map of " + fp.generator + " names an unknown vertex");
          fp.image.push_back(*w);
        }
        if (m.size() != p.face(fp.source).size())
          throw SchemeError(SKind::not_bijective, "map of " + fp.generator + " has entries off the source face");
      } else if (entry.contains("twist_quarter_turns")) {
        if (fp.source != fp.target) fp.image = twisted_map(p, fp.source, fp.target, entry);
      } else {
        throw ParseError("pairing " + fp.generator + " needs \"map\" or \"twist_quarter_turns\"");
      }
      s.pairings.push_back(std::move(fp));
    }
    return s;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed scheme document: ") + e.what());
  }
}

Json scheme_to_json(const AbstractPolyhedron& p, const PairingScheme& s) {
  Json pairings = Json::array();
  for (const auto& fp : s.pairings) {
    Json m = Json::object();
    const auto& src = p.face(fp.source);
    for (std::size_t i = 0; i < src.size() && i < fp.image.size(); ++i)
      m[p.vertex_ids()[static_cast<std::size_t>(src[i])]] = p.vertex_ids()[static_cast<std::size_t>(fp.image[i])];
    pairings.push_back({{"gen", fp.generator}, {"from", face_ref(p, fp.source)}, {"to", face_ref(p, fp.target)}, {"map", m}});
  }
  return Json{{"pairings", pairings}};
}

Json orbits_to_json(const AbstractPolyhedron& p, const std::vector<EdgeOrbit>& orbits) {
  Json out = Json::array();
  for (const auto& o : orbits) {
    Json steps = Json::array();
    for (const auto& st : o.steps)
      steps.push_back({{"edge", st.edge}, {"face", face_ref(p, st.side_face)}, {"letter", st.letter.str()}});
    out.push_back(std::move(steps));
  }
  return out;
}

}  // namespace hypdom
