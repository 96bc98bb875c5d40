#include "hypdom/polytope.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "hypdom/errors.hpp"

namespace hypdom {

int IncidenceData::edge_between(int u, int v) const {
  auto it = edge_index.find({std::min(u, v), std::max(u, v)});
  return it == edge_index.end() ? -1 : it->second;
}

int IncidenceData::other_face(int edge, int face) const {
  const auto& f = edge_faces[static_cast<std::size_t>(edge)];
  return f[0] == face ? f[1] : f[0];
}

namespace {

using Kind = PolyhedronError::Kind;

[[noreturn]] void fail(Kind kind, const std::string& msg) { throw PolyhedronError(kind, msg); }

IncidenceData derive_incidence(int vertex_count, const std::vector<std::vector<int>>& faces) {
  IncidenceData inc;
  inc.vertex_edges.assign(static_cast<std::size_t>(vertex_count), {});
  inc.face_edges.assign(faces.size(), {});
  std::vector<std::vector<int>> edge_face_lists;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& cyc = faces[f];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i];
      int v = cyc[(i + 1) % cyc.size()];
      auto key = std::make_pair(std::min(u, v), std::max(u, v));
      auto [it, inserted] = inc.edge_index.emplace(key, static_cast<int>(inc.edge_vertices.size()));
      if (inserted) {
        inc.edge_vertices.push_back({key.first, key.second});
        edge_face_lists.emplace_back();
      }
      edge_face_lists[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(f));
      inc.face_edges[f].push_back(it->second);
    }
  }
  for (std::size_t e = 0; e < edge_face_lists.size(); ++e) {
    const auto& fl = edge_face_lists[e];
    if (fl.size() != 2 || fl[0] == fl[1]) {
      std::ostringstream os;
      os << "edge " << inc.edge_vertices[e][0] << "-" << inc.edge_vertices[e][1] << " borders " << fl.size()
         << " face slots (expected two distinct faces)";
      fail(Kind::non_manifold, os.str());
    }
    inc.edge_faces.push_back({std::min(fl[0], fl[1]), std::max(fl[0], fl[1])});
    inc.vertex_edges[static_cast<std::size_t>(inc.edge_vertices[e][0])].push_back(static_cast<int>(e));
    inc.vertex_edges[static_cast<std::size_t>(inc.edge_vertices[e][1])].push_back(static_cast<int>(e));
  }
  return inc;
}

}  // namespace

AbstractPolyhedron::AbstractPolyhedron(std::string name, std::vector<std::string> vertices,
                                       std::vector<std::vector<int>> faces, std::vector<std::string> face_names)
    : name_(std::move(name)), vertices_(std::move(vertices)), faces_(std::move(faces)), face_names_(std::move(face_names)) {
  if (vertices_.empty() || faces_.empty()) fail(Kind::empty, "polyhedron has no vertices or no faces");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_lookup_.emplace(vertices_[i], static_cast<int>(i)).second)
      fail(Kind::repeated_vertex, "duplicate vertex id '" + vertices_[i] + "'");
  }
  if (!face_names_.empty()) {
    if (face_names_.size() != faces_.size()) fail(Kind::empty, "face_names length differs from face count");
    std::set<std::string> seen(face_names_.begin(), face_names_.end());
    if (seen.size() != face_names_.size()) fail(Kind::empty, "duplicate face name");
  }

  const int nv = vertex_count();
  std::vector<bool> used(vertices_.size(), false);
  std::set<std::pair<int, int>> directed;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& cyc = faces_[f];
    if (cyc.size() < 3) fail(Kind::short_face, "face " + std::to_string(f) + " has fewer than 3 vertices");
    std::set<int> in_face;
    for (int v : cyc) {
      if (v < 0 || v >= nv) fail(Kind::unknown_vertex, "face " + std::to_string(f) + " references an unknown vertex");
      if (!in_face.insert(v).second)
        fail(Kind::repeated_vertex, "face " + std::to_string(f) + " repeats vertex '" + vertices_[static_cast<std::size_t>(v)] + "'");
      used[static_cast<std::size_t>(v)] = true;
    }
  }
  for (std::size_t v = 0; v < used.size(); ++v)
    if (!used[v]) fail(Kind::unused_vertex, "vertex '" + vertices_[v] + "' lies on no face");

  incidence_ = derive_incidence(nv, faces_);

  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& cyc = faces_[f];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (!directed.emplace(cyc[i], cyc[(i + 1) % cyc.size()]).second)
        fail(Kind::orientation, "face cycles are not consistently oriented at edge " +
                                    vertices_[static_cast<std::size_t>(cyc[i])] + "-" +
                                    vertices_[static_cast<std::size_t>(cyc[(i + 1) % cyc.size()])]);
    }
  }

  // Face adjacency must be connected.
  std::vector<int> comp(faces_.size(), -1);
  std::vector<int> stack{0};
  comp[0] = 0;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int e : incidence_.face_edges[static_cast<std::size_t>(f)]) {
      int g = incidence_.other_face(e, f);
      if (comp[static_cast<std::size_t>(g)] < 0) {
        comp[static_cast<std::size_t>(g)] = 0;
        ++reached;
        stack.push_back(g);
      }
    }
  }
  if (reached != faces_.size()) fail(Kind::disconnected, "face adjacency graph is disconnected");

  const int chi = nv - edge_count() + face_count();
  if (chi != 2) fail(Kind::euler, "V - E + F = " + std::to_string(chi) + ", expected 2");
}

std::optional<int> AbstractPolyhedron::vertex_index(std::string_view id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> AbstractPolyhedron::face_index(std::string_view ref) const {
  for (std::size_t i = 0; i < face_names_.size(); ++i)
    if (face_names_[i] == ref) return static_cast<int>(i);
  int value = 0;
  auto [ptr, ec] = std::from_chars(ref.data(), ref.data() + ref.size(), value);
  if (ec == std::errc() && ptr == ref.data() + ref.size() && value >= 0 && value < face_count()) return value;
  return std::nullopt;
}

std::string AbstractPolyhedron::face_label(int f) const {
  if (!face_names_.empty()) return face_names_[static_cast<std::size_t>(f)];
  return std::to_string(f);
}

int AbstractPolyhedron::position_in_face(int f, int v) const {
  const auto& cyc = face(f);
  auto it = std::find(cyc.begin(), cyc.end(), v);
  return it == cyc.end() ? -1 : static_cast<int>(it - cyc.begin());
}

AbstractPolyhedron polyhedron_from_json(const Json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("polyhedron document must be a JSON object");
    auto name = doc.at("name").get<std::string>();
    auto vertices = doc.at("vertices").get<std::vector<std::string>>();
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], static_cast<int>(i));
    std::vector<std::vector<int>> faces;
    for (const auto& jf : doc.at("faces")) {
      std::vector<int> cyc;
      for (const auto& jv : jf) {
        auto id = jv.get<std::string>();
        auto it = index.find(id);
        if (it == index.end()) throw PolyhedronError(PolyhedronError::Kind::unknown_vertex, "face references unknown vertex '" + id + "'");
        cyc.push_back(it->second);
      }
      faces.push_back(std::move(cyc));
    }
    std::vector<std::string> face_names;
    if (doc.contains("face_names")) face_names = doc.at("face_names").get<std::vector<std::string>>();
    return AbstractPolyhedron(std::move(name), std::move(vertices), std::move(faces), std::move(face_names));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed polyhedron document: ") + e.what());
  }
}

AbstractPolyhedron load_polyhedron(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return polyhedron_from_json(doc);
}

Json to_json(const AbstractPolyhedron& p) {
  Json faces = Json::array();
  for (const auto& cyc : p.faces()) {
    Json jf = Json::array();
    for (int v : cyc) jf.push_back(p.vertex_ids()[static_cast<std::size_t>(v)]);
    faces.push_back(std::move(jf));
  }
  Json doc{{"name", p.name()}, {"vertices", p.vertex_ids()}, {"faces", std::move(faces)}};
  if (!p.face_names().empty()) doc["face_names"] = p.face_names();
  return doc;
}

IncidenceData build_incidence(const AbstractPolyhedron& p) { return derive_incidence(p.vertex_count(), p.faces()); }

namespace {

// Faces around vertex v, counterclockwise from outside, with the edges
// crossed between consecutive faces. links[i] separates faces[i] and faces[i+1].
std::pair<std::vector<int>, std::vector<int>> rotation_at(const AbstractPolyhedron& p, int v) {
  const auto& inc = p.incidence();
  int start = -1;
  for (int f = 0; f < p.face_count() && start < 0; ++f)
    if (p.position_in_face(f, v) >= 0) start = f;
  std::vector<int> faces, links;
  int f = start;
  do {
    const auto& cyc = p.face(f);
    int i = p.position_in_face(f, v);
    int u = cyc[(static_cast<std::size_t>(i) + cyc.size() - 1) % cyc.size()];
    int e = inc.edge_between(u, v);
    faces.push_back(f);
    links.push_back(e);
    f = inc.other_face(e, f);
  } while (f != start);
  return {faces, links};
}

}  // namespace

DualGraph build_dual(const AbstractPolyhedron& p) {
  const auto& inc = p.incidence();
  DualGraph d;
  d.node_count = p.face_count();
  d.links = inc.edge_faces;
  d.node_links = inc.face_edges;
  for (auto& nl : d.node_links) std::sort(nl.begin(), nl.end());
  for (int v = 0; v < p.vertex_count(); ++v) d.facial_cycles.push_back(rotation_at(p, v).second);
  return d;
}

AbstractPolyhedron dual_polyhedron(const AbstractPolyhedron& p) {
  std::vector<std::string> ids;
  for (int f = 0; f < p.face_count(); ++f) ids.push_back("f" + std::to_string(f));
  std::vector<std::vector<int>> faces;
  for (int v = 0; v < p.vertex_count(); ++v) faces.push_back(rotation_at(p, v).first);
  return AbstractPolyhedron(p.name() + "-dual", std::move(ids), std::move(faces));
}

namespace {

struct CircuitSearch {
  const DualGraph& d;
  std::size_t cap;
  int start = 0;
  std::vector<int> nodes;
  std::vector<int> links;
  std::vector<bool> on_path;
  std::vector<Circuit> out;

  void extend(int u) {
    for (int l : d.node_links[static_cast<std::size_t>(u)]) {
      if (!links.empty() && l == links.back()) continue;
      const auto& ends = d.links[static_cast<std::size_t>(l)];
      int w = ends[0] == u ? ends[1] : ends[0];
      if (w == start) {
        if (links.empty() || links.front() >= l) continue;  // one direction only
        Circuit c;
        c.nodes = nodes;
        c.links = links;
        c.links.push_back(l);
        out.push_back(std::move(c));
        if (out.size() > cap)
          throw ResourceError("simple circuit count exceeds cap " + std::to_string(cap));
      } else if (w > start && !on_path[static_cast<std::size_t>(w)]) {
        on_path[static_cast<std::size_t>(w)] = true;
        nodes.push_back(w);
        links.push_back(l);
        extend(w);
        links.pop_back();
        nodes.pop_back();
        on_path[static_cast<std::size_t>(w)] = false;
      }
    }
  }
};

}  // namespace

std::vector<Circuit> simple_circuits(const DualGraph& d, std::size_t cap) {
  if (d.links.empty()) throw InputError("dual graph has no links");
  CircuitSearch search{d, cap, 0, {}, {}, {}, {}};
  search.on_path.assign(static_cast<std::size_t>(d.node_count), false);
  for (int s = 0; s < d.node_count; ++s) {
    search.start = s;
    search.nodes = {s};
    search.on_path[static_cast<std::size_t>(s)] = true;
    search.extend(s);
    search.on_path[static_cast<std::size_t>(s)] = false;
  }

  std::map<std::vector<int>, int> vertex_of;
  for (std::size_t v = 0; v < d.facial_cycles.size(); ++v) {
    auto key = d.facial_cycles[v];
    std::sort(key.begin(), key.end());
    vertex_of.emplace(std::move(key), static_cast<int>(v));
  }
  for (auto& c : search.out) {
    auto key = c.links;
    std::sort(key.begin(), key.end());
    if (auto it = vertex_of.find(key); it != vertex_of.end()) {
      c.facial = true;
      c.vertex = it->second;
    }
  }
  return std::move(search.out);
}

std::vector<Circuit> non_facial_circuits(const DualGraph& d, std::size_t cap) {
  auto all = simple_circuits(d, cap);
  std::vector<Circuit> out;
  for (auto& c : all)
    if (!c.facial) out.push_back(std::move(c));
  return out;
}

}  // namespace hypdom
