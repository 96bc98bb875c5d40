#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hypdom {

using Json = nlohmann::json;

// Edge ids follow first encounter while scanning faces in document order.
// Pairs are stored with the smaller index first.
struct IncidenceData {
  std::vector<std::array<int, 2>> edge_vertices;
  std::vector<std::array<int, 2>> edge_faces;
  std::vector<std::vector<int>> vertex_edges;
  // face_edges[f][i] joins faces[f][i] and faces[f][i+1].
  std::vector<std::vector<int>> face_edges;
  std::map<std::pair<int, int>, int> edge_index;

  std::size_t edge_count() const { return edge_vertices.size(); }
  // -1 when u and v are not joined by an edge.
  int edge_between(int u, int v) const;
  int other_face(int edge, int face) const;
};

// Combinatorial polyhedron with faces stored counterclockwise as seen from
// outside. Vertices and faces are addressed by index internally; the original
// identifiers are kept for I/O. Immutable once constructed.
class AbstractPolyhedron {
 public:
  AbstractPolyhedron(std::string name, std::vector<std::string> vertices, std::vector<std::vector<int>> faces,
                     std::vector<std::string> face_names = {});

  const std::string& name() const { return name_; }
  const std::vector<std::string>& vertex_ids() const { return vertices_; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<int>& face(int f) const { return faces_[static_cast<std::size_t>(f)]; }
  const std::vector<std::string>& face_names() const { return face_names_; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(incidence_.edge_count()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const IncidenceData& incidence() const { return incidence_; }

  std::optional<int> vertex_index(std::string_view id) const;
  // Accepts a face name or a decimal face index.
  std::optional<int> face_index(std::string_view ref) const;
  // Face name if the document named its faces, otherwise the decimal index.
  std::string face_label(int f) const;
  // Position of vertex v in face f's cycle, or -1.
  int position_in_face(int f, int v) const;

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::string> face_names_;
  std::map<std::string, int, std::less<>> vertex_lookup_;
  IncidenceData incidence_;
};

AbstractPolyhedron load_polyhedron(std::string_view document);
AbstractPolyhedron polyhedron_from_json(const Json& doc);
Json to_json(const AbstractPolyhedron& p);

IncidenceData build_incidence(const AbstractPolyhedron& p);

// Nodes are primal faces, links are primal edges.
struct DualGraph {
  int node_count = 0;
  std::vector<std::array<int, 2>> links;
  std::vector<std::vector<int>> node_links;
  // Link sequence around each primal vertex, counterclockwise from outside.
  std::vector<std::vector<int>> facial_cycles;
};

DualGraph build_dual(const AbstractPolyhedron& p);

// Polyhedron whose vertices are the faces of p. Vertex ids are "f<index>".
AbstractPolyhedron dual_polyhedron(const AbstractPolyhedron& p);

struct Circuit {
  std::vector<int> links;
  std::vector<int> nodes;
  bool facial = false;
  int vertex = -1;  // primal vertex when facial
};

inline constexpr std::size_t kDefaultCircuitCap = 100000;

// Every simple circuit of the dual, each emitted once. Throws ResourceError
// once more than `cap` circuits have been found.
std::vector<Circuit> simple_circuits(const DualGraph& d, std::size_t cap = kDefaultCircuitCap);

std::vector<Circuit> non_facial_circuits(const DualGraph& d, std::size_t cap = kDefaultCircuitCap);

}  // namespace hypdom
