#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypdom/angles.hpp"
#include "hypdom/enumerate.hpp"
#include "hypdom/geometry.hpp"
#include "hypdom/pairings.hpp"
#include "hypdom/polytope.hpp"
#include "hypdom/reference_cube.hpp"

namespace fixtures {

using namespace hypdom;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string data_path(const std::string& rel) { return std::string(HYPDOM_DATA_DIR) + "/" + rel; }

inline AbstractPolyhedron solid(const std::string& name) {
  return load_polyhedron(read_file(data_path("polyhedra/" + name + ".json")));
}

inline PairingScheme bundled_scheme(const AbstractPolyhedron& p, const std::string& name) {
  return scheme_from_json(p, Json::parse(read_file(data_path("schemes/" + name + ".json"))));
}

inline const std::vector<std::string>& platonic_names() {
  static const std::vector<std::string> names{"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"};
  return names;
}

// Cube edge labels 1..12 of the reference drawings, as pairs of corners
// (x, y, z) with x left->right, y down->up, z back->front.
using Corner = std::array<int, 3>;
inline const std::map<int, std::array<Corner, 2>>& drawing_labels() {
  static const std::map<int, std::array<Corner, 2>> labels{
      {1, {{{0, 0, 1}, {1, 0, 1}}}},  {2, {{{0, 0, 0}, {0, 0, 1}}}},  {3, {{{1, 0, 0}, {1, 0, 1}}}},
      {4, {{{0, 0, 0}, {1, 0, 0}}}},  {5, {{{0, 1, 1}, {1, 1, 1}}}},  {6, {{{0, 1, 0}, {0, 1, 1}}}},
      {7, {{{1, 1, 0}, {1, 1, 1}}}},  {8, {{{0, 1, 0}, {1, 1, 0}}}},  {9, {{{0, 0, 1}, {0, 1, 1}}}},
      {10, {{{1, 0, 1}, {1, 1, 1}}}}, {11, {{{1, 0, 0}, {1, 1, 0}}}}, {12, {{{0, 0, 0}, {0, 1, 0}}}}};
  return labels;
}

inline int cube_vertex(const AbstractPolyhedron& cube, const Corner& c) {
  for (int v = 0; v < cube.vertex_count(); ++v)
    if (reference_cube::corner(cube.vertex_ids()[static_cast<std::size_t>(v)]) == c) return v;
  throw std::runtime_error("corner not found");
}

inline int labeled_edge(const AbstractPolyhedron& cube, int label) {
  const auto& ends = drawing_labels().at(label);
  return cube.incidence().edge_between(cube_vertex(cube, ends[0]), cube_vertex(cube, ends[1]));
}

inline std::vector<int> labeled_edges(const AbstractPolyhedron& cube, const std::vector<int>& labels) {
  std::vector<int> out;
  for (int l : labels) out.push_back(labeled_edge(cube, l));
  std::sort(out.begin(), out.end());
  return out;
}

// Edge partition as a set of sorted classes.
inline std::set<std::vector<int>> as_partition(std::vector<std::vector<int>> classes) {
  std::set<std::vector<int>> out;
  for (auto& c : classes) {
    std::sort(c.begin(), c.end());
    out.insert(c);
  }
  return out;
}

// Two-class partitions from the reference drawings.
inline EdgeClasses twelve_six_six(const AbstractPolyhedron& cube) {
  return {labeled_edges(cube, {2, 4, 5, 6, 10, 11}), labeled_edges(cube, {1, 3, 7, 8, 9, 12})};
}

inline EdgeClasses five_seven(const AbstractPolyhedron& cube) {
  return {labeled_edges(cube, {2, 5, 6, 10, 11}), labeled_edges(cube, {1, 3, 4, 7, 8, 9, 12})};
}

// Labeled exterior angles of the 5-7 drawing: 4/5 on edges 3, 7, 9, 12.
inline AngleAssignment five_seven_angles(const AbstractPolyhedron& cube) {
  AngleAssignment q(static_cast<std::size_t>(cube.edge_count()), Rational(3, 5));
  for (int l : {3, 7, 9, 12}) q[static_cast<std::size_t>(labeled_edge(cube, l))] = Rational(4, 5);
  return q;
}

inline AngleAssignment constant_angles(const AbstractPolyhedron& p, const Rational& v) {
  return AngleAssignment(static_cast<std::size_t>(p.edge_count()), v);
}

// Published generator matrices.
namespace published {
inline const double s3 = std::sqrt(3.0);
inline const Complex I{0, 1};

inline MobiusMap A() { return MobiusMap(I - s3, 4, 1, I - s3); }
inline MobiusMap B() { return MobiusMap(1.0 - s3 * I, 4, -1, 1.0 - s3 * I); }
inline MobiusMap C() { return MobiusMap((1 - s3) * (1.0 - I), 0, 0, -(1 + s3) * (1.0 + I)); }
inline MobiusMap P() {
  return MobiusMap(2.0 * (1.0 + I), -4 * s3 * (1.0 + I), -s3 * (1.0 + I), 2.0 * (1.0 + I));
}
inline MobiusMap Q() {
  return MobiusMap(Complex(2 + 2 * s3, -2 + 2 * s3), Complex(20 + 12 * s3, 4 + 4 * s3), Complex(s3 - 1, -1 - s3),
                   Complex(-2 * s3 - 2, 10 + 6 * s3));
}
inline MobiusMap R() {
  return MobiusMap(Complex(10 * s3 - 18, 6 * s3 - 10), Complex(-12 * s3 + 20, 20 * s3 - 36), Complex(s3 - 3, -1 + s3),
                   Complex(2 * s3 - 2, 6 - 2 * s3));
}
}  // namespace published

// Union-find over edges glued by the pairings; independent of flag traversal.
inline std::vector<std::vector<int>> glued_edge_components(const AbstractPolyhedron& p, const PairingScheme& s) {
  const auto& inc = p.incidence();
  std::vector<int> parent(inc.edge_count());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& fp : s.pairings) {
    const auto& src = p.face(fp.source);
    const std::size_t n = src.size();
    for (std::size_t i = 0; i < n; ++i) {
      int e = inc.edge_between(src[i], src[(i + 1) % n]);
      int f = inc.edge_between(fp.image[i], fp.image[(i + 1) % n]);
      parent[static_cast<std::size_t>(find(e))] = find(f);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int e = 0; e < static_cast<int>(inc.edge_count()); ++e) groups[find(e)].push_back(e);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(members);
  return out;
}

// Gaussian elimination rank over a prime field; independent of solve_exact.
inline std::size_t modular_rank(const LinearSystem& sys, bool augmented) {
  constexpr long long mod = 1000000007LL;
  auto reduce = [&](const Rational& r) {
    long long num = r.get_num().get_si() % mod;
    long long den = r.get_den().get_si() % mod;
    if (num < 0) num += mod;
    long long inv = 1, base = den, e = mod - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % mod;
      base = base * base % mod;
      e >>= 1;
    }
    return num * inv % mod;
  };
  std::vector<std::vector<long long>> m;
  for (const auto& row : sys.rows) {
    std::vector<long long> r;
    for (const auto& c : row.coeffs) r.push_back(reduce(c));
    if (augmented) r.push_back(reduce(row.rhs));
    m.push_back(r);
  }
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    long long inv = 1, base = m[rank][c], e = mod - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % mod;
      base = base * base % mod;
      e >>= 1;
    }
    for (auto& x : m[rank]) x = x * inv % mod;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      long long f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % mod + mod) % mod;
    }
    ++rank;
  }
  return rank;
}

}  // namespace fixtures
