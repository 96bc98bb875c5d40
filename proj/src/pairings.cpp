#include "hypdom/pairings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "hypdom/angles.hpp"
#include "hypdom/errors.hpp"

namespace hypdom {

Letter parse_letter(const std::string& text) {
  constexpr std::string_view suffix = "^-1";
  if (text.size() > suffix.size() && text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0)
    return {text.substr(0, text.size() - suffix.size()), true};
  if (text.size() > 1 && text.back() == '\'') return {text.substr(0, text.size() - 1), true};
  if (text.empty()) throw ParseError("empty letter");
  return {text, false};
}

std::string RelatorWord::str() const {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += l.str();
  }
  return out;
}

RelatorWord RelatorWord::inverse() const {
  RelatorWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(it->inverted());
  return w;
}

RelatorWord parse_word(const std::string& text) {
  RelatorWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) w.letters.push_back(parse_letter(tok));
  return w;
}

namespace {

using SKind = SchemeError::Kind;

[[noreturn]] void fail(SKind kind, const std::string& msg) { throw SchemeError(kind, msg); }

}  // namespace

CheckedScheme::CheckedScheme(const AbstractPolyhedron& p, PairingScheme s) : p_(&p), scheme_(std::move(s)) {
  const auto nf = static_cast<std::size_t>(p.face_count());
  partner_.assign(nf, -1);
  pairing_.assign(nf, -1);
  forward_.assign(nf, std::vector<int>(static_cast<std::size_t>(p.vertex_count()), -1));
  std::set<std::string> symbols;
  for (std::size_t k = 0; k < scheme_.pairings.size(); ++k) {
    const auto& fp = scheme_.pairings[k];
    if (fp.generator.empty() || !symbols.insert(fp.generator).second)
      fail(SKind::generator, "generator symbol '" + fp.generator + "' is empty or repeated");
    if (fp.source < 0 || fp.target < 0 || fp.source >= p.face_count() || fp.target >= p.face_count())
      fail(SKind::unknown_face, "pairing " + fp.generator + " references an unknown face");
    if (fp.source == fp.target) fail(SKind::self_paired, "pairing " + fp.generator + " pairs a face with itself");
    for (int f : {fp.source, fp.target}) {
      if (pairing_[static_cast<std::size_t>(f)] >= 0)
        fail(SKind::coverage, "face " + p.face_label(f) + " appears in more than one pairing");
      pairing_[static_cast<std::size_t>(f)] = static_cast<int>(k);
    }
    partner_[static_cast<std::size_t>(fp.source)] = fp.target;
    partner_[static_cast<std::size_t>(fp.target)] = fp.source;

    const auto& src = p.face(fp.source);
    const auto& dst = p.face(fp.target);
    if (src.size() != dst.size())
      fail(SKind::length_mismatch, "pairing " + fp.generator + " joins faces of different lengths");
    if (fp.image.size() != src.size()) fail(SKind::not_bijective, "pairing " + fp.generator + " does not map every vertex");
    const std::size_t n = src.size();
    std::vector<int> pos(n);
    std::set<int> hit;
    for (std::size_t i = 0; i < n; ++i) {
      int j = p.position_in_face(fp.target, fp.image[i]);
      if (j < 0 || !hit.insert(j).second)
        fail(SKind::not_bijective, "pairing " + fp.generator + " is not a bijection onto the target boundary");
      pos[i] = j;
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto expected = static_cast<int>((static_cast<std::size_t>(pos[i]) + n - 1) % n);
      if (pos[(i + 1) % n] != expected)
        fail(SKind::orientation, "pairing " + fp.generator + " does not reverse the boundary orientation");
    }
    for (std::size_t i = 0; i < n; ++i) {
      forward_[static_cast<std::size_t>(fp.source)][static_cast<std::size_t>(src[i])] = fp.image[i];
      forward_[static_cast<std::size_t>(fp.target)][static_cast<std::size_t>(fp.image[i])] = src[i];
    }
  }
  for (std::size_t f = 0; f < nf; ++f)
    if (pairing_[f] < 0) fail(SKind::coverage, "face " + p.face_label(static_cast<int>(f)) + " is not paired");
}

bool CheckedScheme::is_source(int face) const {
  return scheme_.pairings[static_cast<std::size_t>(pairing_of(face))].source == face;
}

int CheckedScheme::map_vertex(int face, int v) const {
  return forward_[static_cast<std::size_t>(face)][static_cast<std::size_t>(v)];
}

Letter CheckedScheme::letter_from(int face) const {
  return {scheme_.pairings[static_cast<std::size_t>(pairing_of(face))].generator, !is_source(face)};
}

CheckedScheme validate_scheme(const AbstractPolyhedron& p, PairingScheme s) { return CheckedScheme(p, std::move(s)); }

std::vector<int> EdgeOrbit::edges() const {
  std::vector<int> out;
  for (const auto& st : steps) out.push_back(st.edge);
  return out;
}

std::vector<EdgeOrbit> edge_orbits(const CheckedScheme& s) {
  const auto& p = s.polyhedron();
  const auto& inc = p.incidence();
  const auto ne = static_cast<std::size_t>(p.edge_count());
  std::vector<bool> visited(ne, false);
  std::vector<EdgeOrbit> out;
  for (std::size_t e0 = 0; e0 < ne; ++e0) {
    if (visited[e0]) continue;
    EdgeOrbit orbit;
    const int start_edge = static_cast<int>(e0);
    const int start_face = inc.edge_faces[e0][0];
    int e = start_edge;
    int f = start_face;
    do {
      if (visited[static_cast<std::size_t>(e)])
        throw InvariantError("edge " + std::to_string(e) + " reached twice during orbit traversal");
      visited[static_cast<std::size_t>(e)] = true;
      orbit.steps.push_back({e, f, s.letter_from(f)});
      const auto& ends = inc.edge_vertices[static_cast<std::size_t>(e)];
      int g = s.partner(f);
      int e2 = inc.edge_between(s.map_vertex(f, ends[0]), s.map_vertex(f, ends[1]));
      if (e2 < 0) throw InvariantError("pairing image of an edge is not an edge");
      e = e2;
      f = inc.other_face(e2, g);
    } while (e != start_edge || f != start_face);
    out.push_back(std::move(orbit));
  }
  return out;
}

RelatorWord relator_word(const EdgeOrbit& o) {
  RelatorWord w;
  for (const auto& st : o.steps) w.letters.push_back(st.letter);
  return w;
}

std::vector<RelatorWord> relator_words(const std::vector<EdgeOrbit>& orbits) {
  std::vector<RelatorWord> out;
  for (const auto& o : orbits) out.push_back(relator_word(o));
  return out;
}

std::vector<std::vector<int>> orbit_classes(const std::vector<EdgeOrbit>& orbits) {
  std::vector<std::vector<int>> out;
  for (const auto& o : orbits) {
    auto e = o.edges();
    std::sort(e.begin(), e.end());
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::vector<int>> vertex_orbits(const CheckedScheme& s) {
  const auto& p = s.polyhedron();
  std::vector<int> parent(static_cast<std::size_t>(p.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& fp : s.scheme().pairings) {
    const auto& src = p.face(fp.source);
    for (std::size_t i = 0; i < src.size(); ++i) {
      int a = find(src[i]);
      int b = find(fp.image[i]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < p.vertex_count(); ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<std::size_t> detect_elliptic_generator(const CheckedScheme& s) {
  const auto& p = s.polyhedron();
  const auto& inc = p.incidence();
  std::vector<std::size_t> out;
  const auto& pairings = s.scheme().pairings;
  for (std::size_t k = 0; k < pairings.size(); ++k) {
    const auto& fp = pairings[k];
    for (int e : inc.face_edges[static_cast<std::size_t>(fp.source)]) {
      const auto& ends = inc.edge_vertices[static_cast<std::size_t>(e)];
      int e2 = inc.edge_between(s.map_vertex(fp.source, ends[0]), s.map_vertex(fp.source, ends[1]));
      if (e2 == e) {
        out.push_back(k);
        break;
      }
    }
  }
  return out;
}

bool pairs_adjacent_faces(const CheckedScheme& s, std::size_t pairing) {
  const auto& fp = s.scheme().pairings[pairing];
  const auto& inc = s.polyhedron().incidence();
  for (int e : inc.face_edges[static_cast<std::size_t>(fp.source)])
    if (inc.other_face(e, fp.source) == fp.target) return true;
  return false;
}

QuotientCensus quotient_census(const CheckedScheme& s, const std::vector<EdgeOrbit>& orbits) {
  const auto& p = s.polyhedron();
  std::vector<int> count(static_cast<std::size_t>(p.edge_count()), 0);
  for (const auto& o : orbits)
    for (int e : o.edges()) ++count[static_cast<std::size_t>(e)];
  for (int c : count)
    if (c != 1) throw InvariantError("edge orbits do not partition the edge set");

  QuotientCensus c;
  c.V = static_cast<int>(vertex_orbits(s).size());
  c.E = static_cast<int>(orbits.size());
  c.F = static_cast<int>(s.scheme().pairings.size());
  c.P = 1;
  c.q = c.V - c.E + c.F - c.P;
  if (2 * c.F != p.face_count()) throw InvariantError("face classes do not halve the face count");
  bool required_count = false;
  try {
    required_count = c.E == required_class_count(p);
  } catch (const ClassCountError&) {
  }
  if (required_count && c.V != c.q) throw InvariantError("census violates V = q");
  return c;
}

bool words_equivalent(const RelatorWord& a, const RelatorWord& b, bool allow_renaming) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n == 0) return true;
  auto matches = [&](const RelatorWord& c, std::size_t shift) {
    // letter in a -> (generator in c, flip)
    std::map<std::string, std::pair<std::string, bool>> fwd;
    std::map<std::string, std::string> back;
    for (std::size_t i = 0; i < n; ++i) {
      const Letter& x = a.letters[i];
      const Letter& y = c.letters[(i + shift) % n];
      if (!allow_renaming) {
        if (x != y) return false;
        continue;
      }
      bool flip = x.inverse != y.inverse;
      auto [it, inserted] = fwd.emplace(x.generator, std::make_pair(y.generator, flip));
      if (!inserted && it->second != std::make_pair(y.generator, flip)) return false;
      auto [jt, ins2] = back.emplace(y.generator, x.generator);
      if (!ins2 && jt->second != x.generator) return false;
    }
    return true;
  };
  const RelatorWord binv = b.inverse();
  for (std::size_t shift = 0; shift < n; ++shift)
    if (matches(b, shift) || matches(binv, shift)) return true;
  return false;
}

}  // namespace hypdom
