#include "hypdom/pairings.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <sstream>
#include <utility>

#include "hypdom/errors.hpp"

namespace hypdom {

namespace {

std::size_t wrap(long i, std::size_t n) {
  auto m = static_cast<long>(n);
  return static_cast<std::size_t>(((i % m) + m) % m);
}

// Extends a partial automorphism seeded by sending face 0 onto face h.
std::optional<Automorphism> grow(const AbstractPolyhedron& p, int h, std::size_t shift, int dir) {
  const auto& inc = p.incidence();
  const auto nv = static_cast<std::size_t>(p.vertex_count());
  const auto nf = static_cast<std::size_t>(p.face_count());
  Automorphism g;
  g.vertex_map.assign(nv, -1);
  g.face_map.assign(nf, -1);
  g.orientation_preserving = dir > 0;

  // Maps face f onto face img so that f[i] lands on img[j] and the cycles run
  // in direction dir.
  auto place = [&](int f, int img, std::size_t i, std::size_t j) {
    const auto& a = p.face(f);
    const auto& b = p.face(img);
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      int src = a[(i + k) % a.size()];
      int dst = b[wrap(static_cast<long>(j) + dir * static_cast<long>(k), b.size())];
      int& slot = g.vertex_map[static_cast<std::size_t>(src)];
      if (slot >= 0 && slot != dst) return false;
      slot = dst;
    }
    g.face_map[static_cast<std::size_t>(f)] = img;
    return true;
  };

  if (!place(0, h, 0, shift)) return std::nullopt;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    int img = g.face_map[static_cast<std::size_t>(f)];
    for (int e : inc.face_edges[static_cast<std::size_t>(f)]) {
      int f2 = inc.other_face(e, f);
      if (g.face_map[static_cast<std::size_t>(f2)] >= 0) continue;
      const auto& ends = inc.edge_vertices[static_cast<std::size_t>(e)];
      int e2 = inc.edge_between(g.vertex_map[static_cast<std::size_t>(ends[0])], g.vertex_map[static_cast<std::size_t>(ends[1])]);
      if (e2 < 0) return std::nullopt;
      int img2 = inc.other_face(e2, img);
      int anchor = ends[0];
      int i = p.position_in_face(f2, anchor);
      int j = p.position_in_face(img2, g.vertex_map[static_cast<std::size_t>(anchor)]);
      if (j < 0 || !place(f2, img2, static_cast<std::size_t>(i), static_cast<std::size_t>(j))) return std::nullopt;
      queue.push_back(f2);
    }
  }
  // Check every face lands on a face with the right cyclic order and that the
  // maps are bijections.
  std::vector<bool> vhit(nv, false), fhit(nf, false);
  for (std::size_t v = 0; v < nv; ++v) {
    int w = g.vertex_map[v];
    if (w < 0 || vhit[static_cast<std::size_t>(w)]) return std::nullopt;
    vhit[static_cast<std::size_t>(w)] = true;
  }
  for (std::size_t f = 0; f < nf; ++f) {
    int img = g.face_map[f];
    if (img < 0 || fhit[static_cast<std::size_t>(img)]) return std::nullopt;
    fhit[static_cast<std::size_t>(img)] = true;
    const auto& a = p.face(static_cast<int>(f));
    const auto& b = p.face(img);
    int j = p.position_in_face(img, g.vertex_map[static_cast<std::size_t>(a[0])]);
    if (j < 0) return std::nullopt;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (g.vertex_map[static_cast<std::size_t>(a[k])] != b[wrap(j + dir * static_cast<long>(k), b.size())]) return std::nullopt;
  }
  return g;
}

std::string serialize(std::vector<std::vector<std::pair<int, int>>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  std::ostringstream os;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k) os << ';';
    for (std::size_t i = 0; i < pairs[k].size(); ++i) {
      if (i) os << ',';
      os << pairs[k][i].first << '>' << pairs[k][i].second;
    }
  }
  return os.str();
}

// Pairing as sorted vertex pairs, oriented whichever way sorts first.
std::vector<std::pair<int, int>> normalized_pairs(const std::vector<int>& src, const std::vector<int>& image,
                                                  const std::vector<int>* relabel) {
  std::vector<std::pair<int, int>> fwd, bwd;
  for (std::size_t i = 0; i < src.size(); ++i) {
    int u = relabel ? (*relabel)[static_cast<std::size_t>(src[i])] : src[i];
    int w = relabel ? (*relabel)[static_cast<std::size_t>(image[i])] : image[i];
    fwd.emplace_back(u, w);
    bwd.emplace_back(w, u);
  }
  std::sort(fwd.begin(), fwd.end());
  std::sort(bwd.begin(), bwd.end());
  return std::min(fwd, bwd);
}

std::string signature_under(const AbstractPolyhedron& p, const PairingScheme& s, const std::vector<int>* relabel) {
  std::vector<std::vector<std::pair<int, int>>> parts;
  for (const auto& fp : s.pairings) parts.push_back(normalized_pairs(p.face(fp.source), fp.image, relabel));
  return serialize(std::move(parts));
}

}  // namespace

std::vector<Automorphism> symmetry_group(const AbstractPolyhedron& p) {
  std::vector<Automorphism> out;
  const auto n0 = p.face(0).size();
  for (int dir : {1, -1}) {
    for (int h = 0; h < p.face_count(); ++h) {
      if (p.face(h).size() != n0) continue;
      for (std::size_t s = 0; s < n0; ++s)
        if (auto g = grow(p, h, s, dir)) out.push_back(std::move(*g));
    }
  }
  // Identity first, then a fixed order.
  std::sort(out.begin(), out.end(), [](const Automorphism& a, const Automorphism& b) {
    if (a.orientation_preserving != b.orientation_preserving) return a.orientation_preserving;
    return a.vertex_map < b.vertex_map;
  });
  return out;
}

PairingScheme apply_automorphism(const AbstractPolyhedron& p, const PairingScheme& s, const Automorphism& g) {
  std::vector<int> inverse(g.vertex_map.size());
  for (std::size_t v = 0; v < g.vertex_map.size(); ++v) inverse[static_cast<std::size_t>(g.vertex_map[v])] = static_cast<int>(v);
  PairingScheme out;
  for (const auto& fp : s.pairings) {
    FacePairing q;
    q.generator = fp.generator;
    q.source = g.face_map[static_cast<std::size_t>(fp.source)];
    q.target = g.face_map[static_cast<std::size_t>(fp.target)];
    for (int w : p.face(q.source)) {
      int u = inverse[static_cast<std::size_t>(w)];
      int i = p.position_in_face(fp.source, u);
      q.image.push_back(g.vertex_map[static_cast<std::size_t>(fp.image[static_cast<std::size_t>(i)])]);
    }
    out.pairings.push_back(std::move(q));
  }
  return out;
}

std::string scheme_signature(const AbstractPolyhedron& p, const PairingScheme& s) { return signature_under(p, s, nullptr); }

std::string canonicalize(const CheckedScheme& s, const std::vector<Automorphism>& group, SymmetryChoice choice) {
  std::optional<std::string> best;
  for (const auto& g : group) {
    if (choice == SymmetryChoice::rotations && !g.orientation_preserving) continue;
    auto key = signature_under(s.polyhedron(), s.scheme(), &g.vertex_map);
    if (!best || key < *best) best = std::move(key);
  }
  if (!best) best = scheme_signature(s.polyhedron(), s.scheme());
  return *best;
}

}  // namespace hypdom
