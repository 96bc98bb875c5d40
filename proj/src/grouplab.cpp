#include "hypdom/grouplab.hpp"

namespace hypdom {

SquaredTermResult has_squared_term(const std::vector<RelatorWord>& words) {
  SquaredTermResult out;
  for (std::size_t w = 0; w < words.size(); ++w) {
    const auto& l = words[w].letters;
    const std::size_t n = l.size();
    if (n < 2) continue;
    for (std::size_t i = 0; i < n; ++i) {
      // A two-letter word wraps onto the same pair; count it once.
      if (n == 2 && i == 1) break;
      if (l[i] == l[(i + 1) % n]) out.witnesses.push_back({w, i, l[i]});
    }
  }
  out.found = !out.witnesses.empty();
  return out;
}

bool is_y2z_word(const RelatorWord& w) {
  if (w.size() != 3) return false;
  const auto& l = w.letters;
  for (std::size_t i = 0; i < 3; ++i)
    if (l[i] == l[(i + 1) % 3] && l[(i + 2) % 3].generator != l[i].generator) return true;
  return false;
}

Y2ZVerdict y2z_class_link(const std::vector<EdgeOrbit>& orbits, const std::vector<RelatorWord>& words) {
  Y2ZVerdict v;
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (orbits[i].size() == 3) v.size3_orbits.push_back(i);
  for (std::size_t i = 0; i < words.size(); ++i)
    if (is_y2z_word(words[i])) v.y2z_words.push_back(i);
  v.has_size3_class = !v.size3_orbits.empty();
  v.has_y2z_word = !v.y2z_words.empty();
  v.consistent = v.has_size3_class == v.has_y2z_word;
  return v;
}

bool commute_numeric(const MobiusMap& g1, const MobiusMap& g2, double eps_id) {
  return is_projective_identity(g1 * g2 * g1.inverse() * g2.inverse(), eps_id);
}

bool edge_bound_check(const AbstractPolyhedron& p) { return p.edge_count() <= 2 * p.vertex_count(); }

ParityVerdict parity_check(const AbstractPolyhedron& p, const std::vector<EdgeOrbit>& orbits,
                           const std::vector<RelatorWord>& words) {
  ParityVerdict v;
  v.squared_free = !has_squared_term(words).found;
  v.orbits_even = true;
  for (const auto& o : orbits) v.orbits_even = v.orbits_even && o.size() % 2 == 0;
  v.counts_even = p.edge_count() % 2 == 0 && p.vertex_count() % 2 == 0;
  v.consistent = !v.squared_free || (v.orbits_even && v.counts_even);
  return v;
}

bool adjacent_identified_sharing_edge(const CheckedScheme& s) {
  for (std::size_t k = 0; k < s.scheme().pairings.size(); ++k)
    if (pairs_adjacent_faces(s, k)) return true;
  return false;
}

RestrictionReport restriction_report(const AbstractPolyhedron& p) {
  RestrictionReport r;
  r.edge_bound_ok = edge_bound_check(p);
  return r;
}

RestrictionReport restriction_report(const AbstractPolyhedron& p, const CandidateDomain& c,
                                     const GroupPresentation* generators, const Tolerances& tol) {
  RestrictionReport r = restriction_report(p);
  const auto link = y2z_class_link(c.orbits, c.words);
  r.has_size3_class = link.has_size3_class;
  r.has_y2z_relator = link.has_y2z_word;
  r.squared_term_relators = has_squared_term(c.words).witnesses;
  r.adjacent_identified_sharing_edge = adjacent_identified_sharing_edge(validate_scheme(p, c.scheme));
  r.parity_ok = parity_check(p, c.orbits, c.words).consistent;
  if (generators) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (auto i = generators->generators.begin(); i != generators->generators.end(); ++i)
      for (auto j = std::next(i); j != generators->generators.end(); ++j)
        if (commute_numeric(i->second, j->second, tol.id)) pairs.emplace_back(i->first, j->first);
    r.commuting_generator_pairs = std::move(pairs);
  }
  return r;
}

Json restriction_to_json(const RestrictionReport& r) {
  auto opt = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  Json squared = Json::array();
  for (const auto& s : r.squared_term_relators)
    squared.push_back({{"word", s.word}, {"position", s.position}, {"letter", s.letter.str()}});
  Json out{{"has_size3_class", opt(r.has_size3_class)},
           {"has_Y2Z_relator", opt(r.has_y2z_relator)},
           {"squared_term_relators", squared},
           {"adjacent_identified_sharing_edge", opt(r.adjacent_identified_sharing_edge)},
           {"edge_bound_ok", r.edge_bound_ok},
           {"parity_ok", opt(r.parity_ok)}};
  if (r.commuting_generator_pairs) {
    Json pairs = Json::array();
    for (const auto& [a, b] : *r.commuting_generator_pairs) pairs.push_back({a, b});
    out["commuting_generator_pairs"] = pairs;
  } else {
    out["commuting_generator_pairs"] = nullptr;
  }
  return out;
}

}  // namespace hypdom
