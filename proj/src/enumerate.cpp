#include "hypdom/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "hypdom/errors.hpp"

namespace hypdom {

namespace {

std::string generator_name(std::size_t k) {
  if (k < 26) return std::string(1, static_cast<char>('A' + k));
  return "G" + std::to_string(k);
}

struct SchemeWalker {
  const AbstractPolyhedron& p;
  const std::function<void(const PairingScheme&)>& visit;
  std::vector<bool> used;
  std::vector<std::pair<int, int>> pairs;
  PairingScheme current;

  void correspondences(std::size_t k) {
    if (k == pairs.size()) {
      visit(current);
      return;
    }
    auto [src, dst] = pairs[k];
    const auto& t = p.face(dst);
    const std::size_t n = t.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
      auto& fp = current.pairings[k];
      fp.image.resize(n);
      for (std::size_t i = 0; i < n; ++i) fp.image[i] = t[(shift + n - i) % n];
      correspondences(k + 1);
    }
  }

  void matchings() {
    auto it = std::find(used.begin(), used.end(), false);
    if (it == used.end()) {
      current.pairings.clear();
      for (std::size_t k = 0; k < pairs.size(); ++k)
        current.pairings.push_back({generator_name(k), pairs[k].first, pairs[k].second, {}});
      correspondences(0);
      return;
    }
    const int i = static_cast<int>(it - used.begin());
    used[static_cast<std::size_t>(i)] = true;
    for (int j = i + 1; j < p.face_count(); ++j) {
      if (used[static_cast<std::size_t>(j)] || p.face(j).size() != p.face(i).size()) continue;
      used[static_cast<std::size_t>(j)] = true;
      pairs.emplace_back(i, j);
      matchings();
      pairs.pop_back();
      used[static_cast<std::size_t>(j)] = false;
    }
    used[static_cast<std::size_t>(i)] = false;
  }
};

}  // namespace

void for_each_scheme(const AbstractPolyhedron& p, const std::function<void(const PairingScheme&)>& visit) {
  if (p.face_count() % 2 != 0) throw InputError("odd face count: faces cannot be paired");
  SchemeWalker w{p, visit, std::vector<bool>(static_cast<std::size_t>(p.face_count()), false), {}, {}};
  w.matchings();
}

std::vector<PairingScheme> enumerate_schemes(const AbstractPolyhedron& p) {
  std::vector<PairingScheme> out;
  for_each_scheme(p, [&](const PairingScheme& s) { out.push_back(s); });
  return out;
}

double scheme_count(const AbstractPolyhedron& p) {
  std::map<std::size_t, int> by_length;
  for (const auto& f : p.faces()) ++by_length[f.size()];
  double total = 1;
  for (auto [len, m] : by_length) {
    if (m % 2 != 0) return 0;
    for (int k = m - 1; k > 1; k -= 2) total *= k;
    for (int k = 0; k < m / 2; ++k) total *= static_cast<double>(len);
  }
  return total;
}

const char* to_string(Filter f) {
  switch (f) {
    case Filter::validity: return "validity";
    case Filter::elliptic: return "elliptic";
    case Filter::class_count: return "class_count";
    case Filter::class_size: return "class_size";
    case Filter::angle_equalities: return "angle_equalities";
    case Filter::angle_inequalities: return "angle_inequalities";
  }
  return "?";
}

const std::vector<Filter>& default_filter_order() {
  static const std::vector<Filter> order{Filter::validity,  Filter::elliptic,         Filter::class_count,
                                         Filter::class_size, Filter::angle_equalities, Filter::angle_inequalities};
  return order;
}

SchemeEvaluation::SchemeEvaluation(const AbstractPolyhedron& p, const PairingScheme& s,
                                   const std::vector<Circuit>& non_facial, std::size_t dimension_cap)
    : p_(p), s_(s), non_facial_(non_facial), dimension_cap_(dimension_cap) {}

const CheckedScheme& SchemeEvaluation::checked() {
  if (!checked_) checked_.emplace(validate_scheme(p_, s_));
  return *checked_;
}

const std::vector<EdgeOrbit>& SchemeEvaluation::orbits() {
  if (!orbits_) orbits_ = edge_orbits(checked());
  return *orbits_;
}

const FeasibilityResult& SchemeEvaluation::feasibility() {
  if (!feasibility_) feasibility_ = feasible(assemble_system(p_, orbit_classes(orbits())), non_facial_, dimension_cap_);
  return *feasibility_;
}

bool SchemeEvaluation::passes(Filter f) {
  if (!valid_) {
    try {
      checked();
      valid_ = true;
    } catch (const SchemeError&) {
      valid_ = false;
    }
  }
  if (!*valid_) return false;
  auto sizes_ok = [&] {
    return std::all_of(orbits().begin(), orbits().end(), [](const EdgeOrbit& o) { return o.size() >= 3; });
  };
  switch (f) {
    case Filter::validity: return true;
    case Filter::elliptic: return detect_elliptic_generator(checked()).empty();
    case Filter::class_count: {
      try {
        return static_cast<int>(orbits().size()) == required_class_count(p_);
      } catch (const ClassCountError&) {
        return false;
      }
    }
    case Filter::class_size: return sizes_ok();
    case Filter::angle_equalities:
      return sizes_ok() && feasibility().solution.status != SolutionStatus::infeasible;
    case Filter::angle_inequalities: return sizes_ok() && feasibility().feasible;
  }
  return false;
}

std::optional<Filter> SchemeEvaluation::first_rejection(const std::vector<Filter>& order) {
  for (Filter f : order)
    if (!passes(f)) return f;
  return std::nullopt;
}

CandidateDomain make_candidate(const AbstractPolyhedron& p, const PairingScheme& s,
                               const std::vector<Automorphism>& group, const std::vector<Circuit>& non_facial,
                               std::size_t dimension_cap) {
  SchemeEvaluation ev(p, s, non_facial, dimension_cap);
  if (auto f = ev.first_rejection(default_filter_order()))
    throw InputError(std::string("scheme is not a candidate: rejected by ") + to_string(*f));
  CandidateDomain c;
  c.scheme = s;
  c.orbits = ev.orbits();
  c.words = relator_words(c.orbits);
  c.classes = orbit_classes(c.orbits);
  c.solution = ev.feasibility().solution;
  c.witness = *ev.feasibility().witness;
  c.census = quotient_census(ev.checked(), c.orbits);
  c.key_rotations = canonicalize(ev.checked(), group, SymmetryChoice::rotations);
  c.key_all = canonicalize(ev.checked(), group, SymmetryChoice::all);
  return c;
}

EnumerationReport classify(const AbstractPolyhedron& p, const ClassifyOptions& options) {
  if (p.face_count() % 2 != 0) throw InputError("odd face count: faces cannot be paired");
  constexpr double kSchemeCap = 5e6;
  const double count = scheme_count(p);
  if (count > kSchemeCap) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", count);
    throw ResourceError(std::string("search space of ") + buf + " schemes exceeds the desk-scale cap");
  }
  const auto non_facial = non_facial_circuits(build_dual(p), options.circuit_cap);
  const auto group = symmetry_group(p);

  EnumerationReport rep;
  for (Filter f : options.order) rep.rejected[f] = 0;
  for_each_scheme(p, [&](const PairingScheme& s) {
    ++rep.total;
    SchemeEvaluation ev(p, s, non_facial, options.dimension_cap);
    if (auto f = ev.first_rejection(options.order)) {
      ++rep.rejected[*f];
      return;
    }
    rep.survivors.push_back(make_candidate(p, s, group, non_facial, options.dimension_cap));
  });
  for (std::size_t i = 0; i < rep.survivors.size(); ++i) {
    const auto& c = rep.survivors[i];
    rep.by_rotations[c.key_rotations].push_back(i);
    auto& members = rep.by_all[c.key_all];
    if (members.empty()) rep.families.push_back({c.key_all, {}, {}});
    members.push_back(i);
  }
  for (auto& fam : rep.families) {
    fam.members = rep.by_all[fam.key_all];
    std::set<std::string> rot;
    for (auto i : fam.members) rot.insert(rep.survivors[i].key_rotations);
    fam.rotation_keys.assign(rot.begin(), rot.end());
  }
  return rep;
}

namespace {

Json solution_to_json(const SolutionSet& s) {
  Json j{{"status", to_string(s.status)}, {"rank", s.rank}};
  if (s.particular) j["particular"] = angles_to_json(*s.particular);
  Json basis = Json::array();
  for (const auto& v : s.null_basis) basis.push_back(angles_to_json(v));
  j["null_basis"] = basis;
  return j;
}

Json census_to_json(const QuotientCensus& c) {
  return Json{{"V", c.V}, {"E", c.E}, {"F", c.F}, {"P", c.P}, {"q", c.q}};
}

}  // namespace

Json candidate_to_json(const AbstractPolyhedron& p, const CandidateDomain& c) {
  Json words = Json::array();
  for (const auto& w : c.words) words.push_back(w.str());
  return Json{{"polyhedron", to_json(p)},
              {"scheme", scheme_to_json(p, c.scheme)},
              {"orbits", orbits_to_json(p, c.orbits)},
              {"classes", c.classes},
              {"words", words},
              {"angles", {{"solution", solution_to_json(c.solution)}, {"witness", angles_to_json(c.witness)}}},
              {"census", census_to_json(c.census)},
              {"key_rotations", c.key_rotations},
              {"key_all", c.key_all}};
}

std::pair<AbstractPolyhedron, CandidateDomain> candidate_from_json(const Json& doc) {
  try {
    auto p = polyhedron_from_json(doc.at("polyhedron"));
    auto scheme = scheme_from_json(p, doc.at("scheme"));
    const auto non_facial = non_facial_circuits(build_dual(p));
    auto c = make_candidate(p, scheme, symmetry_group(p), non_facial);
    return {std::move(p), std::move(c)};
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed candidate document: ") + e.what());
  }
}

Json report_to_json(const AbstractPolyhedron& p, const EnumerationReport& r) {
  Json rejected = Json::object();
  for (auto [f, n] : r.rejected) rejected[to_string(f)] = n;
  Json families = Json::array();
  for (std::size_t k = 0; k < r.families.size(); ++k) {
    const auto& fam = r.families[k];
    const auto& rep = r.survivors[fam.members.front()];
    std::vector<std::size_t> sizes;
    for (const auto& o : rep.orbits) sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    Json words = Json::array();
    for (const auto& w : rep.words) words.push_back(w.str());
    Json rot = Json::array();
    for (const auto& key : fam.rotation_keys) rot.push_back(r.by_rotations.at(key));
    families.push_back({{"family", k},
                        {"members", fam.members},
                        {"rotation_classes", rot},
                        {"class_sizes", sizes},
                        {"representative_words", words}});
  }
  return Json{{"polyhedron", p.name()},
              {"total", r.total},
              {"rejected", rejected},
              {"survivor_count", r.survivors.size()},
              {"families", families}};
}

}  // namespace hypdom
