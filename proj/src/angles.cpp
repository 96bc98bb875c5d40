#include "hypdom/angles.hpp"

#include <algorithm>

#include "hypdom/errors.hpp"

namespace hypdom {

const char* to_string(SolutionStatus s) {
  switch (s) {
    case SolutionStatus::infeasible: return "infeasible";
    case SolutionStatus::unique: return "unique";
    case SolutionStatus::affine_family: return "affine-family";
  }
  return "?";
}

int required_class_count(const AbstractPolyhedron& p) {
  const int diff = p.edge_count() - p.vertex_count();
  if (diff <= 0)
    throw ClassCountError(ClassCountError::Kind::non_positive, "E - V = " + std::to_string(diff) + " is not positive");
  if (diff % 2 != 0)
    throw ClassCountError(ClassCountError::Kind::parity, "E - V = " + std::to_string(diff) + " is odd");
  return diff / 2;
}

LinearSystem assemble_system(const AbstractPolyhedron& p, const EdgeClasses& classes) {
  const auto ne = static_cast<std::size_t>(p.edge_count());
  std::vector<int> seen(ne, 0);
  for (const auto& cls : classes) {
    for (int e : cls) {
      if (e < 0 || static_cast<std::size_t>(e) >= ne)
        throw PartitionError(PartitionError::Kind::not_partition, "edge id " + std::to_string(e) + " out of range");
      ++seen[static_cast<std::size_t>(e)];
    }
  }
  for (std::size_t e = 0; e < ne; ++e)
    if (seen[e] != 1)
      throw PartitionError(PartitionError::Kind::not_partition,
                           "edge " + std::to_string(e) + " appears in " + std::to_string(seen[e]) + " classes");
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].size() < 3)
      throw PartitionError(PartitionError::Kind::class_size,
                           "class " + std::to_string(i) + " has " + std::to_string(classes[i].size()) + " edges");

  LinearSystem sys;
  sys.variables = ne;
  for (int v = 0; v < p.vertex_count(); ++v) {
    LinearRow row{RationalVector(ne, 0), 2, "vertex:" + p.vertex_ids()[static_cast<std::size_t>(v)]};
    for (int e : p.incidence().vertex_edges[static_cast<std::size_t>(v)]) row.coeffs[static_cast<std::size_t>(e)] = 1;
    sys.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    LinearRow row{RationalVector(ne, 0), static_cast<long>(classes[i].size()) - 2, "class:" + std::to_string(i)};
    for (int e : classes[i]) row.coeffs[static_cast<std::size_t>(e)] = 1;
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

SolutionSet solve_exact(const LinearSystem& sys) {
  const std::size_t n = sys.variables;
  std::vector<RationalVector> m;
  for (const auto& r : sys.rows) {
    RationalVector row = r.coeffs;
    row.push_back(r.rhs);
    m.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
    std::size_t pr = rank;
    while (pr < m.size() && m[pr][col] == 0) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[pr], m[rank]);
    Rational inv = 1 / m[rank][col];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[rank][c];
    }
    pivots.push_back(col);
    ++rank;
  }

  SolutionSet out;
  out.rank = rank;
  for (std::size_t r = rank; r < m.size(); ++r)
    if (m[r][n] != 0) return out;

  RationalVector particular(n, 0);
  for (std::size_t i = 0; i < rank; ++i) particular[pivots[i]] = m[i][n];
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < rank; ++i) v[pivots[i]] = -m[i][f];
    out.null_basis.push_back(std::move(v));
  }
  out.particular = std::move(particular);
  out.status = out.null_basis.empty() ? SolutionStatus::unique : SolutionStatus::affine_family;
  return out;
}

bool satisfies_rows(const LinearSystem& sys, const RationalVector& q) {
  for (const auto& r : sys.rows) {
    Rational s = 0;
    for (std::size_t j = 0; j < q.size(); ++j) s += r.coeffs[j] * q[j];
    if (s != r.rhs) return false;
  }
  return true;
}

InequalityReport check_inequalities(const std::vector<Circuit>& non_facial, const AngleAssignment& q) {
  InequalityReport rep;
  for (std::size_t e = 0; e < q.size(); ++e) {
    if (!(q[e] > 0 && q[e] < 1)) {
      rep.pass = false;
      rep.bad_edge = static_cast<int>(e);
      return rep;
    }
  }
  for (const auto& c : non_facial) {
    Rational s = 0;
    for (int l : c.links) s += q[static_cast<std::size_t>(l)];
    if (!rep.min_circuit_sum || s < *rep.min_circuit_sum) rep.min_circuit_sum = s;
    if (rep.pass && !(s > 2)) {
      rep.pass = false;
      rep.bad_circuit = c;
      rep.bad_sum = s;
    }
  }
  return rep;
}

InequalityReport check_inequalities(const AbstractPolyhedron& p, const DualGraph& d, const AngleAssignment& q,
                                    std::size_t circuit_cap) {
  if (q.size() != static_cast<std::size_t>(p.edge_count()))
    throw InputError("angle assignment does not cover every edge");
  return check_inequalities(non_facial_circuits(d, circuit_cap), q);
}

FeasibilityResult feasible(const LinearSystem& sys, const std::vector<Circuit>& non_facial, std::size_t dimension_cap) {
  FeasibilityResult res;
  res.solution = solve_exact(sys);
  if (res.solution.status == SolutionStatus::infeasible) return res;

  const auto& p0 = *res.solution.particular;
  const auto& basis = res.solution.null_basis;
  const std::size_t n = sys.variables;
  const std::size_t d = basis.size();

  // Substitute q = p0 + N t into each constraint c . q > b.
  std::vector<StrictInequality> rows;
  auto add = [&](const RationalVector& c, const Rational& b) {
    StrictInequality r{RationalVector(d, 0), b};
    for (std::size_t j = 0; j < n; ++j) {
      if (c[j] == 0) continue;
      r.b -= c[j] * p0[j];
      for (std::size_t k = 0; k < d; ++k) r.a[k] += c[j] * basis[k][j];
    }
    rows.push_back(std::move(r));
  };
  for (std::size_t e = 0; e < n; ++e) {
    RationalVector c(n, 0);
    c[e] = 1;
    add(c, 0);
    c[e] = -1;
    add(c, -1);
  }
  for (const auto& circ : non_facial) {
    RationalVector c(n, 0);
    for (int l : circ.links) c[static_cast<std::size_t>(l)] += 1;
    add(c, 2);
  }

  auto t = strict_feasible_point(rows, d, dimension_cap);
  if (!t) return res;
  AngleAssignment q = p0;
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < n; ++j) q[j] += (*t)[k] * basis[k][j];
  res.feasible = true;
  res.witness = std::move(q);
  return res;
}

FeasibilityResult feasible(const LinearSystem& sys, const DualGraph& d, const FeasibilityOptions& options) {
  return feasible(sys, non_facial_circuits(d, options.circuit_cap), options.dimension_cap);
}

Json angles_to_json(const AngleAssignment& q) {
  Json out = Json::object();
  for (std::size_t e = 0; e < q.size(); ++e) out["e" + std::to_string(e)] = to_string(q[e]);
  return out;
}

AngleAssignment angles_from_json(const Json& doc, std::size_t edge_count) {
  if (!doc.is_object()) throw ParseError("angle assignment must be an object");
  AngleAssignment q(edge_count, 0);
  std::vector<bool> set(edge_count, false);
  for (const auto& [key, value] : doc.items()) {
    if (key.size() < 2 || key[0] != 'e') throw ParseError("bad edge key '" + key + "'");
    std::size_t e = 0;
    try {
      e = std::stoul(key.substr(1));
    } catch (const std::exception&) {
      throw ParseError("bad edge key '" + key + "'");
    }
    if (e >= edge_count || !value.is_string()) throw ParseError("bad angle entry '" + key + "'");
    q[e] = parse_rational(value.get<std::string>());
    set[e] = true;
  }
  if (std::find(set.begin(), set.end(), false) != set.end()) throw ParseError("angle assignment misses an edge");
  return q;
}

}  // namespace hypdom
