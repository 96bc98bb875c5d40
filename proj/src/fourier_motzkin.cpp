#include "hypdom/fourier_motzkin.hpp"

#include <map>

#include "hypdom/errors.hpp"

namespace hypdom {

bool satisfies(const StrictInequality& row, const RationalVector& t) {
  Rational lhs = 0;
  for (std::size_t j = 0; j < row.a.size(); ++j) lhs += row.a[j] * t[j];
  return lhs > row.b;
}

namespace {

// Scale so the first nonzero coefficient has magnitude 1, then keep only the
// tightest right-hand side per direction.
std::vector<StrictInequality> normalize(std::vector<StrictInequality> rows) {
  std::map<RationalVector, Rational> best;
  std::vector<StrictInequality> constant;
  for (auto& r : rows) {
    std::size_t j = 0;
    while (j < r.a.size() && r.a[j] == 0) ++j;
    if (j == r.a.size()) {
      constant.push_back(std::move(r));
      continue;
    }
    Rational s = abs(r.a[j]);
    for (auto& x : r.a) x /= s;
    r.b /= s;
    auto [it, inserted] = best.emplace(r.a, r.b);
    if (!inserted && r.b > it->second) it->second = r.b;
  }
  std::vector<StrictInequality> out = std::move(constant);
  for (auto& [a, b] : best) out.push_back({a, b});
  return out;
}

}  // namespace

std::optional<RationalVector> strict_feasible_point(const std::vector<StrictInequality>& system, std::size_t dims,
                                                    std::size_t dimension_cap) {
  if (dims > dimension_cap)
    throw ResourceError("elimination dimension " + std::to_string(dims) + " exceeds cap " + std::to_string(dimension_cap));
  for (const auto& r : system)
    if (r.a.size() != dims) throw InputError("inequality width does not match dimension");

  // levels[k] holds the inequalities over unknowns 0..k-1 (coefficients beyond
  // k-1 are zero).
  std::vector<std::vector<StrictInequality>> levels(dims + 1);
  levels[dims] = normalize(system);
  for (std::size_t k = dims; k-- > 0;) {
    std::vector<StrictInequality> lower, upper, next;
    for (const auto& r : levels[k + 1]) {
      if (r.a[k] > 0)
        lower.push_back(r);
      else if (r.a[k] < 0)
        upper.push_back(r);
      else
        next.push_back(r);
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        Rational mu = -up.a[k];
        Rational la = lo.a[k];
        StrictInequality c{RationalVector(dims), mu * lo.b + la * up.b};
        for (std::size_t j = 0; j < dims; ++j) c.a[j] = mu * lo.a[j] + la * up.a[j];
        c.a[k] = 0;
        next.push_back(std::move(c));
      }
    }
    levels[k] = normalize(std::move(next));
  }
  for (const auto& r : levels[0])
    if (!(0 > r.b)) return std::nullopt;

  RationalVector t(dims, 0);
  for (std::size_t k = 0; k < dims; ++k) {
    std::optional<Rational> lo, hi;
    for (const auto& r : levels[k + 1]) {
      if (r.a[k] == 0) continue;
      Rational rest = r.b;
      for (std::size_t j = 0; j < k; ++j) rest -= r.a[j] * t[j];
      Rational bound = rest / r.a[k];
      if (r.a[k] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else if (!hi || bound < *hi) {
        hi = bound;
      }
    }
    if (lo && hi) {
      if (!(*lo < *hi)) throw InvariantError("Fourier-Motzkin back-substitution found an empty interval");
      t[k] = (*lo + *hi) / 2;
    } else if (lo) {
      t[k] = *lo + 1;
    } else if (hi) {
      t[k] = *hi - 1;
    }
  }
  for (const auto& r : system)
    if (!satisfies(r, t)) throw InvariantError("Fourier-Motzkin witness violates an input inequality");
  return t;
}

}  // namespace hypdom
