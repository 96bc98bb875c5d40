#include <doctest.h>

#include <random>

#include "hypdom/errors.hpp"
#include "hypdom/fourier_motzkin.hpp"

using namespace hypdom;

namespace {

struct IntRow {
  std::vector<long> a;
  long b;
};

std::vector<StrictInequality> to_system(const std::vector<IntRow>& rows) {
  std::vector<StrictInequality> out;
  for (const auto& r : rows) {
    RationalVector a;
    for (long x : r.a) a.push_back(Rational(x));
    out.push_back({a, Rational(r.b)});
  }
  return out;
}

// Grid oracle: points k/4 in [-6, 6]^d, checked in integer arithmetic.
bool grid_has_point(const std::vector<IntRow>& rows, std::size_t dims) {
  constexpr long lo = -24, hi = 24;
  std::vector<long> k(dims, lo);
  while (true) {
    bool ok = true;
    for (const auto& r : rows) {
      long s = 0;
      for (std::size_t i = 0; i < dims; ++i) s += r.a[i] * k[i];
      if (!(s > 4 * r.b)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < dims && k[i] == hi) k[i++] = lo;
    if (i == dims) return false;
    ++k[i];
  }
}

std::vector<IntRow> box(std::size_t dims, long half_width) {
  std::vector<IntRow> rows;
  for (std::size_t i = 0; i < dims; ++i) {
    std::vector<long> e(dims, 0);
    e[i] = 1;
    rows.push_back({e, -half_width});
    e[i] = -1;
    rows.push_back({e, -half_width});
  }
  return rows;
}

}  // namespace

TEST_CASE("one-dimensional open intervals") {
  auto w = strict_feasible_point({{{Rational(1)}, Rational(0)}, {{Rational(-1)}, Rational(-1)}}, 1);
  REQUIRE(w);
  CHECK(((*w)[0] > 0 && (*w)[0] < 1));
  CHECK(!strict_feasible_point({{{Rational(1)}, Rational(1)}, {{Rational(-1)}, Rational(-1)}}, 1));
  CHECK(!strict_feasible_point({{{Rational(1)}, Rational(0)}, {{Rational(-1)}, Rational(0)}}, 1));
  CHECK(strict_feasible_point({}, 3));
}

TEST_CASE("zero rows decide on their constant") {
  CHECK(strict_feasible_point({{{Rational(0), Rational(0)}, Rational(-1)}}, 2));
  CHECK(!strict_feasible_point({{{Rational(0), Rational(0)}, Rational(0)}}, 2));
}

TEST_CASE("dimension cap") {
  CHECK_THROWS_AS(strict_feasible_point({}, 9), ResourceError);
  CHECK_NOTHROW(strict_feasible_point({}, 9, 9));
}

TEST_CASE("elimination agrees with a seeded grid oracle on up to four unknowns") {
  std::mt19937 rng(20240607);
  std::uniform_int_distribution<long> coef(-3, 3), off(-4, 4), grid(-16, 16);
  int planted = 0, contradictory = 0, free_form = 0, free_feasible = 0;
  for (int trial = 0; trial < 240; ++trial) {
    const std::size_t dims = 1 + static_cast<std::size_t>(trial % 4);
    const int kind = (trial / 4) % 3;
    auto rows = box(dims, 5);
    std::vector<long> p0(dims);
    for (auto& x : p0) x = grid(rng);  // planted centre p0 / 4
    const int extra = 2 + trial % 4;
    for (int r = 0; r < extra; ++r) {
      std::vector<long> a(dims);
      for (auto& x : a) x = coef(rng);
      long b = off(rng);
      if (kind == 0) {
        // Keep the l-infinity ball of radius 1/4 around p0/4 inside the row;
        // that ball always holds a grid point.
        long dot = 0, l1 = 0;
        for (std::size_t i = 0; i < dims; ++i) {
          dot += a[i] * p0[i];
          l1 += std::labs(a[i]);
        }
        b = (dot - l1) / 4 - 1;
        while (4 * b >= dot - l1) --b;
      }
      rows.push_back({a, b});
    }
    if (kind == 1) {
      std::vector<long> a(dims);
      for (auto& x : a) x = coef(rng);
      a[0] = 1;
      long b = off(rng);
      rows.push_back({a, b});
      std::vector<long> neg(a);
      for (auto& x : neg) x = -x;
      rows.push_back({neg, -b + std::labs(off(rng))});
    }
    CAPTURE(trial);
    CAPTURE(dims);
    auto w = strict_feasible_point(to_system(rows), dims);
    const bool grid = grid_has_point(rows, dims);
    if (w)
      for (const auto& r : to_system(rows)) CHECK(satisfies(r, *w));
    switch (kind) {
      case 0:
        ++planted;
        CHECK(grid);
        CHECK(w.has_value());
        break;
      case 1:
        ++contradictory;
        CHECK(!grid);
        CHECK(!w.has_value());
        break;
      default:
        ++free_form;
        // A grid hit proves feasibility; an empty region has no grid point.
        if (grid) CHECK(w.has_value());
        if (!w) CHECK(!grid);
        if (w) ++free_feasible;
        break;
    }
  }
  CHECK(planted == 80);
  CHECK(contradictory == 80);
  CHECK(free_form == 80);
  CHECK(free_feasible > 0);
}
