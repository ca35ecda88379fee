#include <optional>
#include <random>
#include <vector>

#include "doctest.h"
#include "rootpoly/errors.hpp"
#include "rootpoly/lattice.hpp"
#include "rootpoly/linear.hpp"

using namespace rootpoly;

namespace {

bool satisfies(const HalfSpaceSystem& system, const RationalVector& p) {
  for (const auto& c : system.constraints) {
    Rational v = pairing(c.coeffs, p);
    switch (c.rel) {
      case Relation::le:
        if (!(v <= c.rhs)) return false;
        break;
      case Relation::eq:
        if (!(v == c.rhs)) return false;
        break;
      case Relation::lt:
        if (!(v < c.rhs)) return false;
        break;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("feasible point of a box") {
  HalfSpaceSystem system(1);
  system.add({Rational(1)}, Relation::le, Rational(3));
  system.add({Rational(-1)}, Relation::le, Rational(-1));  // x >= 1
  for (auto engine :
       {FeasibilityEngine::fourier_motzkin, FeasibilityEngine::simplex}) {
    auto p = feasible_point(system, engine);
    REQUIRE(p.has_value());
    CHECK(satisfies(system, *p));
  }
}

TEST_CASE("infeasible system returns nothing") {
  HalfSpaceSystem system(1);
  system.add({Rational(1)}, Relation::le, Rational(0));
  system.add({Rational(-1)}, Relation::le, Rational(-1));  // x >= 1
  CHECK_FALSE(feasible_point(system, FeasibilityEngine::fourier_motzkin));
  CHECK_FALSE(feasible_point(system, FeasibilityEngine::simplex));
}

TEST_CASE("strict inequalities are honoured exactly") {
  HalfSpaceSystem system(1);
  system.add({Rational(1)}, Relation::lt, Rational(1));
  system.add({Rational(-1)}, Relation::lt, Rational(0));  // 0 < x < 1
  for (auto engine :
       {FeasibilityEngine::fourier_motzkin, FeasibilityEngine::simplex}) {
    auto p = feasible_point(system, engine);
    REQUIRE(p.has_value());
    CHECK((*p)[0] > Rational(0));
    CHECK((*p)[0] < Rational(1));
  }
}

TEST_CASE("strict system squeezed to a point is infeasible") {
  HalfSpaceSystem system(1);
  system.add({Rational(1)}, Relation::le, Rational(2));
  system.add({Rational(-1)}, Relation::le, Rational(-2));  // x == 2
  system.add({Rational(1)}, Relation::lt, Rational(2));    // and x < 2
  CHECK_FALSE(feasible_point(system, FeasibilityEngine::fourier_motzkin));
  CHECK_FALSE(feasible_point(system, FeasibilityEngine::simplex));
}

TEST_CASE("equalities combine with inequalities") {
  HalfSpaceSystem system(2);
  system.add({Rational(1), Rational(1)}, Relation::eq, Rational(2));
  system.add({Rational(1), Rational(0)}, Relation::le, Rational(0));
  for (auto engine :
       {FeasibilityEngine::fourier_motzkin, FeasibilityEngine::simplex}) {
    auto p = feasible_point(system, engine);
    REQUIRE(p.has_value());
    CHECK(satisfies(system, *p));
  }
}

TEST_CASE("unbounded but feasible systems still produce a witness") {
  HalfSpaceSystem system(2);
  system.add({Rational(-1), Rational(0)}, Relation::le, Rational(-5));
  auto p = feasible_point(system);
  REQUIRE(p.has_value());
  CHECK((*p)[0] >= Rational(5));
}

TEST_CASE("empty constraint list is trivially feasible") {
  HalfSpaceSystem system(3);
  auto p = feasible_point(system);
  REQUIRE(p.has_value());
  CHECK(p->size() == 3);
}

TEST_CASE("the two engines agree on random systems") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> rel_pick(0, 4);
  std::uniform_int_distribution<int> count(2, 6);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t dim = 1 + static_cast<std::size_t>(trial % 3);
    HalfSpaceSystem system(dim);
    int rows = count(rng);
    for (int r = 0; r < rows; ++r) {
      RationalVector coeffs;
      bool all_zero = true;
      for (std::size_t j = 0; j < dim; ++j) {
        int c = coeff(rng);
        if (c != 0) all_zero = false;
        coeffs.push_back(Rational(c));
      }
      if (all_zero) coeffs[0] = Rational(1);
      Relation rel = Relation::le;
      int pick = rel_pick(rng);
      if (pick == 3) rel = Relation::eq;
      if (pick == 4) rel = Relation::lt;
      system.add(coeffs, rel, Rational(coeff(rng)));
    }
    auto fm = feasible_point(system, FeasibilityEngine::fourier_motzkin);
    auto sx = feasible_point(system, FeasibilityEngine::simplex);
    CAPTURE(trial);
    CHECK(fm.has_value() == sx.has_value());
    if (fm) CHECK(satisfies(system, *fm));
    if (sx) CHECK(satisfies(system, *sx));
  }
}

TEST_CASE("elimination row cap raises a resource error") {
  // A dense 4-variable system makes fourier-motzkin exceed a tiny cap.
  HalfSpaceSystem system(4);
  const int signs[2] = {1, -1};
  for (int a : signs)
    for (int b : signs)
      for (int c : signs)
        for (int d : signs) {
          system.add({Rational(a), Rational(b), Rational(c), Rational(d)},
                     Relation::le, Rational(10));
        }
  CHECK_THROWS_AS(
      feasible_point(system, FeasibilityEngine::fourier_motzkin, 4),
      ResourceError);
  // The same system is fine under the default cap.
  CHECK(feasible_point(system, FeasibilityEngine::fourier_motzkin).has_value());
}

TEST_CASE("hull membership: triangle around the origin") {
  const std::vector<LatticeVector> triangle = {{1, 0}, {-1, 1}, {0, -1}};
  CHECK(in_convex_hull(LatticeVector{0, 0}, triangle));
  CHECK(in_convex_hull(LatticeVector{1, 0}, triangle));
  CHECK_FALSE(in_convex_hull(LatticeVector{2, 0}, triangle));
  CHECK_FALSE(in_convex_hull(LatticeVector{1, 1}, triangle));
}

TEST_CASE("hull membership with rational query points") {
  const std::vector<LatticeVector> segment = {{0, 0}, {1, 0}};
  CHECK(in_convex_hull(RationalVector{Rational(1, 2), Rational(0)}, segment));
  CHECK_FALSE(
      in_convex_hull(RationalVector{Rational(1, 2), Rational(1, 2)}, segment));
  CHECK_FALSE(
      in_convex_hull(RationalVector{Rational(3, 2), Rational(0)}, segment));
}

TEST_CASE("hull membership of a single point") {
  CHECK(in_convex_hull(LatticeVector{2, 3}, {{2, 3}}));
  CHECK_FALSE(in_convex_hull(LatticeVector{2, 4}, {{2, 3}}));
}

TEST_CASE("hull membership rejects an empty point set") {
  CHECK_THROWS_AS(in_convex_hull(LatticeVector{0}, {}), ArgumentError);
}

TEST_CASE("hull membership: engines agree on random data") {
  std::mt19937 rng(981);
  std::uniform_int_distribution<int> coord(-4, 4);
  std::uniform_int_distribution<int> count(1, 7);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<LatticeVector> points;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
      points.push_back({coord(rng), coord(rng)});
    }
    LatticeVector q = {coord(rng), coord(rng)};
    CAPTURE(points);
    CAPTURE(q);
    bool fm = in_convex_hull(q, points, FeasibilityEngine::fourier_motzkin);
    bool sx = in_convex_hull(q, points, FeasibilityEngine::simplex);
    CHECK(fm == sx);
    // Members and midpoints of members always belong to the hull.
    CHECK(in_convex_hull(points.front(), points));
  }
}

TEST_CASE("solve_linear: unique solution") {
  // x + y = 3, x - y = 1  ->  (2, 1).
  auto sol = solve_linear({{Rational(1), Rational(1)},
                           {Rational(1), Rational(-1)}},
                          {Rational(3), Rational(1)}, 2);
  REQUIRE(sol.has_value());
  CHECK(sol->nullity == 0);
  CHECK(sol->x == RationalVector{Rational(2), Rational(1)});
}

TEST_CASE("solve_linear: inconsistent system") {
  auto sol = solve_linear({{Rational(1), Rational(1)},
                           {Rational(2), Rational(2)}},
                          {Rational(1), Rational(3)}, 2);
  CHECK_FALSE(sol.has_value());
}

TEST_CASE("solve_linear: underdetermined system pins free variables to zero") {
  auto sol = solve_linear({{Rational(1), Rational(1)}}, {Rational(1)}, 2);
  REQUIRE(sol.has_value());
  CHECK(sol->nullity == 1);
  CHECK(sol->x == RationalVector{Rational(1), Rational(0)});
}

TEST_CASE("solve_linear: no equations at all") {
  auto sol = solve_linear({}, {}, 2);
  REQUIRE(sol.has_value());
  CHECK(sol->nullity == 2);
  CHECK(sol->x == RationalVector{Rational(0), Rational(0)});
}

TEST_CASE("solve_linear: redundant rows do not change the answer") {
  auto sol = solve_linear({{Rational(1), Rational(2)},
                           {Rational(2), Rational(4)},
                           {Rational(0), Rational(1)}},
                          {Rational(5), Rational(10), Rational(1)}, 2);
  REQUIRE(sol.has_value());
  CHECK(sol->nullity == 0);
  CHECK(sol->x == RationalVector{Rational(3), Rational(1)});
}

TEST_CASE("solve_linear solutions satisfy the system on random instances") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> shape(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t dim = static_cast<std::size_t>(shape(rng));
    std::size_t nrows = static_cast<std::size_t>(shape(rng));
    std::vector<RationalVector> rows;
    RationalVector rhs;
    for (std::size_t r = 0; r < nrows; ++r) {
      RationalVector row;
      for (std::size_t j = 0; j < dim; ++j) row.push_back(Rational(coeff(rng)));
      rows.push_back(row);
      rhs.push_back(Rational(coeff(rng)));
    }
    auto sol = solve_linear(rows, rhs, dim);
    if (!sol) continue;
    for (std::size_t r = 0; r < nrows; ++r) {
      CAPTURE(trial);
      CAPTURE(r);
      CHECK(pairing(rows[r], sol->x) == rhs[r]);
    }
  }
}
