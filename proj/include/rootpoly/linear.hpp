#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rootpoly/lattice.hpp"
#include "rootpoly/rational.hpp"

namespace rootpoly {

/** Relation of a single linear condition `coeffs . x  rel  rhs`. */
enum class Relation { le, eq, lt };

struct Constraint {
  RationalVector coeffs;
  Relation rel = Relation::le;
  Rational rhs = 0;
};

/** A finite system of linear conditions over Q^dimension. */
struct HalfSpaceSystem {
  std::size_t dimension = 0;
  std::vector<Constraint> constraints;

  HalfSpaceSystem() = default;
  explicit HalfSpaceSystem(std::size_t dim) : dimension(dim) {}

  void add(RationalVector coeffs, Relation rel, Rational rhs);
};

/** Exact feasibility engines.
 *
 *  fourier_motzkin is the reference engine for low-dimensional systems (at
 *  most a handful of free variables, tens of constraints).  Its constraint
 *  growth is monitored by `row_cap`; exceeding the cap raises ResourceError.
 *  simplex is an exact-rational phase-1/phase-2 pivoting engine (Bland's
 *  rule) used for systems with many variables, e.g. convex-combination
 *  systems with one variable per hull point.  `automatic` picks
 *  fourier_motzkin for dimension <= 8 and simplex above that.
 */
enum class FeasibilityEngine { automatic, fourier_motzkin, simplex };

inline constexpr std::size_t kDefaultRowCap = 200000;

/** Decides feasibility of `system` exactly and returns a satisfying rational
 *  point, or nullopt when the system is infeasible.  Strict conditions are
 *  honoured exactly (a returned point satisfies `<` strictly); internally a
 *  bounded slack is maximized to witness strictness.  Every returned point is
 *  re-checked against all constraints before being handed back. */
std::optional<RationalVector> feasible_point(
    const HalfSpaceSystem& system,
    FeasibilityEngine engine = FeasibilityEngine::automatic,
    std::size_t row_cap = kDefaultRowCap);

/** True iff p lies in the convex hull of `points` (decided exactly via the
 *  convex-combination system: one nonnegative variable per point, coordinate
 *  and total-mass equalities).  Throws ArgumentError on an empty point set. */
bool in_convex_hull(const RationalVector& p,
                    const std::vector<LatticeVector>& points,
                    FeasibilityEngine engine = FeasibilityEngine::automatic);

bool in_convex_hull(const LatticeVector& p,
                    const std::vector<LatticeVector>& points,
                    FeasibilityEngine engine = FeasibilityEngine::automatic);

/** Solution of an exact linear system A x = b: a particular solution (free
 *  variables pinned to zero, deterministic left-to-right pivoting) together
 *  with the nullspace dimension. */
struct LinearSolution {
  RationalVector x;
  std::size_t nullity = 0;
};

/** Solves A x = b over Q.  Returns nullopt when inconsistent. */
std::optional<LinearSolution> solve_linear(
    const std::vector<RationalVector>& rows, const RationalVector& rhs,
    std::size_t dimension);

}  // namespace rootpoly
