#pragma once

#include <set>
#include <vector>

#include "rootpoly/lattice.hpp"
#include "rootpoly/linear.hpp"
#include "rootpoly/rational.hpp"
#include "rootpoly/root_datum.hpp"
#include "rootpoly/weyl.hpp"

namespace rootpoly {

/** A closed polytope edge with lex-ordered endpoints (a < b) and the number
 *  of lattice points on the closed segment. */
struct EdgeDescriptor {
  LatticeVector a;
  LatticeVector b;
  Int lattice_count = 0;

  bool operator==(const EdgeDescriptor&) const = default;
  bool operator<(const EdgeDescriptor& other) const;
};

/** Normalizes endpoint order and counts the segment's lattice points. */
EdgeDescriptor make_edge(const LatticeVector& u, const LatticeVector& v);

struct WeightPolytope {
  LatticeVector lambda;                 // dominant base vertex
  std::vector<LatticeVector> vertices;  // sorted
  std::vector<EdgeDescriptor> edges;    // sorted
};

/** Vertices of the weight polytope: the orbit of lambda (pre: dominant). */
std::vector<LatticeVector> polytope_vertices(const RootDatum& datum,
                                             const SimpleSystem& sys,
                                             const LatticeVector& lambda);

/** Extreme points of the convex hull of a finite point set, decided by exact
 *  membership tests against the remaining points (with a midpoint
 *  quick-reject).  Sorted. */
std::vector<LatticeVector> hull_vertices(
    const std::vector<LatticeVector>& points);

/** Edges at the vertex x0 from the reflection description: conjugate x0 into
 *  the dominant chamber, pair the base vertex with s_alpha(base) for each
 *  alpha in edge_roots, and carry the result back.  Throws ArgumentError
 *  when x0 is not a vertex. */
std::vector<EdgeDescriptor> edges_at(const RootDatum& datum,
                                     const SimpleSystem& sys,
                                     const LatticeVector& lambda,
                                     const LatticeVector& x0);

/** A rational functional maximized on the edge [x0, s_alpha(x0)] and nowhere
 *  else on the polytope (pre: x0 dominant, alpha in edge_roots(x0)).
 *  Built from the strictly dominant coweight: subtract half the coroot of a
 *  non-orthogonal simple, then move by the orthogonal-subgroup element that
 *  carries that simple to alpha. */
RationalVector edge_supporting_functional(const RootDatum& datum,
                                          const SimpleSystem& sys,
                                          const LatticeVector& x0,
                                          const LatticeVector& alpha);

/** Edge oracle at a vertex, from raw weight data only: hull vertices are
 *  recomputed from the weight set, and [x0, x1] is accepted exactly when a
 *  functional exists with equal value c at x0 and x1 and value at most c - 1
 *  at every other hull vertex (valid because all points are integral).
 *  Throws ArgumentError when x0 is not extreme in the hull. */
std::vector<EdgeDescriptor> edges_at_via_lp(
    const std::set<LatticeVector>& weights, const LatticeVector& x0,
    FeasibilityEngine engine = FeasibilityEngine::automatic);

/** All edges from the reflection description (union of edges_at over the
 *  orbit).  Sorted. */
std::vector<EdgeDescriptor> edges_via_reflections(const RootDatum& datum,
                                                  const SimpleSystem& sys,
                                                  const LatticeVector& lambda);

/** All edges from the LP oracle applied at every hull vertex of the weight
 *  set.  Sorted. */
std::vector<EdgeDescriptor> edges_via_lp(
    const std::set<LatticeVector>& weights,
    FeasibilityEngine engine = FeasibilityEngine::automatic);

/** Vertices plus reflection-description edges. */
WeightPolytope build_polytope(const RootDatum& datum, const SimpleSystem& sys,
                              const LatticeVector& lambda);

}  // namespace rootpoly
