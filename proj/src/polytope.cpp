#include "rootpoly/polytope.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "rootpoly/errors.hpp"

namespace rootpoly {

namespace {

void require_dominant(const RootDatum& datum, const SimpleSystem& sys,
                      const LatticeVector& lambda, const std::string& who) {
  if (lambda.size() != datum.rank) {
    throw DimensionError(who + ": weight dimension " +
                         std::to_string(lambda.size()) + " != rank " +
                         std::to_string(datum.rank));
  }
  if (dominance(datum, sys, lambda) == Dominance::not_dominant) {
    throw PreconditionError(who + ": base vertex is not dominant");
  }
}

}  // namespace

bool EdgeDescriptor::operator<(const EdgeDescriptor& other) const {
  return std::tie(a, b, lattice_count) <
         std::tie(other.a, other.b, other.lattice_count);
}

EdgeDescriptor make_edge(const LatticeVector& u, const LatticeVector& v) {
  if (u == v) {
    throw ArgumentError("make_edge: degenerate edge with equal endpoints");
  }
  EdgeDescriptor e;
  e.a = std::min(u, v);
  e.b = std::max(u, v);
  e.lattice_count = static_cast<Int>(segment_lattice_points(e.a, e.b).size());
  return e;
}

std::vector<LatticeVector> polytope_vertices(const RootDatum& datum,
                                             const SimpleSystem& sys,
                                             const LatticeVector& lambda) {
  require_dominant(datum, sys, lambda, "polytope_vertices");
  WeylGroup group = weyl_group(datum, sys);
  return orbit(group, lambda);
}

std::vector<LatticeVector> hull_vertices(
    const std::vector<LatticeVector>& points) {
  std::set<LatticeVector> unique(points.begin(), points.end());
  if (unique.empty()) return {};
  std::vector<LatticeVector> all(unique.begin(), unique.end());

  std::vector<LatticeVector> extreme;
  for (const auto& p : all) {
    // Quick reject: an interior midpoint of two other set points is never
    // extreme.
    bool midpoint = false;
    for (const auto& q : all) {
      if (q == p) continue;
      LatticeVector r = sub(scale(2, p), q);  // p = (q + r) / 2
      if (r != p && unique.count(r)) {
        midpoint = true;
        break;
      }
    }
    if (midpoint) continue;
    std::vector<LatticeVector> others;
    others.reserve(all.size() - 1);
    for (const auto& q : all) {
      if (q != p) others.push_back(q);
    }
    if (others.empty() || !in_convex_hull(p, others)) extreme.push_back(p);
  }
  return extreme;
}

std::vector<EdgeDescriptor> edges_at(const RootDatum& datum,
                                     const SimpleSystem& sys,
                                     const LatticeVector& lambda,
                                     const LatticeVector& x0) {
  require_dominant(datum, sys, lambda, "edges_at");
  auto [plus, w] = dominant_representative(datum, sys, x0);
  if (plus != lambda) {
    throw ArgumentError(
        "edges_at: point is not a vertex (orbit representative differs from "
        "the base vertex)");
  }
  // x0 = w^{-1}(lambda); edges at lambda carried back through w^{-1}.
  IntMatrix back = w.matrix.inverse();
  std::vector<EdgeDescriptor> edges;
  for (const auto& alpha : edge_roots(datum, sys, lambda)) {
    LatticeVector other = reflection(datum, alpha).apply(lambda);
    edges.push_back(make_edge(back.apply(lambda), back.apply(other)));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

RationalVector edge_supporting_functional(const RootDatum& datum,
                                          const SimpleSystem& sys,
                                          const LatticeVector& x0,
                                          const LatticeVector& alpha) {
  require_dominant(datum, sys, x0, "edge_supporting_functional");
  std::vector<LatticeVector> allowed = edge_roots(datum, sys, x0);
  if (!std::binary_search(allowed.begin(), allowed.end(), alpha)) {
    throw ArgumentError(
        "edge_supporting_functional: root does not generate an edge at the "
        "base vertex");
  }

  RationalVector base = strictly_dominant_coweight(datum, sys);
  WeylGroup w0 = orthogonal_subgroup(datum, sys, x0);

  for (const auto& w : w0.elements) {
    for (const auto& beta : sys.simples) {
      if (pairing(x0, datum.coroot_of(beta)) == 0) continue;
      if (w.apply(beta) != alpha) continue;
      // Functional for the edge generated by beta at x0 itself: level the
      // strictly dominant coweight along beta, then move it by w.
      Rational shift = pairing(beta, base) / 2;
      RationalVector y_beta = rational_sub(
          base, rational_scale(shift, to_rational(datum.coroot_of(beta))));
      return w.apply_coweight(y_beta);
    }
  }
  throw InconsistencyError(
      "edge_supporting_functional: edge root is not an orthogonal-subgroup "
      "translate of a non-orthogonal simple");
}

std::vector<EdgeDescriptor> edges_at_via_lp(
    const std::set<LatticeVector>& weights, const LatticeVector& x0,
    FeasibilityEngine engine) {
  if (weights.empty()) {
    throw ArgumentError("edges_at_via_lp: empty weight set");
  }
  const std::size_t d = x0.size();
  std::vector<LatticeVector> vertices =
      hull_vertices({weights.begin(), weights.end()});
  if (!std::binary_search(vertices.begin(), vertices.end(), x0)) {
    throw ArgumentError("edges_at_via_lp: base point is not a hull vertex");
  }

  std::vector<EdgeDescriptor> edges;
  for (const auto& x1 : vertices) {
    if (x1 == x0) continue;
    // Variables (y, c): <x0,y> = c, <x1,y> = c, <p,y> <= c - 1 elsewhere.
    HalfSpaceSystem system(d + 1);
    auto row_for = [&](const LatticeVector& p) {
      RationalVector row(d + 1);
      for (std::size_t j = 0; j < d; ++j) row[j] = p[j];
      row[d] = -1;
      return row;
    };
    system.add(row_for(x0), Relation::eq, Rational(0));
    system.add(row_for(x1), Relation::eq, Rational(0));
    for (const auto& p : vertices) {
      if (p == x0 || p == x1) continue;
      system.add(row_for(p), Relation::le, Rational(-1));
    }
    if (feasible_point(system, engine)) edges.push_back(make_edge(x0, x1));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<EdgeDescriptor> edges_via_reflections(const RootDatum& datum,
                                                  const SimpleSystem& sys,
                                                  const LatticeVector& lambda) {
  require_dominant(datum, sys, lambda, "edges_via_reflections");
  WeylGroup group = weyl_group(datum, sys);
  std::vector<LatticeVector> base_roots = edge_roots(datum, sys, lambda);

  std::vector<std::pair<LatticeVector, LatticeVector>> base_edges;
  for (const auto& alpha : base_roots) {
    base_edges.emplace_back(lambda, reflection(datum, alpha).apply(lambda));
  }

  std::set<EdgeDescriptor> edges;
  for (const auto& w : group.elements) {
    for (const auto& [u, v] : base_edges) {
      edges.insert(make_edge(w.apply(u), w.apply(v)));
    }
  }
  return std::vector<EdgeDescriptor>(edges.begin(), edges.end());
}

std::vector<EdgeDescriptor> edges_via_lp(const std::set<LatticeVector>& weights,
                                         FeasibilityEngine engine) {
  std::set<EdgeDescriptor> edges;
  for (const auto& x0 :
       hull_vertices({weights.begin(), weights.end()})) {
    for (const auto& e : edges_at_via_lp(weights, x0, engine)) {
      edges.insert(e);
    }
  }
  return std::vector<EdgeDescriptor>(edges.begin(), edges.end());
}

WeightPolytope build_polytope(const RootDatum& datum, const SimpleSystem& sys,
                              const LatticeVector& lambda) {
  WeightPolytope p;
  p.lambda = lambda;
  p.vertices = polytope_vertices(datum, sys, lambda);
  p.edges = edges_via_reflections(datum, sys, lambda);
  return p;
}

}  // namespace rootpoly
