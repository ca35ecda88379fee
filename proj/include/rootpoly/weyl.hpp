#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rootpoly/matrix.hpp"
#include "rootpoly/root_datum.hpp"

namespace rootpoly {

/** A Weyl group element: an integer matrix acting on the character lattice
 *  (column convention, x maps to M x), together with a word in the
 *  generating reflections kept for traceability only. */
struct WeylElement {
  IntMatrix matrix;
  std::vector<int> word;

  LatticeVector apply(const LatticeVector& x) const { return matrix.apply(x); }
  RationalVector apply(const RationalVector& x) const {
    return matrix.apply(x);
  }
  /** The induced action on the cocharacter side: (M^{-1})^T. */
  LatticeVector apply_coweight(const LatticeVector& y) const {
    return matrix.contragredient().apply(y);
  }
  RationalVector apply_coweight(const RationalVector& y) const {
    return matrix.contragredient().apply(y);
  }
};

struct WeylGroup {
  std::vector<WeylElement> generators;
  std::vector<WeylElement> elements;  // identity first, then by word length

  std::size_t order() const { return elements.size(); }
  bool contains(const IntMatrix& m) const;
};

/** Matrix of the reflection x -> x - <x, coroot> root. */
IntMatrix reflection_matrix(const LatticeVector& root,
                            const LatticeVector& coroot);

/** The reflection attached to a root of the datum. */
WeylElement reflection(const RootDatum& datum, const LatticeVector& alpha);

/** Group generated by the reflections of the given roots, enumerated
 *  breadth-first (shortest words kept).  Throws ResourceError beyond cap. */
WeylGroup generated_group(const RootDatum& datum,
                          const std::vector<LatticeVector>& generator_roots,
                          std::size_t cap = 1000000);

/** The full Weyl group of (datum, sys). */
WeylGroup weyl_group(const RootDatum& datum, const SimpleSystem& sys,
                     std::size_t cap = 1000000);

/** The orbit {w(x)} as a sorted list without duplicates. */
std::vector<LatticeVector> orbit(const WeylGroup& group,
                                 const LatticeVector& x);

/** The unique dominant point of the orbit of x, with an element sending x to
 *  it, found by exchanging away negative simple pairings. */
std::pair<LatticeVector, WeylElement> dominant_representative(
    const RootDatum& datum, const SimpleSystem& sys, const LatticeVector& x);

/** Subgroup generated by the reflections of the simples orthogonal to a
 *  dominant x0; every element fixes x0. */
WeylGroup orthogonal_subgroup(const RootDatum& datum, const SimpleSystem& sys,
                              const LatticeVector& x0);

/** The positive roots that generate the edges of the weight polytope at the
 *  vertex x0 (pre: x0 dominant): the orbit of the non-orthogonal simples
 *  under the orthogonal subgroup.  Sorted. */
std::vector<LatticeVector> edge_roots(const RootDatum& datum,
                                      const SimpleSystem& sys,
                                      const LatticeVector& x0);

}  // namespace rootpoly
