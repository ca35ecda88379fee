#pragma once

#include <random>
#include <string>

#include "rootpoly/matrix.hpp"
#include "rootpoly/root_datum.hpp"

namespace rootpoly::testsupport {

/** A random unimodular matrix assembled from elementary shears, sign flips
 *  and transpositions, so the determinant is +-1 by construction and the
 *  entries stay small. */
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n,
                                   int steps = 6) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> amount(-2, 2);
  std::uniform_int_distribution<int> kind(0, 2);
  IntMatrix m = IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    IntMatrix e = IntMatrix::identity(n);
    int i = pick(rng);
    int j = pick(rng);
    switch (kind(rng)) {
      case 0:
        if (i != j) e.at(i, j) = amount(rng);
        break;
      case 1:
        e.at(i, i) = -1;
        break;
      default:
        if (i != j) {
          e.at(i, i) = 0;
          e.at(j, j) = 0;
          e.at(i, j) = 1;
          e.at(j, i) = 1;
        }
        break;
    }
    m = m * e;
  }
  return m;
}

/** The same datum written in the coordinates that M maps onto the original
 *  ones: roots go through M^{-1}, coroots through M^T, so that M is an
 *  isomorphism from the result back to `datum`. */
inline RootDatum change_basis(const RootDatum& datum, const IntMatrix& m) {
  IntMatrix inv = m.inverse();
  IntMatrix mt = m.transpose();
  RootDatum out;
  out.label = datum.label + " (rebased)";
  out.rank = datum.rank;
  for (std::size_t i = 0; i < datum.roots.size(); ++i) {
    out.roots.push_back(inv.apply(datum.roots[i]));
    out.coroots.push_back(mt.apply(datum.coroots[i]));
  }
  return out;
}

}  // namespace rootpoly::testsupport
