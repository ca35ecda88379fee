#pragma once

#include <cstdint>
#include <vector>

#include "rootpoly/rational.hpp"

namespace rootpoly {

using Int = long long;

/** Element of a character or cocharacter lattice in a fixed basis.
 *
 *  The pairing between the two lattices is always the standard dot product;
 *  lattice choices (simply connected, adjoint, ...) are encoded entirely in
 *  the coordinates of roots and coroots, never in the pairing.
 */
using LatticeVector = std::vector<Int>;

/** Exact dot product ⟨x, y⟩ of two lattice vectors of equal dimension. */
Int pairing(const LatticeVector& x, const LatticeVector& y);

/** Exact pairing of a lattice vector against a rational covector. */
Rational pairing(const LatticeVector& x, const RationalVector& y);

/** Exact pairing of two rational vectors. */
Rational pairing(const RationalVector& x, const RationalVector& y);

LatticeVector add(const LatticeVector& a, const LatticeVector& b);
LatticeVector sub(const LatticeVector& a, const LatticeVector& b);
LatticeVector negate(const LatticeVector& a);
LatticeVector scale(Int c, const LatticeVector& a);
bool is_zero(const LatticeVector& a);

RationalVector to_rational(const LatticeVector& a);
RationalVector rational_add(const RationalVector& a, const RationalVector& b);
RationalVector rational_sub(const RationalVector& a, const RationalVector& b);
RationalVector rational_scale(const Rational& c, const RationalVector& a);

/** True if every coordinate of `a` is an integer. */
bool is_integral(const RationalVector& a);

/** Coordinate-wise truncation of an integral rational vector; throws
 *  ArgumentError if any coordinate is non-integral. */
LatticeVector to_lattice(const RationalVector& a);

/** gcd of the absolute values of all coordinates (0 for the zero vector). */
Int content(const LatticeVector& a);

/** All lattice points on the closed segment [a, b], ordered from a to b.
 *  The step is the primitive vector (b - a) / gcd; a degenerate segment
 *  (a == b) yields the single point a. */
std::vector<LatticeVector> segment_lattice_points(const LatticeVector& a,
                                                  const LatticeVector& b);

/** The indivisible elements of a finite set K: the x in K such that x/n lies
 *  outside K for every integer n > 1.  The zero vector is never indivisible
 *  when it belongs to K.  Input duplicates are ignored; output is sorted. */
std::vector<LatticeVector> indivisible_elements(
    const std::vector<LatticeVector>& k);

}  // namespace rootpoly
