#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <vector>

namespace rootpoly {

/** Exact rational scalar.  All geometric decisions in this library are made
 *  with exact arithmetic; no floating point appears in any decision path. */
using Rational = boost::multiprecision::mpq_rational;

/** Dense rational vector (covectors, sample points, LP solutions). */
using RationalVector = std::vector<Rational>;

}  // namespace rootpoly
