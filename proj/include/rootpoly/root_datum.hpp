#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootpoly/lattice.hpp"
#include "rootpoly/rational.hpp"

namespace rootpoly {

/** A root datum (X, roots, Y, coroots) in coordinates.
 *
 *  X and Y are both identified with Z^rank and paired by the standard dot
 *  product; the choice of lattice (simply connected, adjoint, intermediate)
 *  is carried entirely by the coordinates of the roots and coroots.
 *  roots[i] and coroots[i] always belong to each other.
 */
struct RootDatum {
  std::string label;
  std::size_t rank = 0;
  std::vector<LatticeVector> roots;
  std::vector<LatticeVector> coroots;

  bool contains_root(const LatticeVector& alpha) const;
  /** Index of alpha in roots; throws ArgumentError if absent. */
  std::size_t root_index(const LatticeVector& alpha) const;
  const LatticeVector& coroot_of(const LatticeVector& alpha) const;
};

enum class Lattice { simply_connected, adjoint, gl_variant };

/** Builds a named datum.  `type` is a Cartan label (A1..A4, B2, B3, C3, D4,
 *  G2), a torus Tk, or an x-separated product such as "A1xA1" or "A2xT1".
 *  The lattice applies to every non-torus factor; gl_variant (the GL(n+1)
 *  form, one extra central dimension) is defined for type A factors only. */
RootDatum make_datum(const std::string& type,
                     Lattice lattice = Lattice::simply_connected);

/** Checks every root-datum axiom and returns all violations found (empty
 *  means valid): pairing normalization <alpha, alpha^vee> = 2, reflection
 *  closure on both sides with matching indices, negation closure,
 *  reducedness, duplicate detection, dimension consistency. */
std::vector<std::string> validate(const RootDatum& datum);

/** An ordered set of simple roots for the datum.  Every root of the datum is
 *  a same-sign integer combination of the simples. */
struct SimpleSystem {
  std::vector<LatticeVector> simples;
};

/** The deterministic covector used to separate roots from their negatives:
 *  (N^{d-1}, ..., N, 1) with N = 1 + the largest absolute root coordinate.
 *  No root pairs to zero against it. */
LatticeVector generic_separator(const RootDatum& datum);

/** Finds a simple system.  The positivity functional is the seed when it
 *  already separates all roots; otherwise the seed (default: all-ones) gets
 *  an exact epsilon-perturbation along generic_separator, small enough to
 *  preserve every nonzero pairing sign.  Simples are the positive roots that
 *  are not sums of two positive roots, returned sorted. */
SimpleSystem find_simple_system(
    const RootDatum& datum,
    const std::optional<RationalVector>& seed = std::nullopt);

/** All violations of the simple-system contract for `sys` (independence and
 *  same-sign integrality of every root's expansion). */
std::vector<std::string> validate_simple_system(const RootDatum& datum,
                                                const SimpleSystem& sys);

/** A simple system containing the given root, found by walking adjacent
 *  chambers (reflecting the base system in its own walls) breadth-first.
 *  Throws ArgumentError when alpha is not a root; ResourceError at `cap`
 *  visited chambers. */
SimpleSystem simple_system_containing(const RootDatum& datum,
                                      const SimpleSystem& base,
                                      const LatticeVector& alpha,
                                      std::size_t cap = 1000000);

enum class Dominance { not_dominant, dominant, strongly_dominant };

/** Classifies x against the chamber of `sys`: dominant means every pairing
 *  with a simple coroot is >= 0, strongly dominant means all are > 0.  An
 *  empty system reports plain dominance. */
Dominance dominance(const RootDatum& datum, const SimpleSystem& sys,
                    const LatticeVector& x);

/** Expansion coefficients of x over the simples (exact; nullopt when x lies
 *  outside their span). */
std::optional<RationalVector> span_coefficients(const SimpleSystem& sys,
                                                const LatticeVector& x);

/** The roots whose expansion over `sys` is nonnegative. */
std::vector<LatticeVector> positive_roots(const RootDatum& datum,
                                          const SimpleSystem& sys);

/** Sum of all positive roots (the doubled half-sum; strongly dominant for
 *  every nonempty system, the zero vector for a torus). */
LatticeVector positive_root_sum(const RootDatum& datum,
                                const SimpleSystem& sys);

/** The part of the datum orthogonal to a dominant x0. */
struct OrthogonalSubsystem {
  RootDatum subsystem;                   // roots beta with <x0, beta^vee> = 0
  std::vector<LatticeVector> positives;  // the positive ones among them
  SimpleSystem simples;                  // the simple ones among them
};

/** Splits off the roots whose coroots pair to zero with x0 (pre: x0
 *  dominant).  The returned subsystem is itself a valid root datum. */
OrthogonalSubsystem orthogonal_subsystem(const RootDatum& datum,
                                         const SimpleSystem& sys,
                                         const LatticeVector& x0);

/** A rational coweight pairing to exactly 1 with every simple root
 *  (deterministic: free coordinates pinned to zero). */
RationalVector strictly_dominant_coweight(const RootDatum& datum,
                                          const SimpleSystem& sys);

}  // namespace rootpoly
