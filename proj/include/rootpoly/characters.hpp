#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "rootpoly/rational.hpp"
#include "rootpoly/root_datum.hpp"
#include "rootpoly/weyl.hpp"

namespace rootpoly {

/** A finite integer combination of lattice points ("weight" -> multiplicity).
 *  Zero terms are never stored.  Multiplication is the convolution product,
 *  matching tensor products of representations on the character level. */
class FormalCharacter {
 public:
  FormalCharacter() = default;
  explicit FormalCharacter(std::size_t dimension) : dimension_(dimension) {}

  static FormalCharacter single(const LatticeVector& weight,
                                long long mult = 1);

  std::size_t dimension() const { return dimension_; }
  void add_term(const LatticeVector& weight, long long mult);
  long long multiplicity(const LatticeVector& weight) const;
  const std::map<LatticeVector, long long>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  /** Sum of all multiplicities. */
  long long total() const;
  std::set<LatticeVector> support() const;

  FormalCharacter operator+(const FormalCharacter& other) const;
  FormalCharacter operator-(const FormalCharacter& other) const;
  FormalCharacter operator*(const FormalCharacter& other) const;
  FormalCharacter scaled(long long factor) const;
  /** Push forward along a Weyl element: terms at w(weight). */
  FormalCharacter apply(const WeylElement& w) const;

  bool operator==(const FormalCharacter& other) const {
    return terms_ == other.terms_;
  }

 private:
  std::size_t dimension_ = 0;
  std::map<LatticeVector, long long> terms_;
};

/** Bilinear form sum over all coroots of <x, coroot><y, coroot>;
 *  positive definite on the rational span of the roots and Weyl invariant. */
Rational invariant_form(const RootDatum& datum, const RationalVector& x,
                        const RationalVector& y);

/** The weight set of the irreducible representation with highest weight
 *  lambda (pre: dominant): walk downward from lambda by simple-root steps,
 *  keeping points whose dominant representative mu satisfies
 *  lambda - mu in the nonnegative span of the simples, then close under the
 *  Weyl group. */
std::set<LatticeVector> weight_set(const RootDatum& datum,
                                   const SimpleSystem& sys,
                                   const LatticeVector& lambda);

/** Same set computed by an independent route: enumerate the coset
 *  lambda + (root lattice) inside a bounding box of the orbit hull and keep
 *  the points inside the hull, certified by exact linear programming. */
std::set<LatticeVector> weight_set_hull_coset(const RootDatum& datum,
                                              const SimpleSystem& sys,
                                              const LatticeVector& lambda);

/** Full character of the irreducible representation with highest weight
 *  lambda (pre: dominant), multiplicities by the standard recursion on the
 *  invariant form.  Every computed multiplicity is checked to be a positive
 *  integer; the total is checked against the product formula. */
FormalCharacter irreducible_character(const RootDatum& datum,
                                      const SimpleSystem& sys,
                                      const LatticeVector& lambda);

/** Dimension of the irreducible with highest weight lambda by the product
 *  over positive roots of <lambda + rho, coroot> / <rho, coroot>. */
Rational weyl_dimension(const RootDatum& datum, const SimpleSystem& sys,
                        const LatticeVector& lambda);

/** True when the character is fixed by every generator of the group. */
bool is_invariant(const WeylGroup& group, const FormalCharacter& chi);

/** Write an invariant character as an integer combination of irreducible
 *  characters; returns highest weight -> coefficient.  Coefficients may be
 *  negative for virtual characters; genuine representations always yield
 *  nonnegative ones.  Repeatedly strips the maximal term for a strictly
 *  dominant functional (lexicographic tie-break).  Throws PreconditionError
 *  when not invariant, InconsistencyError when a maximal term is not
 *  dominant (impossible for any integer combination of irreducibles). */
std::map<LatticeVector, long long> decompose(const RootDatum& datum,
                                             const SimpleSystem& sys,
                                             const WeylGroup& group,
                                             const FormalCharacter& chi);

}  // namespace rootpoly
