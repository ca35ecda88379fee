#pragma once

#include <set>
#include <string>
#include <vector>

#include "rootpoly/characters.hpp"
#include "rootpoly/matrix.hpp"
#include "rootpoly/polytope.hpp"
#include "rootpoly/root_datum.hpp"
#include "rootpoly/weyl.hpp"

namespace rootpoly {

/** One irreducible seen from both sides of a lattice identification:
 *  its weight multiset over the primed lattice and over the unprimed one. */
struct MatchedIrrep {
  std::string label;
  FormalCharacter weights_prime;
  FormalCharacter weights;
};

/** The character-level input of the inverse pipeline: a unimodular change of
 *  lattices M (primed coordinates -> unprimed coordinates) together with
 *  matched weight multisets of corresponding irreducibles. */
struct MatchedPresentation {
  std::size_t rank = 0;
  IntMatrix M;
  std::vector<MatchedIrrep> irreps;
};

/** All violations of the matched-presentation contract: M square of the
 *  stated rank and unimodular, and M carrying every primed multiset onto its
 *  unprimed partner multiplicity-for-multiplicity. */
std::vector<std::string> validate(const MatchedPresentation& mp);

struct ReconstructionReport {
  std::vector<LatticeVector> recovered_roots;    // sorted
  std::vector<LatticeVector> recovered_coroots;  // aligned with roots
  std::vector<LatticeVector> simple_system_image;
  bool weyl_transport_ok = false;
  bool coroot_transport_ok = false;
  bool isomorphism_ok = false;
  std::vector<std::string> failures;  // empty iff all booleans true
};

/** Outcome of one verification pass; ok iff failures is empty. */
struct CheckResult {
  bool ok = false;
  std::vector<std::string> failures;
};

/** Extracts the root generating an edge of a weight polytope: with x0 an
 *  endpoint of e, forms K = {x0 - u : u a weight on e} and returns its
 *  unique indivisible element.  Zero or several indivisible elements signal
 *  corrupted or out-of-scope weight data and raise InconsistencyError. */
LatticeVector root_from_edge(const LatticeVector& x0, const EdgeDescriptor& e,
                             const std::set<LatticeVector>& wts);

/** Recovers the image of one primed root through character data alone:
 *  choose a simple system containing alpha_prime, take its positive-root sum
 *  as the strongly dominant base vertex, locate the matched irreducible with
 *  that highest weight, transport the vertex/edge/weights by M, and read the
 *  root off the transported edge.  The result is checked to equal
 *  M alpha_prime.  Missing matched irreducible -> MissingDataError. */
LatticeVector recover_root(const RootDatum& datum_prime,
                           const MatchedPresentation& mp,
                           const LatticeVector& alpha_prime);

/** Both directions of the root transport. */
struct RootTransport {
  std::vector<LatticeVector> images;  // recover_root of each primed root
  CheckResult forward;                // every image is a root here
  CheckResult reverse;                // with M inverse, every root comes back
  bool onto = false;                  // images cover the unprimed root set
  bool ok() const { return forward.ok && reverse.ok && onto; }
};

/** Runs recover_root over all primed roots, checks membership and
 *  surjectivity, and repeats in the reverse direction with M inverse. */
RootTransport transport_roots(const RootDatum& datum,
                              const RootDatum& datum_prime,
                              const MatchedPresentation& mp);

/** Image of a primed simple system under M, validated as a simple system of
 *  the unprimed datum (InconsistencyError on failure). */
SimpleSystem transport_simple_roots(const RootDatum& datum,
                                    const RootDatum& datum_prime,
                                    const MatchedPresentation& mp,
                                    const SimpleSystem& sys_prime);

/** Conjugation by M carries the primed Weyl group onto the unprimed one,
 *  and each primed reflection to the reflection of the image root. */
CheckResult transport_weyl(const RootDatum& datum, const RootDatum& datum_prime,
                           const WeylGroup& group,
                           const WeylGroup& group_prime,
                           const MatchedPresentation& mp);

/** Reads the coroot of alpha off a reflection matrix s: the unique y with
 *  x - s(x) = <x, y> alpha for all x, found by basis probes; checked to pair
 *  to 2 with alpha.  InconsistencyError when s is not such a reflection. */
LatticeVector coroot_from_reflection(const IntMatrix& s,
                                     const LatticeVector& alpha);

/** Coroot of a root of the datum recomputed from its own reflection, and
 *  cross-checked against the stored coroot. */
LatticeVector coroot_via_reflection(const RootDatum& datum,
                                    const LatticeVector& alpha);

/** The transpose of M carries unprimed coroots onto primed ones; each side's
 *  coroot is recomputed from reflection matrices, the unprimed one from the
 *  conjugated primed reflection. */
CheckResult transport_coroots(const RootDatum& datum,
                              const RootDatum& datum_prime,
                              const MatchedPresentation& mp);

/** Runs the complete battery (validation, root/simple/Weyl/coroot transport,
 *  pairing compatibility of M and its transpose) and reports.  Failure is
 *  always data, never an exception. */
ReconstructionReport assemble_isomorphism(const RootDatum& datum,
                                          const RootDatum& datum_prime,
                                          const MatchedPresentation& mp);

/** Builds the matched presentation induced by M from the primed datum: one
 *  matched irreducible per requested highest weight (default: the
 *  positive-root sum, which is strongly dominant), primed side computed,
 *  unprimed side pushed forward through M. */
MatchedPresentation make_matched_presentation(
    const RootDatum& datum_prime, const IntMatrix& M,
    const std::vector<LatticeVector>& extra_highest_weights = {});

/** Root and coroot candidates recovered from characters alone. */
struct BlindResult {
  std::vector<LatticeVector> roots;    // sorted
  std::vector<LatticeVector> coroots;  // aligned with roots
  bool saturated = false;  // roots stable under every recovered reflection
  std::vector<std::string> flags;
};

/** From raw weight multisets over an unlabeled rank-d lattice: hull
 *  vertices, LP edges, a root per edge, then a coroot per recovered root by
 *  solving the edge-length equations <vertex, coroot> = lattice points - 1.
 *  Underdetermined coroot systems are flagged, not errors; mutually
 *  inconsistent ones raise InconsistencyError. */
BlindResult blind_reconstruct(std::size_t rank,
                              const std::vector<FormalCharacter>& characters);

}  // namespace rootpoly
