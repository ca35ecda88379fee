#include "rootpoly/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "rootpoly/errors.hpp"
#include "rootpoly/linear.hpp"

namespace rootpoly {

namespace {

std::string format_vector(const LatticeVector& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i];
  }
  out << ")";
  return out.str();
}

FormalCharacter map_character(const IntMatrix& m, const FormalCharacter& chi) {
  FormalCharacter out(m.rows);
  for (const auto& [w, mult] : chi.terms()) out.add_term(m.apply(w), mult);
  return out;
}

/** The support element maximizing the given functional (lex tie-break). */
LatticeVector functional_maximum(const FormalCharacter& chi,
                                 const RationalVector& y) {
  bool have = false;
  LatticeVector best;
  Rational best_value = 0;
  for (const auto& [w, m] : chi.terms()) {
    Rational value = pairing(w, y);
    if (!have || value > best_value || (value == best_value && w > best)) {
      have = true;
      best = w;
      best_value = value;
    }
  }
  if (!have) throw ArgumentError("functional_maximum: empty character");
  return best;
}

const MatchedIrrep* find_irrep_with_highest(const MatchedPresentation& mp,
                                            const RootDatum& datum_prime,
                                            const SimpleSystem& sys_prime,
                                            const LatticeVector& x0_prime) {
  RationalVector y = strictly_dominant_coweight(datum_prime, sys_prime);
  for (const auto& irrep : mp.irreps) {
    if (irrep.weights_prime.empty()) continue;
    if (irrep.weights_prime.dimension() != x0_prime.size()) continue;
    if (functional_maximum(irrep.weights_prime, y) != x0_prime) continue;
    if (irrep.weights_prime.multiplicity(x0_prime) != 1) continue;
    return &irrep;
  }
  return nullptr;
}

}  // namespace

std::vector<std::string> validate(const MatchedPresentation& mp) {
  std::vector<std::string> violations;
  if (mp.rank == 0) {
    violations.push_back("rank must be positive");
    return violations;
  }
  if (mp.M.rows != mp.rank || mp.M.cols != mp.rank) {
    violations.push_back("M is " + std::to_string(mp.M.rows) + "x" +
                         std::to_string(mp.M.cols) + ", expected " +
                         std::to_string(mp.rank) + "x" +
                         std::to_string(mp.rank));
    return violations;
  }
  if (!mp.M.is_unimodular()) {
    violations.push_back("M is not invertible over the integers");
    return violations;
  }
  for (const auto& irrep : mp.irreps) {
    bool dims_ok = true;
    for (const FormalCharacter* side : {&irrep.weights_prime, &irrep.weights}) {
      if (!side->empty() && side->dimension() != mp.rank) {
        violations.push_back("irrep '" + irrep.label +
                             "': weight dimension differs from rank");
        dims_ok = false;
      }
    }
    if (!dims_ok) continue;
    if (!(map_character(mp.M, irrep.weights_prime) == irrep.weights)) {
      violations.push_back(
          "irrep '" + irrep.label +
          "': M does not carry the primed weight multiset onto the unprimed "
          "one");
    }
  }
  return violations;
}

LatticeVector root_from_edge(const LatticeVector& x0, const EdgeDescriptor& e,
                             const std::set<LatticeVector>& wts) {
  if (x0 != e.a && x0 != e.b) {
    throw ArgumentError("root_from_edge: base point is not an edge endpoint");
  }
  std::set<LatticeVector> K;
  for (const auto& u : segment_lattice_points(e.a, e.b)) {
    if (wts.count(u)) K.insert(sub(x0, u));
  }
  if (K.empty()) {
    throw PreconditionError("root_from_edge: no weights on the edge");
  }
  std::vector<LatticeVector> indivisible =
      indivisible_elements({K.begin(), K.end()});
  if (indivisible.size() != 1) {
    throw InconsistencyError(
        "root_from_edge: expected exactly one indivisible element, found " +
        std::to_string(indivisible.size()) +
        " (weight data corrupted or outside the supported semantics)");
  }
  return indivisible.front();
}

LatticeVector recover_root(const RootDatum& datum_prime,
                           const MatchedPresentation& mp,
                           const LatticeVector& alpha_prime) {
  if (mp.rank != datum_prime.rank) {
    throw DimensionError("recover_root: presentation rank " +
                         std::to_string(mp.rank) + " != datum rank " +
                         std::to_string(datum_prime.rank));
  }
  SimpleSystem base = find_simple_system(datum_prime);
  SimpleSystem sys_prime =
      simple_system_containing(datum_prime, base, alpha_prime);
  LatticeVector x0_prime = positive_root_sum(datum_prime, sys_prime);

  const MatchedIrrep* irrep =
      find_irrep_with_highest(mp, datum_prime, sys_prime, x0_prime);
  if (irrep == nullptr) {
    throw MissingDataError(
        "recover_root: no matched irreducible with highest weight " +
        format_vector(x0_prime));
  }

  LatticeVector other_prime =
      reflection(datum_prime, alpha_prime).apply(x0_prime);

  LatticeVector x0 = mp.M.apply(x0_prime);
  LatticeVector other = mp.M.apply(other_prime);
  std::set<LatticeVector> wts;
  for (const auto& [w, m] : irrep->weights_prime.terms()) {
    wts.insert(mp.M.apply(w));
  }

  LatticeVector alpha = root_from_edge(x0, make_edge(x0, other), wts);
  if (alpha != mp.M.apply(alpha_prime)) {
    throw InconsistencyError(
        "recover_root: edge recovery disagrees with the linear image of " +
        format_vector(alpha_prime));
  }
  return alpha;
}

namespace {

CheckResult one_direction(const RootDatum& target, const RootDatum& source,
                          const MatchedPresentation& mp,
                          std::vector<LatticeVector>* images) {
  CheckResult result;
  for (const auto& alpha_src : source.roots) {
    try {
      LatticeVector image = recover_root(source, mp, alpha_src);
      if (images) images->push_back(image);
      if (!target.contains_root(image)) {
        result.failures.push_back("image " + format_vector(image) + " of " +
                                  format_vector(alpha_src) +
                                  " is not a root of the target datum");
      }
    } catch (const Error& err) {
      result.failures.push_back("recovery failed for " +
                                format_vector(alpha_src) + ": " + err.what());
    }
  }
  result.ok = result.failures.empty();
  return result;
}

}  // namespace

RootTransport transport_roots(const RootDatum& datum,
                              const RootDatum& datum_prime,
                              const MatchedPresentation& mp) {
  RootTransport result;
  result.forward = one_direction(datum, datum_prime, mp, &result.images);

  std::set<LatticeVector> image_set(result.images.begin(),
                                    result.images.end());
  std::set<LatticeVector> target_set(datum.roots.begin(), datum.roots.end());
  result.onto = image_set == target_set;
  if (!result.onto) {
    std::size_t covered = 0;
    for (const auto& r : target_set) covered += image_set.count(r);
    result.forward.failures.push_back(
        "image set is not the target root set (" + std::to_string(covered) +
        " of " + std::to_string(target_set.size()) + " target roots hit)");
    result.forward.ok = false;
  }

  MatchedPresentation reverse;
  reverse.rank = mp.rank;
  reverse.M = mp.M.inverse();
  for (const auto& irrep : mp.irreps) {
    reverse.irreps.push_back({irrep.label, irrep.weights, irrep.weights_prime});
  }
  result.reverse = one_direction(datum_prime, datum, reverse, nullptr);
  return result;
}

SimpleSystem transport_simple_roots(const RootDatum& datum,
                                    const RootDatum& datum_prime,
                                    const MatchedPresentation& mp,
                                    const SimpleSystem& sys_prime) {
  std::vector<std::string> source_violations =
      validate_simple_system(datum_prime, sys_prime);
  if (!source_violations.empty()) {
    throw PreconditionError("transport_simple_roots: input system invalid: " +
                            source_violations.front());
  }
  SimpleSystem image;
  for (const auto& alpha : sys_prime.simples) {
    image.simples.push_back(mp.M.apply(alpha));
  }
  std::sort(image.simples.begin(), image.simples.end());
  std::vector<std::string> violations = validate_simple_system(datum, image);
  if (!violations.empty()) {
    throw InconsistencyError(
        "transport_simple_roots: image fails the simple-system contract: " +
        violations.front());
  }
  return image;
}

CheckResult transport_weyl(const RootDatum& datum, const RootDatum& datum_prime,
                           const WeylGroup& group,
                           const WeylGroup& group_prime,
                           const MatchedPresentation& mp) {
  CheckResult result;
  IntMatrix inv = mp.M.inverse();

  std::set<std::vector<Int>> target;
  for (const auto& e : group.elements) target.insert(e.matrix.data);
  std::set<std::vector<Int>> conjugated;
  for (const auto& e : group_prime.elements) {
    conjugated.insert((mp.M * e.matrix * inv).data);
  }
  if (conjugated != target) {
    result.failures.push_back(
        "conjugated group has " + std::to_string(conjugated.size()) +
        " elements matching a target of " + std::to_string(target.size()) +
        "; sets differ");
  }

  for (const auto& alpha_prime : datum_prime.roots) {
    LatticeVector image = mp.M.apply(alpha_prime);
    if (!datum.contains_root(image)) {
      result.failures.push_back("reflection correspondence: " +
                                format_vector(image) + " is not a root");
      continue;
    }
    IntMatrix conj = mp.M * reflection(datum_prime, alpha_prime).matrix * inv;
    if (!(conj == reflection(datum, image).matrix)) {
      result.failures.push_back(
          "conjugate of the reflection of " + format_vector(alpha_prime) +
          " differs from the reflection of " + format_vector(image));
    }
  }
  result.ok = result.failures.empty();
  return result;
}

LatticeVector coroot_from_reflection(const IntMatrix& s,
                                     const LatticeVector& alpha) {
  const std::size_t d = alpha.size();
  if (s.rows != d || s.cols != d) {
    throw DimensionError("coroot_from_reflection: matrix size mismatch");
  }
  if (is_zero(alpha)) {
    throw ArgumentError("coroot_from_reflection: zero root");
  }
  std::size_t pivot = 0;
  while (alpha[pivot] == 0) ++pivot;

  LatticeVector y(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    // v = e_i - s(e_i): the i-th column of (I - s); must be t * alpha.
    LatticeVector v(d, 0);
    for (std::size_t r = 0; r < d; ++r) {
      v[r] = (r == i ? 1 : 0) - s.at(r, i);
    }
    if (is_zero(v)) continue;
    if (v[pivot] % alpha[pivot] != 0) {
      throw InconsistencyError(
          "coroot_from_reflection: displacement is not an integer multiple "
          "of the root");
    }
    Int t = v[pivot] / alpha[pivot];
    if (v != scale(t, alpha)) {
      throw InconsistencyError(
          "coroot_from_reflection: displacement is not parallel to the root");
    }
    y[i] = t;
  }
  if (pairing(alpha, y) != 2) {
    throw InconsistencyError(
        "coroot_from_reflection: recovered covector pairs to " +
        std::to_string(pairing(alpha, y)) + " with the root, expected 2");
  }
  return y;
}

LatticeVector coroot_via_reflection(const RootDatum& datum,
                                    const LatticeVector& alpha) {
  LatticeVector y =
      coroot_from_reflection(reflection(datum, alpha).matrix, alpha);
  if (y != datum.coroot_of(alpha)) {
    throw InconsistencyError(
        "coroot_via_reflection: recovered coroot differs from the stored "
        "one for " + format_vector(alpha));
  }
  return y;
}

CheckResult transport_coroots(const RootDatum& datum,
                              const RootDatum& datum_prime,
                              const MatchedPresentation& mp) {
  CheckResult result;
  IntMatrix inv = mp.M.inverse();
  IntMatrix mt = mp.M.transpose();
  for (const auto& alpha_prime : datum_prime.roots) {
    LatticeVector alpha = mp.M.apply(alpha_prime);
    if (!datum.contains_root(alpha)) {
      result.failures.push_back("coroot transport: " + format_vector(alpha) +
                                " is not a root of the target datum");
      continue;
    }
    try {
      IntMatrix conj =
          mp.M * reflection(datum_prime, alpha_prime).matrix * inv;
      LatticeVector y = coroot_from_reflection(conj, alpha);
      if (y != datum.coroot_of(alpha)) {
        result.failures.push_back(
            "coroot transport: conjugated reflection of " +
            format_vector(alpha_prime) +
            " yields a coroot differing from the stored one");
        continue;
      }
      if (mt.apply(y) != datum_prime.coroot_of(alpha_prime)) {
        result.failures.push_back(
            "coroot transport: transpose image of the coroot of " +
            format_vector(alpha) + " differs from the coroot of " +
            format_vector(alpha_prime));
      }
    } catch (const Error& err) {
      result.failures.push_back("coroot transport failed for " +
                                format_vector(alpha_prime) + ": " +
                                err.what());
    }
  }
  result.ok = result.failures.empty();
  return result;
}

ReconstructionReport assemble_isomorphism(const RootDatum& datum,
                                          const RootDatum& datum_prime,
                                          const MatchedPresentation& mp) {
  ReconstructionReport report;
  auto fail = [&report](const std::string& message) {
    report.failures.push_back(message);
  };

  for (const auto& v : validate(datum)) fail("target datum: " + v);
  for (const auto& v : validate(datum_prime)) fail("primed datum: " + v);
  for (const auto& v : validate(mp)) fail("matched presentation: " + v);
  if (datum.rank != mp.rank || datum_prime.rank != mp.rank) {
    fail("rank mismatch between data and presentation");
  }
  if (!report.failures.empty()) return report;

  if (datum.roots.size() != datum_prime.roots.size()) {
    fail("root counts differ: " + std::to_string(datum.roots.size()) +
         " here, " + std::to_string(datum_prime.roots.size()) + " primed");
    return report;
  }

  RootTransport rt = transport_roots(datum, datum_prime, mp);
  {
    std::set<LatticeVector> unique(rt.images.begin(), rt.images.end());
    report.recovered_roots.assign(unique.begin(), unique.end());
  }
  for (const auto& f : rt.forward.failures) fail("root transport: " + f);
  for (const auto& f : rt.reverse.failures) {
    fail("root transport (reverse): " + f);
  }

  SimpleSystem sys = find_simple_system(datum);
  SimpleSystem sys_prime = find_simple_system(datum_prime);
  try {
    report.simple_system_image =
        transport_simple_roots(datum, datum_prime, mp, sys_prime).simples;
  } catch (const Error& err) {
    fail(std::string("simple-system transport: ") + err.what());
  }

  WeylGroup group = weyl_group(datum, sys);
  WeylGroup group_prime = weyl_group(datum_prime, sys_prime);
  CheckResult wr = transport_weyl(datum, datum_prime, group, group_prime, mp);
  report.weyl_transport_ok = wr.ok;
  for (const auto& f : wr.failures) fail("group transport: " + f);

  CheckResult cr = transport_coroots(datum, datum_prime, mp);
  report.coroot_transport_ok = cr.ok;
  for (const auto& f : cr.failures) fail(f);

  // Pairing compatibility of the pair (M, M transpose) on basis covectors.
  IntMatrix mt = mp.M.transpose();
  for (std::size_t i = 0; i < mp.rank; ++i) {
    LatticeVector ei(mp.rank, 0);
    ei[i] = 1;
    for (std::size_t j = 0; j < mp.rank; ++j) {
      LatticeVector ej(mp.rank, 0);
      ej[j] = 1;
      if (pairing(mp.M.apply(ei), ej) != pairing(ei, mt.apply(ej))) {
        fail("pairing compatibility fails on basis pair " +
             std::to_string(i) + ", " + std::to_string(j));
      }
    }
  }

  if (rt.ok() && report.failures.empty()) {
    try {
      for (const auto& alpha : report.recovered_roots) {
        report.recovered_coroots.push_back(coroot_via_reflection(datum, alpha));
      }
    } catch (const Error& err) {
      fail(std::string("coroot recovery: ") + err.what());
      report.recovered_coroots.clear();
    }
  }

  report.isomorphism_ok = report.failures.empty() && report.weyl_transport_ok &&
                          report.coroot_transport_ok;
  if (!report.isomorphism_ok && report.failures.empty()) {
    fail("isomorphism checks incomplete");
  }
  return report;
}

MatchedPresentation make_matched_presentation(
    const RootDatum& datum_prime, const IntMatrix& M,
    const std::vector<LatticeVector>& extra_highest_weights) {
  if (M.rows != datum_prime.rank || M.cols != datum_prime.rank) {
    throw DimensionError(
        "make_matched_presentation: matrix size differs from rank");
  }
  if (!M.is_unimodular()) {
    throw ArgumentError("make_matched_presentation: matrix is not unimodular");
  }
  SimpleSystem sys_prime = find_simple_system(datum_prime);

  std::vector<LatticeVector> highest;
  highest.push_back(positive_root_sum(datum_prime, sys_prime));
  for (const auto& lam : extra_highest_weights) highest.push_back(lam);

  MatchedPresentation mp;
  mp.rank = datum_prime.rank;
  mp.M = M;
  for (const auto& lam : highest) {
    FormalCharacter chi = irreducible_character(datum_prime, sys_prime, lam);
    mp.irreps.push_back({"highest weight " + format_vector(lam), chi,
                         map_character(M, chi)});
  }
  return mp;
}

BlindResult blind_reconstruct(std::size_t rank,
                              const std::vector<FormalCharacter>& characters) {
  BlindResult result;
  std::set<LatticeVector> roots;
  std::map<LatticeVector, std::vector<std::pair<LatticeVector, Int>>>
      equations;

  for (const auto& chi : characters) {
    if (chi.empty()) continue;
    if (chi.dimension() != rank) {
      throw DimensionError(
          "blind_reconstruct: character dimension differs from the stated "
          "rank");
    }
    std::set<LatticeVector> support = chi.support();
    std::vector<LatticeVector> vertices =
        hull_vertices({support.begin(), support.end()});
    for (const auto& x0 : vertices) {
      for (const auto& e : edges_at_via_lp(support, x0)) {
        Int on_edge = 0;
        for (const auto& u : segment_lattice_points(e.a, e.b)) {
          if (support.count(u)) ++on_edge;
        }
        LatticeVector alpha = root_from_edge(x0, e, support);
        roots.insert(alpha);
        equations[alpha].emplace_back(x0, on_edge - 1);
      }
    }
  }

  result.roots.assign(roots.begin(), roots.end());
  bool reflections_ok = true;
  std::vector<IntMatrix> reflections;
  for (const auto& alpha : result.roots) {
    const auto& eqs = equations.at(alpha);
    std::vector<RationalVector> rows;
    RationalVector rhs;
    for (const auto& [x0, c] : eqs) {
      rows.push_back(to_rational(x0));
      rhs.push_back(Rational(c));
    }
    std::optional<LinearSolution> sol = solve_linear(rows, rhs, rank);
    if (!sol) {
      throw InconsistencyError(
          "blind_reconstruct: edge string lengths are mutually inconsistent "
          "for root " + format_vector(alpha));
    }
    LatticeVector coroot(rank, 0);
    bool usable = true;
    if (sol->nullity > 0) {
      result.flags.push_back("coroot underdetermined for root " +
                             format_vector(alpha));
      if (is_integral(sol->x)) {
        coroot = to_lattice(sol->x);
      } else {
        result.flags.push_back("no integral coroot representative for root " +
                               format_vector(alpha));
        usable = false;
      }
    } else {
      if (!is_integral(sol->x)) {
        throw InconsistencyError(
            "blind_reconstruct: determined coroot is not integral for root " +
            format_vector(alpha));
      }
      coroot = to_lattice(sol->x);
    }
    result.coroots.push_back(coroot);
    if (usable && pairing(alpha, coroot) != 2) {
      result.flags.push_back("recovered pairing is " +
                             std::to_string(pairing(alpha, coroot)) +
                             " instead of 2 for root " + format_vector(alpha));
      usable = false;
    }
    if (usable) {
      reflections.push_back(reflection_matrix(alpha, coroot));
    } else {
      reflections_ok = false;
    }
  }

  result.saturated = reflections_ok;
  for (const auto& s : reflections) {
    std::set<LatticeVector> image;
    for (const auto& alpha : roots) image.insert(s.apply(alpha));
    if (image != roots) {
      result.saturated = false;
      break;
    }
  }
  if (!result.saturated && reflections_ok) {
    result.flags.push_back(
        "recovered root set is not stable under its own reflections");
  }
  return result;
}

}  // namespace rootpoly
