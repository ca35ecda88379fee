#include "rootpoly/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "rootpoly/errors.hpp"
#include "rootpoly/linear.hpp"

namespace rootpoly {

bool RootDatum::contains_root(const LatticeVector& alpha) const {
  return std::find(roots.begin(), roots.end(), alpha) != roots.end();
}

std::size_t RootDatum::root_index(const LatticeVector& alpha) const {
  auto it = std::find(roots.begin(), roots.end(), alpha);
  if (it == roots.end()) {
    throw ArgumentError("root_index: vector is not a root of '" + label + "'");
  }
  return static_cast<std::size_t>(it - roots.begin());
}

const LatticeVector& RootDatum::coroot_of(const LatticeVector& alpha) const {
  return coroots[root_index(alpha)];
}

namespace {

// Cartan matrix with entry (i, j) = <alpha_i, alpha_j^vee>.
std::vector<std::vector<Int>> cartan_matrix(char family, int n) {
  std::vector<std::vector<Int>> c(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto chain = [&]() {
    for (int i = 0; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  };
  switch (family) {
    case 'A':
      chain();
      break;
    case 'B':  // last simple root short
      chain();
      c[n - 2][n - 1] = -2;
      break;
    case 'C':  // last simple root long
      chain();
      c[n - 1][n - 2] = -2;
      break;
    case 'D':
      for (int i : {0, 2, 3}) c[1][i] = c[i][1] = -1;
      break;
    case 'G':
      c[0][1] = -1;  // alpha_0 short
      c[1][0] = -3;
      break;
    default:
      throw ArgumentError("cartan_matrix: unknown family");
  }
  return c;
}

struct FactorData {
  std::size_t rank = 0;
  std::vector<LatticeVector> roots;
  std::vector<LatticeVector> coroots;
};

// Closure of the simple roots under their own reflections, tracking coroots
// through the dual reflections; finite for every Cartan matrix above.
FactorData close_under_reflections(std::vector<LatticeVector> simples,
                                   std::vector<LatticeVector> cosimples,
                                   std::size_t dim) {
  std::map<LatticeVector, LatticeVector> found;
  std::deque<LatticeVector> queue;
  for (std::size_t i = 0; i < simples.size(); ++i) {
    found.emplace(simples[i], cosimples[i]);
    queue.push_back(simples[i]);
  }
  while (!queue.empty()) {
    LatticeVector beta = queue.front();
    queue.pop_front();
    LatticeVector beta_v = found.at(beta);
    for (std::size_t i = 0; i < simples.size(); ++i) {
      Int p = pairing(beta, cosimples[i]);
      LatticeVector gamma = sub(beta, scale(p, simples[i]));
      Int q = pairing(simples[i], beta_v);
      LatticeVector gamma_v = sub(beta_v, scale(q, cosimples[i]));
      auto [it, inserted] = found.emplace(gamma, gamma_v);
      if (inserted) {
        queue.push_back(gamma);
      } else if (it->second != gamma_v) {
        throw Error("close_under_reflections: coroot mismatch");
      }
      if (found.size() > 10000) {
        throw ResourceError("close_under_reflections: closure exceeded cap");
      }
    }
  }
  FactorData out;
  out.rank = dim;
  for (auto& [r, cr] : found) {
    out.roots.push_back(r);
    out.coroots.push_back(cr);
  }
  return out;
}

FactorData build_factor(char family, int n, Lattice lattice) {
  if (family == 'T') {
    FactorData torus;
    torus.rank = static_cast<std::size_t>(n);
    return torus;
  }
  if (lattice == Lattice::gl_variant) {
    if (family != 'A') {
      throw ArgumentError("make_datum: gl_variant is defined for type A only");
    }
    std::size_t d = static_cast<std::size_t>(n) + 1;
    std::vector<LatticeVector> simples, cosimples;
    for (int i = 0; i < n; ++i) {
      LatticeVector v(d, 0);
      v[i] = 1;
      v[i + 1] = -1;
      simples.push_back(v);
      cosimples.push_back(v);
    }
    return close_under_reflections(simples, cosimples, d);
  }
  auto c = cartan_matrix(family, n);
  std::vector<LatticeVector> simples, cosimples;
  std::size_t d = static_cast<std::size_t>(n);
  for (int i = 0; i < n; ++i) {
    LatticeVector root(d, 0), coroot(d, 0);
    if (lattice == Lattice::simply_connected) {
      // basis of X: fundamental weights; alpha_i = row i of the Cartan matrix
      for (int j = 0; j < n; ++j) root[j] = c[i][j];
      coroot[i] = 1;
    } else {
      // basis of X: simple roots; coroot_j = column j of the Cartan matrix
      root[i] = 1;
      for (int j = 0; j < n; ++j) coroot[j] = c[j][i];
    }
    simples.push_back(root);
    cosimples.push_back(coroot);
  }
  return close_under_reflections(simples, cosimples, d);
}

std::pair<char, int> parse_factor(const std::string& part) {
  if (part.size() < 2 || !std::isalpha(static_cast<unsigned char>(part[0]))) {
    throw ArgumentError("make_datum: malformed factor '" + part + "'");
  }
  char family = part[0];
  for (std::size_t i = 1; i < part.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
      throw ArgumentError("make_datum: malformed factor '" + part + "'");
    }
  }
  int n = std::stoi(part.substr(1));
  static const std::set<std::string> supported = {
      "A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"};
  if (family == 'T') {
    if (n < 1) throw ArgumentError("make_datum: torus rank must be positive");
  } else if (supported.count(part) == 0) {
    throw ArgumentError("make_datum: unsupported type '" + part + "'");
  }
  return {family, n};
}

}  // namespace

RootDatum make_datum(const std::string& type, Lattice lattice) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : type) {
    if (ch == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);

  std::vector<FactorData> factors;
  std::size_t total = 0;
  for (const std::string& part : parts) {
    auto [family, n] = parse_factor(part);
    factors.push_back(build_factor(family, n, lattice));
    total += factors.back().rank;
  }

  RootDatum datum;
  datum.rank = total;
  switch (lattice) {
    case Lattice::simply_connected:
      datum.label = type + " sc";
      break;
    case Lattice::adjoint:
      datum.label = type + " adj";
      break;
    case Lattice::gl_variant:
      datum.label = type + " gl";
      break;
  }
  std::size_t offset = 0;
  std::vector<std::pair<LatticeVector, LatticeVector>> pairs;
  for (const FactorData& f : factors) {
    for (std::size_t i = 0; i < f.roots.size(); ++i) {
      LatticeVector root(total, 0), coroot(total, 0);
      std::copy(f.roots[i].begin(), f.roots[i].end(), root.begin() + offset);
      std::copy(f.coroots[i].begin(), f.coroots[i].end(),
                coroot.begin() + offset);
      pairs.emplace_back(std::move(root), std::move(coroot));
    }
    offset += f.rank;
  }
  std::sort(pairs.begin(), pairs.end());
  for (auto& [r, cr] : pairs) {
    datum.roots.push_back(std::move(r));
    datum.coroots.push_back(std::move(cr));
  }
  return datum;
}

std::vector<std::string> validate(const RootDatum& datum) {
  std::vector<std::string> bad;
  auto note = [&](std::string msg) { bad.push_back(std::move(msg)); };

  if (datum.rank == 0) note("rank: must be a positive integer");
  if (datum.roots.size() != datum.coroots.size()) {
    note("alignment: " + std::to_string(datum.roots.size()) + " roots vs " +
         std::to_string(datum.coroots.size()) + " coroots");
    return bad;  // index-aligned checks below would be meaningless
  }
  bool dims_ok = true;
  for (std::size_t i = 0; i < datum.roots.size(); ++i) {
    if (datum.roots[i].size() != datum.rank ||
        datum.coroots[i].size() != datum.rank) {
      note("dimension: entry " + std::to_string(i) +
           " does not match rank " + std::to_string(datum.rank));
      dims_ok = false;
    }
  }
  if (!dims_ok) return bad;

  std::map<LatticeVector, std::size_t> index;
  for (std::size_t i = 0; i < datum.roots.size(); ++i) {
    auto [it, inserted] = index.emplace(datum.roots[i], i);
    if (!inserted) {
      note("duplicate: roots " + std::to_string(it->second) + " and " +
           std::to_string(i) + " coincide");
    }
  }

  for (std::size_t i = 0; i < datum.roots.size(); ++i) {
    if (pairing(datum.roots[i], datum.coroots[i]) != 2) {
      note("pairing: <root " + std::to_string(i) + ", its coroot> != 2");
    }
  }

  for (std::size_t i = 0; i < datum.roots.size(); ++i) {
    if (index.find(negate(datum.roots[i])) == index.end()) {
      note("negation: root " + std::to_string(i) + " has no negative");
    }
  }

  // Reducedness: the only parallel roots are opposite pairs.
  for (std::size_t i = 0; i < datum.roots.size(); ++i) {
    for (std::size_t j = i + 1; j < datum.roots.size(); ++j) {
      const LatticeVector& a = datum.roots[i];
      const LatticeVector& b = datum.roots[j];
      bool parallel = true;
      for (std::size_t p = 0; p < datum.rank && parallel; ++p) {
        for (std::size_t q = p + 1; q < datum.rank && parallel; ++q) {
          if (a[p] * b[q] != a[q] * b[p]) parallel = false;
        }
      }
      if (parallel && b != negate(a)) {
        note("reduced: roots " + std::to_string(i) + " and " +
             std::to_string(j) + " are proportional");
      }
    }
  }

  // Reflection closure with matching index correspondence on both sides.
  for (std::size_t i = 0; i < datum.roots.size(); ++i) {
    for (std::size_t j = 0; j < datum.roots.size(); ++j) {
      Int p = pairing(datum.roots[j], datum.coroots[i]);
      LatticeVector image = sub(datum.roots[j], scale(p, datum.roots[i]));
      auto it = index.find(image);
      if (it == index.end()) {
        note("reflection: s_" + std::to_string(i) + " maps root " +
             std::to_string(j) + " outside the root set");
        continue;
      }
      Int q = pairing(datum.roots[i], datum.coroots[j]);
      LatticeVector coimage =
          sub(datum.coroots[j], scale(q, datum.coroots[i]));
      if (datum.coroots[it->second] != coimage) {
        note("reflection: dual of s_" + std::to_string(i) + " maps coroot " +
             std::to_string(j) + " away from the coroot of the image root");
      }
    }
  }
  return bad;
}

LatticeVector generic_separator(const RootDatum& datum) {
  Int biggest = 0;
  for (const LatticeVector& r : datum.roots) {
    for (Int v : r) biggest = std::max(biggest, v < 0 ? -v : v);
  }
  Int base = std::max<Int>(2, biggest + 1);
  LatticeVector g(datum.rank);
  Int power = 1;
  for (std::size_t i = datum.rank; i-- > 0;) {
    g[i] = power;
    power *= base;
  }
  return g;
}

SimpleSystem find_simple_system(const RootDatum& datum,
                                const std::optional<RationalVector>& seed) {
  RationalVector y =
      seed.value_or(RationalVector(datum.rank, Rational(1)));
  if (y.size() != datum.rank) {
    throw DimensionError("find_simple_system: seed dimension mismatch");
  }
  LatticeVector g = generic_separator(datum);

  bool needs_perturbation = false;
  Rational min_nonzero = 0;
  Int max_g = 1;
  for (const LatticeVector& r : datum.roots) {
    Rational p = pairing(r, y);
    if (p == 0) {
      needs_perturbation = true;
    } else {
      Rational a = abs(p);
      if (min_nonzero == 0 || a < min_nonzero) min_nonzero = a;
    }
    Int pg = pairing(r, g);
    max_g = std::max(max_g, pg < 0 ? -pg : pg);
  }
  if (needs_perturbation) {
    // epsilon keeps every nonzero pairing's sign and resolves the zeros
    // along the separator, exactly.
    Rational eps = min_nonzero == 0
                       ? Rational(1)
                       : min_nonzero / (2 * Rational(max_g));
    for (std::size_t i = 0; i < datum.rank; ++i) {
      y[i] += eps * Rational(g[i]);
    }
  }

  std::set<LatticeVector> positive;
  for (const LatticeVector& r : datum.roots) {
    Rational p = pairing(r, y);
    if (p == 0) {
      throw Error("find_simple_system: functional vanished on a root");
    }
    if (p > 0) positive.insert(r);
  }

  SimpleSystem sys;
  for (const LatticeVector& a : positive) {
    bool decomposable = false;
    for (const LatticeVector& b : positive) {
      LatticeVector rest = sub(a, b);
      if (!is_zero(rest) && positive.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) sys.simples.push_back(a);
  }
  return sys;
}

std::vector<std::string> validate_simple_system(const RootDatum& datum,
                                                const SimpleSystem& sys) {
  std::vector<std::string> bad;
  for (const LatticeVector& s : sys.simples) {
    if (s.size() != datum.rank) {
      bad.push_back("simple system: dimension mismatch");
      return bad;
    }
    if (!datum.contains_root(s)) {
      bad.push_back("simple system: a member is not a root");
    }
  }
  // Independence: the expansion solve must have no free directions among
  // the simples themselves.
  std::vector<RationalVector> rows(datum.rank,
                                   RationalVector(sys.simples.size()));
  for (std::size_t i = 0; i < datum.rank; ++i) {
    for (std::size_t j = 0; j < sys.simples.size(); ++j) {
      rows[i][j] = sys.simples[j][i];
    }
  }
  auto zero = solve_linear(rows, RationalVector(datum.rank, Rational(0)),
                           sys.simples.size());
  if (!zero || zero->nullity != 0) {
    bad.push_back("simple system: simples are linearly dependent");
  }
  for (const LatticeVector& r : datum.roots) {
    auto c = span_coefficients(sys, r);
    if (!c) {
      bad.push_back("simple system: a root lies outside the span");
      continue;
    }
    bool has_pos = false, has_neg = false, integral = true;
    for (const Rational& v : *c) {
      if (v > 0) has_pos = true;
      if (v < 0) has_neg = true;
      if (denominator(v) != 1) integral = false;
    }
    if (has_pos && has_neg) {
      bad.push_back("simple system: a root has mixed-sign coefficients");
    }
    if (!integral) {
      bad.push_back("simple system: a root has non-integer coefficients");
    }
  }
  return bad;
}

SimpleSystem simple_system_containing(const RootDatum& datum,
                                      const SimpleSystem& base,
                                      const LatticeVector& alpha,
                                      std::size_t cap) {
  if (!datum.contains_root(alpha)) {
    throw ArgumentError("simple_system_containing: not a root");
  }
  auto contains = [&](const std::vector<LatticeVector>& simples) {
    return std::find(simples.begin(), simples.end(), alpha) != simples.end();
  };
  std::set<std::vector<LatticeVector>> seen;
  std::deque<std::vector<LatticeVector>> queue;
  auto keyed = [](std::vector<LatticeVector> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  queue.push_back(base.simples);
  seen.insert(keyed(base.simples));
  while (!queue.empty()) {
    std::vector<LatticeVector> simples = queue.front();
    queue.pop_front();
    if (contains(simples)) return SimpleSystem{simples};
    // Neighboring chambers: reflect the whole system in each of its walls.
    for (const LatticeVector& wall : simples) {
      const LatticeVector& wall_v = datum.coroot_of(wall);
      std::vector<LatticeVector> next;
      next.reserve(simples.size());
      for (const LatticeVector& s : simples) {
        next.push_back(sub(s, scale(pairing(s, wall_v), wall)));
      }
      if (seen.insert(keyed(next)).second) {
        if (seen.size() > cap) {
          throw ResourceError("simple_system_containing: chamber cap hit");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  throw InconsistencyError(
      "simple_system_containing: root not reachable from the base system");
}

Dominance dominance(const RootDatum& datum, const SimpleSystem& sys,
                    const LatticeVector& x) {
  bool strict = !sys.simples.empty();
  for (const LatticeVector& s : sys.simples) {
    Int p = pairing(x, datum.coroot_of(s));
    if (p < 0) return Dominance::not_dominant;
    if (p == 0) strict = false;
  }
  return strict ? Dominance::strongly_dominant : Dominance::dominant;
}

std::optional<RationalVector> span_coefficients(const SimpleSystem& sys,
                                                const LatticeVector& x) {
  std::size_t d = x.size();
  std::vector<RationalVector> rows(d, RationalVector(sys.simples.size()));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < sys.simples.size(); ++j) {
      rows[i][j] = sys.simples[j][i];
    }
  }
  RationalVector rhs(d);
  for (std::size_t i = 0; i < d; ++i) rhs[i] = x[i];
  auto sol = solve_linear(rows, rhs, sys.simples.size());
  if (!sol) return std::nullopt;
  return sol->x;
}

std::vector<LatticeVector> positive_roots(const RootDatum& datum,
                                          const SimpleSystem& sys) {
  std::vector<LatticeVector> pos;
  for (const LatticeVector& r : datum.roots) {
    auto c = span_coefficients(sys, r);
    if (!c) {
      throw ArgumentError("positive_roots: root outside the simple span");
    }
    bool nonneg = std::all_of(c->begin(), c->end(),
                              [](const Rational& v) { return v >= 0; });
    if (nonneg) pos.push_back(r);
  }
  return pos;
}

LatticeVector positive_root_sum(const RootDatum& datum,
                                const SimpleSystem& sys) {
  LatticeVector sum(datum.rank, 0);
  for (const LatticeVector& r : positive_roots(datum, sys)) {
    sum = add(sum, r);
  }
  return sum;
}

OrthogonalSubsystem orthogonal_subsystem(const RootDatum& datum,
                                         const SimpleSystem& sys,
                                         const LatticeVector& x0) {
  if (dominance(datum, sys, x0) == Dominance::not_dominant) {
    throw PreconditionError("orthogonal_subsystem: x0 is not dominant");
  }
  OrthogonalSubsystem out;
  out.subsystem.label = datum.label + "|orthogonal";
  out.subsystem.rank = datum.rank;
  std::set<LatticeVector> pos;
  for (const LatticeVector& p : positive_roots(datum, sys)) pos.insert(p);
  for (std::size_t i = 0; i < datum.roots.size(); ++i) {
    if (pairing(x0, datum.coroots[i]) != 0) continue;
    out.subsystem.roots.push_back(datum.roots[i]);
    out.subsystem.coroots.push_back(datum.coroots[i]);
    if (pos.count(datum.roots[i])) {
      out.positives.push_back(datum.roots[i]);
    }
  }
  for (const LatticeVector& s : sys.simples) {
    if (pairing(x0, datum.coroot_of(s)) == 0) {
      out.simples.simples.push_back(s);
    }
  }
  return out;
}

RationalVector strictly_dominant_coweight(const RootDatum& datum,
                                          const SimpleSystem& sys) {
  std::vector<RationalVector> rows;
  for (const LatticeVector& s : sys.simples) rows.push_back(to_rational(s));
  auto sol = solve_linear(rows, RationalVector(sys.simples.size(), Rational(1)),
                          datum.rank);
  if (!sol) {
    throw InconsistencyError(
        "strictly_dominant_coweight: simples admit no common level-1 "
        "covector");
  }
  return sol->x;
}

}  // namespace rootpoly
