#include "rootpoly/characters.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

#include "rootpoly/errors.hpp"
#include "rootpoly/linear.hpp"

namespace rootpoly {

namespace {

long long rational_floor(const Rational& q) {
  boost::multiprecision::mpz_int num = numerator(q);
  boost::multiprecision::mpz_int den = denominator(q);
  boost::multiprecision::mpz_int t = num / den;
  if (num % den != 0 && num < 0) t -= 1;
  return t.convert_to<long long>();
}

long long rational_ceil(const Rational& q) {
  boost::multiprecision::mpz_int num = numerator(q);
  boost::multiprecision::mpz_int den = denominator(q);
  boost::multiprecision::mpz_int t = num / den;
  if (num % den != 0 && num > 0) t += 1;
  return t.convert_to<long long>();
}

long long rational_to_integer(const Rational& q, const std::string& what) {
  if (denominator(q) != 1) {
    throw InconsistencyError(what + ": expected an integer, got a fraction");
  }
  return numerator(q).convert_to<long long>();
}

void require_dominant(const RootDatum& datum, const SimpleSystem& sys,
                      const LatticeVector& lambda, const std::string& who) {
  if (lambda.size() != datum.rank) {
    throw DimensionError(who + ": weight dimension " +
                         std::to_string(lambda.size()) + " != rank " +
                         std::to_string(datum.rank));
  }
  if (dominance(datum, sys, lambda) == Dominance::not_dominant) {
    throw PreconditionError(who + ": highest weight is not dominant");
  }
}

}  // namespace

FormalCharacter FormalCharacter::single(const LatticeVector& weight,
                                        long long mult) {
  FormalCharacter chi(weight.size());
  chi.add_term(weight, mult);
  return chi;
}

void FormalCharacter::add_term(const LatticeVector& weight, long long mult) {
  if (dimension_ == 0 && terms_.empty()) dimension_ = weight.size();
  if (weight.size() != dimension_) {
    throw DimensionError("FormalCharacter::add_term: weight dimension " +
                         std::to_string(weight.size()) +
                         " != " + std::to_string(dimension_));
  }
  if (mult == 0) return;
  auto it = terms_.find(weight);
  if (it == terms_.end()) {
    terms_.emplace(weight, mult);
  } else {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

long long FormalCharacter::multiplicity(const LatticeVector& weight) const {
  auto it = terms_.find(weight);
  return it == terms_.end() ? 0 : it->second;
}

long long FormalCharacter::total() const {
  long long sum = 0;
  for (const auto& [w, m] : terms_) sum += m;
  return sum;
}

std::set<LatticeVector> FormalCharacter::support() const {
  std::set<LatticeVector> s;
  for (const auto& [w, m] : terms_) s.insert(w);
  return s;
}

FormalCharacter FormalCharacter::operator+(const FormalCharacter& other) const {
  FormalCharacter out(std::max(dimension_, other.dimension_));
  for (const auto& [w, m] : terms_) out.add_term(w, m);
  for (const auto& [w, m] : other.terms_) out.add_term(w, m);
  return out;
}

FormalCharacter FormalCharacter::operator-(const FormalCharacter& other) const {
  FormalCharacter out(std::max(dimension_, other.dimension_));
  for (const auto& [w, m] : terms_) out.add_term(w, m);
  for (const auto& [w, m] : other.terms_) out.add_term(w, -m);
  return out;
}

FormalCharacter FormalCharacter::operator*(const FormalCharacter& other) const {
  FormalCharacter out(std::max(dimension_, other.dimension_));
  for (const auto& [a, ma] : terms_) {
    for (const auto& [b, mb] : other.terms_) {
      out.add_term(add(a, b), ma * mb);
    }
  }
  return out;
}

FormalCharacter FormalCharacter::scaled(long long factor) const {
  FormalCharacter out(dimension_);
  for (const auto& [w, m] : terms_) out.add_term(w, m * factor);
  return out;
}

FormalCharacter FormalCharacter::apply(const WeylElement& w) const {
  FormalCharacter out(dimension_);
  for (const auto& [weight, m] : terms_) out.add_term(w.apply(weight), m);
  return out;
}

Rational invariant_form(const RootDatum& datum, const RationalVector& x,
                        const RationalVector& y) {
  Rational sum = 0;
  for (const auto& coroot : datum.coroots) {
    RationalVector cr = to_rational(coroot);
    sum += pairing(x, cr) * pairing(y, cr);
  }
  return sum;
}

std::set<LatticeVector> weight_set(const RootDatum& datum,
                                   const SimpleSystem& sys,
                                   const LatticeVector& lambda) {
  require_dominant(datum, sys, lambda, "weight_set");

  auto inside_orbit_hull = [&](const LatticeVector& x) {
    LatticeVector plus = dominant_representative(datum, sys, x).first;
    std::optional<RationalVector> c = span_coefficients(sys, sub(lambda, plus));
    if (!c) return false;
    for (const auto& ci : *c) {
      if (ci < 0) return false;
    }
    return true;
  };

  std::set<LatticeVector> visited;
  std::deque<LatticeVector> queue;
  visited.insert(lambda);
  queue.push_back(lambda);
  while (!queue.empty()) {
    LatticeVector mu = queue.front();
    queue.pop_front();
    for (const auto& alpha : sys.simples) {
      LatticeVector down = sub(mu, alpha);
      if (visited.count(down)) continue;
      if (!inside_orbit_hull(down)) continue;
      visited.insert(down);
      queue.push_back(down);
    }
  }
  return visited;
}

std::set<LatticeVector> weight_set_hull_coset(const RootDatum& datum,
                                              const SimpleSystem& sys,
                                              const LatticeVector& lambda) {
  require_dominant(datum, sys, lambda, "weight_set_hull_coset");
  const std::size_t d = datum.rank;
  const std::size_t k = sys.simples.size();

  WeylGroup group = weyl_group(datum, sys);
  std::vector<LatticeVector> hull_points = orbit(group, lambda);

  std::vector<Int> lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    lo[j] = hull_points.front()[j];
    hi[j] = hull_points.front()[j];
    for (const auto& p : hull_points) {
      lo[j] = std::min(lo[j], p[j]);
      hi[j] = std::max(hi[j], p[j]);
    }
  }

  // Covectors dual to the simples on their span: <alpha_j, dual_i> = delta_ij.
  std::vector<RationalVector> duals;
  std::vector<RationalVector> rows;
  for (const auto& s : sys.simples) rows.push_back(to_rational(s));
  for (std::size_t i = 0; i < k; ++i) {
    RationalVector rhs(k, Rational(0));
    rhs[i] = 1;
    std::optional<LinearSolution> sol = solve_linear(rows, rhs, d);
    if (!sol) {
      throw InconsistencyError(
          "weight_set_hull_coset: simples admit no dual covector");
    }
    duals.push_back(sol->x);
  }

  // Integer range of each coset coordinate c_i = <lambda - x, dual_i> over the
  // coordinate bounding box of the hull.
  std::vector<std::pair<long long, long long>> ranges;
  for (std::size_t i = 0; i < k; ++i) {
    Rational cmin = 0, cmax = 0;
    for (std::size_t j = 0; j < d; ++j) {
      const Rational& w = duals[i][j];
      Rational a = (Rational(lambda[j]) - hi[j]) * w;
      Rational b = (Rational(lambda[j]) - lo[j]) * w;
      cmin += std::min(a, b);
      cmax += std::max(a, b);
    }
    ranges.emplace_back(rational_ceil(cmin), rational_floor(cmax));
  }

  unsigned long long count = 1;
  const unsigned long long enumeration_cap = 2000000;
  for (const auto& [a, b] : ranges) {
    if (b < a) return {};
    count *= static_cast<unsigned long long>(b - a + 1);
    if (count > enumeration_cap) {
      throw ResourceError(
          "weight_set_hull_coset: coset enumeration exceeds cap " +
          std::to_string(enumeration_cap));
    }
  }

  std::set<LatticeVector> result;
  std::vector<long long> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = ranges[i].first;
  while (true) {
    LatticeVector x = lambda;
    for (std::size_t i = 0; i < k; ++i) {
      x = sub(x, scale(c[i], sys.simples[i]));
    }
    bool in_box = true;
    for (std::size_t j = 0; j < d && in_box; ++j) {
      in_box = lo[j] <= x[j] && x[j] <= hi[j];
    }
    if (in_box && in_convex_hull(x, hull_points)) result.insert(x);

    std::size_t pos = 0;
    while (pos < k) {
      if (c[pos] < ranges[pos].second) {
        ++c[pos];
        for (std::size_t q = 0; q < pos; ++q) c[q] = ranges[q].first;
        break;
      }
      ++pos;
    }
    if (pos == k) break;
  }
  if (k == 0) result.insert(lambda);
  return result;
}

FormalCharacter irreducible_character(const RootDatum& datum,
                                      const SimpleSystem& sys,
                                      const LatticeVector& lambda) {
  require_dominant(datum, sys, lambda, "irreducible_character");
  std::set<LatticeVector> wts = weight_set(datum, sys, lambda);
  std::vector<LatticeVector> positives = positive_roots(datum, sys);
  RationalVector rho = rational_scale(
      Rational(1, 2), to_rational(positive_root_sum(datum, sys)));

  struct Entry {
    long long level;
    LatticeVector mu;
  };
  std::vector<Entry> order;
  order.reserve(wts.size());
  for (const auto& mu : wts) {
    std::optional<RationalVector> c = span_coefficients(sys, sub(lambda, mu));
    if (!c) {
      throw InconsistencyError(
          "irreducible_character: weight drop outside the simple span");
    }
    long long level = 0;
    for (const auto& ci : *c) {
      level += rational_to_integer(ci, "irreducible_character: level");
    }
    if (level < 0) {
      throw InconsistencyError("irreducible_character: negative level");
    }
    order.push_back({level, mu});
  }
  std::sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) {
    return a.level != b.level ? a.level < b.level : a.mu < b.mu;
  });

  RationalVector top = rational_add(to_rational(lambda), rho);
  Rational top_norm = invariant_form(datum, top, top);

  std::map<LatticeVector, long long> mult;
  mult[lambda] = 1;
  for (const auto& entry : order) {
    if (entry.level == 0) continue;
    const LatticeVector& mu = entry.mu;
    Rational num = 0;
    for (const auto& alpha : positives) {
      RationalVector alpha_r = to_rational(alpha);
      LatticeVector nu = add(mu, alpha);
      while (wts.count(nu)) {
        num += 2 * mult.at(nu) * invariant_form(datum, to_rational(nu), alpha_r);
        nu = add(nu, alpha);
      }
    }
    RationalVector shifted = rational_add(to_rational(mu), rho);
    Rational den = top_norm - invariant_form(datum, shifted, shifted);
    if (den <= 0) {
      throw InconsistencyError(
          "irreducible_character: nonpositive recursion denominator");
    }
    long long m =
        rational_to_integer(num / den, "irreducible_character: multiplicity");
    if (m <= 0) {
      throw InconsistencyError(
          "irreducible_character: nonpositive multiplicity");
    }
    mult[mu] = m;
  }

  FormalCharacter chi(datum.rank);
  for (const auto& [mu, m] : mult) chi.add_term(mu, m);

  Rational dim = weyl_dimension(datum, sys, lambda);
  if (dim != chi.total()) {
    throw InconsistencyError(
        "irreducible_character: total multiplicity disagrees with the "
        "dimension product formula");
  }
  return chi;
}

Rational weyl_dimension(const RootDatum& datum, const SimpleSystem& sys,
                        const LatticeVector& lambda) {
  require_dominant(datum, sys, lambda, "weyl_dimension");
  RationalVector rho = rational_scale(
      Rational(1, 2), to_rational(positive_root_sum(datum, sys)));
  RationalVector top = rational_add(to_rational(lambda), rho);
  Rational dim = 1;
  for (const auto& alpha : positive_roots(datum, sys)) {
    RationalVector coroot = to_rational(datum.coroot_of(alpha));
    Rational lower = pairing(rho, coroot);
    if (lower <= 0) {
      throw InconsistencyError(
          "weyl_dimension: half-sum pairs nonpositively with a positive "
          "coroot");
    }
    dim *= pairing(top, coroot) / lower;
  }
  return dim;
}

bool is_invariant(const WeylGroup& group, const FormalCharacter& chi) {
  for (const auto& g : group.generators) {
    if (!(chi.apply(g) == chi)) return false;
  }
  return true;
}

std::map<LatticeVector, long long> decompose(const RootDatum& datum,
                                             const SimpleSystem& sys,
                                             const WeylGroup& group,
                                             const FormalCharacter& chi) {
  if (!is_invariant(group, chi)) {
    throw PreconditionError("decompose: character is not group invariant");
  }
  RationalVector y = strictly_dominant_coweight(datum, sys);
  FormalCharacter remainder = chi;
  std::map<LatticeVector, long long> result;
  const std::size_t cap = 100000;
  for (std::size_t iter = 0; iter < cap; ++iter) {
    if (remainder.empty()) return result;
    bool have = false;
    LatticeVector best;
    Rational best_value = 0;
    for (const auto& [mu, m] : remainder.terms()) {
      Rational value = pairing(mu, y);
      if (!have || value > best_value ||
          (value == best_value && mu > best)) {
        have = true;
        best = mu;
        best_value = value;
      }
    }
    if (dominance(datum, sys, best) == Dominance::not_dominant) {
      throw InconsistencyError(
          "decompose: maximal remaining term is not dominant");
    }
    long long coefficient = remainder.multiplicity(best);
    result[best] += coefficient;
    remainder =
        remainder - irreducible_character(datum, sys, best).scaled(coefficient);
  }
  throw ResourceError("decompose: iteration cap exceeded");
}

}  // namespace rootpoly
