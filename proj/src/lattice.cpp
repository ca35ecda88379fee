#include "rootpoly/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rootpoly/errors.hpp"

namespace rootpoly {

namespace {

void check_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimensions " +
                         std::to_string(a) + " and " + std::to_string(b) +
                         " differ");
  }
}

}  // namespace

Int pairing(const LatticeVector& x, const LatticeVector& y) {
  check_same_dim(x.size(), y.size(), "pairing");
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Rational pairing(const LatticeVector& x, const RationalVector& y) {
  check_same_dim(x.size(), y.size(), "pairing");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += Rational(x[i]) * y[i];
  return s;
}

Rational pairing(const RationalVector& x, const RationalVector& y) {
  check_same_dim(x.size(), y.size(), "pairing");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
  check_same_dim(a.size(), b.size(), "add");
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LatticeVector sub(const LatticeVector& a, const LatticeVector& b) {
  check_same_dim(a.size(), b.size(), "sub");
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

LatticeVector negate(const LatticeVector& a) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

LatticeVector scale(Int c, const LatticeVector& a) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const LatticeVector& a) {
  return std::all_of(a.begin(), a.end(), [](Int v) { return v == 0; });
}

RationalVector to_rational(const LatticeVector& a) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  return r;
}

RationalVector rational_add(const RationalVector& a, const RationalVector& b) {
  check_same_dim(a.size(), b.size(), "rational_add");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RationalVector rational_sub(const RationalVector& a, const RationalVector& b) {
  check_same_dim(a.size(), b.size(), "rational_sub");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalVector rational_scale(const Rational& c, const RationalVector& a) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_integral(const RationalVector& a) {
  return std::all_of(a.begin(), a.end(),
                     [](const Rational& v) { return denominator(v) == 1; });
}

LatticeVector to_lattice(const RationalVector& a) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (denominator(a[i]) != 1) {
      throw ArgumentError("to_lattice: coordinate " + std::to_string(i) +
                          " is not an integer");
    }
    r[i] = static_cast<Int>(numerator(a[i]));
  }
  return r;
}

Int content(const LatticeVector& a) {
  Int g = 0;
  for (Int v : a) g = std::gcd(g, v < 0 ? -v : v);
  return g;
}

std::vector<LatticeVector> segment_lattice_points(const LatticeVector& a,
                                                  const LatticeVector& b) {
  check_same_dim(a.size(), b.size(), "segment_lattice_points");
  LatticeVector d = sub(b, a);
  Int g = content(d);
  if (g == 0) return {a};
  LatticeVector step(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) step[i] = d[i] / g;
  std::vector<LatticeVector> points;
  points.reserve(static_cast<std::size_t>(g) + 1);
  LatticeVector p = a;
  for (Int t = 0; t <= g; ++t) {
    points.push_back(p);
    if (t < g) p = add(p, step);
  }
  return points;
}

std::vector<LatticeVector> indivisible_elements(
    const std::vector<LatticeVector>& k) {
  std::set<LatticeVector> members(k.begin(), k.end());
  std::vector<LatticeVector> out;
  for (const LatticeVector& x : members) {
    Int g = content(x);
    if (g == 0) continue;  // zero divides into itself for every n
    bool divisible = false;
    // Only divisors of the content can produce another lattice point.
    for (Int n = 2; n <= g && !divisible; ++n) {
      if (g % n != 0) continue;
      LatticeVector q(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) q[i] = x[i] / n;
      divisible = members.count(q) > 0;
    }
    if (!divisible) out.push_back(x);
  }
  return out;
}

}  // namespace rootpoly
