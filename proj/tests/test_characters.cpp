#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "rootpoly/characters.hpp"
#include "rootpoly/errors.hpp"
#include "rootpoly/lattice.hpp"
#include "rootpoly/root_datum.hpp"
#include "rootpoly/weyl.hpp"

using namespace rootpoly;

namespace {

struct Fixture {
  RootDatum datum;
  SimpleSystem sys;
  WeylGroup group;

  explicit Fixture(const std::string& type,
                   Lattice lattice = Lattice::simply_connected)
      : datum(make_datum(type, lattice)),
        sys(find_simple_system(datum)),
        group(weyl_group(datum, sys)) {}
};

}  // namespace

TEST_CASE("formal character bookkeeping") {
  FormalCharacter chi(2);
  CHECK(chi.empty());
  chi.add_term({1, 0}, 2);
  chi.add_term({0, 1}, 1);
  chi.add_term({1, 0}, -2);  // cancels: zero terms are dropped
  CHECK(chi.multiplicity({1, 0}) == 0);
  CHECK(chi.multiplicity({0, 1}) == 1);
  CHECK(chi.terms().size() == 1);
  CHECK(chi.total() == 1);
  CHECK(chi.support() == std::set<LatticeVector>{{0, 1}});
}

TEST_CASE("single-term constructor fixes the dimension") {
  FormalCharacter chi = FormalCharacter::single({3, -1}, 4);
  CHECK(chi.dimension() == 2);
  CHECK(chi.multiplicity({3, -1}) == 4);
  CHECK_THROWS_AS(chi.add_term({1}, 1), DimensionError);
}

TEST_CASE("addition, subtraction, scaling") {
  FormalCharacter a = FormalCharacter::single({1}, 2);
  FormalCharacter b = FormalCharacter::single({-1}, 3);
  FormalCharacter sum = a + b;
  CHECK(sum.multiplicity({1}) == 2);
  CHECK(sum.multiplicity({-1}) == 3);
  CHECK((sum - sum).empty());
  CHECK(sum.scaled(2).total() == 10);
  CHECK(sum.scaled(0).empty());
}

TEST_CASE("product is the convolution") {
  FormalCharacter one = FormalCharacter::single({0}, 1);
  FormalCharacter v = FormalCharacter::single({5}, 3);
  CHECK((one * v) == v);

  FormalCharacter sl2;
  sl2.add_term({1}, 1);
  sl2.add_term({-1}, 1);
  FormalCharacter square = sl2 * sl2;
  CHECK(square.multiplicity({2}) == 1);
  CHECK(square.multiplicity({0}) == 2);
  CHECK(square.multiplicity({-2}) == 1);
  CHECK(square.total() == 4);

  CHECK((FormalCharacter(1) * v).empty());
}

TEST_CASE("product rejects mismatched ranks") {
  FormalCharacter a = FormalCharacter::single({1}, 1);
  FormalCharacter b = FormalCharacter::single({1, 0}, 1);
  CHECK_THROWS_AS(a * b, DimensionError);
}

TEST_CASE("product is commutative and associative") {
  FormalCharacter a, b, c;
  a.add_term({1, 0}, 1);
  a.add_term({-1, 2}, 2);
  b.add_term({0, 1}, 3);
  b.add_term({2, -2}, 1);
  c.add_term({0, 0}, 2);
  c.add_term({1, 1}, -1);
  CHECK((a * b) == (b * a));
  CHECK(((a * b) * c) == (a * (b * c)));
}

TEST_CASE("invariant form values and symmetry") {
  RootDatum a1 = make_datum("A1");
  CHECK(invariant_form(a1, {Rational(1)}, {Rational(1)}) == Rational(2));

  RootDatum a2 = make_datum("A2");
  RationalVector e1 = {Rational(1), Rational(0)};
  RationalVector e2 = {Rational(0), Rational(1)};
  CHECK(invariant_form(a2, e1, e1) == Rational(4));
  CHECK(invariant_form(a2, e1, e2) == invariant_form(a2, e2, e1));
}

TEST_CASE("invariant form is group invariant") {
  Fixture g2("G2");
  RationalVector x = {Rational(2), Rational(-1)};
  RationalVector y = {Rational(1), Rational(3)};
  Rational base = invariant_form(g2.datum, x, y);
  for (const auto& w : g2.group.elements) {
    CHECK(invariant_form(g2.datum, w.apply(x), w.apply(y)) == base);
  }
}

TEST_CASE("invariant form kernel is the central direction") {
  RootDatum gl2 = make_datum("A1", Lattice::gl_variant);
  RationalVector center = {Rational(1), Rational(1)};
  CHECK(invariant_form(gl2, center, center) == Rational(0));
  RationalVector span = {Rational(1), Rational(-1)};
  CHECK(invariant_form(gl2, span, span) > Rational(0));
}

TEST_CASE("weight set of a rank-one string") {
  Fixture a1("A1");
  CHECK(weight_set(a1.datum, a1.sys, {3}) ==
        std::set<LatticeVector>{{3}, {1}, {-1}, {-3}});
  CHECK(weight_set(a1.datum, a1.sys, {0}) == std::set<LatticeVector>{{0}});
}

TEST_CASE("weight sets of the standard rank-two representations") {
  Fixture a2("A2");
  std::set<LatticeVector> adjoint = weight_set(a2.datum, a2.sys, {1, 1});
  CHECK(adjoint.size() == 7);
  for (const auto& alpha : a2.datum.roots) CHECK(adjoint.count(alpha) == 1);
  CHECK(adjoint.count({0, 0}) == 1);

  CHECK(weight_set(a2.datum, a2.sys, {1, 0}) ==
        std::set<LatticeVector>{{1, 0}, {-1, 1}, {0, -1}});
}

TEST_CASE("weight set requires a dominant highest weight") {
  Fixture a2("A2");
  CHECK_THROWS_AS(weight_set(a2.datum, a2.sys, {-1, 1}), PreconditionError);
  CHECK_THROWS_AS(irreducible_character(a2.datum, a2.sys, {-1, 1}),
                  PreconditionError);
  CHECK_THROWS_AS(weyl_dimension(a2.datum, a2.sys, {-1, 1}),
                  PreconditionError);
}

TEST_CASE("the two weight-set routes agree") {
  const std::vector<std::pair<std::string, Lattice>> fixtures = {
      {"A1", Lattice::simply_connected}, {"A1", Lattice::adjoint},
      {"A2", Lattice::simply_connected}, {"A2", Lattice::adjoint},
      {"B2", Lattice::simply_connected}, {"G2", Lattice::simply_connected},
      {"A1xA1", Lattice::simply_connected}, {"A1", Lattice::gl_variant}};
  for (const auto& [type, lattice] : fixtures) {
    CAPTURE(type);
    RootDatum datum = make_datum(type, lattice);
    SimpleSystem sys = find_simple_system(datum);
    std::set<LatticeVector> lambdas;
    LatticeVector probe(datum.rank, 0);
    // All probes in the box [0, 2]^rank, folded into the dominant chamber.
    for (bool done = false; !done;) {
      lambdas.insert(dominant_representative(datum, sys, probe).first);
      done = true;
      for (std::size_t i = 0; i < datum.rank && done; ++i) {
        if (probe[i] < 2) {
          ++probe[i];
          for (std::size_t j = 0; j < i; ++j) probe[j] = 0;
          done = false;
        }
      }
    }
    for (const auto& lambda : lambdas) {
      CAPTURE(lambda);
      CHECK(weight_set(datum, sys, lambda) ==
            weight_set_hull_coset(datum, sys, lambda));
    }
  }
}

TEST_CASE("weights along an edge form the full root string") {
  for (const char* type : {"A2", "B2"}) {
    CAPTURE(type);
    Fixture f(type);
    const LatticeVector lambda = {2, 1};
    std::set<LatticeVector> wts = weight_set(f.datum, f.sys, lambda);
    for (const auto& alpha : edge_roots(f.datum, f.sys, lambda)) {
      CAPTURE(alpha);
      Int c = pairing(lambda, f.datum.coroot_of(alpha));
      CHECK(c > 0);
      LatticeVector other = reflection(f.datum, alpha).apply(lambda);
      std::set<LatticeVector> on_edge;
      for (const auto& u : segment_lattice_points(lambda, other)) {
        if (wts.count(u)) on_edge.insert(u);
      }
      std::set<LatticeVector> expected;
      for (Int t = 0; t <= c; ++t) expected.insert(sub(lambda, scale(t, alpha)));
      CHECK(on_edge == expected);
    }
  }
}

TEST_CASE("multiplicities of the eight-dimensional representation") {
  Fixture a2("A2");
  FormalCharacter chi = irreducible_character(a2.datum, a2.sys, {1, 1});
  for (const auto& alpha : a2.datum.roots) CHECK(chi.multiplicity(alpha) == 1);
  CHECK(chi.multiplicity({0, 0}) == 2);
  CHECK(chi.total() == 8);
  CHECK(chi.support() == weight_set(a2.datum, a2.sys, {1, 1}));
}

TEST_CASE("multiplicities of small fundamental representations") {
  Fixture a1("A1");
  FormalCharacter four = irreducible_character(a1.datum, a1.sys, {3});
  for (const auto& [w, m] : four.terms()) CHECK(m == 1);
  CHECK(four.total() == 4);

  Fixture a2("A2");
  FormalCharacter three = irreducible_character(a2.datum, a2.sys, {1, 0});
  CHECK(three.total() == 3);
  CHECK(three.support() ==
        std::set<LatticeVector>{{1, 0}, {-1, 1}, {0, -1}});

  Fixture b2("B2");
  FormalCharacter five = irreducible_character(b2.datum, b2.sys, {1, 0});
  CHECK(five.total() == 5);
  CHECK(five.multiplicity({0, 0}) == 1);
  FormalCharacter spinor = irreducible_character(b2.datum, b2.sys, {0, 1});
  CHECK(spinor.total() == 4);
  CHECK(spinor.multiplicity({0, 0}) == 0);
}

TEST_CASE("adjoint multiplicities in rank two") {
  Fixture b2("B2");
  FormalCharacter adj = irreducible_character(b2.datum, b2.sys, {0, 2});
  CHECK(adj.total() == 10);
  CHECK(adj.multiplicity({0, 0}) == 2);
  for (const auto& alpha : b2.datum.roots) CHECK(adj.multiplicity(alpha) == 1);

  RootDatum g2 = make_datum("G2");
  SimpleSystem sys =
      find_simple_system(g2, RationalVector{Rational(3), Rational(5)});
  FormalCharacter g2adj = irreducible_character(g2, sys, {0, 1});
  CHECK(g2adj.total() == 14);
  CHECK(g2adj.support().size() == 13);
  CHECK(g2adj.multiplicity({0, 0}) == 2);

  FormalCharacter seven = irreducible_character(g2, sys, {1, 0});
  CHECK(seven.total() == 7);
  CHECK(seven.support().size() == 7);
}

TEST_CASE("extreme weights always have multiplicity one") {
  Fixture g2("G2");
  LatticeVector lambda =
      dominant_representative(g2.datum, g2.sys, {2, 1}).first;
  FormalCharacter chi = irreducible_character(g2.datum, g2.sys, lambda);
  for (const auto& v : orbit(g2.group, lambda)) {
    CHECK(chi.multiplicity(v) == 1);
  }
  for (const auto& [w, m] : chi.terms()) CHECK(m >= 1);
}

TEST_CASE("dimension formula values") {
  Fixture a1("A1");
  for (Int n = 0; n <= 5; ++n) {
    CHECK(weyl_dimension(a1.datum, a1.sys, {n}) == Rational(n + 1));
  }
  Fixture a2("A2");
  CHECK(weyl_dimension(a2.datum, a2.sys, {0, 0}) == Rational(1));
  CHECK(weyl_dimension(a2.datum, a2.sys, {1, 0}) == Rational(3));
  CHECK(weyl_dimension(a2.datum, a2.sys, {1, 1}) == Rational(8));
  CHECK(weyl_dimension(a2.datum, a2.sys, {2, 1}) == Rational(15));
  Fixture b2("B2");
  CHECK(weyl_dimension(b2.datum, b2.sys, {1, 0}) == Rational(5));
  CHECK(weyl_dimension(b2.datum, b2.sys, {0, 1}) == Rational(4));
  CHECK(weyl_dimension(b2.datum, b2.sys, {0, 2}) == Rational(10));
}

TEST_CASE("characters are invariant; generic terms are not") {
  Fixture a2("A2");
  FormalCharacter chi = irreducible_character(a2.datum, a2.sys, {2, 0});
  CHECK(is_invariant(a2.group, chi));
  CHECK(is_invariant(a2.group, FormalCharacter::single({0, 0}, 5)));
  CHECK_FALSE(is_invariant(a2.group, FormalCharacter::single({1, 0}, 1)));

  Fixture a1("A1");
  CHECK_FALSE(is_invariant(a1.group, FormalCharacter::single({1}, 1)));
}

TEST_CASE("tensor square of the defining rank-one representation") {
  Fixture a1("A1");
  FormalCharacter v1 = irreducible_character(a1.datum, a1.sys, {1});
  auto result = decompose(a1.datum, a1.sys, a1.group, v1 * v1);
  std::map<LatticeVector, long long> expected = {{{2}, 1}, {{0}, 1}};
  CHECK(result == expected);
}

TEST_CASE("an irreducible character decomposes as itself") {
  Fixture a2("A2");
  FormalCharacter chi = irreducible_character(a2.datum, a2.sys, {1, 1});
  auto result = decompose(a2.datum, a2.sys, a2.group, chi);
  std::map<LatticeVector, long long> expected = {{{1, 1}, 1}};
  CHECK(result == expected);
}

TEST_CASE("the zero character decomposes to nothing") {
  Fixture a2("A2");
  CHECK(decompose(a2.datum, a2.sys, a2.group, FormalCharacter(2)).empty());
}

TEST_CASE("three times three is eight plus one") {
  Fixture a2("A2");
  FormalCharacter v = irreducible_character(a2.datum, a2.sys, {1, 0});
  FormalCharacter vbar = irreducible_character(a2.datum, a2.sys, {0, 1});
  auto result = decompose(a2.datum, a2.sys, a2.group, v * vbar);
  std::map<LatticeVector, long long> expected = {{{1, 1}, 1}, {{0, 0}, 1}};
  CHECK(result == expected);
}

TEST_CASE("decomposition reproduces the product exactly") {
  Fixture a2("A2");
  FormalCharacter prod =
      irreducible_character(a2.datum, a2.sys, {1, 1}) *
      irreducible_character(a2.datum, a2.sys, {1, 0});
  auto result = decompose(a2.datum, a2.sys, a2.group, prod);
  FormalCharacter rebuilt(2);
  long long dim = 0;
  for (const auto& [lambda, coeff] : result) {
    CHECK(coeff > 0);
    rebuilt =
        rebuilt + irreducible_character(a2.datum, a2.sys, lambda).scaled(coeff);
    dim += coeff * irreducible_character(a2.datum, a2.sys, lambda).total();
  }
  CHECK(rebuilt == prod);
  CHECK(dim == 24);  // 8 * 3: dimensions multiply under tensor product
}

TEST_CASE("virtual characters decompose with signed coefficients") {
  Fixture a1("A1");
  FormalCharacter diff = irreducible_character(a1.datum, a1.sys, {2}) -
                         irreducible_character(a1.datum, a1.sys, {0});
  auto result = decompose(a1.datum, a1.sys, a1.group, diff);
  std::map<LatticeVector, long long> expected = {{{2}, 1}, {{0}, -1}};
  CHECK(result == expected);
}

TEST_CASE("decompose rejects a non-invariant character") {
  Fixture a1("A1");
  CHECK_THROWS_AS(
      decompose(a1.datum, a1.sys, a1.group, FormalCharacter::single({1}, 1)),
      PreconditionError);
}

TEST_CASE("torus characters decompose term by term") {
  RootDatum t1 = make_datum("T1");
  SimpleSystem sys = find_simple_system(t1);
  WeylGroup group = weyl_group(t1, sys);
  FormalCharacter chi(1);
  chi.add_term({4}, 2);
  chi.add_term({-3}, 1);
  auto result = decompose(t1, sys, group, chi);
  std::map<LatticeVector, long long> expected = {{{4}, 2}, {{-3}, 1}};
  CHECK(result == expected);
}
