#include "rootpoly/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "rootpoly/errors.hpp"

namespace rootpoly {

bool WeylGroup::contains(const IntMatrix& m) const {
  for (const auto& e : elements) {
    if (e.matrix == m) return true;
  }
  return false;
}

IntMatrix reflection_matrix(const LatticeVector& root,
                            const LatticeVector& coroot) {
  if (root.size() != coroot.size()) {
    throw DimensionError("reflection_matrix: root dimension " +
                         std::to_string(root.size()) +
                         " != coroot dimension " +
                         std::to_string(coroot.size()));
  }
  const std::size_t d = root.size();
  IntMatrix m = IntMatrix::identity(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      m.at(i, j) -= root[i] * coroot[j];
    }
  }
  return m;
}

WeylElement reflection(const RootDatum& datum, const LatticeVector& alpha) {
  const LatticeVector& av = datum.coroot_of(alpha);
  return WeylElement{reflection_matrix(alpha, av), {}};
}

WeylGroup generated_group(const RootDatum& datum,
                          const std::vector<LatticeVector>& generator_roots,
                          std::size_t cap) {
  const std::size_t d = datum.rank;
  WeylGroup group;
  for (std::size_t i = 0; i < generator_roots.size(); ++i) {
    WeylElement g = reflection(datum, generator_roots[i]);
    g.word = {static_cast<int>(i)};
    group.generators.push_back(std::move(g));
  }

  std::set<std::vector<Int>> seen;
  WeylElement identity{IntMatrix::identity(d), {}};
  seen.insert(identity.matrix.data);
  group.elements.push_back(identity);

  std::deque<std::size_t> queue;
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t index = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < group.generators.size(); ++i) {
      const WeylElement current = group.elements[index];
      IntMatrix product = current.matrix * group.generators[i].matrix;
      if (seen.count(product.data)) continue;
      if (group.elements.size() >= cap) {
        throw ResourceError(
            "generated_group: element count exceeded cap " +
            std::to_string(cap));
      }
      std::vector<int> word = current.word;
      word.push_back(static_cast<int>(i));
      seen.insert(product.data);
      group.elements.push_back(WeylElement{std::move(product), std::move(word)});
      queue.push_back(group.elements.size() - 1);
    }
  }
  return group;
}

WeylGroup weyl_group(const RootDatum& datum, const SimpleSystem& sys,
                     std::size_t cap) {
  return generated_group(datum, sys.simples, cap);
}

std::vector<LatticeVector> orbit(const WeylGroup& group,
                                 const LatticeVector& x) {
  std::set<LatticeVector> points;
  for (const auto& e : group.elements) points.insert(e.apply(x));
  return std::vector<LatticeVector>(points.begin(), points.end());
}

std::pair<LatticeVector, WeylElement> dominant_representative(
    const RootDatum& datum, const SimpleSystem& sys, const LatticeVector& x) {
  LatticeVector current = x;
  WeylElement w{IntMatrix::identity(datum.rank), {}};
  const std::size_t safety_cap = 1000000;
  for (std::size_t step = 0; step <= safety_cap; ++step) {
    bool moved = false;
    for (std::size_t i = 0; i < sys.simples.size(); ++i) {
      const LatticeVector& alpha = sys.simples[i];
      if (pairing(current, datum.coroot_of(alpha)) < 0) {
        WeylElement s = reflection(datum, alpha);
        s.word = {static_cast<int>(i)};
        current = s.apply(current);
        std::vector<int> word = s.word;
        word.insert(word.end(), w.word.begin(), w.word.end());
        w = WeylElement{s.matrix * w.matrix, std::move(word)};
        moved = true;
        break;
      }
    }
    if (!moved) return {current, w};
  }
  throw ResourceError("dominant_representative: ascent did not terminate");
}

WeylGroup orthogonal_subgroup(const RootDatum& datum, const SimpleSystem& sys,
                              const LatticeVector& x0) {
  if (dominance(datum, sys, x0) == Dominance::not_dominant) {
    throw PreconditionError(
        "orthogonal_subgroup: base point is not dominant");
  }
  OrthogonalSubsystem sub = orthogonal_subsystem(datum, sys, x0);
  return generated_group(datum, sub.simples.simples);
}

std::vector<LatticeVector> edge_roots(const RootDatum& datum,
                                      const SimpleSystem& sys,
                                      const LatticeVector& x0) {
  if (dominance(datum, sys, x0) == Dominance::not_dominant) {
    throw PreconditionError("edge_roots: base point is not dominant");
  }
  WeylGroup w0 = orthogonal_subgroup(datum, sys, x0);
  std::set<LatticeVector> result;
  for (const auto& alpha : sys.simples) {
    if (pairing(x0, datum.coroot_of(alpha)) == 0) continue;
    for (const auto& e : w0.elements) result.insert(e.apply(alpha));
  }
  return std::vector<LatticeVector>(result.begin(), result.end());
}

}  // namespace rootpoly
