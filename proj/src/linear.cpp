#include "rootpoly/linear.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "rootpoly/errors.hpp"

namespace rootpoly {

void HalfSpaceSystem::add(RationalVector coeffs, Relation rel, Rational rhs) {
  if (coeffs.size() != dimension) {
    throw DimensionError("HalfSpaceSystem::add: row has " +
                         std::to_string(coeffs.size()) + " coefficients, " +
                         "system dimension is " + std::to_string(dimension));
  }
  constraints.push_back(Constraint{std::move(coeffs), rel, std::move(rhs)});
}

namespace {

struct Row {
  RationalVector a;
  Rational b;
};

// ---------------------------------------------------------------------------
// Fourier-Motzkin elimination with equality pre-substitution.
//
// Variables are eliminated one by one; the rows that bounded each variable
// are kept so a satisfying point can be rebuilt by back-substitution.  Rows
// are normalized (first nonzero coefficient scaled to +-1) and deduplicated
// after every stage, keeping the least right-hand side per coefficient
// vector; this is what keeps the desk-scale systems small.
// ---------------------------------------------------------------------------

struct Substitution {
  std::size_t var;
  RationalVector expr;  // x[var] = expr . x + cst over the remaining vars
  Rational cst;
};

struct Stage {
  std::size_t var;
  std::vector<Row> uppers;  // coefficient on var positive
  std::vector<Row> lowers;  // coefficient on var negative
};

void normalize_rows(std::vector<Row>& rows, bool& infeasible) {
  std::map<RationalVector, Rational> best;
  for (Row& r : rows) {
    const Rational* lead = nullptr;
    for (const Rational& c : r.a) {
      if (c != 0) {
        lead = &c;
        break;
      }
    }
    if (lead == nullptr) {
      if (r.b < 0) infeasible = true;
      continue;  // tautology 0 <= b, b >= 0
    }
    Rational s = abs(*lead);
    for (Rational& c : r.a) c /= s;
    r.b /= s;
    auto it = best.find(r.a);
    if (it == best.end()) {
      best.emplace(std::move(r.a), std::move(r.b));
    } else if (r.b < it->second) {
      it->second = r.b;
    }
  }
  rows.clear();
  for (auto& [a, b] : best) rows.push_back(Row{a, b});
}

std::optional<RationalVector> fm_feasible(std::size_t dim,
                                          std::vector<Row> ineqs,
                                          std::vector<Row> eqs,
                                          std::optional<std::size_t> slack_var,
                                          std::size_t row_cap) {
  std::vector<bool> active(dim, true);
  std::vector<Substitution> subs;

  // Equality substitution.  The strictness slack never appears in an
  // equality, so it survives for the final interval test.
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    Row& eq = eqs[e];
    std::size_t pick = dim;
    for (std::size_t v = 0; v < dim; ++v) {
      if (active[v] && eq.a[v] != 0 && (!slack_var || v != *slack_var)) {
        pick = v;
        break;
      }
    }
    if (pick == dim) {
      if (eq.b != 0) {
        bool all_zero = true;
        for (std::size_t v = 0; v < dim; ++v) {
          if (eq.a[v] != 0) all_zero = false;
        }
        if (all_zero) return std::nullopt;
        // Only the slack carries a coefficient; equalities never contain it.
        throw Error("fm_feasible: slack variable entered an equality");
      }
      continue;
    }
    Rational piv = eq.a[pick];
    Substitution s;
    s.var = pick;
    s.expr.assign(dim, Rational(0));
    for (std::size_t v = 0; v < dim; ++v) {
      if (v != pick) s.expr[v] = -eq.a[v] / piv;
    }
    s.cst = eq.b / piv;
    active[pick] = false;
    auto apply = [&](Row& r) {
      Rational c = r.a[pick];
      if (c == 0) return;
      r.a[pick] = 0;
      for (std::size_t v = 0; v < dim; ++v) {
        if (v != pick) r.a[v] += c * s.expr[v];
      }
      r.b -= c * s.cst;
    };
    for (std::size_t j = e + 1; j < eqs.size(); ++j) apply(eqs[j]);
    for (Row& r : ineqs) apply(r);
    subs.push_back(std::move(s));
  }

  bool infeasible = false;
  normalize_rows(ineqs, infeasible);
  if (infeasible) return std::nullopt;

  // Variable elimination, cheapest (pos*neg product) first; the strictness
  // slack is always eliminated last so its final bounds are constants.
  std::vector<Stage> stages;
  while (true) {
    std::size_t pick = dim;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t v = 0; v < dim; ++v) {
      if (!active[v]) continue;
      if (slack_var && v == *slack_var) continue;
      std::size_t pos = 0, neg = 0;
      for (const Row& r : ineqs) {
        if (r.a[v] > 0) ++pos;
        else if (r.a[v] < 0) ++neg;
      }
      std::size_t cost = pos * neg;
      if (cost < best_cost) {
        best_cost = cost;
        pick = v;
      }
    }
    if (pick == dim) {
      if (slack_var && active[*slack_var]) {
        pick = *slack_var;
      } else {
        break;
      }
    }
    active[pick] = false;

    Stage stage;
    stage.var = pick;
    std::vector<Row> next;
    for (Row& r : ineqs) {
      if (r.a[pick] > 0) stage.uppers.push_back(r);
      else if (r.a[pick] < 0) stage.lowers.push_back(r);
      else next.push_back(std::move(r));
    }
    for (const Row& up : stage.uppers) {
      for (const Row& lo : stage.lowers) {
        Row combined;
        combined.a.assign(dim, Rational(0));
        Rational cu = up.a[pick];    // > 0
        Rational cl = -lo.a[pick];   // > 0
        for (std::size_t v = 0; v < dim; ++v) {
          combined.a[v] = cl * up.a[v] + cu * lo.a[v];
        }
        combined.b = cl * up.b + cu * lo.b;
        next.push_back(std::move(combined));
        if (next.size() > row_cap) {
          throw ResourceError(
              "fourier_motzkin: constraint count exceeded cap of " +
              std::to_string(row_cap));
        }
      }
    }
    infeasible = false;
    normalize_rows(next, infeasible);
    if (infeasible) return std::nullopt;
    ineqs = std::move(next);
    stages.push_back(std::move(stage));
  }

  // Back-substitution in reverse elimination order.
  RationalVector x(dim, Rational(0));
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    bool has_lo = false, has_hi = false;
    Rational lo = 0, hi = 0;
    for (const Row& r : it->uppers) {
      Rational rest = r.b;
      for (std::size_t v = 0; v < dim; ++v) {
        if (v != it->var && r.a[v] != 0) rest -= r.a[v] * x[v];
      }
      Rational bound = rest / r.a[it->var];
      if (!has_hi || bound < hi) hi = bound;
      has_hi = true;
    }
    for (const Row& r : it->lowers) {
      Rational rest = r.b;
      for (std::size_t v = 0; v < dim; ++v) {
        if (v != it->var && r.a[v] != 0) rest -= r.a[v] * x[v];
      }
      Rational bound = rest / r.a[it->var];
      if (!has_lo || bound > lo) lo = bound;
      has_lo = true;
    }
    if (has_lo && has_hi && lo > hi) {
      throw Error("fm_feasible: empty interval after elimination");
    }
    if (slack_var && it->var == *slack_var) {
      // The strictness slack must admit a positive value.
      if (!has_hi) hi = 1;
      if (hi <= 0) return std::nullopt;
      Rational floor = has_lo && lo > 0 ? lo : Rational(0);
      x[it->var] = (floor + hi) / 2;
      if (has_lo && x[it->var] < lo) x[it->var] = lo;
    } else if (has_lo && has_hi) {
      x[it->var] = (lo + hi) / 2;
    } else if (has_lo) {
      x[it->var] = lo;
    } else if (has_hi) {
      x[it->var] = hi;
    }
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    Rational v = it->cst;
    for (std::size_t j = 0; j < dim; ++j) {
      if (it->expr[j] != 0) v += it->expr[j] * x[j];
    }
    x[it->var] = v;
  }
  if (slack_var && x[*slack_var] <= 0) return std::nullopt;
  return x;
}

// ---------------------------------------------------------------------------
// Exact-rational simplex: phase 1 drives artificials to zero, an optional
// phase 2 maximizes the strictness slack.  Bland's rule guarantees
// termination.
// ---------------------------------------------------------------------------

class Simplex {
 public:
  // columns: structural nonnegative variables.  rows: equalities A t = b.
  Simplex(std::vector<RationalVector> rows, RationalVector rhs)
      : m_(rows.size()), n_(rows.empty() ? 0 : rows[0].size()) {
    tab_.assign(m_, RationalVector(n_ + m_ + 1, Rational(0)));
    basis_.assign(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      Rational sign = rhs[i] < 0 ? Rational(-1) : Rational(1);
      for (std::size_t j = 0; j < n_; ++j) tab_[i][j] = sign * rows[i][j];
      tab_[i][n_ + i] = 1;  // artificial
      tab_[i][n_ + m_] = sign * rhs[i];
      basis_[i] = n_ + i;
    }
  }

  // Minimizes the sum of artificials; returns the optimum.
  Rational phase1() {
    RationalVector cost(n_ + m_, Rational(0));
    for (std::size_t j = n_; j < n_ + m_; ++j) cost[j] = 1;
    run(cost);
    Rational value = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) value += tab_[i][n_ + m_];
    }
    return value;
  }

  // Maximizes structural variable `var` (phase 2); artificial columns are
  // frozen by keeping their cost prohibitive.  Returns the optimum.
  Rational maximize(std::size_t var) {
    RationalVector cost(n_ + m_, Rational(0));
    cost[var] = -1;
    for (std::size_t j = n_; j < n_ + m_; ++j) cost[j] = 1;
    run(cost);
    return value_of(var);
  }

  Rational value_of(std::size_t var) const {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] == var) return tab_[i][n_ + m_];
    }
    return 0;
  }

  RationalVector solution() const {
    RationalVector t(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) t[basis_[i]] = tab_[i][n_ + m_];
    }
    return t;
  }

 private:
  void run(const RationalVector& cost) {
    RationalVector z(n_ + m_ + 1, Rational(0));
    for (std::size_t j = 0; j < n_ + m_; ++j) {
      z[j] = cost[j];
      for (std::size_t i = 0; i < m_; ++i) {
        if (cost[basis_[i]] != 0) z[j] -= cost[basis_[i]] * tab_[i][j];
      }
    }
    while (true) {
      std::size_t enter = n_ + m_;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (z[j] < 0) {
          enter = j;
          break;  // Bland: lowest eligible index
        }
      }
      if (enter == n_ + m_) return;
      std::size_t leave = m_;
      for (std::size_t i = 0; i < m_; ++i) {
        if (tab_[i][enter] <= 0) continue;
        if (leave == m_) {
          leave = i;
          continue;
        }
        Rational cur = tab_[i][n_ + m_] * tab_[leave][enter];
        Rational best = tab_[leave][n_ + m_] * tab_[i][enter];
        if (cur < best || (cur == best && basis_[i] < basis_[leave])) {
          leave = i;
        }
      }
      if (leave == m_) {
        throw Error("simplex: unbounded objective");
      }
      pivot(leave, enter, z);
    }
  }

  void pivot(std::size_t row, std::size_t col, RationalVector& z) {
    Rational p = tab_[row][col];
    for (Rational& v : tab_[row]) v /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || tab_[i][col] == 0) continue;
      Rational f = tab_[i][col];
      for (std::size_t j = 0; j <= n_ + m_; ++j) {
        tab_[i][j] -= f * tab_[row][j];
      }
    }
    if (z[col] != 0) {
      Rational f = z[col];
      for (std::size_t j = 0; j <= n_ + m_; ++j) z[j] -= f * tab_[row][j];
    }
    basis_[row] = col;
  }

  std::size_t m_, n_;
  std::vector<RationalVector> tab_;
  std::vector<std::size_t> basis_;
};

std::optional<RationalVector> simplex_feasible(
    std::size_t dim, const std::vector<Row>& ineqs, const std::vector<Row>& eqs,
    std::optional<std::size_t> slack_var) {
  // Variables that carry an explicit `-x <= 0` row are kept single;
  // the rest are split into differences of nonnegative parts.
  std::vector<bool> nonneg(dim, false);
  std::vector<bool> row_used(ineqs.size(), false);
  for (std::size_t r = 0; r < ineqs.size(); ++r) {
    const Row& row = ineqs[r];
    if (row.b != 0) continue;
    std::size_t nz = dim, count = 0;
    for (std::size_t v = 0; v < dim; ++v) {
      if (row.a[v] != 0) {
        nz = v;
        ++count;
      }
    }
    if (count == 1 && row.a[nz] < 0 && !nonneg[nz]) {
      nonneg[nz] = true;
      row_used[r] = true;
    }
  }
  if (slack_var) nonneg[*slack_var] = true;

  std::vector<std::size_t> pos_col(dim), neg_col(dim, 0);
  std::size_t ncols = 0;
  for (std::size_t v = 0; v < dim; ++v) {
    pos_col[v] = ncols++;
    if (!nonneg[v]) neg_col[v] = ncols++;
  }
  std::size_t slack_cols = 0;
  for (std::size_t r = 0; r < ineqs.size(); ++r) {
    if (!row_used[r]) ++slack_cols;
  }

  std::vector<RationalVector> rows;
  RationalVector rhs;
  std::size_t next_slack = ncols;
  auto expand = [&](const Row& src, bool with_slack) {
    RationalVector out(ncols + slack_cols, Rational(0));
    for (std::size_t v = 0; v < dim; ++v) {
      if (src.a[v] == 0) continue;
      out[pos_col[v]] = src.a[v];
      if (!nonneg[v]) out[neg_col[v]] = -src.a[v];
    }
    if (with_slack) out[next_slack++] = 1;
    rows.push_back(std::move(out));
    rhs.push_back(src.b);
  };
  for (const Row& e : eqs) expand(e, false);
  for (std::size_t r = 0; r < ineqs.size(); ++r) {
    if (!row_used[r]) expand(ineqs[r], true);
  }

  Simplex solver(std::move(rows), std::move(rhs));
  if (solver.phase1() != 0) return std::nullopt;
  if (slack_var && solver.maximize(pos_col[*slack_var]) <= 0) {
    return std::nullopt;
  }

  RationalVector t = solver.solution();
  RationalVector x(dim, Rational(0));
  for (std::size_t v = 0; v < dim; ++v) {
    x[v] = t[pos_col[v]];
    if (!nonneg[v]) x[v] -= t[neg_col[v]];
  }
  return x;
}

}  // namespace

std::optional<RationalVector> feasible_point(const HalfSpaceSystem& system,
                                             FeasibilityEngine engine,
                                             std::size_t row_cap) {
  for (const Constraint& c : system.constraints) {
    if (c.coeffs.size() != system.dimension) {
      throw DimensionError("feasible_point: constraint width " +
                           std::to_string(c.coeffs.size()) +
                           " does not match dimension " +
                           std::to_string(system.dimension));
    }
  }

  bool has_strict = std::any_of(
      system.constraints.begin(), system.constraints.end(),
      [](const Constraint& c) { return c.rel == Relation::lt; });

  // Strict conditions get a shared slack e with  a.x + e <= b,  0 < e <= 1;
  // a point satisfying the relaxation with positive e satisfies every strict
  // condition strictly.
  std::size_t dim = system.dimension + (has_strict ? 1 : 0);
  std::optional<std::size_t> slack_var;
  if (has_strict) slack_var = system.dimension;

  std::vector<Row> ineqs, eqs;
  for (const Constraint& c : system.constraints) {
    Row r;
    r.a.assign(dim, Rational(0));
    std::copy(c.coeffs.begin(), c.coeffs.end(), r.a.begin());
    r.b = c.rhs;
    switch (c.rel) {
      case Relation::eq:
        eqs.push_back(std::move(r));
        break;
      case Relation::lt:
        r.a[*slack_var] = 1;
        ineqs.push_back(std::move(r));
        break;
      case Relation::le:
        ineqs.push_back(std::move(r));
        break;
    }
  }
  if (has_strict) {
    Row cap;
    cap.a.assign(dim, Rational(0));
    cap.a[*slack_var] = 1;
    cap.b = 1;
    ineqs.push_back(std::move(cap));
    Row pos;
    pos.a.assign(dim, Rational(0));
    pos.a[*slack_var] = -1;
    pos.b = 0;
    ineqs.push_back(std::move(pos));
  }

  if (engine == FeasibilityEngine::automatic) {
    engine = dim <= 8 ? FeasibilityEngine::fourier_motzkin
                      : FeasibilityEngine::simplex;
  }
  std::optional<RationalVector> full =
      engine == FeasibilityEngine::fourier_motzkin
          ? fm_feasible(dim, std::move(ineqs), std::move(eqs), slack_var,
                        row_cap)
          : simplex_feasible(dim, ineqs, eqs, slack_var);
  if (!full) return std::nullopt;

  RationalVector x(full->begin(), full->begin() + system.dimension);
  for (const Constraint& c : system.constraints) {
    Rational v = pairing(c.coeffs, x);
    bool ok = c.rel == Relation::eq   ? v == c.rhs
              : c.rel == Relation::le ? v <= c.rhs
                                      : v < c.rhs;
    if (!ok) throw Error("feasible_point: solution failed exact re-check");
  }
  return x;
}

namespace {

bool hull_query(const RationalVector& p,
                const std::vector<LatticeVector>& points,
                FeasibilityEngine engine) {
  if (points.empty()) {
    throw ArgumentError("in_convex_hull: empty point set");
  }
  std::size_t dim = p.size();
  for (const LatticeVector& q : points) {
    if (q.size() != dim) {
      throw DimensionError("in_convex_hull: point dimension mismatch");
    }
  }
  // Cheap exact rejections: outside the bounding box of the generators.
  for (std::size_t j = 0; j < dim; ++j) {
    Int lo = points[0][j], hi = points[0][j];
    for (const LatticeVector& q : points) {
      lo = std::min(lo, q[j]);
      hi = std::max(hi, q[j]);
    }
    if (p[j] < lo || p[j] > hi) return false;
  }

  std::size_t m = points.size();
  HalfSpaceSystem sys(m);
  for (std::size_t j = 0; j < dim; ++j) {
    RationalVector row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = points[i][j];
    sys.add(std::move(row), Relation::eq, p[j]);
  }
  sys.add(RationalVector(m, Rational(1)), Relation::eq, Rational(1));
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row(m, Rational(0));
    row[i] = -1;
    sys.add(std::move(row), Relation::le, Rational(0));
  }
  return feasible_point(sys, engine).has_value();
}

}  // namespace

bool in_convex_hull(const RationalVector& p,
                    const std::vector<LatticeVector>& points,
                    FeasibilityEngine engine) {
  return hull_query(p, points, engine);
}

bool in_convex_hull(const LatticeVector& p,
                    const std::vector<LatticeVector>& points,
                    FeasibilityEngine engine) {
  return hull_query(to_rational(p), points, engine);
}

std::optional<LinearSolution> solve_linear(
    const std::vector<RationalVector>& rows, const RationalVector& rhs,
    std::size_t dimension) {
  if (rows.size() != rhs.size()) {
    throw DimensionError("solve_linear: row/rhs count mismatch");
  }
  std::vector<RationalVector> a = rows;
  RationalVector b = rhs;
  for (const RationalVector& r : a) {
    if (r.size() != dimension) {
      throw DimensionError("solve_linear: row width mismatch");
    }
  }
  std::size_t m = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dimension && rank < m; ++col) {
    std::size_t piv = m;
    for (std::size_t i = rank; i < m; ++i) {
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == m) continue;
    std::swap(a[rank], a[piv]);
    std::swap(b[rank], b[piv]);
    Rational d = a[rank][col];
    for (Rational& v : a[rank]) v /= d;
    b[rank] /= d;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < dimension; ++j) a[i][j] -= f * a[rank][j];
      b[i] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < m; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  LinearSolution sol;
  sol.x.assign(dimension, Rational(0));
  for (std::size_t i = 0; i < rank; ++i) sol.x[pivot_col[i]] = b[i];
  sol.nullity = dimension - rank;
  return sol;
}

}  // namespace rootpoly
