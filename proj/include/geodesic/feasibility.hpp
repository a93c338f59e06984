#pragma once

#include "geodesic/hypergraph.hpp"
#include "geodesic/orientation.hpp"
#include "geodesic/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace geodesic {

// d(p) + d(q) - d(r) over pair variables (indexed by pair_rank), with
// coefficients in {-1, 0, +1}.
struct PairConstraint {
  std::array<int, 3> vars{};
  std::array<int, 3> coefs{};
  int rhs = 0;
};

// Distances realizing a middle assignment:
//   equalities    d(a,m) + d(m,b) - d(a,b) = 0   for every oriented triple,
//   inequalities  d(a,m) + d(m,b) - d(a,b) >= 1  for every middle m of every
//                 triple outside the hypergraph,
//   bounds        d >= 1 for every pair.
// Strict betweenness failures are positively homogeneous, so slack 1 and
// bound 1 lose no solutions: any strictly feasible point scales onto them.
struct FeasibilitySystem {
  int vertex_count = 0;
  std::vector<PairConstraint> equalities;
  std::vector<PairConstraint> inequalities;
  int lower_bound = 1;

  int variable_count() const { return pair_count(vertex_count); }

  template <class Scalar>
  bool satisfied_by(const std::vector<Scalar>& d) const {
    auto eval = [&](const PairConstraint& c) {
      Scalar s = 0;
      for (int k = 0; k < 3; ++k) s += Scalar(c.coefs[k]) * d[c.vars[k]];
      return s;
    };
    for (const auto& v : d)
      if (v < Scalar(lower_bound)) return false;
    for (const auto& c : equalities)
      if (!(eval(c) == Scalar(c.rhs))) return false;
    for (const auto& c : inequalities)
      if (eval(c) < Scalar(c.rhs)) return false;
    return true;
  }
};

namespace detail {

inline PairConstraint tight(Vertex a, Vertex m, Vertex b, int rhs) {
  return {{pair_rank(a, m), pair_rank(m, b), pair_rank(a, b)}, {1, 1, -1}, rhs};
}

inline void add_oriented(FeasibilitySystem& sys, const Triple& t, Vertex m) {
  Vertex e[2];
  int k = 0;
  for (Vertex v : t.v)
    if (v != m) e[k++] = v;
  sys.equalities.push_back(tight(e[0], m, e[1], 0));
}

inline void add_non_hyperedges(FeasibilitySystem& sys, const Hypergraph3& h) {
  for (const auto& t : all_triples(h.vertex_count())) {
    if (h.contains(t)) continue;
    auto [a, b, c] = t.v;
    sys.inequalities.push_back(tight(b, a, c, 1));
    sys.inequalities.push_back(tight(a, b, c, 1));
    sys.inequalities.push_back(tight(a, c, b, 1));
  }
}

}  // namespace detail

// Requires `a` to orient every hyperedge of h (and nothing else).
inline FeasibilitySystem build_feasibility_system(const Hypergraph3& h,
                                                  const OrientationAssignment& a) {
  if (a.vertex_count() != h.vertex_count())
    throw std::invalid_argument("assignment and hypergraph disagree on vertex count");
  FeasibilitySystem sys;
  sys.vertex_count = h.vertex_count();
  for (const auto& t : h.triples()) {
    auto m = a.middle(t);
    if (!m) throw std::invalid_argument("assignment does not orient every hyperedge");
    detail::add_oriented(sys, t, *m);
  }
  if (a.assigned_count() != h.size())
    throw std::invalid_argument("assignment orients a non-hyperedge");
  detail::add_non_hyperedges(sys, h);
  return sys;
}

// Same system restricted to the triples `a` orients so far. Every total
// completion of `a` adds constraints, so infeasibility here prunes soundly.
inline FeasibilitySystem build_relaxation_system(const Hypergraph3& h,
                                                 const OrientationAssignment& a) {
  FeasibilitySystem sys;
  sys.vertex_count = h.vertex_count();
  for (const auto& t : h.triples())
    if (auto m = a.middle(t)) detail::add_oriented(sys, t, *m);
  detail::add_non_hyperedges(sys, h);
  return sys;
}

namespace detail {

// Feasibility of {x : E x = e, G x >= g, x >= lb} in exact arithmetic.
//
// Equalities are eliminated first (each pivot expresses one variable through
// the remaining free ones). The free variables are shifted to y = x - lb >= 0
// and what is left is the pure inequality system A y <= b, decided with the
// single-auxiliary-variable phase-one dictionary method under Bland's rule.
template <class Scalar>
class FeasibilitySolver {
 public:
  explicit FeasibilitySolver(const FeasibilitySystem& sys)
      : sys_(sys), nv_(sys.variable_count()) {}

  std::optional<std::vector<Scalar>> solve() {
    if (!eliminate_equalities()) return std::nullopt;
    if (!build_inequalities()) return std::nullopt;
    if (!run_simplex()) return std::nullopt;
    return witness();
  }

 private:
  using Row = std::vector<Scalar>;  // nv_ coefficients, then the constant

  Row dense(const PairConstraint& c) const {
    Row r(nv_ + 1, Scalar(0));
    for (int k = 0; k < 3; ++k) r[c.vars[k]] += Scalar(c.coefs[k]);
    r[nv_] = Scalar(c.rhs);
    return r;
  }

  // Replaces eliminated variables in r by their expressions.
  void substitute(Row& r) const {
    for (int v = 0; v < nv_; ++v) {
      if (!expr_[v] || r[v] == Scalar(0)) continue;
      Scalar c = r[v];
      r[v] = Scalar(0);
      const Row& e = *expr_[v];
      for (int j = 0; j <= nv_; ++j)
        if (!(e[j] == Scalar(0))) r[j] += c * e[j];
    }
  }

  // expr_[v] holds x_v = sum_j e[j] x_j + e[nv_] over free variables; rows
  // are stored as "coefficients = constant" before and "value" after.
  bool eliminate_equalities() {
    expr_.assign(nv_, std::nullopt);
    for (const auto& c : sys_.equalities) {
      Row r = dense(c);
      // Treat the constant as the right-hand side: sum r_j x_j = r[nv_].
      // Flip to sum r_j x_j - rhs = 0, i.e. constant term -rhs.
      r[nv_] = -r[nv_];
      substitute(r);
      int p = -1;
      for (int v = 0; v < nv_; ++v)
        if (!(r[v] == Scalar(0))) {
          p = v;
          break;
        }
      if (p < 0) {
        if (!(r[nv_] == Scalar(0))) return false;
        continue;
      }
      // x_p = -(sum_{j != p} r_j x_j + r_const) / r_p
      Row e(nv_ + 1, Scalar(0));
      Scalar inv = Scalar(-1) / r[p];
      for (int j = 0; j <= nv_; ++j)
        if (j != p && !(r[j] == Scalar(0))) e[j] = r[j] * inv;
      for (int q = 0; q < nv_; ++q) {
        if (!expr_[q] || (*expr_[q])[p] == Scalar(0)) continue;
        Row& eq = *expr_[q];
        Scalar c2 = eq[p];
        eq[p] = Scalar(0);
        for (int j = 0; j <= nv_; ++j)
          if (!(e[j] == Scalar(0))) eq[j] += c2 * e[j];
      }
      expr_[p] = std::move(e);
    }
    for (int v = 0; v < nv_; ++v)
      if (!expr_[v]) free_.push_back(v);
    return true;
  }

  // Produces rows sum_j a_j y_j <= b over the free variables y = x - lb.
  bool build_inequalities() {
    const Scalar lb(sys_.lower_bound);
    auto add_geq = [&](Row r) {  // sum r_j x_j >= r[nv_]
      Scalar rhs = r[nv_];
      r[nv_] = Scalar(0);
      substitute(r);
      rhs -= r[nv_];
      std::vector<Scalar> a(free_.size());
      bool any_positive = false, any_negative = false;
      for (std::size_t k = 0; k < free_.size(); ++k) {
        a[k] = r[free_[k]];
        rhs -= a[k] * lb;
        any_positive = any_positive || a[k] > Scalar(0);
        any_negative = any_negative || a[k] < Scalar(0);
      }
      if (!any_negative && rhs <= Scalar(0)) return true;  // holds for all y >= 0
      if (!any_positive && rhs > Scalar(0)) return false;  // fails for all y >= 0
      for (auto& x : a) x = -x;
      a_.push_back(std::move(a));
      b_.push_back(-rhs);
      return true;
    };
    for (const auto& c : sys_.inequalities)
      if (!add_geq(dense(c))) return false;
    for (int v = 0; v < nv_; ++v) {
      if (!expr_[v]) continue;
      Row r(nv_ + 1, Scalar(0));
      r[v] = Scalar(1);
      r[nv_] = lb;
      if (!add_geq(std::move(r))) return false;
    }
    return true;
  }

  // Dictionary: basic_i = c_i + sum_col t_i[col] * nonbasic[col]. Variable
  // ids: 0 = auxiliary, 1..n = y, n+1..n+m = slacks.
  void pivot(int row, int col) {
    const int cols = int(nonbasic_.size());
    Row& pr = tab_[row];
    Scalar inv = Scalar(1) / pr[col];
    Scalar neg_inv = -inv;
    for (int j = 0; j < cols; ++j)
      if (j != col && !(pr[j] == Scalar(0))) pr[j] *= neg_inv;
    pr[col] = inv;
    const_[row] *= neg_inv;
    std::swap(basic_[row], nonbasic_[col]);
    auto update = [&](Row& r, Scalar& k) {
      Scalar t = r[col];
      if (t == Scalar(0)) return;
      for (int j = 0; j < cols; ++j)
        if (j != col && !(pr[j] == Scalar(0))) r[j] += t * pr[j];
      r[col] = t * pr[col];
      k += t * const_[row];
    };
    for (int i = 0; i < int(tab_.size()); ++i)
      if (i != row) update(tab_[i], const_[i]);
    update(obj_, obj_const_);
  }

  bool run_simplex() {
    const int n = int(free_.size());
    const int m = int(a_.size());
    values_.assign(n, Scalar(0));
    if (m == 0) return true;
    nonbasic_.resize(n + 1);
    for (int j = 0; j <= n; ++j) nonbasic_[j] = j;
    basic_.resize(m);
    tab_.assign(m, Row(n + 1, Scalar(0)));
    const_.resize(m);
    int worst = -1;
    for (int i = 0; i < m; ++i) {
      basic_[i] = n + 1 + i;
      const_[i] = b_[i];
      tab_[i][0] = Scalar(1);
      for (int j = 0; j < n; ++j) tab_[i][j + 1] = -a_[i][j];
      if (const_[i] < Scalar(0) && (worst < 0 || const_[i] < const_[worst])) worst = i;
    }
    if (worst < 0) return true;  // y = 0 is feasible

    obj_.assign(n + 1, Scalar(0));
    obj_[0] = Scalar(-1);
    obj_const_ = Scalar(0);
    pivot(worst, 0);

    while (true) {
      if (obj_const_ == Scalar(0)) break;
      int enter = -1;
      for (int j = 0; j <= n; ++j)
        if (obj_[j] > Scalar(0) && (enter < 0 || nonbasic_[j] < nonbasic_[enter])) enter = j;
      if (enter < 0) return false;  // auxiliary optimum is negative
      int leave = -1;
      Scalar best;
      for (int i = 0; i < m; ++i) {
        if (!(tab_[i][enter] < Scalar(0))) continue;
        Scalar ratio = const_[i] / -tab_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basic_[i] < basic_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      // The auxiliary objective is bounded by zero, so some row limits it.
      if (leave < 0) throw std::logic_error("unbounded phase-one dictionary");
      pivot(leave, enter);
    }
    for (int i = 0; i < m; ++i)
      if (basic_[i] >= 1 && basic_[i] <= n) values_[basic_[i] - 1] = const_[i];
    return true;
  }

  std::vector<Scalar> witness() const {
    std::vector<Scalar> x(nv_, Scalar(0));
    for (std::size_t k = 0; k < free_.size(); ++k)
      x[free_[k]] = values_[k] + Scalar(sys_.lower_bound);
    for (int v = 0; v < nv_; ++v) {
      if (!expr_[v]) continue;
      const Row& e = *expr_[v];
      Scalar s = e[nv_];
      for (int f : free_)
        if (!(e[f] == Scalar(0))) s += e[f] * x[f];
      x[v] = s;
    }
    return x;
  }

  const FeasibilitySystem& sys_;
  int nv_;
  std::vector<std::optional<Row>> expr_;
  std::vector<int> free_;
  std::vector<std::vector<Scalar>> a_;
  std::vector<Scalar> b_;
  std::vector<Row> tab_;
  std::vector<Scalar> const_;
  std::vector<int> basic_, nonbasic_;
  Row obj_;
  Scalar obj_const_;
  std::vector<Scalar> values_;
};

}  // namespace detail

// Exact decision with a witness (indexed by pair_rank) on success. Runs in
// checked int64 arithmetic and falls back to GMP rationals on overflow; both
// paths make identical pivot choices.
inline std::optional<std::vector<Rational>> solve_exact_feasibility(const FeasibilitySystem& sys) {
  try {
    auto fast = detail::FeasibilitySolver<CheckedRational>(sys).solve();
    if (!fast) return std::nullopt;
    std::vector<Rational> out;
    out.reserve(fast->size());
    for (const auto& v : *fast) out.push_back(v.to_rational());
    return out;
  } catch (const ArithmeticOverflow&) {
    return detail::FeasibilitySolver<Rational>(sys).solve();
  }
}

}  // namespace geodesic
