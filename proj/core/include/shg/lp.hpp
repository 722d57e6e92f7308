#ifndef SHG_LP_HPP
#define SHG_LP_HPP

#include <optional>
#include <utility>
#include <vector>

#include "shg/rational.hpp"

namespace shg {

/// Exact rational linear program:
///   minimize objective . x   (when present)
///   subject to  row . x  = rhs   for every equality,
///               row . x <= rhs   for every inequality,
///               x_j >= 0 for j in the nonneg set, other variables free.
struct LpProblem {
  explicit LpProblem(int num_vars = 0) : num_vars(num_vars), nonneg(num_vars, false) {}

  int num_vars;
  std::vector<std::pair<std::vector<Rational>, Rational>> equalities;
  std::vector<std::pair<std::vector<Rational>, Rational>> inequalities;
  std::vector<bool> nonneg;
  std::optional<std::vector<Rational>> objective;

  void add_equality(std::vector<Rational> row, Rational rhs);
  void add_inequality(std::vector<Rational> row, Rational rhs);
  void require_nonneg(int var);
  void require_all_nonneg();
  void set_objective(std::vector<Rational> row);
};

enum class LpStatus { feasible, infeasible, optimal, unbounded };

struct LpSolution {
  LpStatus status;

  /// Exact witness point for feasible/optimal; substituted into every
  /// constraint before being returned.
  std::vector<Rational> point;
  std::optional<Rational> objective_value;

  /// For infeasible problems: multipliers (u over the equalities, then
  /// v >= 0 over the inequalities) whose combination r = u.E + v.G
  /// satisfies r_j >= 0 on nonnegative variables, r_j = 0 on free ones,
  /// while u.e + v.g < 0 -- an exact refutation, verified before return.
  std::vector<Rational> infeasibility_certificate;

  /// For unbounded problems: a feasible direction with negative objective
  /// slope, verified before return.
  std::vector<Rational> ray;
};

/// Phase-one simplex on a problem without an objective.
LpSolution solve_feasibility(const LpProblem& p);

/// Two-phase dense simplex with Bland's anti-cycling rule; every pivot is
/// exact and the status is certified (point, certificate or ray).
LpSolution solve_lp(const LpProblem& p);

}  // namespace shg

#endif  // SHG_LP_HPP
