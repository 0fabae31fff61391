#ifndef CBFTEST_LP_HPP
#define CBFTEST_LP_HPP

#include "cbftest/common.hpp"

namespace cbftest {

/// Dense linear program: maximize objective . z subject to
///   ineq_a z <= ineq_b,  eq_a z = eq_b,  lower <= z <= upper
/// (bounds may be +-infinity). Matrices may have zero rows.
struct LinearProgram {
  Vec objective;
  Mat ineq_a;
  Vec ineq_b;
  Mat eq_a;
  Vec eq_b;
  Vec lower;
  Vec upper;

  int num_vars() const { return static_cast<int>(objective.size()); }
  void validate() const;

  static LinearProgram with_box(const Vec& objective, const Vec& lower,
                                const Vec& upper);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Vec z;         // optimizer, empty unless optimal
  double value;  // objective value; kInfeasibleMax when infeasible,
                 // kInfeasibleMin when unbounded (maximization)

  bool optimal() const { return status == LpStatus::Optimal; }
};

/// Two-phase primal simplex with Bland's rule. Deterministic: identical
/// problems produce identical bases and optimizers.
LpOutcome solve_lp(const LinearProgram& lp);

/// Phase-1 feasibility check only.
bool lp_feasible(const LinearProgram& lp);

}  // namespace cbftest

#endif  // CBFTEST_LP_HPP
