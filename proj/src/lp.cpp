#include "cbftest/lp.hpp"

#include <cmath>
#include <vector>

namespace cbftest {
namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kCostEps = 1e-9;
constexpr double kPhase1Tol = 1e-7;
constexpr int kMaxPivots = 200000;

bool finite(double v) { return std::isfinite(v); }

// Standard-form working problem: minimize cost . x, A x = b, x >= 0.
struct Tableau {
  Mat a;                   // rows x cols
  Vec b;                   // rhs, kept nonnegative after phase-1 setup
  Vec cost;                // phase-2 cost (minimization)
  std::vector<int> basis;  // basic variable per row
  int structural = 0;      // columns that map back to z (before slacks)

  int rows() const { return static_cast<int>(a.rows()); }
  int cols() const { return static_cast<int>(a.cols()); }

  void pivot(int row, int col) {
    a.row(row) /= a(row, col);
    b[row] /= a(row, col);  // note: a(row,col) is 1 now; order matters
    for (int i = 0; i < rows(); ++i) {
      if (i == row) continue;
      const double factor = a(i, col);
      if (factor != 0.0) {
        a.row(i) -= factor * a.row(row);
        b[i] -= factor * b[row];
      }
    }
    basis[row] = col;
  }
};

// Bland's rule simplex on the canonical tableau. Returns false if the
// minimization is unbounded.
bool run_simplex(Tableau& t, const Vec& cost, int col_limit) {
  for (int iter = 0; iter < kMaxPivots; ++iter) {
    // Reduced costs from scratch each pivot: slower but drift-free.
    Vec dual = Vec::Zero(t.rows());
    for (int i = 0; i < t.rows(); ++i) dual[i] = cost[t.basis[i]];

    int entering = -1;
    for (int j = 0; j < col_limit; ++j) {
      const double reduced = cost[j] - dual.dot(t.a.col(j));
      if (reduced < -kCostEps) {
        entering = j;
        break;  // Bland: lowest index
      }
    }
    if (entering < 0) return true;  // optimal

    int leaving = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < t.rows(); ++i) {
      const double coef = t.a(i, entering);
      if (coef > kPivotEps) {
        const double ratio = t.b[i] / coef;
        if (leaving < 0 || ratio < best_ratio - kPivotEps ||
            (std::abs(ratio - best_ratio) <= kPivotEps &&
             t.basis[i] < t.basis[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
    }
    if (leaving < 0) return false;  // unbounded

    t.pivot(leaving, entering);
    if (t.b[leaving] < 0.0) t.b[leaving] = 0.0;  // clamp tiny negatives
  }
  throw Error("solve_lp: pivot limit exceeded");
}

// Variable substitution bookkeeping for mapping x back to z.
struct VarMap {
  enum class Mode { Shифt } mode;  // placeholder, unused
};

}  // namespace

void LinearProgram::validate() const {
  const int n = num_vars();
  require(n > 0, "LinearProgram: needs at least one variable");
  require(static_cast<int>(lower.size()) == n &&
              static_cast<int>(upper.size()) == n,
          "LinearProgram: bounds size mismatch");
  require(ineq_a.rows() == ineq_b.size(),
          "LinearProgram: inequality rows/rhs mismatch");
  require(eq_a.rows() == eq_b.size(),
          "LinearProgram: equality rows/rhs mismatch");
  if (ineq_a.rows() > 0) {
    require(static_cast<int>(ineq_a.cols()) == n,
            "LinearProgram: inequality column count mismatch");
    require(ineq_a.allFinite() && ineq_b.allFinite(),
            "LinearProgram: inequality entries must be finite");
  }
  if (eq_a.rows() > 0) {
    require(static_cast<int>(eq_a.cols()) == n,
            "LinearProgram: equality column count mismatch");
    require(eq_a.allFinite() && eq_b.allFinite(),
            "LinearProgram: equality entries must be finite");
  }
  require(objective.allFinite(), "LinearProgram: objective must be finite");
  for (int j = 0; j < n; ++j) {
    require(!(finite(lower[j]) && finite(upper[j])) || lower[j] <= upper[j],
            "LinearProgram: empty variable bound interval");
  }
}

LinearProgram LinearProgram::with_box(const Vec& objective, const Vec& lower,
                                      const Vec& upper) {
  LinearProgram lp;
  lp.objective = objective;
  lp.lower = lower;
  lp.upper = upper;
  const int n = lp.num_vars();
  lp.ineq_a = Mat::Zero(0, n);
  lp.ineq_b = Vec::Zero(0);
  lp.eq_a = Mat::Zero(0, n);
  lp.eq_b = Vec::Zero(0);
  return lp;
}

LpOutcome solve_lp(const LinearProgram& lp) {
  lp.validate();
  const int n = lp.num_vars();

  // Substitute every variable into nonnegative form:
  //   finite lower:  z = lo + x        (column kept, possible upper row)
  //   upper only:    z = hi - x        (column negated)
  //   free:          z = x+ - x-       (two columns)
  std::vector<int> col_of(n), col2_of(n, -1);
  std::vector<int> mode(n);  // 0 shift, 1 mirror, 2 split
  std::vector<double> offset(n, 0.0);
  int cols = 0;
  for (int j = 0; j < n; ++j) {
    if (finite(lp.lower[j])) {
      mode[j] = 0;
      offset[j] = lp.lower[j];
      col_of[j] = cols++;
    } else if (finite(lp.upper[j])) {
      mode[j] = 1;
      offset[j] = lp.upper[j];
      col_of[j] = cols++;
    } else {
      mode[j] = 2;
      col_of[j] = cols++;
      col2_of[j] = cols++;
    }
  }

  // Extra rows for variables with both bounds finite: x_j <= hi - lo.
  int bound_rows = 0;
  for (int j = 0; j < n; ++j) {
    if (mode[j] == 0 && finite(lp.upper[j])) ++bound_rows;
  }

  const int n_ineq = static_cast<int>(lp.ineq_a.rows()) + bound_rows;
  const int n_eq = static_cast<int>(lp.eq_a.rows());
  const int n_rows = n_ineq + n_eq;
  const int structural = cols;
  const int total_cols = structural + n_ineq;  // + slacks

  Mat a = Mat::Zero(n_rows, total_cols);
  Vec b = Vec::Zero(n_rows);

  auto emit_row = [&](int row, const RowVec& coeffs, double rhs) {
    double adj = rhs;
    for (int j = 0; j < n; ++j) {
      const double c = coeffs[j];
      if (c == 0.0) continue;
      switch (mode[j]) {
        case 0:
          a(row, col_of[j]) += c;
          adj -= c * offset[j];
          break;
        case 1:
          a(row, col_of[j]) -= c;
          adj -= c * offset[j];
          break;
        case 2:
          a(row, col_of[j]) += c;
          a(row, col2_of[j]) -= c;
          break;
      }
    }
    b[row] = adj;
  };

  int row = 0;
  for (int i = 0; i < lp.ineq_a.rows(); ++i, ++row) {
    emit_row(row, lp.ineq_a.row(i), lp.ineq_b[i]);
    a(row, structural + row) = 1.0;
  }
  for (int j = 0; j < n; ++j) {
    if (mode[j] == 0 && finite(lp.upper[j])) {
      a(row, col_of[j]) = 1.0;
      b[row] = lp.upper[j] - lp.lower[j];
      a(row, structural + row) = 1.0;
      ++row;
    }
  }
  for (int i = 0; i < lp.eq_a.rows(); ++i, ++row) {
    emit_row(row, lp.eq_a.row(i), lp.eq_b[i]);
  }

  // Phase-2 cost in x space (minimize -objective).
  Vec cost2 = Vec::Zero(total_cols);
  for (int j = 0; j < n; ++j) {
    const double c = -lp.objective[j];
    switch (mode[j]) {
      case 0:
        cost2[col_of[j]] += c;
        break;
      case 1:
        cost2[col_of[j]] -= c;
        break;
      case 2:
        cost2[col_of[j]] += c;
        cost2[col2_of[j]] -= c;
        break;
    }
  }

  // Phase 1 setup: nonnegative rhs, identity from usable slacks, artificials
  // elsewhere.
  Tableau t;
  t.structural = structural;
  t.basis.assign(n_rows, -1);
  std::vector<int> needs_artificial;
  for (int i = 0; i < n_rows; ++i) {
    if (b[i] < 0.0) {
      a.row(i) = -a.row(i);
      b[i] = -b[i];
    }
    const int slack = structural + i;
    if (i < n_ineq && slack < total_cols && a(i, slack) > 0.5) {
      t.basis[i] = slack;
    } else {
      needs_artificial.push_back(i);
    }
  }
  const int n_art = static_cast<int>(needs_artificial.size());
  t.a = Mat::Zero(n_rows, total_cols + n_art);
  t.a.leftCols(total_cols) = a;
  t.b = b;
  Vec cost1 = Vec::Zero(total_cols + n_art);
  for (int k = 0; k < n_art; ++k) {
    const int i = needs_artificial[k];
    t.a(i, total_cols + k) = 1.0;
    t.basis[i] = total_cols + k;
    cost1[total_cols + k] = 1.0;
  }

  LpOutcome out;
  if (n_art > 0) {
    run_simplex(t, cost1, t.cols());  // bounded below by 0, cannot be unbounded
    double art_sum = 0.0;
    for (int i = 0; i < n_rows; ++i) {
      if (t.basis[i] >= total_cols) art_sum += t.b[i];
    }
    if (art_sum > kPhase1Tol) {
      out.status = LpStatus::Infeasible;
      out.value = kInfeasibleMax;
      return out;
    }
    // Drive zero-level artificials out of the basis where possible.
    for (int i = 0; i < n_rows; ++i) {
      if (t.basis[i] < total_cols) continue;
      int col = -1;
      for (int j = 0; j < total_cols; ++j) {
        if (std::abs(t.a(i, j)) > kPivotEps) {
          col = j;
          break;
        }
      }
      if (col >= 0) t.pivot(i, col);
      // Otherwise the row is redundant; the artificial stays basic at zero
      // and its column is excluded from phase 2 below.
    }
  }

  Vec cost2_full = Vec::Zero(t.cols());
  cost2_full.head(total_cols) = cost2;
  if (!run_simplex(t, cost2_full, total_cols)) {
    out.status = LpStatus::Unbounded;
    out.value = kInfeasibleMin;
    return out;
  }

  // Map back to z.
  Vec x = Vec::Zero(total_cols);
  for (int i = 0; i < n_rows; ++i) {
    if (t.basis[i] < total_cols) x[t.basis[i]] = t.b[i];
  }
  Vec z(n);
  for (int j = 0; j < n; ++j) {
    switch (mode[j]) {
      case 0:
        z[j] = offset[j] + x[col_of[j]];
        break;
      case 1:
        z[j] = offset[j] - x[col_of[j]];
        break;
      case 2:
        z[j] = x[col_of[j]] - x[col2_of[j]];
        break;
    }
  }
  out.status = LpStatus::Optimal;
  out.z = z;
  out.value = lp.objective.dot(z);
  return out;
}

bool lp_feasible(const LinearProgram& lp) {
  LinearProgram probe = lp;
  probe.objective = Vec::Zero(lp.num_vars());
  return solve_lp(probe).optimal();
}

}  // namespace cbftest
