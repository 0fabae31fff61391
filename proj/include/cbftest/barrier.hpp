#ifndef CBFTEST_BARRIER_HPP
#define CBFTEST_BARRIER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cbftest/model.hpp"

namespace cbftest {

/// Scalar barrier h(x[, d]) with analytic gradient in x.
///
/// Norm kinds evaluate against a center that is either fixed or bound to a
/// slot of the test-parameter vector d (a contiguous block of `dim` entries
/// starting at slot*dim). Binding is declared at construction; evaluating a
/// bound barrier without d is an error.
class BarrierFunction {
 public:
  enum class Kind { NormInside, NormOutside, Custom };

  using EvalFn = std::function<double(const Vec&, const Vec*)>;
  using GradFn = std::function<RowVec(const Vec&, const Vec*)>;

  /// -||x - c|| + r: nonnegative inside the ball.
  static BarrierFunction norm_inside(const Vec& center, double radius);
  /// ||x - c|| - r: nonnegative outside the ball.
  static BarrierFunction norm_outside(const Vec& center, double radius);
  /// Same families with the center read from d.segment(slot*dim, dim).
  static BarrierFunction norm_inside_bound(int slot, int dim, double radius);
  static BarrierFunction norm_outside_bound(int slot, int dim, double radius);

  static BarrierFunction custom(std::string label, EvalFn eval, GradFn grad,
                                bool binds_d);

  /// -h, as its own barrier (used by negated atoms).
  static BarrierFunction negation(const BarrierFunction& h);

  double eval(const Vec& x, const Vec* d = nullptr) const;
  /// Gradient w.r.t. x. Throws SingularGradientError within 1e-9 of a norm
  /// barrier's center.
  RowVec grad(const Vec& x, const Vec* d = nullptr) const;

  Kind kind() const { return kind_; }
  bool binds_d() const { return binds_d_; }
  double radius() const { return radius_; }
  const Vec& center() const { return center_; }
  int d_slot() const { return d_slot_; }

  const std::string& describe() const { return label_; }

 private:
  Kind kind_ = Kind::Custom;
  Vec center_;
  int d_slot_ = -1;
  int dim_ = 0;
  double radius_ = 0.0;
  bool binds_d_ = false;
  EvalFn eval_;
  GradFn grad_;
  std::string label_;

  Vec resolve_center(const Vec* d) const;
};

/// Extended class-K function: strictly increasing with alpha(0) = 0.
/// Linear: beta * s. Finite-time: gamma * sign(s) * |s|^rho with rho in (0,1).
struct ClassK {
  enum class Kind { Linear, FiniteTime };
  Kind kind = Kind::Linear;
  double beta = 100.0;
  double gamma = 1.0;
  double rho = 0.5;

  static ClassK linear(double beta);
  static ClassK finite_time(double gamma, double rho);
  void validate() const;
};

double alpha_eval(const ClassK& a, double s);

/// Convergence-time bound for the finite-time family starting at h0 <= 0:
/// T = |h0|^(1-rho) / (gamma * (1-rho)).
/// Throws NotApplicableError when h0 > 0 (already inside the set).
double ftc_time_bound(double gamma, double rho, double h0);

struct LieDerivatives {
  double lf = 0.0;  // grad h . f
  RowVec lg;        // grad h . g, length m
};

LieDerivatives lie_derivatives(const SystemModel& model,
                               const BarrierFunction& h, const Vec& x,
                               const Vec* d = nullptr);

/// Lf h + Lg h . u + alpha(h). Nonnegative iff the barrier condition holds
/// at (x, u).
double cbf_margin(const SystemModel& model, const BarrierFunction& h,
                  const ClassK& a, const Vec& x, const Vec& u,
                  const Vec* d = nullptr);

/// Ordered candidate pool the estimator mixes over.
struct CandidateBarrierSet {
  std::vector<BarrierFunction> candidates;

  int size() const { return static_cast<int>(candidates.size()); }
  void validate() const { require(size() >= 1, "candidate set must be nonempty"); }
};

/// Membership view of a barrier's 0-superlevel set, h(x) >= 0 exactly.
struct SuperlevelSet {
  BarrierFunction h;
  std::optional<Vec> bound_d;

  bool contains(const Vec& x) const {
    return h.eval(x, bound_d ? &*bound_d : nullptr) >= 0.0;
  }
};

}  // namespace cbftest

#endif  // CBFTEST_BARRIER_HPP
