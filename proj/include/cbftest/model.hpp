#ifndef CBFTEST_MODEL_HPP
#define CBFTEST_MODEL_HPP

#include <functional>
#include <vector>

#include "cbftest/common.hpp"

namespace cbftest {

/// Control-affine dynamics  xdot = f(x) + g(x) u  with a box input set.
/// Values are immutable after construction; every operation on a model is a
/// pure function of its arguments.
struct SystemModel {
  int n = 0;  // state dimension
  int m = 0;  // input dimension
  std::function<Vec(const Vec&)> f;  // drift
  std::function<Mat(const Vec&)> g;  // input map, n x m
  Vec input_lo, input_hi;            // box U, per coordinate
  double dt = 0.033;                 // integration step, seconds

  void validate() const;

  bool input_in_box(const Vec& u, double tol = 1e-9) const;
  Vec clamp_input(const Vec& u) const;

  /// f = 0, g = I. The workhorse of the case study.
  static SystemModel single_integrator(int dim, const Vec& lo, const Vec& hi,
                                       double dt);

  /// Constant drift velocity plus identity input map. Used for scenarios
  /// where the system cannot stop (forced forward motion).
  static SystemModel drifting_integrator(const Vec& drift, const Vec& lo,
                                         const Vec& hi, double dt);
};

/// One explicit-Euler step: x + dt * (f(x) + g(x) u).
/// Throws IntegrationDivergenceError if the result is not finite.
Vec step(const SystemModel& model, const Vec& x, const Vec& u);

/// States x_0..x_T plus the inputs that produced them (one fewer).
struct Trajectory {
  std::vector<Vec> states;
  std::vector<Vec> inputs;
  double dt = 0.0;

  int terminal_index() const { return static_cast<int>(states.size()) - 1; }
  void validate() const;
};

/// Roll a fixed input sequence forward from x0.
Trajectory rollout(const SystemModel& model, const Vec& x0,
                   const std::vector<Vec>& inputs);

}  // namespace cbftest

#endif  // CBFTEST_MODEL_HPP
