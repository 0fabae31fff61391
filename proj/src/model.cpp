#include "cbftest/model.hpp"

#include <cmath>

namespace cbftest {

void SystemModel::validate() const {
  require(n > 0 && m > 0, "SystemModel: dimensions must be positive");
  require(dt > 0.0, "SystemModel: dt must be positive");
  require(static_cast<int>(input_lo.size()) == m &&
              static_cast<int>(input_hi.size()) == m,
          "SystemModel: input box size mismatch");
  for (int i = 0; i < m; ++i) {
    require(input_lo[i] < input_hi[i],
            "SystemModel: input box lower bound must be below upper bound");
  }
  require(static_cast<bool>(f) && static_cast<bool>(g),
          "SystemModel: f and g must be set");
}

bool SystemModel::input_in_box(const Vec& u, double tol) const {
  if (u.size() != m) return false;
  for (int i = 0; i < m; ++i) {
    if (u[i] < input_lo[i] - tol || u[i] > input_hi[i] + tol) return false;
  }
  return true;
}

Vec SystemModel::clamp_input(const Vec& u) const {
  Vec out = u;
  for (int i = 0; i < m; ++i) {
    out[i] = std::min(std::max(out[i], input_lo[i]), input_hi[i]);
  }
  return out;
}

SystemModel SystemModel::single_integrator(int dim, const Vec& lo,
                                           const Vec& hi, double dt) {
  SystemModel model;
  model.n = dim;
  model.m = dim;
  model.f = [dim](const Vec&) { return Vec(Vec::Zero(dim)); };
  model.g = [dim](const Vec&) { return Mat(Mat::Identity(dim, dim)); };
  model.input_lo = lo;
  model.input_hi = hi;
  model.dt = dt;
  model.validate();
  return model;
}

SystemModel SystemModel::drifting_integrator(const Vec& drift, const Vec& lo,
                                             const Vec& hi, double dt) {
  SystemModel model;
  const int dim = static_cast<int>(drift.size());
  model.n = dim;
  model.m = dim;
  model.f = [drift](const Vec&) { return drift; };
  model.g = [dim](const Vec&) { return Mat(Mat::Identity(dim, dim)); };
  model.input_lo = lo;
  model.input_hi = hi;
  model.dt = dt;
  model.validate();
  return model;
}

Vec step(const SystemModel& model, const Vec& x, const Vec& u) {
  if (x.size() != model.n || u.size() != model.m) {
    throw DimensionError("step: state/input dimension mismatch");
  }
  Vec next = x + model.dt * (model.f(x) + model.g(x) * u);
  if (!next.allFinite()) {
    throw IntegrationDivergenceError("step: non-finite state after update");
  }
  return next;
}

void Trajectory::validate() const {
  require(!states.empty(), "Trajectory: must contain at least one state");
  require(inputs.size() + 1 == states.size(),
          "Trajectory: need exactly one input per transition");
  require(dt > 0.0, "Trajectory: dt must be positive");
}

Trajectory rollout(const SystemModel& model, const Vec& x0,
                   const std::vector<Vec>& inputs) {
  Trajectory traj;
  traj.dt = model.dt;
  traj.states.reserve(inputs.size() + 1);
  traj.inputs = inputs;
  traj.states.push_back(x0);
  for (const Vec& u : inputs) {
    traj.states.push_back(step(model, traj.states.back(), u));
  }
  return traj;
}

}  // namespace cbftest
