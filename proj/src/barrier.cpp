#include "cbftest/barrier.hpp"

#include <cmath>
#include <sstream>

namespace cbftest {
namespace {

constexpr double kSingularRadius = 1e-9;

std::string norm_label(const char* family, const Vec& c, int slot, double r) {
  std::ostringstream os;
  os << family << "(";
  if (slot >= 0) {
    os << "d[" << slot << "]";
  } else {
    os << "c=[";
    for (int i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "]";
  }
  os << ", r=" << r << ")";
  return os.str();
}

}  // namespace

Vec BarrierFunction::resolve_center(const Vec* d) const {
  if (d_slot_ < 0) return center_;
  if (d == nullptr) {
    throw DimensionError("barrier is bound to test parameters but none given");
  }
  if (d->size() < (d_slot_ + 1) * dim_) {
    throw DimensionError("test-parameter vector too short for bound slot");
  }
  return d->segment(d_slot_ * dim_, dim_);
}

BarrierFunction BarrierFunction::norm_inside(const Vec& center, double radius) {
  BarrierFunction b;
  b.kind_ = Kind::NormInside;
  b.center_ = center;
  b.dim_ = static_cast<int>(center.size());
  b.radius_ = radius;
  b.label_ = norm_label("norm_inside", center, -1, radius);
  return b;
}

BarrierFunction BarrierFunction::norm_outside(const Vec& center,
                                              double radius) {
  BarrierFunction b;
  b.kind_ = Kind::NormOutside;
  b.center_ = center;
  b.dim_ = static_cast<int>(center.size());
  b.radius_ = radius;
  b.label_ = norm_label("norm_outside", center, -1, radius);
  return b;
}

BarrierFunction BarrierFunction::norm_inside_bound(int slot, int dim,
                                                   double radius) {
  BarrierFunction b;
  b.kind_ = Kind::NormInside;
  b.d_slot_ = slot;
  b.dim_ = dim;
  b.radius_ = radius;
  b.binds_d_ = true;
  b.label_ = norm_label("norm_inside", Vec(), slot, radius);
  return b;
}

BarrierFunction BarrierFunction::norm_outside_bound(int slot, int dim,
                                                    double radius) {
  BarrierFunction b;
  b.kind_ = Kind::NormOutside;
  b.d_slot_ = slot;
  b.dim_ = dim;
  b.radius_ = radius;
  b.binds_d_ = true;
  b.label_ = norm_label("norm_outside", Vec(), slot, radius);
  return b;
}

BarrierFunction BarrierFunction::custom(std::string label, EvalFn eval,
                                        GradFn grad, bool binds_d) {
  BarrierFunction b;
  b.kind_ = Kind::Custom;
  b.binds_d_ = binds_d;
  b.eval_ = std::move(eval);
  b.grad_ = std::move(grad);
  b.label_ = std::move(label);
  return b;
}

BarrierFunction BarrierFunction::negation(const BarrierFunction& h) {
  BarrierFunction inner = h;
  return custom(
      "neg(" + h.describe() + ")",
      [inner](const Vec& x, const Vec* d) { return -inner.eval(x, d); },
      [inner](const Vec& x, const Vec* d) { return RowVec(-inner.grad(x, d)); },
      h.binds_d());
}

double BarrierFunction::eval(const Vec& x, const Vec* d) const {
  switch (kind_) {
    case Kind::NormInside:
      return -(x - resolve_center(d)).norm() + radius_;
    case Kind::NormOutside:
      return (x - resolve_center(d)).norm() - radius_;
    case Kind::Custom:
      return eval_(x, d);
  }
  throw Error("unreachable barrier kind");
}

RowVec BarrierFunction::grad(const Vec& x, const Vec* d) const {
  if (kind_ == Kind::Custom) return grad_(x, d);
  const Vec delta = x - resolve_center(d);
  const double dist = delta.norm();
  if (dist < kSingularRadius) {
    throw SingularGradientError("norm barrier gradient undefined at center: " +
                                label_);
  }
  RowVec unit = delta.transpose() / dist;
  return kind_ == Kind::NormInside ? RowVec(-unit) : unit;
}

ClassK ClassK::linear(double beta) {
  ClassK a;
  a.kind = Kind::Linear;
  a.beta = beta;
  a.validate();
  return a;
}

ClassK ClassK::finite_time(double gamma, double rho) {
  ClassK a;
  a.kind = Kind::FiniteTime;
  a.gamma = gamma;
  a.rho = rho;
  a.validate();
  return a;
}

void ClassK::validate() const {
  if (kind == Kind::Linear) {
    require(beta > 0.0, "linear class-K requires beta > 0");
  } else {
    require(gamma > 0.0, "finite-time class-K requires gamma > 0");
    require(rho > 0.0 && rho < 1.0,
            "finite-time class-K requires rho in (0,1)");
  }
}

double alpha_eval(const ClassK& a, double s) {
  if (a.kind == ClassK::Kind::Linear) return a.beta * s;
  if (s == 0.0) return 0.0;
  const double sign = s > 0.0 ? 1.0 : -1.0;
  return a.gamma * sign * std::pow(std::abs(s), a.rho);
}

double ftc_time_bound(double gamma, double rho, double h0) {
  require(gamma > 0.0, "ftc_time_bound: gamma must be positive");
  require(rho > 0.0 && rho < 1.0, "ftc_time_bound: rho must lie in (0,1)");
  if (h0 > 0.0) {
    throw NotApplicableError(
        "ftc_time_bound: state already inside the set (h0 > 0)");
  }
  return std::pow(std::abs(h0), 1.0 - rho) / (gamma * (1.0 - rho));
}

LieDerivatives lie_derivatives(const SystemModel& model,
                               const BarrierFunction& h, const Vec& x,
                               const Vec* d) {
  LieDerivatives out;
  const RowVec gradient = h.grad(x, d);
  out.lf = gradient.dot(model.f(x));
  out.lg = gradient * model.g(x);
  return out;
}

double cbf_margin(const SystemModel& model, const BarrierFunction& h,
                  const ClassK& a, const Vec& x, const Vec& u, const Vec* d) {
  const LieDerivatives lie = lie_derivatives(model, h, x, d);
  return lie.lf + lie.lg.dot(u) + alpha_eval(a, h.eval(x, d));
}

}  // namespace cbftest
