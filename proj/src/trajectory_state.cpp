#include "kite/trajectory_state.hpp"

#include <cmath>

#include "kite/error.hpp"

namespace kite {

ProjectedKinematics project_kinematics(const Vec3& r, const Vec3& r_dot,
                                       const Vec3& r_ddot) {
  const double rn = r.norm();
  if (rn < 1e-9) throw DomainError("projection undefined at the origin");

  ProjectedKinematics pk;
  pk.radius = rn;
  pk.gamma = r / rn;

  const double radial_rate = pk.gamma.dot(r_dot);
  const double radial_accel =
      (r_dot.squaredNorm() + r.dot(r_ddot) - radial_rate * radial_rate) / rn;

  pk.gamma_dot = (r_dot - pk.gamma * radial_rate) / rn;
  pk.gamma_ddot = r_ddot / rn - radial_accel * r / (rn * rn) -
                  2.0 * radial_rate * r_dot / (rn * rn) +
                  2.0 * radial_rate * radial_rate * r / (rn * rn * rn);

  std::tie(pk.v, pk.w) = sphere_angles(pk.gamma);
  if (pk.w > kPi / 2.0 - kPoleMargin) {
    throw RunAbort("trajectory reached the chart pole");
  }
  pk.frame = tangent_basis(pk.v, pk.w);
  pk.xy_dot = {pk.gamma_dot.dot(pk.frame.e1), pk.gamma_dot.dot(pk.frame.e2)};
  pk.xy_ddot = {pk.gamma_ddot.dot(pk.frame.e1), pk.gamma_ddot.dot(pk.frame.e2)};
  pk.speed = pk.xy_dot.norm();
  return pk;
}

double drift_term_f(const ProjectedKinematics& pk, double theta) {
  if (pk.speed <= kRegularitySpeedEps) {
    throw DomainError("irregular curve: speed below regularity guard");
  }
  const double cross =
      pk.xy_dot.x() * pk.xy_ddot.y() - pk.xy_ddot.x() * pk.xy_dot.y();
  const double vertical = pk.gamma.z();  // γ·ẑ = sin w
  return cross / (pk.speed * pk.speed) - vertical * std::cos(theta) * pk.speed;
}

Effectiveness effectiveness_b(const ProjectedKinematics& pk, const Mat3& attitude,
                              double airspeed, const SensitivityModel& model,
                              const std::array<SplineNetwork, 3>& estimators,
                              const VecX& basis_at_u) {
  if (pk.speed <= kRegularitySpeedEps) {
    throw DomainError("irregular curve: speed below regularity guard");
  }

  // Body -> tangential map: rows are (e1, e2, γ) in earth frame.
  Mat3 tangential;
  tangential.row(0) = pk.frame.e1;
  tangential.row(1) = pk.frame.e2;
  tangential.row(2) = pk.gamma;
  const Mat3 m = tangential * attitude;

  const double coef = model.air_density * airspeed * airspeed * model.tip_area /
                      (2.0 * model.mass * pk.radius * pk.speed * pk.speed);

  Effectiveness out;
  for (int i = 0; i < 3; ++i) {
    out.coeffs.lambda[i] =
        coef * (pk.xy_dot.x() * m(1, i) - pk.xy_dot.y() * m(0, i));
    out.b_hat += out.coeffs.lambda[i] * estimators[static_cast<size_t>(i)]
                                            .weights()
                                            .dot(basis_at_u);
  }
  return out;
}

double corrected_path_length_step(const ProjectedKinematics& pk,
                                  const Vec3& target_tangent_transported,
                                  double dt) {
  return pk.gamma_dot.dot(target_tangent_transported) * dt;
}

double reference_turning_angle(double s, double amplitude, double period_length,
                               double offset) {
  return amplitude * (std::cos(kTwoPi * s / period_length) - 1.0) + offset;
}

ReferenceTrajectory ReferenceTrajectory::generate(
    const std::function<double(double)>& theta_fn, double period_length,
    const SpherePoint& start, int n_samples) {
  if (n_samples < 2) throw DomainError("reference needs at least 2 samples");

  ReferenceTrajectory ref;
  ref.period_length_ = period_length;
  ref.samples_.reserve(static_cast<size_t>(n_samples) + 1);

  const double h = period_length / n_samples;
  double v = start.v;
  double w = start.w;

  auto rhs = [&](double v_, double w_, double s_, double& dv, double& dw) {
    if (w_ > kPi / 2.0 - kPoleMargin) {
      throw RunAbort("reference trajectory reached the chart pole");
    }
    const double th = theta_fn(s_);
    dv = std::cos(th) / std::cos(w_);
    dw = std::sin(th);
  };

  auto push_sample = [&](double s_, double v_, double w_) {
    Sample smp;
    smp.s = s_;
    smp.v = v_;
    smp.w = w_;
    // The chart azimuth may wind outside [0, 2*pi) while integrating; only
    // the cartesian point needs the canonical range.
    const double v_wrapped = v_ - kTwoPi * std::floor(v_ / kTwoPi);
    smp.gamma = patch_point(v_wrapped, w_);
    smp.theta = theta_fn(s_);
    const TangentFrame f = tangent_basis(v_wrapped, w_);
    smp.tangent = std::cos(smp.theta) * f.e1 + std::sin(smp.theta) * f.e2;
    ref.samples_.push_back(smp);
  };

  push_sample(0.0, v, w);
  for (int k = 0; k < n_samples; ++k) {
    const double s = k * h;
    double k1v, k1w, k2v, k2w, k3v, k3w, k4v, k4w;
    rhs(v, w, s, k1v, k1w);
    rhs(v + 0.5 * h * k1v, w + 0.5 * h * k1w, s + 0.5 * h, k2v, k2w);
    rhs(v + 0.5 * h * k2v, w + 0.5 * h * k2w, s + 0.5 * h, k3v, k3w);
    rhs(v + h * k3v, w + h * k3w, s + h, k4v, k4w);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    w += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    push_sample((k + 1) * h, v, w);
  }
  return ref;
}

ReferenceTrajectory ReferenceTrajectory::figure_eight(double amplitude,
                                                      double period_length,
                                                      const SpherePoint& start,
                                                      double offset,
                                                      int n_samples) {
  return generate(
      [=](double s) {
        return reference_turning_angle(s, amplitude, period_length, offset);
      },
      period_length, start, n_samples);
}

ReferenceTrajectory::Target ReferenceTrajectory::lookup(double s_c) const {
  const double L = period_length_;
  double s = std::fmod(s_c, L);
  if (s < 0.0) s += L;

  const auto n = samples_.size() - 1;
  const double pos = s / L * static_cast<double>(n);
  size_t i = std::min(static_cast<size_t>(pos), n - 1);
  const double frac = pos - static_cast<double>(i);

  const Sample& a = samples_[i];
  const Sample& b = samples_[i + 1];

  Target t;
  t.gamma = ((1.0 - frac) * a.gamma + frac * b.gamma).normalized();
  Vec3 tan = (1.0 - frac) * a.tangent + frac * b.tangent;
  tan -= t.gamma * tan.dot(t.gamma);  // keep tangent in the tangent plane
  t.tangent = tan.normalized();
  t.theta = (1.0 - frac) * a.theta + frac * b.theta;
  t.theta_slope = (b.theta - a.theta) / (b.s - a.s);
  return t;
}

double ReferenceTrajectory::closure_defect() const {
  return (samples_.back().gamma - samples_.front().gamma).norm();
}

namespace {

// Closure defect component transverse to the start tangent, signed.
double transverse_defect(double amplitude, double period_length,
                         const SpherePoint& start, double offset) {
  const auto ref = ReferenceTrajectory::figure_eight(amplitude, period_length,
                                                     start, offset, 2048);
  const Vec3 d = ref.samples().back().gamma - ref.samples().front().gamma;
  const Vec3 lateral = start.cartesian.cross(ref.samples().front().tangent);
  return d.dot(lateral);
}

}  // namespace

double find_closing_offset(double amplitude, double period_length,
                           const SpherePoint& start) {
  auto g = [&](double c) {
    return transverse_defect(amplitude, period_length, start, c);
  };

  // Scan for a sign change around the planar solution, then bisect.
  constexpr double kLo = -1.5;
  constexpr double kHi = 3.0;
  constexpr int kScanSteps = 18;
  double a = kLo;
  double ga = g(a);
  double b = a;
  bool bracketed = false;
  for (int i = 1; i <= kScanSteps; ++i) {
    b = kLo + (kHi - kLo) * static_cast<double>(i) / kScanSteps;
    const double gb = g(b);
    if (ga == 0.0) return a;
    if (ga * gb < 0.0) {
      bracketed = true;
      break;
    }
    a = b;
    ga = gb;
  }
  if (!bracketed) {
    throw DomainError("no closing offset bracketed for this configuration");
  }

  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (a + b);
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if (ga * gm < 0.0) {
      b = mid;
    } else {
      a = mid;
      ga = gm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace kite
