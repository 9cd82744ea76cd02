#include "kite/sphere_geometry.hpp"

#include <algorithm>
#include <cmath>

#include "kite/error.hpp"

namespace kite {

namespace {

constexpr double kUnitNormTol = 1e-9;
constexpr double kPoleBasisEps = 1e-9;

void require_unit(const Vec3& p, const char* name) {
  if (std::abs(p.norm() - 1.0) > kUnitNormTol) {
    throw DomainError(std::string(name) + " is not a unit vector");
  }
}

}  // namespace

SpherePoint SpherePoint::from_angles(double v, double w) {
  SpherePoint p;
  p.v = v;
  p.w = w;
  p.cartesian = patch_point(v, w);
  return p;
}

SpherePoint SpherePoint::from_cartesian(const Vec3& c) {
  require_unit(c, "point");
  SpherePoint p;
  std::tie(p.v, p.w) = sphere_angles(c);
  p.cartesian = c;
  return p;
}

Vec3 patch_point(double v, double w) {
  if (v < 0.0 || v >= kTwoPi) throw DomainError("azimuth outside [0, 2*pi)");
  if (w < 0.0 || w > kPi / 2.0) throw DomainError("elevation outside [0, pi/2]");
  return {std::cos(w) * std::cos(v), std::cos(w) * std::sin(v), std::sin(w)};
}

TangentFrame tangent_basis(double v, double w) {
  if (w > kPi / 2.0 - kPoleBasisEps) {
    throw DomainError("tangent basis degenerates at the pole");
  }
  TangentFrame f;
  f.e1 = Vec3(-std::sin(v), std::cos(v), 0.0);
  f.e2 = Vec3(-std::cos(v) * std::sin(w), -std::sin(v) * std::sin(w), std::cos(w));
  return f;
}

std::pair<double, double> coordinate_curvatures(double w) {
  return {std::sin(w), 0.0};
}

double geodesic_curvature(const Vec2& xy_dot, const Vec2& xy_ddot) {
  const double speed = xy_dot.norm();
  if (speed <= kRegularitySpeedEps) {
    throw DomainError("irregular curve: speed below regularity guard");
  }
  const double cross = xy_dot.x() * xy_ddot.y() - xy_ddot.x() * xy_dot.y();
  return cross / (speed * speed * speed);
}

double turning_angle_rate(double theta, double kappa_g, double kg1, double speed) {
  return (kappa_g - kg1 * std::cos(theta)) * speed;
}

double geodesic_distance(const Vec3& p, const Vec3& q) {
  require_unit(p, "p");
  require_unit(q, "q");
  return std::acos(std::clamp(p.dot(q), -1.0, 1.0));
}

Vec3 geodesic_vector(const Vec3& p, const Vec3& q) {
  if (p.cross(q).norm() < kAntipodalEps) {
    throw DomainError("geodesic direction undefined for coincident/antipodal points");
  }
  const Vec3 t = q - q.dot(p) * p;
  return t / t.norm();
}

Mat3 rotate_along_geodesic(const Vec3& p, const Vec3& q) {
  const Vec3 axis = p.cross(q);
  const double axis_norm = axis.norm();
  if (axis_norm < kAntipodalEps) {
    throw DomainError("rotation axis undefined for coincident/antipodal points");
  }
  const double angle = geodesic_distance(p, q);
  return Eigen::AngleAxisd(angle, axis / axis_norm).toRotationMatrix();
}

double geodesic_distance_rate(const Vec3& p, const Vec3& p_dot, const Vec3& q,
                              const Vec3& q_dot) {
  const Mat3 rot = rotate_along_geodesic(p, q);
  const Vec3 y_pq = geodesic_vector(p, q);
  return -(p_dot - rot.transpose() * q_dot).dot(y_pq);
}

std::pair<double, double> sphere_angles(const Vec3& g) {
  double v = std::atan2(g.y(), g.x());
  if (v < 0.0) v += kTwoPi;
  const double w = std::asin(std::clamp(g.z(), -1.0, 1.0));
  return {v, w};
}

double lift_angle(double raw, double near) {
  return raw + kTwoPi * std::round((near - raw) / kTwoPi);
}

void TurningAngleTracker::reset(double theta0) {
  state_.theta = theta0;
  state_.arc_length = 0.0;
  initialized_ = true;
}

double TurningAngleTracker::advance(double tangent_angle, double kappa_g,
                                    double kg1, double speed, double dt) {
  if (!initialized_) {
    reset(tangent_angle);
    return state_.theta;
  }
  if (speed <= kRegularitySpeedEps) {
    return state_.theta;  // frozen
  }
  const double predicted =
      state_.theta + turning_angle_rate(state_.theta, kappa_g, kg1, speed) * dt;
  state_.theta = lift_angle(tangent_angle, predicted);
  state_.arc_length += speed * dt;
  return state_.theta;
}

}  // namespace kite
