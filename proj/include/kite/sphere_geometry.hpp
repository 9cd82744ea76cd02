#pragma once

#include <utility>

#include "kite/types.hpp"

namespace kite {

// Regularity guard on unit-sphere speed: below this, curvature and turning
// angle are frozen at their last values instead of computed.
inline constexpr double kRegularitySpeedEps = 1e-6;

// Minimum ‖p×q‖ for the geodesic direction / rotation to be well defined.
inline constexpr double kAntipodalEps = 1e-9;

// Trajectories must stay below w = pi/2 − kPoleMargin; crossing aborts a run.
inline constexpr double kPoleMargin = 1e-3;

/// A point on the upper unit hemisphere, kept both as chart angles and as the
/// cached cartesian unit vector (cos w cos v, cos w sin v, sin w).
struct SpherePoint {
  double v = 0.0;  // azimuth, [0, 2*pi)
  double w = 0.0;  // elevation, [0, pi/2]
  Vec3 cartesian = Vec3::UnitX();

  static SpherePoint from_angles(double v, double w);
  static SpherePoint from_cartesian(const Vec3& p);
};

/// Orthonormal basis of the tangent plane at a chart point. e1 is horizontal
/// (zero vertical component), and e1 x e2 equals the outward normal.
struct TangentFrame {
  Vec3 e1;
  Vec3 e2;
};

/// Cumulative turning angle along a trajectory, unbounded (winding adds
/// multiples of 2*pi), together with the unit-sphere arc length flown.
struct TurningAngleState {
  double theta = 0.0;
  double arc_length = 0.0;
};

/// The chart map (v, w) -> unit vector. Arguments outside
/// [0, 2*pi) x [0, pi/2] raise DomainError.
Vec3 patch_point(double v, double w);

/// Normalized chart partial derivatives. The basis degenerates at the pole;
/// w within 1e-9 of pi/2 raises DomainError.
TangentFrame tangent_basis(double v, double w);

/// Geodesic curvatures (kg1, kg2) of the chart coordinate lines at
/// elevation w: kg1 = sin w (latitude circles), kg2 = 0 (meridians).
std::pair<double, double> coordinate_curvatures(double w);

/// Signed geodesic curvature from tangent-plane velocity/acceleration
/// coordinates: (x'y'' − x''y') / ‖γ'‖³. Speeds below kRegularitySpeedEps
/// raise DomainError (irregular curve).
double geodesic_curvature(const Vec2& xy_dot, const Vec2& xy_ddot);

/// dθ/dt = (κ_g − kg1 cos θ) · speed, the chart form of Liouville's theorem
/// converted from arc length to time.
double turning_angle_rate(double theta, double kappa_g, double kg1, double speed);

/// Great-circle distance acos(p·q) ∈ [0, pi]. Non-unit inputs raise
/// DomainError; the dot product is clamped into [−1, 1] before acos.
double geodesic_distance(const Vec3& p, const Vec3& q);

/// Unit tangent at p pointing along the geodesic toward q. Undefined for
/// coincident or antipodal points (DomainError).
Vec3 geodesic_vector(const Vec3& p, const Vec3& q);

/// Rotation about p×q mapping p to q. Its transpose transports tangent
/// vectors from q's tangent plane to p's. Undefined for p ≈ ±q.
Mat3 rotate_along_geodesic(const Vec3& p, const Vec3& q);

/// d/dt dist(p(t), q(t)) = −(p' − Rᵀq') · Y_p^q for two trajectories on the
/// sphere. Same definedness requirements as geodesic_vector.
double geodesic_distance_rate(const Vec3& p, const Vec3& p_dot, const Vec3& q,
                              const Vec3& q_dot);

/// Chart angles of a unit vector: v = atan2(y, x) wrapped to [0, 2*pi),
/// w = asin(z).
std::pair<double, double> sphere_angles(const Vec3& g);

/// Lift `raw` (typically from atan2, in (−pi, pi]) onto the 2*pi branch
/// nearest `near`.
double lift_angle(double raw, double near);

/// Propagates the cumulative turning angle: the Liouville rate integrates the
/// prediction one step, then the angle is re-anchored to the 2*pi branch of
/// the measured tangent direction nearest that prediction. The prediction
/// only selects the branch, so the integrator contributes no drift while the
/// branch memory keeps windings cumulative. Below the regularity guard the
/// state is frozen.
class TurningAngleTracker {
 public:
  bool initialized() const { return initialized_; }
  void reset(double theta0);

  /// `tangent_angle` is atan2(T·e2, T·e1) of the measured unit tangent.
  /// Returns the updated cumulative angle.
  double advance(double tangent_angle, double kappa_g, double kg1, double speed,
                 double dt);

  const TurningAngleState& state() const { return state_; }

 private:
  TurningAngleState state_;
  bool initialized_ = false;
};

}  // namespace kite
