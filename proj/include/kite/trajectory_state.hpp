#pragma once

#include <array>
#include <functional>
#include <vector>

#include "kite/sphere_geometry.hpp"
#include "kite/spline_network.hpp"
#include "kite/types.hpp"

namespace kite {

/// Kinematics of the projected trajectory γ = r/‖r‖ with tangent-plane
/// coordinates at γ's chart point.
struct ProjectedKinematics {
  Vec3 gamma;
  Vec3 gamma_dot;
  Vec3 gamma_ddot;
  double radius = 0.0;  // ‖r‖ of the source point
  double v = 0.0;
  double w = 0.0;
  TangentFrame frame;
  Vec2 xy_dot;
  Vec2 xy_ddot;
  double speed = 0.0;  // ‖γ̇‖ = ‖xy_dot‖
};

/// Projects (r, r', r'') onto the unit sphere via the quotient-rule expansion
/// using the measured radial rate and radial acceleration components.
/// ‖r‖ ≈ 0 raises DomainError; elevation above pi/2 − kPoleMargin aborts.
ProjectedKinematics project_kinematics(const Vec3& r, const Vec3& r_dot,
                                       const Vec3& r_ddot);

/// The uncommanded turning-angle rate
/// f = (x'y'' − x''y')/‖γ̇‖² − (γ·ẑ) cos θ ‖γ̇‖. Speeds below the
/// regularity guard raise DomainError.
double drift_term_f(const ProjectedKinematics& pk, double theta);

/// Per-step control effectiveness decomposition.
struct EffectivenessCoefficients {
  Vec3 lambda = Vec3::Zero();
};

struct Effectiveness {
  double b_hat = 0.0;  // Σ_i λ_i ŵ_i · b(u)
  EffectivenessCoefficients coeffs;
};

/// Controller-side plant constants for the acceleration-sensitivity model
/// ∂(ẍ,ÿ)/∂u = ρ v_a² S_t / (2 m r) · C^t.
struct SensitivityModel {
  double air_density = 1.225;
  double tip_area = 1.1;
  double mass = 1.5;
};

/// Computes B = (x'·∂ÿ/∂u − ∂ẍ/∂u·y')/‖γ̇‖² together with the coefficients
/// λ_i that make B = Σ_i λ_i ŵ_i·b(u) an identity. `attitude` maps
/// body-frame components to earth frame; the body→tangential map is built
/// from it and the tangent frame at γ. All three estimators must share one
/// basis layout (`basis_at_u`). A vanishing B is not an error here.
Effectiveness effectiveness_b(const ProjectedKinematics& pk, const Mat3& attitude,
                              double airspeed, const SensitivityModel& model,
                              const std::array<SplineNetwork, 3>& estimators,
                              const VecX& basis_at_u);

/// Corrected-path-length increment γ̇ · T_transported · dt. The transported
/// target tangent must already live in γ's tangent plane. May be negative
/// (flying against the target direction).
double corrected_path_length_step(const ProjectedKinematics& pk,
                                  const Vec3& target_tangent_transported, double dt);

inline constexpr double kBesselRootAmplitude = 2.404825557695773;
inline constexpr double kReferencePeriodLength = 4.0 / 3.0;
inline constexpr double kPaperClosingOffset = 0.834029;

/// The figure-eight turning-angle profile A [cos(2π s/L) − 1] + offset.
double reference_turning_angle(double s, double amplitude = kBesselRootAmplitude,
                               double period_length = kReferencePeriodLength,
                               double offset = kPaperClosingOffset);

/// A closed reference path on the hemisphere, sampled uniformly in arc length
/// over one period and immutable after generation.
class ReferenceTrajectory {
 public:
  struct Sample {
    double s;
    double v, w;
    Vec3 gamma;
    Vec3 tangent;  // cos θ e1 + sin θ e2 at (v, w)
    double theta;
  };

  struct Target {
    Vec3 gamma;
    Vec3 tangent;
    double theta;
    double theta_slope;  // dθ/ds at the looked-up arc position
  };

  /// Integrates the unit-speed chart ODE dv/ds = cos θ / cos w,
  /// dw/ds = sin θ with θ = theta_fn(s), sampling n_samples+1 points over
  /// [0, period_length]. Aborts if the path approaches the pole.
  static ReferenceTrajectory generate(const std::function<double(double)>& theta_fn,
                                      double period_length, const SpherePoint& start,
                                      int n_samples = 4096);

  /// Standard figure eight from reference_turning_angle.
  static ReferenceTrajectory figure_eight(double amplitude, double period_length,
                                          const SpherePoint& start, double offset,
                                          int n_samples = 4096);

  /// Target point/tangent at arc position s_c (periodic), linearly
  /// interpolated and re-normalized.
  Target lookup(double s_c) const;

  double period_length() const { return period_length_; }

  /// ‖γ(L) − γ(0)‖ of the sampled path.
  double closure_defect() const;

  const std::vector<Sample>& samples() const { return samples_; }

 private:
  double period_length_ = 0.0;
  std::vector<Sample> samples_;
};

/// Root-finds the turning-angle offset that closes the spherical figure
/// eight, using the closure defect's signed transverse component. Throws if
/// no sign change is bracketed in the scanned range.
double find_closing_offset(double amplitude, double period_length,
                           const SpherePoint& start);

}  // namespace kite
