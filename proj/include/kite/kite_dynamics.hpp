#pragma once

#include <string>
#include <vector>

#include "kite/rng.hpp"
#include "kite/types.hpp"

namespace kite {

/// Piecewise-linear coefficient table, clamped at the ends.
class AeroCurve {
 public:
  AeroCurve() = default;
  AeroCurve(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;

  /// Thin-airfoil-style curve slope·sin(x − zero_x), clipped to the value at
  /// ±stall_margin from zero_x and tapered to zero beyond 90° away, sampled
  /// into a table.
  static AeroCurve thin_airfoil(double slope, double zero_x, double stall_margin);

  /// Two-column whitespace-separated text file (x, value); '#' comments.
  static AeroCurve from_file(const std::string& path);

  const std::vector<double>& abscissa() const { return x_; }
  const std::vector<double>& ordinate() const { return y_; }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
};

struct KiteParams {
  double area = 11.0;          // projected surface, m^2
  double span = 6.0;           // m
  double oswald = 0.7;
  double mass = 1.5;           // kg, kite + control pod
  double cd0 = 0.075;          // zero-lift drag coefficient
  double air_density = 1.225;  // kg/m^3
  double power_setting = 0.01; // rad
  double tip_area = 1.1;       // m^2, controller-model constant
  double gravity = 9.81;       // m/s^2
  double steer_limit = 0.12;      // rad
  double steer_rate_limit = 0.05; // rad/s

  AeroCurve lift_curve = default_lift_curve();
  AeroCurve steer_curve = default_steer_curve();

  double aspect_ratio() const { return span * span / area; }
  double induced_drag_factor() const {
    return 1.0 / (kPi * aspect_ratio() * oswald);
  }

  // Default curves: the cambered-kite lift curve keeps the aerodynamic
  // normal force outward (tether-tensioning) over the operating attack
  // angles; the steering curve is the symmetric thin-airfoil curve with
  // mirrored rigging so that positive steering accelerates along +e_y.
  static AeroCurve default_lift_curve();
  static AeroCurve default_steer_curve();
};

struct TurbulenceParams {
  double sigma = 0.0;  // stationary std per axis, m/s
  double delta = 0.5;  // correlation rate, 1/s
};

struct Environment {
  Vec3 mean_wind = Vec3(6.0, 0.0, 0.0);
  TurbulenceParams turbulence;
};

struct KiteState {
  Vec3 r = Vec3::Zero();      // m, earth frame
  Vec3 r_dot = Vec3::Zero();  // m/s
  double u_act = 0.0;         // actuator steering position, rad
  double tether_len = 100.0;  // m
  double tether_rate = 0.0;   // m/s
  Vec3 turb = Vec3::Zero();   // Gauss-Markov wind states, m/s

  Vec3 wind(const Environment& env) const { return env.mean_wind + turb; }
};

struct NoiseLevels {
  bool enabled = false;
  double position = 2.5;      // m
  double velocity = 0.02;     // m/s
  double acceleration = 0.02; // m/s^2
  double airspeed = 0.9;      // m/s
  double attitude_deg = 1.0;  // deg per axis
};

struct SensorReading {
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
  Vec3 acceleration = Vec3::Zero();
  double airspeed = 0.0;
  Mat3 attitude = Mat3::Identity();  // body (aero) to earth
};

/// Aerodynamic frame: e_x along the air-relative velocity r' − v_w,
/// e_y along r × e_x, e_z completing the right-handed triad. Columns of the
/// returned matrix are (e_x, e_y, e_z) in earth frame. Throws RunAbort when
/// the airspeed vanishes or the apparent wind is radial.
Mat3 aero_frame(const Vec3& r, const Vec3& r_dot, const Vec3& wind);

/// α = acos(r̂ · e_z) + θ_p.
double attack_angle(const Vec3& r, const Vec3& aero_ez, double power_setting);

/// Force components (F_x, F_y, F_z) in the aero frame:
/// −½ρv² S (C_D(α), C_S(u), C_L(α)) with C_D = C_D0 + k C_L².
Vec3 aero_forces(const KiteParams& params, double alpha, double u, double airspeed);

/// Earth-frame acceleration including gravity and the tether-sphere
/// constraint force λ_c r̂ (the radial acceleration matches the prescribed
/// tether acceleration analytically).
Vec3 constrained_acceleration(const KiteState& state, const KiteParams& params,
                              const Vec3& wind);

/// Rate limit toward the command, then magnitude saturation.
double apply_actuator(double u_act, double command, const KiteParams& params,
                      double dt);

/// One 100 Hz plant step: actuator update, RK4 on (r, r'), tether advance,
/// radial projection back onto the sphere, and the turbulence update for the
/// next step. Throws RunAbort on pole crossing or frame degeneracy.
KiteState step(const KiteState& state, double command_u, const KiteParams& params,
               const Environment& env, double dt, Rng& rng);

/// First-order Gauss-Markov gust update per axis:
/// x ← x (1 − δ dt) + σ sqrt(2 δ dt) ξ. Stationary std is σ.
Vec3 turbulence_step(const Vec3& turb, double sigma, double delta, double dt,
                     Rng& rng);

/// Truth state + acceleration to a (possibly noisy) measurement. The
/// attitude is the aero frame perturbed by a small random rotation.
SensorReading read_sensors(const KiteState& state, const Vec3& accel,
                           const Vec3& wind, const NoiseLevels& noise, Rng& rng);

}  // namespace kite
