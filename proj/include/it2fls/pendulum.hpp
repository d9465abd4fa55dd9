#ifndef IT2FLS_PENDULUM_HPP
#define IT2FLS_PENDULUM_HPP

#include "it2fls/modes.hpp"

#include <Eigen/Core>

#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace it2fls::pendulum {

constexpr double kGravity = 9.81;
/// RK4 is stable on the actuator lag (eigenvalue -100) for step < 2.785/100.
constexpr double kMaxStableStep = 0.0278;
constexpr double kBlowupThreshold = 1e6;

/// Pole angle (rad, 0 = upright), angular rate (rad/s) and lagged actuator force (N).
using State = Eigen::Vector3d;

struct PlantState {
  double angle = 0;
  double angular_velocity = 0;
  double actuator_force = 0;

  State vector() const { return {angle, angular_velocity, actuator_force}; }
  static PlantState from(const State& s) { return {s(0), s(1), s(2)}; }
};

/// Pole-on-cart dynamics with a first-order actuator lag driven by
/// `commanded_force`. Returns (d angle, d angular_velocity, d actuator_force).
State plant_derivatives(const State& s, double commanded_force);

/// One classical fourth-order Runge-Kutta step of dx/dt = f(x).
template <typename Vec, typename F>
Vec rk4_step(F&& f, const Vec& x, double h) {
  const Vec k1 = f(x);
  const Vec k2 = f(Vec(x + 0.5 * h * k1));
  const Vec k3 = f(Vec(x + 0.5 * h * k2));
  const Vec k4 = f(Vec(x + h * k3));
  return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

struct LoopConfig {
  double g1 = 4.0 / std::numbers::pi;
  double g2 = 0.4 / std::numbers::pi;
  double gy = 100.0;
  double step = 1e-3;
  double duration = 5.0;
  double initial_angle = 0.1;
  double initial_velocity = 0.0;
  double setpoint = 0.0;

  /// Throws std::invalid_argument.
  void validate() const;
  /// floor(duration / step), tolerant of representation error in the ratio.
  long steps() const;
};

struct ControlAction {
  double force = 0;  ///< gy * u
  double x1 = 0;     ///< clamped, scaled error
  double x2 = 0;     ///< clamped, scaled error rate
  double u = 0;      ///< crisp controller output before the output gain
  bool degenerate = false;
};

ControlAction controller_step(const FuzzySystem& controller, const LoopConfig& cfg, double error, double error_rate);

struct SimTrace {
  std::vector<double> times;
  std::vector<double> angles;
  std::vector<double> angular_velocities;
  std::vector<double> forces;
  std::vector<Eigen::Vector2d> controller_inputs;
  std::vector<double> controller_outputs;
  std::vector<bool> degenerate_flags;
  /// Set when the run stopped early (non-finite or exploding state).
  std::optional<std::string> failure;

  std::size_t size() const { return times.size(); }
};

/// Fixed-step RK4 closed-loop run. The controller is sampled once per step
/// from (setpoint - angle, -angular_velocity) and held over the four stages.
SimTrace simulate(const FuzzySystem& controller, const LoopConfig& cfg);

struct TraceSummary {
  /// Earliest time after which |angle - setpoint| stays below the tolerance; empty if never.
  std::optional<double> settle_time;
  double max_abs_angle = 0;
  double final_angle = 0;
  long degenerate_steps = 0;
};

TraceSummary summarize(const SimTrace& trace, double setpoint = 0.0, double tolerance = 0.01);

/// Header t,angle,angular_velocity,force,x1,x2,u,degenerate; 17 significant digits.
void write_csv(std::ostream& out, const SimTrace& trace);

}  // namespace it2fls::pendulum

#endif  // IT2FLS_PENDULUM_HPP
