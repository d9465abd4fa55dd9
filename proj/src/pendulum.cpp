#include "it2fls/pendulum.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace it2fls::pendulum {

State plant_derivatives(const State& s, double commanded_force) {
  const double y = s(0);
  const double dy = s(1);
  const double f_lag = s(2);
  const double sy = std::sin(y);
  const double cy = std::cos(y);
  const double accel = (kGravity * sy + cy * ((-f_lag - 0.25 * dy * dy * sy) / 1.5)) / (2.0 / 3.0 - cy * cy / 6.0);
  return {dy, accel, -100.0 * f_lag + 100.0 * commanded_force};
}

void LoopConfig::validate() const {
  if (!std::isfinite(g1) || !std::isfinite(g2) || !std::isfinite(gy))
    throw std::invalid_argument("loop gains must be finite");
  if (!(step > 0)) throw std::invalid_argument("step must be positive");
  if (!(step < kMaxStableStep)) {
    std::ostringstream msg;
    msg << "step " << step << " s exceeds the RK4 stability bound " << kMaxStableStep << " s of the actuator lag";
    throw std::invalid_argument(msg.str());
  }
  if (!(duration >= step)) throw std::invalid_argument("duration must be at least one step");
  if (!std::isfinite(initial_angle) || !std::isfinite(initial_velocity) || !std::isfinite(setpoint))
    throw std::invalid_argument("initial state and setpoint must be finite");
}

long LoopConfig::steps() const {
  return static_cast<long>(std::floor(duration / step * (1.0 + 1e-12)));
}

ControlAction controller_step(const FuzzySystem& controller, const LoopConfig& cfg, double error, double error_rate) {
  ControlAction a;
  a.x1 = std::clamp(cfg.g1 * error, -1.0, 1.0);
  a.x2 = std::clamp(cfg.g2 * error_rate, -1.0, 1.0);
  const Inference out = controller(a.x1, a.x2);
  a.u = out.value;
  a.degenerate = out.degenerate;
  a.force = cfg.gy * out.value;
  return a;
}

SimTrace simulate(const FuzzySystem& controller, const LoopConfig& cfg) {
  cfg.validate();
  const long n = cfg.steps();

  SimTrace trace;
  const auto reserve = static_cast<std::size_t>(n + 1);
  trace.times.reserve(reserve);
  trace.angles.reserve(reserve);
  trace.angular_velocities.reserve(reserve);
  trace.forces.reserve(reserve);
  trace.controller_inputs.reserve(reserve);
  trace.controller_outputs.reserve(reserve);
  trace.degenerate_flags.reserve(reserve);

  State x(cfg.initial_angle, cfg.initial_velocity, 0.0);
  for (long k = 0; k <= n; ++k) {
    const ControlAction a = controller_step(controller, cfg, cfg.setpoint - x(0), -x(1));
    trace.times.push_back(static_cast<double>(k) * cfg.step);
    trace.angles.push_back(x(0));
    trace.angular_velocities.push_back(x(1));
    trace.forces.push_back(a.force);
    trace.controller_inputs.emplace_back(a.x1, a.x2);
    trace.controller_outputs.push_back(a.u);
    trace.degenerate_flags.push_back(a.degenerate);
    if (k == n) break;

    x = rk4_step([&](const State& s) { return plant_derivatives(s, a.force); }, x, cfg.step);
    if (!x.allFinite() || x.cwiseAbs().maxCoeff() > kBlowupThreshold) {
      std::ostringstream msg;
      msg << "numerical blowup at t = " << static_cast<double>(k + 1) * cfg.step << " s: state ("
          << x(0) << ", " << x(1) << ", " << x(2) << ")";
      trace.failure = msg.str();
      break;
    }
  }
  return trace;
}

TraceSummary summarize(const SimTrace& trace, double setpoint, double tolerance) {
  TraceSummary s;
  if (trace.size() == 0) return s;
  s.final_angle = trace.angles.back();
  for (std::size_t i = 0; i < trace.size(); ++i) {
    s.max_abs_angle = std::max(s.max_abs_angle, std::abs(trace.angles[i]));
    if (trace.degenerate_flags[i]) ++s.degenerate_steps;
  }
  if (trace.failure) return s;

  std::size_t first_inside = trace.size();
  while (first_inside > 0 && std::abs(trace.angles[first_inside - 1] - setpoint) < tolerance) --first_inside;
  if (first_inside < trace.size()) s.settle_time = trace.times[first_inside];
  return s;
}

void write_csv(std::ostream& out, const SimTrace& trace) {
  const auto old_precision = out.precision(17);
  out << "t,angle,angular_velocity,force,x1,x2,u,degenerate\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out << trace.times[i] << ',' << trace.angles[i] << ',' << trace.angular_velocities[i] << ',' << trace.forces[i]
        << ',' << trace.controller_inputs[i](0) << ',' << trace.controller_inputs[i](1) << ','
        << trace.controller_outputs[i] << ',' << (trace.degenerate_flags[i] ? 1 : 0) << '\n';
  }
  out.precision(old_precision);
}

}  // namespace it2fls::pendulum
