#ifndef IT2FLS_COMMANDS_HPP
#define IT2FLS_COMMANDS_HPP

// Workflows behind the command-line tool. Each writes its primary output to
// a stream or returns a JSON document; exit-code mapping lives in the tool.

#include "it2fls/mf.hpp"
#include "it2fls/modes.hpp"
#include "it2fls/pendulum.hpp"
#include "it2fls/reference.hpp"
#include "it2fls/rulebase.hpp"

#include <json.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace it2fls {

struct SurfaceSpec {
  int grid = 41;
  double lo = -1;
  double hi = 1;
  std::vector<EngineMode> engines{EngineMode{}};
  RefConfig ref;
};

struct SurfaceStats {
  long rows = 0;
  /// Grid points at which at least one engine returned a flagged fallback.
  long degenerate_points = 0;
};

/// CSV `x1,x2,<engine>...`, rows in row-major order (x1 outer), 17 significant digits.
SurfaceStats cmd_surface(const SurfaceSpec& spec, const RuleBase& rb, std::ostream& out);

struct PendulumRun {
  pendulum::SimTrace trace;
  pendulum::TraceSummary summary;
};

PendulumRun cmd_pendulum(const RuleBase& rb, const EngineMode& mode, const pendulum::LoopConfig& cfg,
                         const RefConfig& ref = {});

/// {settle_time_s, max_abs_angle_rad, final_angle_rad, degenerate_steps, failure?}
nlohmann::json summary_json(const PendulumRun& run);

/// {umf: {mean, sigma, scale}, lmf: {...}, sse: {umf, lmf}, window: [lo, hi], samples}
nlohmann::json cmd_fit(const IT2Gaussian<double>& m, const FitOptions& options = {});

struct BenchOptions {
  long probes = 10000;
  std::vector<EngineMode> engines;
  std::uint32_t seed = 20170101;
  /// Each engine cycles through the probes until at least this many inferences are timed.
  long min_inferences = 10000;
  long batch = 100;
  long warmup = 1000;
  RefConfig ref;
};

struct EngineTiming {
  std::string engine;
  double mean_ns = 0;
  double median_ns = 0;
  double std_ns = 0;
  long inferences = 0;
};

struct Speedup {
  std::string closed;
  std::string reference;
  double factor = 0;  ///< reference mean / closed-form mean
};

struct BenchReport {
  long probes = 0;
  std::uint32_t seed = 0;
  std::vector<EngineTiming> engines;
  std::vector<Speedup> speedups;

  nlohmann::json to_json() const;
};

/// Probe inputs in [-1, 1]^2 from std::minstd_rand (multiplier 48271,
/// modulus 2^31 - 1): each coordinate is -1 + 2 (r - 1) / (2^31 - 3).
std::vector<Eigen::Vector2d> probe_sequence(long count, std::uint32_t seed);

/// Throws std::invalid_argument("no probes") for a non-positive probe count.
BenchReport cmd_bench(const RuleBase& rb, const BenchOptions& options);

}  // namespace it2fls

#endif  // IT2FLS_COMMANDS_HPP
