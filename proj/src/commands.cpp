#include "it2fls/commands.hpp"

#include "it2fls/json_io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace it2fls {

using nlohmann::json;

SurfaceStats cmd_surface(const SurfaceSpec& spec, const RuleBase& rb, std::ostream& out) {
  if (spec.grid < 2) throw std::invalid_argument("surface grid needs at least 2 points per axis");
  if (!(spec.lo < spec.hi)) throw std::invalid_argument("surface range is empty");
  if (spec.engines.empty()) throw std::invalid_argument("no engine modes given");

  std::vector<FuzzySystem> systems;
  systems.reserve(spec.engines.size());
  for (const auto& mode : spec.engines) systems.emplace_back(rb, mode, spec.ref);

  const Eigen::ArrayXd axis = Eigen::ArrayXd::LinSpaced(spec.grid, spec.lo, spec.hi);
  const auto old_precision = out.precision(17);
  out << "x1,x2";
  for (const auto& mode : spec.engines) out << ',' << mode.name();
  out << '\n';

  SurfaceStats stats;
  for (double x1 : axis) {
    for (double x2 : axis) {
      out << x1 << ',' << x2;
      bool degenerate = false;
      for (const auto& system : systems) {
        const Inference r = system(x1, x2);
        degenerate = degenerate || r.degenerate;
        out << ',' << r.value;
      }
      out << '\n';
      ++stats.rows;
      if (degenerate) ++stats.degenerate_points;
    }
  }
  out.precision(old_precision);
  return stats;
}

PendulumRun cmd_pendulum(const RuleBase& rb, const EngineMode& mode, const pendulum::LoopConfig& cfg,
                         const RefConfig& ref) {
  cfg.validate();
  const FuzzySystem controller(rb, mode, ref);
  PendulumRun run;
  run.trace = pendulum::simulate(controller, cfg);
  run.summary = pendulum::summarize(run.trace, cfg.setpoint);
  return run;
}

json summary_json(const PendulumRun& run) {
  json j = {
      {"settle_time_s", run.summary.settle_time ? json(*run.summary.settle_time) : json(nullptr)},
      {"max_abs_angle_rad", run.summary.max_abs_angle},
      {"final_angle_rad", run.summary.final_angle},
      {"degenerate_steps", run.summary.degenerate_steps},
      {"samples", run.trace.size()},
  };
  if (run.trace.failure) j["failure"] = *run.trace.failure;
  return j;
}

json cmd_fit(const IT2Gaussian<double>& m, const FitOptions& options) {
  const FitResult fit = fit_bounds(m, options);
  const FitWindow window = options.window.value_or(default_fit_window(m));
  return {
      {"umf", to_json(fit.umf)},
      {"lmf", to_json(fit.lmf)},
      {"sse", {{"umf", fit.umf_sse}, {"lmf", fit.lmf_sse}}},
      {"window", {window.lo, window.hi}},
      {"samples", options.samples},
  };
}

std::vector<Eigen::Vector2d> probe_sequence(long count, std::uint32_t seed) {
  std::minstd_rand gen(seed);
  const auto next = [&] { return -1.0 + 2.0 * static_cast<double>(gen() - 1) / 2147483645.0; };
  std::vector<Eigen::Vector2d> probes;
  probes.reserve(static_cast<std::size_t>(std::max(count, 0L)));
  for (long i = 0; i < count; ++i) {
    const double x1 = next();
    const double x2 = next();
    probes.emplace_back(x1, x2);
  }
  return probes;
}

namespace {

EngineTiming time_engine(const FuzzySystem& system, const std::vector<Eigen::Vector2d>& probes,
                         const BenchOptions& opt) {
  using clock = std::chrono::steady_clock;
  volatile double sink = 0;
  const auto n = static_cast<long>(probes.size());
  long cursor = 0;
  const auto next = [&]() -> const Eigen::Vector2d& {
    const auto& p = probes[static_cast<std::size_t>(cursor)];
    cursor = (cursor + 1) % n;
    return p;
  };

  for (long i = 0; i < opt.warmup; ++i) sink = sink + system(next()).value;

  const long batch = std::max(1L, opt.batch);
  const long target = std::max(n, opt.min_inferences);
  std::vector<double> per_inference;
  long measured = 0;
  cursor = 0;
  while (measured < target) {
    const long this_batch = std::min(batch, target - measured);
    const auto t0 = clock::now();
    for (long i = 0; i < this_batch; ++i) sink = sink + system(next()).value;
    const auto t1 = clock::now();
    per_inference.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count() /
                            static_cast<double>(this_batch));
    measured += this_batch;
  }

  EngineTiming t;
  t.engine = system.mode().name();
  t.inferences = measured;
  const double count = static_cast<double>(per_inference.size());
  t.mean_ns = std::accumulate(per_inference.begin(), per_inference.end(), 0.0) / count;
  double ss = 0;
  for (double v : per_inference) ss += (v - t.mean_ns) * (v - t.mean_ns);
  t.std_ns = per_inference.size() > 1 ? std::sqrt(ss / (count - 1)) : 0.0;
  std::vector<double> sorted = per_inference;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  t.median_ns = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  return t;
}

}  // namespace

BenchReport cmd_bench(const RuleBase& rb, const BenchOptions& options) {
  if (options.probes <= 0) throw std::invalid_argument("no probes");
  if (options.engines.empty()) throw std::invalid_argument("no engine modes given");

  BenchReport report;
  report.probes = options.probes;
  report.seed = options.seed;
  const auto probes = probe_sequence(options.probes, options.seed);
  for (const auto& mode : options.engines) {
    const FuzzySystem system(rb, mode, options.ref);
    report.engines.push_back(time_engine(system, probes, options));
  }

  for (std::size_t i = 0; i < options.engines.size(); ++i) {
    const auto ref = matching_reference(options.engines[i]);
    if (!ref) continue;
    for (std::size_t j = 0; j < options.engines.size(); ++j) {
      if (options.engines[j] == *ref) {
        report.speedups.push_back(
            {report.engines[i].engine, report.engines[j].engine, report.engines[j].mean_ns / report.engines[i].mean_ns});
        break;
      }
    }
  }
  return report;
}

json BenchReport::to_json() const {
  json j;
  j["probes"] = probes;
  j["seed"] = seed;
  j["generator"] = "minstd_rand";
  j["deterministic"] = false;
  json list = json::array();
  for (const auto& e : engines)
    list.push_back({{"engine", e.engine},
                    {"mean_ns", e.mean_ns},
                    {"median_ns", e.median_ns},
                    {"std_ns", e.std_ns},
                    {"inferences", e.inferences}});
  j["engines"] = list;
  if (!speedups.empty()) {
    json s = json::array();
    for (const auto& sp : speedups) s.push_back({{"closed", sp.closed}, {"reference", sp.reference}, {"factor", sp.factor}});
    j["speedup"] = s;
  }
  return j;
}

}  // namespace it2fls
