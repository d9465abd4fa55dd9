// it2fls: command-line front end for the closed-form interval type-2 fuzzy engines.
//
//   it2fls surface  --grid N --engine E[,E...] [--rules FILE] [--out FILE]
//   it2fls pendulum --engine E [--angle0 RAD] [--step S] [--duration T] [--out PREFIX]
//   it2fls fit      --dmu X --sigma Y [--mean M] [--window LO HI] [--samples N]
//   it2fls bench    --probes N --engine E[,E...]
//   it2fls rules    [--rules FILE] --out FILE
//
// Exit codes: 0 success, 2 validation error, 3 runtime numeric failure.
// Relative output paths are resolved against $IT2FLS_OUTPUT_DIR when set.

#include "it2fls/commands.hpp"
#include "it2fls/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace it2fls;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

fs::path output_path(const std::string& given) {
  fs::path p(given);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("IT2FLS_OUTPUT_DIR"); dir && *dir) p = fs::path(dir) / p;
  }
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  return p;
}

std::ofstream open_output(const fs::path& p) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  return out;
}

RuleBase rules_or_preset(const std::string& file) {
  RuleBase rb = file.empty() ? three_set_rulebase() : load_rulebase(file);
  require_valid(rb);
  return rb;
}

void add_reference_options(CLI::App* cmd, RefConfig& ref) {
  cmd->add_option("--ref-points", ref.grid_points, "Output grid points for the reference engines")
      ->check(CLI::Range(101, 100000000));
  cmd->add_option("--ref-width", ref.consequent_width, "Width of the narrow Gaussian consequents")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--ref-domain", [&ref](const CLI::results_t& r) {
        ref.y_min = std::stod(r.at(0));
        ref.y_max = std::stod(r.at(1));
        return true;
      }, "Output domain of the reference engines")
      ->expected(2);
  cmd->add_option_function<std::string>("--join", [&ref](const std::string& s) {
        if (s == "sum") ref.join = Join::Sum;
        else if (s == "sum-clipped") ref.join = Join::SumClipped;
        else if (s == "max") ref.join = Join::Max;
        else throw CLI::ValidationError("--join", "expected sum, sum-clipped or max");
      }, "Join for the reference engines: sum, sum-clipped, max");
  cmd->add_option_function<std::string>("--t-norm", [&ref](const std::string& s) {
        if (s == "product") ref.t_norm = TNorm::Product;
        else if (s == "min") ref.t_norm = TNorm::Min;
        else throw CLI::ValidationError("--t-norm", "expected product or min");
      }, "t-norm for the reference engines: product, min");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form interval type-2 fuzzy inference workbench"};
  app.require_subcommand(1);

  // surface
  std::string rules_file;
  std::string engines_arg = "gc-closed-fitted";
  std::string out_file;
  SurfaceSpec surface;
  auto* surface_cmd = app.add_subcommand("surface", "Evaluate control surfaces on a grid over [-1, 1]^2");
  surface_cmd->add_option("--grid", surface.grid, "Points per axis")->check(CLI::Range(2, 100000));
  surface_cmd->add_option("--engine", engines_arg, "Comma-separated engine modes");
  surface_cmd->add_option("--rules", rules_file, "Rule-base JSON (default: built-in three-set system)");
  surface_cmd->add_option("--out", out_file, "Output CSV (default: stdout)");
  add_reference_options(surface_cmd, surface.ref);

  // pendulum
  pendulum::LoopConfig loop;
  std::string engine_arg = "gc-closed-fitted";
  std::string prefix = "pendulum";
  RefConfig pendulum_ref;
  auto* pendulum_cmd = app.add_subcommand("pendulum", "Closed-loop inverted pendulum simulation");
  pendulum_cmd->add_option("--engine", engine_arg, "Engine mode");
  pendulum_cmd->add_option("--angle0", loop.initial_angle, "Initial angle (rad)");
  pendulum_cmd->add_option("--velocity0", loop.initial_velocity, "Initial angular velocity (rad/s)");
  pendulum_cmd->add_option("--step", loop.step, "Integration step (s)");
  pendulum_cmd->add_option("--duration", loop.duration, "Simulated time (s)");
  pendulum_cmd->add_option("--g1", loop.g1, "Error gain");
  pendulum_cmd->add_option("--g2", loop.g2, "Error-rate gain");
  pendulum_cmd->add_option("--gy", loop.gy, "Output gain");
  pendulum_cmd->add_option("--rules", rules_file, "Rule-base JSON (default: built-in three-set system)");
  pendulum_cmd->add_option("--out", prefix, "Output prefix: writes PREFIX.csv and PREFIX.summary.json");
  add_reference_options(pendulum_cmd, pendulum_ref);

  // fit
  double dmu = 0;
  double sigma = 0;
  double mean = 0;
  std::vector<double> window;
  FitOptions fit_options;
  auto* fit_cmd = app.add_subcommand("fit", "Fit Gaussian UMF/LMF approximations to an uncertain-mean Gaussian");
  fit_cmd->add_option("--dmu", dmu, "Half-width of the mean interval")->required()->check(CLI::NonNegativeNumber);
  fit_cmd->add_option("--sigma", sigma, "Standard deviation")->required()->check(CLI::PositiveNumber);
  fit_cmd->add_option("--mean", mean, "Center of the mean interval");
  fit_cmd->add_option("--window", window, "Fitting window LO HI")->expected(2);
  fit_cmd->add_option("--samples", fit_options.samples, "Uniform samples over the window");

  // bench
  BenchOptions bench;
  std::string bench_engines = "gc-closed-fitted,gc-ref-fitted,nt-closed-fitted,nt-ref-fitted";
  auto* bench_cmd = app.add_subcommand("bench", "Time closed-form against reference inference");
  bench_cmd->add_option("--probes", bench.probes, "Number of distinct probe inputs");
  bench_cmd->add_option("--engine", bench_engines, "Comma-separated engine modes");
  bench_cmd->add_option("--seed", bench.seed, "Probe generator seed");
  bench_cmd->add_option("--rules", rules_file, "Rule-base JSON (default: built-in three-set system)");
  add_reference_options(bench_cmd, bench.ref);

  // rules
  bool refit = false;
  auto* rules_cmd = app.add_subcommand("rules", "Write a rule base (default: built-in system) as JSON");
  rules_cmd->add_option("--rules", rules_file, "Rule-base JSON to normalize");
  rules_cmd->add_flag("--refit", refit, "Built-in system with freshly fitted bounds");
  rules_cmd->add_option("--out", out_file, "Output JSON (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*surface_cmd) {
      surface.engines = parse_engine_list(engines_arg);
      const RuleBase rb = rules_or_preset(rules_file);
      SurfaceStats stats;
      if (out_file.empty()) {
        stats = cmd_surface(surface, rb, std::cout);
      } else {
        auto out = open_output(output_path(out_file));
        stats = cmd_surface(surface, rb, out);
      }
      std::cerr << stats.rows << " rows, " << stats.degenerate_points << " degenerate points\n";
      return 0;
    }

    if (*pendulum_cmd) {
      const EngineMode mode = parse_engine_mode(engine_arg);
      const RuleBase rb = rules_or_preset(rules_file);
      const PendulumRun run = cmd_pendulum(rb, mode, loop, pendulum_ref);
      {
        auto csv = open_output(output_path(prefix + ".csv"));
        pendulum::write_csv(csv, run.trace);
      }
      const auto summary = summary_json(run);
      {
        auto js = open_output(output_path(prefix + ".summary.json"));
        js << summary.dump(2) << '\n';
      }
      std::cout << summary.dump(2) << '\n';
      if (run.trace.failure) {
        std::cerr << "error: " << *run.trace.failure << '\n';
        return kExitNumeric;
      }
      return 0;
    }

    if (*fit_cmd) {
      if (!window.empty()) fit_options.window = FitWindow{window[0], window[1]};
      const auto m = make_uncertain_mean(mean - dmu, mean + dmu, sigma);
      std::cout << cmd_fit(m, fit_options).dump(2) << '\n';
      return 0;
    }

    if (*bench_cmd) {
      bench.engines = parse_engine_list(bench_engines);
      const RuleBase rb = rules_or_preset(rules_file);
      std::cout << cmd_bench(rb, bench).to_json().dump(2) << '\n';
      return 0;
    }

    if (*rules_cmd) {
      const RuleBase rb = rules_file.empty() ? three_set_rulebase(refit ? PresetBounds::Refit : PresetBounds::Published)
                                             : rules_or_preset(rules_file);
      if (out_file.empty()) std::cout << to_json(rb).dump(2) << '\n';
      else save_rulebase(rb, output_path(out_file));
      return 0;
    }
  } catch (const FitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return 0;
}
