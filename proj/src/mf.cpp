#include "it2fls/mf.hpp"

#include <cmath>
#include <sstream>

namespace it2fls {

namespace {

struct FootprintExtent {
  double half_spread;  // distance from center to the outermost mean
  double sigma_min;
  double sigma_max;
};

FootprintExtent extent(const IT2Gaussian<double>& m) {
  if (const auto* um = std::get_if<UncertainMean<double>>(&m.kind))
    return {0.5 * (um->mean_hi - um->mean_lo), um->sigma, um->sigma};
  const auto& us = std::get<UncertainSigma<double>>(m.kind);
  return {0.0, us.sigma_lo, us.sigma_hi};
}

Eigen::ArrayXd exact_bound(const IT2Gaussian<double>& m, const Eigen::ArrayXd& xs, bool upper) {
  return xs.unaryExpr([&](double x) { return upper ? exact_umf(m, x) : exact_lmf(m, x); });
}

template <typename F>
double golden_section(F&& f, double a, double b, const FitOptions& opt, const char* what) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < opt.max_iterations; ++it) {
    if (b - a < opt.tolerance) return 0.5 * (a + b);
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  std::ostringstream msg;
  msg << what << ": golden-section search did not reach tolerance " << opt.tolerance << " within "
      << opt.max_iterations << " iterations";
  throw NonConvergence(msg.str());
}

// Optimal amplitude for a fixed shape, restricted to (0, 1].
double best_scale(const Eigen::ArrayXd& shape, const Eigen::ArrayXd& target) {
  const double hh = shape.square().sum();
  if (hh <= 0.0) return 1.0;
  return std::clamp((shape * target).sum() / hh, 1e-12, 1.0);
}

}  // namespace

FitWindow default_fit_window(const IT2Gaussian<double>& m) {
  const auto e = extent(m);
  const double c = center(m);
  const double half = 3.0 * (e.sigma_max + e.half_spread);
  return {c - half, c + half};
}

double fit_sse(const IT2Gaussian<double>& m, const ScaledGaussian<double>& g, bool upper, const FitWindow& window,
               int samples) {
  const Eigen::ArrayXd xs = Eigen::ArrayXd::LinSpaced(samples, window.lo, window.hi);
  return (eval(g, xs) - exact_bound(m, xs, upper)).square().sum();
}

FitResult fit_bounds(const IT2Gaussian<double>& m, const FitOptions& options) {
  if (!is_valid(m)) throw std::invalid_argument("fit_bounds: invalid membership function");
  if (options.samples < 101) throw std::invalid_argument("fit_bounds: at least 101 samples required");

  const FitWindow window = options.window.value_or(default_fit_window(m));
  const double c = center(m);
  double lo_mean = c;
  double hi_mean = c;
  if (const auto* um = std::get_if<UncertainMean<double>>(&m.kind)) {
    lo_mean = um->mean_lo;
    hi_mean = um->mean_hi;
  }
  if (!(window.lo < window.hi) || window.lo > lo_mean || window.hi < hi_mean)
    throw std::invalid_argument("fit_bounds: window must be nonempty and contain the footprint means");

  const Eigen::ArrayXd xs = Eigen::ArrayXd::LinSpaced(options.samples, window.lo, window.hi);
  const Eigen::ArrayXd umf_target = exact_bound(m, xs, true);
  const Eigen::ArrayXd lmf_target = exact_bound(m, xs, false);

  FitResult result;
  const auto e = extent(m);
  if (is_degenerate(m)) {
    // The footprint is a type-1 Gaussian; both bounds are that Gaussian.
    result.umf = {c, e.sigma_max, 1.0};
    result.lmf = result.umf;
  } else {
    const double bracket_lo = 0.25 * e.sigma_min;
    const double bracket_hi = 4.0 * (e.sigma_max + e.half_spread);

    const auto umf_sse = [&](double sigma) {
      return (eval(ScaledGaussian<double>{c, sigma, 1.0}, xs) - umf_target).square().sum();
    };
    result.umf = {c, golden_section(umf_sse, bracket_lo, bracket_hi, options, "UMF fit"), 1.0};

    // Scale is eliminated in closed form, leaving a 1-D search over sigma.
    const auto lmf_sse = [&](double sigma) {
      const Eigen::ArrayXd shape = eval(ScaledGaussian<double>{c, sigma, 1.0}, xs);
      return (best_scale(shape, lmf_target) * shape - lmf_target).square().sum();
    };
    const double lmf_sigma = golden_section(lmf_sse, bracket_lo, bracket_hi, options, "LMF fit");
    const Eigen::ArrayXd shape = eval(ScaledGaussian<double>{c, lmf_sigma, 1.0}, xs);
    result.lmf = {c, lmf_sigma, best_scale(shape, lmf_target)};
  }

  result.umf_sse = (eval(result.umf, xs) - umf_target).square().sum();
  result.lmf_sse = (eval(result.lmf, xs) - lmf_target).square().sum();

  check_fit_dominance(result.umf, result.lmf, window, options.samples);
  return result;
}

void check_fit_dominance(const ScaledGaussian<double>& umf, const ScaledGaussian<double>& lmf, const FitWindow& window,
                         int samples) {
  const Eigen::ArrayXd xs = Eigen::ArrayXd::LinSpaced(samples, window.lo, window.hi);
  const Eigen::ArrayXd excess = eval(lmf, xs) - eval(umf, xs);
  Eigen::Index worst = 0;
  if (excess.maxCoeff(&worst) > 1e-12) {
    std::ostringstream msg;
    msg << "fitted LMF exceeds fitted UMF at x = " << xs(worst) << " by " << excess(worst);
    throw FitDominanceViolated(msg.str());
  }
}

IT2Gaussian<double> with_fitted_bounds(IT2Gaussian<double> m, const FitOptions& options) {
  const FitResult fit = fit_bounds(m, options);
  m.fitted_umf = fit.umf;
  m.fitted_lmf = fit.lmf;
  return m;
}

}  // namespace it2fls
