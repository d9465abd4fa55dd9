#ifndef IT2FLS_TESTS_ORACLES_GRID_SEARCH_FIT_HPP
#define IT2FLS_TESTS_ORACLES_GRID_SEARCH_FIT_HPP

// Brute-force least-squares fit of the upper/lower bounds of an
// uncertain-mean Gaussian, written without the library. A coarse grid
// (sigma over [0.05, 2], scale over [0.5, 1], both step 1e-4) locates the
// optimum; a local grid with step 1e-7 refines it so the result can be
// compared at 1e-6.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace oracle {

struct GridFit {
  double umf_sigma = 0;
  double lmf_sigma = 0;
  double lmf_scale = 0;
};

namespace detail {

inline double bump(double x, double m, double s) { return std::exp(-0.5 * ((x - m) / s) * ((x - m) / s)); }

struct Moments {
  double umf_sse;  // SSE of the unit Gaussian against the upper bound
  double hh, hl;   // sum h^2, sum h*lmf
};

inline Moments moments(const std::vector<double>& xs, const std::vector<double>& up, const std::vector<double>& low,
                       double center, double sigma) {
  Moments m{0, 0, 0};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double h = bump(xs[i], center, sigma);
    m.umf_sse += (h - up[i]) * (h - up[i]);
    m.hh += h * h;
    m.hl += h * low[i];
  }
  return m;
}

// Best scale on the grid [lo, hi] with the given step; SSE up to the constant sum lmf^2.
inline std::pair<double, double> best_scale_on_grid(const Moments& m, double lo, double hi, double step) {
  double best = lo;
  double best_val = std::numeric_limits<double>::infinity();
  const long n = std::lround((hi - lo) / step);
  for (long i = 0; i <= n; ++i) {
    const double a = lo + static_cast<double>(i) * step;
    const double v = a * a * m.hh - 2.0 * a * m.hl;
    if (v < best_val) {
      best_val = v;
      best = a;
    }
  }
  return {best, best_val};
}

}  // namespace detail

inline GridFit grid_search_fit(double mean_lo, double mean_hi, double sigma, double window_lo, double window_hi,
                               int samples) {
  using namespace detail;
  const double center = 0.5 * (mean_lo + mean_hi);
  std::vector<double> xs(static_cast<std::size_t>(samples));
  std::vector<double> up(xs.size());
  std::vector<double> low(xs.size());
  for (int i = 0; i < samples; ++i) {
    const double x = window_lo + (window_hi - window_lo) * i / (samples - 1);
    xs[static_cast<std::size_t>(i)] = x;
    up[static_cast<std::size_t>(i)] = x < mean_lo ? bump(x, mean_lo, sigma) : x > mean_hi ? bump(x, mean_hi, sigma) : 1.0;
    low[static_cast<std::size_t>(i)] = std::min(bump(x, mean_lo, sigma), bump(x, mean_hi, sigma));
  }

  GridFit fit;
  const auto search = [&](double s_lo, double s_hi, double s_step, double a_lo, double a_hi, double a_step) {
    double best_u = std::numeric_limits<double>::infinity();
    double best_l = std::numeric_limits<double>::infinity();
    const long n = std::lround((s_hi - s_lo) / s_step);
    for (long i = 0; i <= n; ++i) {
      const double s = s_lo + static_cast<double>(i) * s_step;
      if (s <= 0) continue;
      const Moments m = moments(xs, up, low, center, s);
      if (m.umf_sse < best_u) {
        best_u = m.umf_sse;
        fit.umf_sigma = s;
      }
      const auto [a, v] = best_scale_on_grid(m, a_lo, a_hi, a_step);
      if (v < best_l) {
        best_l = v;
        fit.lmf_sigma = s;
        fit.lmf_scale = a;
      }
    }
  };

  search(0.05, 2.0, 1e-4, 0.5, 1.0, 1e-4);
  const GridFit coarse = fit;

  // Refine each optimum separately around its coarse location.
  search(coarse.umf_sigma - 2e-4, coarse.umf_sigma + 2e-4, 1e-7, 0.5, 1.0, 1e-4);
  const double umf_sigma = fit.umf_sigma;
  search(coarse.lmf_sigma - 2e-4, coarse.lmf_sigma + 2e-4, 1e-7, coarse.lmf_scale - 2e-4,
         std::min(1.0, coarse.lmf_scale + 2e-4), 1e-7);
  fit.umf_sigma = umf_sigma;
  return fit;
}

}  // namespace oracle

#endif  // IT2FLS_TESTS_ORACLES_GRID_SEARCH_FIT_HPP
