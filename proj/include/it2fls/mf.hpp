#ifndef IT2FLS_MF_HPP
#define IT2FLS_MF_HPP

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>

namespace it2fls {

/// Amplitude-scaled Gaussian: scale * exp(-((x - mean) / sigma)^2 / 2).
template <typename Scalar = double>
struct ScaledGaussian {
  Scalar mean{0};
  Scalar sigma{1};
  Scalar scale{1};

  bool operator==(const ScaledGaussian&) const = default;
};

/// Gaussian whose center ranges over [mean_lo, mean_hi] with a fixed width.
template <typename Scalar = double>
struct UncertainMean {
  Scalar mean_lo{0};
  Scalar mean_hi{0};
  Scalar sigma{1};

  bool operator==(const UncertainMean&) const = default;
};

/// Gaussian with a fixed center and a width ranging over [sigma_lo, sigma_hi].
template <typename Scalar = double>
struct UncertainSigma {
  Scalar mean{0};
  Scalar sigma_lo{1};
  Scalar sigma_hi{1};

  bool operator==(const UncertainSigma&) const = default;
};

/// Interval type-2 Gaussian membership function. The footprint is given by
/// `kind`; the optional fitted bounds are single Gaussians standing in for
/// the exact upper and lower membership functions.
template <typename Scalar = double>
struct IT2Gaussian {
  std::variant<UncertainMean<Scalar>, UncertainSigma<Scalar>> kind;
  std::optional<ScaledGaussian<Scalar>> fitted_umf;
  std::optional<ScaledGaussian<Scalar>> fitted_lmf;

  bool operator==(const IT2Gaussian&) const = default;
};

template <typename Scalar>
bool is_valid(const ScaledGaussian<Scalar>& g) {
  using std::isfinite;
  return isfinite(g.mean) && isfinite(g.sigma) && g.sigma > Scalar(0) && g.scale > Scalar(0) &&
         g.scale <= Scalar(1);
}

template <typename Scalar>
bool is_valid(const IT2Gaussian<Scalar>& m) {
  using std::isfinite;
  const bool fou_ok = std::visit(
      [](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, UncertainMean<Scalar>>) {
          return isfinite(k.mean_lo) && isfinite(k.mean_hi) && isfinite(k.sigma) && k.mean_lo <= k.mean_hi &&
                 k.sigma > Scalar(0);
        } else {
          return isfinite(k.mean) && isfinite(k.sigma_hi) && k.sigma_lo > Scalar(0) && k.sigma_lo <= k.sigma_hi;
        }
      },
      m.kind);
  if (!fou_ok) return false;
  if (m.fitted_umf && !is_valid(*m.fitted_umf)) return false;
  if (m.fitted_lmf && !is_valid(*m.fitted_lmf)) return false;
  return true;
}

inline IT2Gaussian<double> make_uncertain_mean(double mean_lo, double mean_hi, double sigma) {
  IT2Gaussian<double> m{UncertainMean<double>{mean_lo, mean_hi, sigma}, std::nullopt, std::nullopt};
  if (!is_valid(m)) throw std::invalid_argument("uncertain-mean Gaussian requires mean_lo <= mean_hi and sigma > 0");
  return m;
}

inline IT2Gaussian<double> make_uncertain_sigma(double mean, double sigma_lo, double sigma_hi) {
  IT2Gaussian<double> m{UncertainSigma<double>{mean, sigma_lo, sigma_hi}, std::nullopt, std::nullopt};
  if (!is_valid(m)) throw std::invalid_argument("uncertain-sigma Gaussian requires 0 < sigma_lo <= sigma_hi");
  return m;
}

template <typename Scalar>
Scalar eval(const ScaledGaussian<Scalar>& g, Scalar x) {
  using std::exp;
  const Scalar z = (x - g.mean) / g.sigma;
  return g.scale * exp(Scalar(-0.5) * z * z);
}

/// Coefficient-wise evaluation over an Eigen array expression.
template <typename Scalar, typename Derived>
auto eval(const ScaledGaussian<Scalar>& g, const Eigen::ArrayBase<Derived>& x) {
  return g.scale * (Scalar(-0.5) * ((x.derived() - g.mean) / g.sigma).square()).exp();
}

template <typename Scalar>
Scalar center(const IT2Gaussian<Scalar>& m) {
  if (const auto* um = std::get_if<UncertainMean<Scalar>>(&m.kind)) return Scalar(0.5) * (um->mean_lo + um->mean_hi);
  return std::get<UncertainSigma<Scalar>>(m.kind).mean;
}

/// True when the footprint has zero width, i.e. the exact UMF and LMF coincide.
template <typename Scalar>
bool is_degenerate(const IT2Gaussian<Scalar>& m) {
  if (const auto* um = std::get_if<UncertainMean<Scalar>>(&m.kind)) return um->mean_lo == um->mean_hi;
  const auto& us = std::get<UncertainSigma<Scalar>>(m.kind);
  return us.sigma_lo == us.sigma_hi;
}

/// Exact upper bound: unit plateau between the two means for an uncertain
/// mean, the wider Gaussian for an uncertain sigma.
template <typename Scalar>
Scalar exact_umf(const IT2Gaussian<Scalar>& m, Scalar x) {
  if (const auto* um = std::get_if<UncertainMean<Scalar>>(&m.kind)) {
    if (x < um->mean_lo) return eval(ScaledGaussian<Scalar>{um->mean_lo, um->sigma, Scalar(1)}, x);
    if (x > um->mean_hi) return eval(ScaledGaussian<Scalar>{um->mean_hi, um->sigma, Scalar(1)}, x);
    return Scalar(1);
  }
  const auto& us = std::get<UncertainSigma<Scalar>>(m.kind);
  return eval(ScaledGaussian<Scalar>{us.mean, us.sigma_hi, Scalar(1)}, x);
}

/// Exact lower bound: the smaller of the two extreme Gaussians.
template <typename Scalar>
Scalar exact_lmf(const IT2Gaussian<Scalar>& m, Scalar x) {
  if (const auto* um = std::get_if<UncertainMean<Scalar>>(&m.kind)) {
    using std::min;
    return min(eval(ScaledGaussian<Scalar>{um->mean_lo, um->sigma, Scalar(1)}, x),
               eval(ScaledGaussian<Scalar>{um->mean_hi, um->sigma, Scalar(1)}, x));
  }
  const auto& us = std::get<UncertainSigma<Scalar>>(m.kind);
  return eval(ScaledGaussian<Scalar>{us.mean, us.sigma_lo, Scalar(1)}, x);
}

enum class BoundSource { Exact, Fitted };

/// Upper/lower grade at x from either the exact footprint or the fitted
/// Gaussians. Throws std::logic_error if fitted bounds were requested but
/// are not attached.
template <typename Scalar>
Scalar upper_grade(const IT2Gaussian<Scalar>& m, Scalar x, BoundSource source) {
  if (source == BoundSource::Exact) return exact_umf(m, x);
  if (!m.fitted_umf) throw std::logic_error("fitted UMF requested but not attached");
  return eval(*m.fitted_umf, x);
}

template <typename Scalar>
Scalar lower_grade(const IT2Gaussian<Scalar>& m, Scalar x, BoundSource source) {
  if (source == BoundSource::Exact) return exact_lmf(m, x);
  if (!m.fitted_lmf) throw std::logic_error("fitted LMF requested but not attached");
  return eval(*m.fitted_lmf, x);
}

// Fitting

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The fitted LMF rose above the fitted UMF somewhere on the sample grid.
class FitDominanceViolated : public FitError {
 public:
  using FitError::FitError;
};

class NonConvergence : public FitError {
 public:
  using FitError::FitError;
};

struct FitWindow {
  double lo;
  double hi;
};

struct FitOptions {
  /// Defaults to center +/- 3 (sigma + half-width of the footprint).
  std::optional<FitWindow> window;
  int samples = 1001;
  int max_iterations = 200;
  double tolerance = 1e-10;
};

struct FitResult {
  ScaledGaussian<double> umf;
  ScaledGaussian<double> lmf;
  double umf_sse = 0;
  double lmf_sse = 0;
};

FitWindow default_fit_window(const IT2Gaussian<double>& m);

/// Least-squares Gaussian fits of the exact UMF (unit scale, free sigma) and
/// LMF (free sigma and scale), both centered on the footprint. Throws
/// FitDominanceViolated or NonConvergence.
FitResult fit_bounds(const IT2Gaussian<double>& m, const FitOptions& options = {});

/// Sum of squared residuals of `g` against the exact bound over the sample grid.
double fit_sse(const IT2Gaussian<double>& m, const ScaledGaussian<double>& g, bool upper, const FitWindow& window,
               int samples);

/// Throws FitDominanceViolated if `lmf` rises above `umf` anywhere on the
/// uniform sample grid over `window`.
void check_fit_dominance(const ScaledGaussian<double>& umf, const ScaledGaussian<double>& lmf, const FitWindow& window,
                         int samples);

/// Copy of `m` with fitted bounds attached.
IT2Gaussian<double> with_fitted_bounds(IT2Gaussian<double> m, const FitOptions& options = {});

}  // namespace it2fls

#endif  // IT2FLS_MF_HPP
