#ifndef IT2FLS_ENGINE_HPP
#define IT2FLS_ENGINE_HPP

#include "it2fls/mf.hpp"
#include "it2fls/rulebase.hpp"

#include <Eigen/Core>

namespace it2fls {

/// Per-rule firing degrees, one coefficient per rule in rule-base order.
/// lower(k) <= upper(k) for valid bounds.
struct FiringIntervals {
  Eigen::ArrayXd lower;
  Eigen::ArrayXd upper;
};

enum class Form {
  GcClosed,       ///< geometric-centroid closed form, shared singletons
  GcClosedSplit,  ///< geometric-centroid closed form, distinct upper/lower singletons
  NtClosed,       ///< Nie-Tan closed form
};

struct EngineConfig {
  Form form = Form::GcClosed;
  BoundSource bound_source = BoundSource::Fitted;
  double degenerate_epsilon = 1e-12;
};

/// Crisp output plus a flag set when the denominator vanished and the
/// fallback value was returned instead.
struct Inference {
  double value = 0;
  bool degenerate = false;
};

using InputVector = Eigen::Ref<const Eigen::VectorXd>;

/// Product t-norm over all antecedents: lower = prod LMF_i(x_i), upper = prod UMF_i(x_i).
FiringIntervals fire(const RuleBase& rb, BoundSource source, const InputVector& x);

/// sum b_up*upper - b_lo*lower over sum (upper - lower). Below `epsilon`
/// the denominator is treated as zero and the upper-firing weighted average
/// is returned with the degenerate flag set (0 if nothing fires).
template <typename B1, typename B2, typename U, typename L>
Inference gc_combine(const Eigen::ArrayBase<B1>& b_upper, const Eigen::ArrayBase<B2>& b_lower,
                     const Eigen::ArrayBase<U>& upper, const Eigen::ArrayBase<L>& lower, double epsilon) {
  const double den = (upper - lower).sum();
  if (den < epsilon) {
    const double mass = upper.sum();
    return {mass > 0 ? (b_upper * upper).sum() / mass : 0.0, true};
  }
  return {(b_upper * upper - b_lower * lower).sum() / den, false};
}

/// sum b*(upper + lower) over sum (upper + lower); 0 and flagged when nothing fires.
template <typename B, typename U, typename L>
Inference nt_combine(const Eigen::ArrayBase<B>& b, const Eigen::ArrayBase<U>& upper,
                     const Eigen::ArrayBase<L>& lower, double epsilon) {
  const double den = (upper + lower).sum();
  if (den < epsilon) return {0.0, true};
  return {(b * (upper + lower)).sum() / den, false};
}

Inference infer_gc(const RuleBase& rb, const EngineConfig& cfg, const InputVector& x);

/// Requires a rule base with split consequents; throws std::invalid_argument otherwise.
Inference infer_gc_split(const RuleBase& rb, const EngineConfig& cfg, const InputVector& x);

Inference infer_nt(const RuleBase& rb, const EngineConfig& cfg, const InputVector& x);

/// Dispatches on cfg.form.
Inference infer(const RuleBase& rb, const EngineConfig& cfg, const InputVector& x);

}  // namespace it2fls

#endif  // IT2FLS_ENGINE_HPP
