#ifndef IT2FLS_REFERENCE_HPP
#define IT2FLS_REFERENCE_HPP

// Discretized type-2 inference: each singleton consequent becomes a narrow
// Gaussian on a uniform output grid, the rule outputs are joined into a
// sampled upper/lower pair, and the pair is defuzzified numerically. Used as
// the oracle for the closed forms in engine.hpp.

#include "it2fls/engine.hpp"
#include "it2fls/rulebase.hpp"

#include <Eigen/Core>

#include <stdexcept>

namespace it2fls {

enum class TNorm { Product, Min };

/// Sum is the plain sum of rule outputs; SumClipped clips the joined curve
/// at 1; Max takes the pointwise maximum.
enum class Join { Sum, SumClipped, Max };

struct RefConfig {
  TNorm t_norm = TNorm::Product;
  Join join = Join::Sum;
  int grid_points = 10001;
  double y_min = -1.5;
  double y_max = 1.5;
  double consequent_width = 0.01;
  BoundSource bound_source = BoundSource::Fitted;
  double degenerate_epsilon = 1e-12;
};

class DomainTooNarrow : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The upper/lower band has no area; its centroid is undefined.
class ZeroArea : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ZeroMass : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Membership grades sampled on a uniform grid over [y_min, y_max].
struct SampledCurve {
  double y_min = 0;
  double y_max = 1;
  Eigen::ArrayXd values;

  Eigen::Index size() const { return values.size(); }
  Eigen::ArrayXd grid() const { return Eigen::ArrayXd::LinSpaced(values.size(), y_min, y_max); }
  double spacing() const { return (y_max - y_min) / static_cast<double>(values.size() - 1); }
};

struct OutputFou {
  SampledCurve umf;
  SampledCurve lmf;
};

/// Narrow Gaussians of a common width standing in for singleton consequents.
struct ConsequentSet {
  Eigen::ArrayXd centers;
  double width = 0.01;
};

/// Throws std::invalid_argument for a malformed config and DomainTooNarrow
/// when a center lies within 5 widths of the domain edge.
void check_ref_config(const RefConfig& ref, const Eigen::ArrayXd& centers);

/// Consequent memberships sampled on the grid: one row per rule.
Eigen::ArrayXXd consequent_matrix(const ConsequentSet& set, const Eigen::ArrayXd& grid);

/// Joins (firing_k * G_k(y)) over rules for both bounds, given precomputed
/// consequent matrices for the upper and lower singleton positions.
OutputFou join_rule_outputs(const FiringIntervals& f, const Eigen::ArrayXXd& upper_consequents,
                            const Eigen::ArrayXXd& lower_consequents, const RefConfig& ref);

OutputFou build_output_fou(const RuleBase& rb, const RefConfig& ref, const InputVector& x);

/// Rectangle-rule centroid of the band between umf and lmf. Throws ZeroArea.
double coa_defuzz(const SampledCurve& umf, const SampledCurve& lmf, double epsilon = 1e-12);

/// Centroid of the average of umf and lmf. Throws ZeroMass.
double nt_defuzz(const SampledCurve& umf, const SampledCurve& lmf, double epsilon = 1e-12);

struct Decomposition {
  double lhs = 0;  ///< coa_defuzz
  double rhs = 0;  ///< (C_u A_u - C_l A_l) / (A_u - A_l)
  double area_upper = 0;
  double area_lower = 0;
  double centroid_upper = 0;
  double centroid_lower = 0;
};

/// Evaluates the band centroid both directly and through the separate
/// areas and centroids of the two curves.
Decomposition coa_decomposition_check(const SampledCurve& umf, const SampledCurve& lmf, double epsilon = 1e-12);

/// Reference engine with the consequent grid precomputed for one rule base.
class ReferenceEngine {
 public:
  ReferenceEngine(RuleBase rb, RefConfig ref);

  OutputFou build(const InputVector& x) const;
  double gc(const InputVector& x) const;
  double nt(const InputVector& x) const;

  const RefConfig& config() const { return ref_; }
  const RuleBase& rulebase() const { return rb_; }

 private:
  RuleBase rb_;
  RefConfig ref_;
  Eigen::ArrayXXd upper_consequents_;
  Eigen::ArrayXXd lower_consequents_;
};

}  // namespace it2fls

#endif  // IT2FLS_REFERENCE_HPP
