#include "it2fls/reference.hpp"

#include <cmath>
#include <sstream>

namespace it2fls {

void check_ref_config(const RefConfig& ref, const Eigen::ArrayXd& centers) {
  if (ref.grid_points < 101) throw std::invalid_argument("reference: grid_points must be at least 101");
  if (!(ref.consequent_width > 0)) throw std::invalid_argument("reference: consequent_width must be positive");
  if (!(ref.y_min < ref.y_max)) throw std::invalid_argument("reference: empty output domain");
  if (!centers.allFinite()) throw std::invalid_argument("reference: non-finite consequent center");
  const double margin = 5.0 * ref.consequent_width;
  for (double c : centers) {
    if (c - margin < ref.y_min || c + margin > ref.y_max) {
      std::ostringstream msg;
      msg << "output domain [" << ref.y_min << ", " << ref.y_max << "] does not cover center " << c
          << " with a margin of " << margin;
      throw DomainTooNarrow(msg.str());
    }
  }
}

Eigen::ArrayXXd consequent_matrix(const ConsequentSet& set, const Eigen::ArrayXd& grid) {
  Eigen::ArrayXXd g(set.centers.size(), grid.size());
  for (Eigen::Index k = 0; k < set.centers.size(); ++k)
    g.row(k) = eval(ScaledGaussian<double>{set.centers(k), set.width, 1.0}, grid).transpose();
  return g;
}

namespace {

Eigen::ArrayXd join_one(const Eigen::ArrayXd& firing, const Eigen::ArrayXXd& consequents, const RefConfig& ref) {
  const Eigen::Index n = consequents.cols();
  Eigen::ArrayXXd implied(consequents.rows(), n);
  if (ref.t_norm == TNorm::Product)
    implied = consequents.colwise() * firing;
  else
    implied = consequents.min(firing.replicate(1, n));

  Eigen::ArrayXd joined;
  switch (ref.join) {
    case Join::Sum: joined = implied.colwise().sum().transpose(); break;
    case Join::SumClipped: joined = implied.colwise().sum().transpose().min(1.0); break;
    case Join::Max: joined = implied.colwise().maxCoeff().transpose(); break;
  }
  return joined;
}

void check_pair(const SampledCurve& umf, const SampledCurve& lmf) {
  if (umf.size() != lmf.size() || umf.y_min != lmf.y_min || umf.y_max != lmf.y_max)
    throw std::invalid_argument("sampled curves must share domain and length");
  if (umf.size() < 2) throw std::invalid_argument("sampled curves need at least two samples");
}

}  // namespace

OutputFou join_rule_outputs(const FiringIntervals& f, const Eigen::ArrayXXd& upper_consequents,
                            const Eigen::ArrayXXd& lower_consequents, const RefConfig& ref) {
  OutputFou out;
  out.umf = {ref.y_min, ref.y_max, join_one(f.upper, upper_consequents, ref)};
  out.lmf = {ref.y_min, ref.y_max, join_one(f.lower, lower_consequents, ref)};
  return out;
}

OutputFou build_output_fou(const RuleBase& rb, const RefConfig& ref, const InputVector& x) {
  return ReferenceEngine(rb, ref).build(x);
}

double coa_defuzz(const SampledCurve& umf, const SampledCurve& lmf, double epsilon) {
  check_pair(umf, lmf);
  const Eigen::ArrayXd band = umf.values - lmf.values;
  const double area = band.sum();
  if (area <= epsilon) throw ZeroArea("coa_defuzz: the footprint has no area");
  return (umf.grid() * band).sum() / area;
}

double nt_defuzz(const SampledCurve& umf, const SampledCurve& lmf, double epsilon) {
  check_pair(umf, lmf);
  const Eigen::ArrayXd avg = 0.5 * (umf.values + lmf.values);
  const double mass = avg.sum();
  if (2.0 * mass <= epsilon) throw ZeroMass("nt_defuzz: the averaged set has no mass");
  return (umf.grid() * avg).sum() / mass;
}

Decomposition coa_decomposition_check(const SampledCurve& umf, const SampledCurve& lmf, double epsilon) {
  Decomposition d;
  d.lhs = coa_defuzz(umf, lmf, epsilon);
  const Eigen::ArrayXd y = umf.grid();
  const double dy = umf.spacing();
  d.area_upper = umf.values.sum() * dy;
  d.area_lower = lmf.values.sum() * dy;
  d.centroid_upper = (y * umf.values).sum() * dy / d.area_upper;
  // An empty lower curve contributes nothing; its centroid is left at zero.
  if (d.area_lower > 0) d.centroid_lower = (y * lmf.values).sum() * dy / d.area_lower;
  d.rhs = (d.centroid_upper * d.area_upper - d.centroid_lower * d.area_lower) / (d.area_upper - d.area_lower);
  return d;
}

ReferenceEngine::ReferenceEngine(RuleBase rb, RefConfig ref) : rb_(std::move(rb)), ref_(ref) {
  const Eigen::ArrayXd up = rb_.upper_centers();
  const Eigen::ArrayXd lo = rb_.lower_centers();
  check_ref_config(ref_, up);
  check_ref_config(ref_, lo);
  const Eigen::ArrayXd grid = Eigen::ArrayXd::LinSpaced(ref_.grid_points, ref_.y_min, ref_.y_max);
  upper_consequents_ = consequent_matrix({up, ref_.consequent_width}, grid);
  lower_consequents_ = rb_.split_consequents() ? consequent_matrix({lo, ref_.consequent_width}, grid)
                                               : upper_consequents_;
}

OutputFou ReferenceEngine::build(const InputVector& x) const {
  return join_rule_outputs(fire(rb_, ref_.bound_source, x), upper_consequents_, lower_consequents_, ref_);
}

double ReferenceEngine::gc(const InputVector& x) const {
  const OutputFou fou = build(x);
  return coa_defuzz(fou.umf, fou.lmf, ref_.degenerate_epsilon);
}

double ReferenceEngine::nt(const InputVector& x) const {
  const OutputFou fou = build(x);
  return nt_defuzz(fou.umf, fou.lmf, ref_.degenerate_epsilon);
}

}  // namespace it2fls
