#include "it2fls/engine.hpp"

#include <stdexcept>

namespace it2fls {

FiringIntervals fire(const RuleBase& rb, BoundSource source, const InputVector& x) {
  if (static_cast<std::size_t>(x.size()) != rb.inputs())
    throw std::invalid_argument("fire: input dimension does not match the number of partitions");

  // Grades of every set at its input, computed once and shared across rules.
  std::vector<Eigen::ArrayXd> up(rb.inputs());
  std::vector<Eigen::ArrayXd> lo(rb.inputs());
  for (std::size_t i = 0; i < rb.inputs(); ++i) {
    const auto& sets = rb.partitions[i].sets;
    const auto n = static_cast<Eigen::Index>(sets.size());
    up[i].resize(n);
    lo[i].resize(n);
    for (Eigen::Index s = 0; s < n; ++s) {
      const auto& mf = sets[static_cast<std::size_t>(s)];
      const double xi = x(static_cast<Eigen::Index>(i));
      up[i](s) = upper_grade(mf, xi, source);
      lo[i](s) = lower_grade(mf, xi, source);
    }
  }

  const auto m = static_cast<Eigen::Index>(rb.rules.size());
  FiringIntervals f{Eigen::ArrayXd::Ones(m), Eigen::ArrayXd::Ones(m)};
  for (Eigen::Index k = 0; k < m; ++k) {
    const auto& ante = rb.rules[static_cast<std::size_t>(k)].antecedent;
    for (std::size_t i = 0; i < ante.size(); ++i) {
      f.upper(k) *= up[i](ante[i]);
      f.lower(k) *= lo[i](ante[i]);
    }
  }
  return f;
}

Inference infer_gc(const RuleBase& rb, const EngineConfig& cfg, const InputVector& x) {
  const FiringIntervals f = fire(rb, cfg.bound_source, x);
  const Eigen::ArrayXd b = rb.centers();
  return gc_combine(b, b, f.upper, f.lower, cfg.degenerate_epsilon);
}

Inference infer_gc_split(const RuleBase& rb, const EngineConfig& cfg, const InputVector& x) {
  if (!rb.split_consequents())
    throw std::invalid_argument("infer_gc_split: rule base has no distinct upper/lower consequents");
  const FiringIntervals f = fire(rb, cfg.bound_source, x);
  return gc_combine(rb.upper_centers(), rb.lower_centers(), f.upper, f.lower, cfg.degenerate_epsilon);
}

Inference infer_nt(const RuleBase& rb, const EngineConfig& cfg, const InputVector& x) {
  const FiringIntervals f = fire(rb, cfg.bound_source, x);
  return nt_combine(rb.centers(), f.upper, f.lower, cfg.degenerate_epsilon);
}

Inference infer(const RuleBase& rb, const EngineConfig& cfg, const InputVector& x) {
  switch (cfg.form) {
    case Form::GcClosed: return infer_gc(rb, cfg, x);
    case Form::GcClosedSplit: return infer_gc_split(rb, cfg, x);
    case Form::NtClosed: return infer_nt(rb, cfg, x);
  }
  throw std::logic_error("infer: unknown form");
}

}  // namespace it2fls
