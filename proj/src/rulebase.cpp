#include "it2fls/rulebase.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace it2fls {

bool RuleBase::split_consequents() const {
  if (rules.empty()) return false;
  for (const auto& r : rules)
    if (!r.split()) return false;
  return true;
}

Eigen::ArrayXd RuleBase::centers() const {
  Eigen::ArrayXd out(static_cast<Eigen::Index>(rules.size()));
  for (std::size_t k = 0; k < rules.size(); ++k) out(static_cast<Eigen::Index>(k)) = rules[k].b;
  return out;
}

Eigen::ArrayXd RuleBase::upper_centers() const {
  Eigen::ArrayXd out(static_cast<Eigen::Index>(rules.size()));
  for (std::size_t k = 0; k < rules.size(); ++k) out(static_cast<Eigen::Index>(k)) = rules[k].upper_center();
  return out;
}

Eigen::ArrayXd RuleBase::lower_centers() const {
  Eigen::ArrayXd out(static_cast<Eigen::Index>(rules.size()));
  for (std::size_t k = 0; k < rules.size(); ++k) out(static_cast<Eigen::Index>(k)) = rules[k].lower_center();
  return out;
}

const char* to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::NoInputs: return "no_inputs";
    case ViolationCode::EmptyPartition: return "empty_partition";
    case ViolationCode::InvalidMembership: return "invalid_membership";
    case ViolationCode::CenterOutsideUniverse: return "center_outside_universe";
    case ViolationCode::CentersNotIncreasing: return "centers_not_increasing";
    case ViolationCode::WrongArity: return "wrong_arity";
    case ViolationCode::IndexOutOfRange: return "index_out_of_range";
    case ViolationCode::DuplicateAntecedent: return "duplicate_antecedent";
    case ViolationCode::IncompleteRuleBase: return "incomplete_rule_base";
    case ViolationCode::MixedConsequentModes: return "mixed_consequent_modes";
    case ViolationCode::NonFiniteConsequent: return "non_finite_consequent";
  }
  return "unknown";
}

namespace {

std::string tuple_string(const RuleBase& rb, const std::vector<int>& idx) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s << ',';
    if (i < rb.partitions.size() && idx[i] >= 0 && static_cast<std::size_t>(idx[i]) < rb.partitions[i].sets.size())
      s << rb.partitions[i].label(static_cast<std::size_t>(idx[i]));
    else
      s << idx[i];
  }
  s << ')';
  return s.str();
}

}  // namespace

std::vector<Violation> validate(const RuleBase& rb) {
  std::vector<Violation> out;
  const auto add = [&](ViolationCode code, std::string msg) { out.push_back({code, std::move(msg)}); };

  if (rb.partitions.empty()) add(ViolationCode::NoInputs, "rule base has no inputs");

  for (std::size_t p = 0; p < rb.partitions.size(); ++p) {
    const auto& part = rb.partitions[p];
    const std::string where = "input " + std::to_string(p);
    if (part.sets.empty()) {
      add(ViolationCode::EmptyPartition, where + ": partition has no sets");
      continue;
    }
    for (std::size_t s = 0; s < part.sets.size(); ++s) {
      if (!is_valid(part.sets[s])) {
        add(ViolationCode::InvalidMembership, where + ": set " + part.label(s) + " has invalid parameters");
        continue;
      }
      const double c = center(part.sets[s]);
      if (c < part.universe.lo || c > part.universe.hi)
        add(ViolationCode::CenterOutsideUniverse, where + ": center of set " + part.label(s) + " lies outside universe");
      if (s > 0 && is_valid(part.sets[s - 1]) && !(center(part.sets[s - 1]) < c))
        add(ViolationCode::CentersNotIncreasing, where + ": set centers not strictly increasing at " + part.label(s));
    }
  }

  bool any_split = false;
  bool any_shared = false;
  std::map<std::vector<int>, std::size_t> seen;
  for (std::size_t k = 0; k < rb.rules.size(); ++k) {
    const auto& r = rb.rules[k];
    const std::string where = "rule " + std::to_string(k + 1);
    if (r.split()) any_split = true;
    else if (r.b_upper || r.b_lower) add(ViolationCode::MixedConsequentModes, where + ": only one of b_upper/b_lower set");
    else any_shared = true;

    if (!std::isfinite(r.b) || (r.b_upper && !std::isfinite(*r.b_upper)) || (r.b_lower && !std::isfinite(*r.b_lower)))
      add(ViolationCode::NonFiniteConsequent, where + ": non-finite consequent");

    if (r.antecedent.size() != rb.partitions.size()) {
      add(ViolationCode::WrongArity, where + ": antecedent has " + std::to_string(r.antecedent.size()) +
                                         " entries, expected " + std::to_string(rb.partitions.size()));
      continue;
    }
    bool in_range = true;
    for (std::size_t i = 0; i < r.antecedent.size(); ++i) {
      const int idx = r.antecedent[i];
      if (idx < 0 || static_cast<std::size_t>(idx) >= rb.partitions[i].sets.size()) {
        add(ViolationCode::IndexOutOfRange, where + ": index out of range (" + std::to_string(idx) + " for input " +
                                                std::to_string(i) + ")");
        in_range = false;
      }
    }
    if (!in_range) continue;
    if (auto [it, fresh] = seen.emplace(r.antecedent, k); !fresh)
      add(ViolationCode::DuplicateAntecedent, where + ": duplicate antecedent " + tuple_string(rb, r.antecedent) +
                                                  " (first at rule " + std::to_string(it->second + 1) + ")");
  }
  if (any_split && any_shared)
    add(ViolationCode::MixedConsequentModes, "rules mix shared and split (upper/lower) consequents");

  // Completeness: enumerate every antecedent tuple in row-major order.
  bool enumerable = !rb.partitions.empty();
  for (const auto& part : rb.partitions) enumerable = enumerable && !part.sets.empty();
  if (enumerable) {
    std::vector<int> idx(rb.partitions.size(), 0);
    bool done = false;
    while (!done) {
      if (!seen.contains(idx))
        add(ViolationCode::IncompleteRuleBase, "incomplete rule base: missing " + tuple_string(rb, idx));
      for (std::size_t d = idx.size();;) {
        if (d == 0) {
          done = true;
          break;
        }
        --d;
        if (++idx[d] < static_cast<int>(rb.partitions[d].sets.size())) break;
        idx[d] = 0;
      }
    }
  }
  return out;
}

void require_valid(const RuleBase& rb) {
  const auto violations = validate(rb);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid rule base:";
  for (const auto& v : violations) msg << "\n  [" << to_string(v.code) << "] " << v.message;
  throw std::invalid_argument(msg.str());
}

RuleBase three_set_rulebase(PresetBounds bounds) {
  constexpr double kHalfWidth = 1.0 / 8.0;
  constexpr double kSigma = 0.418;

  Partition part;
  part.universe = {-1.0, 1.0};
  part.labels = {"N", "Z", "P"};
  for (double mean : {-1.0, 0.0, 1.0}) {
    auto mf = make_uncertain_mean(mean - kHalfWidth, mean + kHalfWidth, kSigma);
    if (bounds == PresetBounds::Published) {
      mf.fitted_umf = ScaledGaussian<double>{mean, 0.5128, 1.0};
      mf.fitted_lmf = ScaledGaussian<double>{mean, 0.3532, 0.895};
    } else {
      mf = with_fitted_bounds(mf);
    }
    part.sets.push_back(mf);
  }

  RuleBase rb;
  rb.partitions = {part, part};
  const double b[] = {1, 1, 0, 1, 0, -1, 0, -1, -1};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rb.rules.push_back(Rule{{i, j}, b[3 * i + j], std::nullopt, std::nullopt});
  return rb;
}

int rule_index(const RuleBase& rb, const std::vector<int>& antecedent) {
  if (antecedent.size() != rb.partitions.size()) return -1;
  for (std::size_t k = 0; k < rb.rules.size(); ++k)
    if (rb.rules[k].antecedent == antecedent) return static_cast<int>(k);
  return -1;
}

}  // namespace it2fls
