#ifndef IT2FLS_RULEBASE_HPP
#define IT2FLS_RULEBASE_HPP

#include "it2fls/mf.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

namespace it2fls {

struct Universe {
  double lo = -1;
  double hi = 1;

  bool operator==(const Universe&) const = default;
};

/// Fuzzy partition of one input. `labels` is optional; when present it
/// names each set (e.g. N, Z, P) for diagnostics.
struct Partition {
  Universe universe;
  std::vector<IT2Gaussian<double>> sets;
  std::vector<std::string> labels;

  std::string label(std::size_t i) const { return i < labels.size() ? labels[i] : std::to_string(i); }

  bool operator==(const Partition&) const = default;
};

/// IF x_1 is F_1[antecedent[0]] AND ... THEN y = b. When `b_upper` and
/// `b_lower` are set, the upper and lower firing degrees use distinct
/// singleton positions.
struct Rule {
  std::vector<int> antecedent;
  double b = 0;
  std::optional<double> b_upper;
  std::optional<double> b_lower;

  bool split() const { return b_upper.has_value() && b_lower.has_value(); }
  double upper_center() const { return b_upper.value_or(b); }
  double lower_center() const { return b_lower.value_or(b); }

  bool operator==(const Rule&) const = default;
};

struct RuleBase {
  std::vector<Partition> partitions;
  std::vector<Rule> rules;

  std::size_t inputs() const { return partitions.size(); }
  /// True when every rule carries distinct upper/lower singletons.
  bool split_consequents() const;

  Eigen::ArrayXd centers() const;
  Eigen::ArrayXd upper_centers() const;
  Eigen::ArrayXd lower_centers() const;

  bool operator==(const RuleBase&) const = default;
};

enum class ViolationCode {
  NoInputs,
  EmptyPartition,
  InvalidMembership,
  CenterOutsideUniverse,
  CentersNotIncreasing,
  WrongArity,
  IndexOutOfRange,
  DuplicateAntecedent,
  IncompleteRuleBase,
  MixedConsequentModes,
  NonFiniteConsequent,
};

const char* to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string message;
};

/// Every invariant violation found in `rb`; empty when valid.
std::vector<Violation> validate(const RuleBase& rb);

/// Throws std::invalid_argument listing every violation.
void require_valid(const RuleBase& rb);

enum class PresetBounds {
  Published,  ///< sigma 0.5128 UMF; sigma 0.3532, scale 0.895 LMF
  Refit,      ///< freshly fitted with fit_bounds defaults
};

/// Two-input, three-set (N, Z, P) system with uncertain means -1, 0, 1,
/// half-width 1/8, sigma 0.418 on [-1, 1] and the nine-rule table
/// b = (1, 1, 0, 1, 0, -1, 0, -1, -1) in row-major order.
RuleBase three_set_rulebase(PresetBounds bounds = PresetBounds::Published);

/// Row-major index of an antecedent tuple, or -1 if the tuple is out of range.
int rule_index(const RuleBase& rb, const std::vector<int>& antecedent);

}  // namespace it2fls

#endif  // IT2FLS_RULEBASE_HPP
