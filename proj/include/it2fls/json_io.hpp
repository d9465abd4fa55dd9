#ifndef IT2FLS_JSON_IO_HPP
#define IT2FLS_JSON_IO_HPP

#include "it2fls/mf.hpp"
#include "it2fls/rulebase.hpp"

#include <json.hpp>

#include <filesystem>

namespace it2fls {

// Rule-base document:
//   {"inputs": [{"universe": [lo, hi], "labels": [...],
//                "sets": [{"kind": "uncertain_mean", "mean_lo": .., "mean_hi": .., "sigma": ..,
//                          "fitted_umf": {"mean": .., "sigma": .., "scale": ..}, "fitted_lmf": {..}},
//                         {"kind": "uncertain_sigma", "mean": .., "sigma_lo": .., "sigma_hi": ..}]}],
//    "rules": [{"if": [i, j], "b": v, "b_upper": .., "b_lower": ..}]}
// Antecedent indices are 0-based. labels, fitted_* and b_upper/b_lower are optional.

nlohmann::json to_json(const ScaledGaussian<double>& g);
ScaledGaussian<double> scaled_gaussian_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RuleBase& rb);
/// Throws std::invalid_argument on schema errors. Does not run validate().
RuleBase rulebase_from_json(const nlohmann::json& j);

RuleBase load_rulebase(const std::filesystem::path& path);
void save_rulebase(const RuleBase& rb, const std::filesystem::path& path);

}  // namespace it2fls

#endif  // IT2FLS_JSON_IO_HPP
