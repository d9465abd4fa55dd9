#include "it2fls/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace it2fls {

using nlohmann::json;

namespace {

double number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw std::invalid_argument(std::string("rule base: missing or non-numeric '") + key + "'");
  return j.at(key).get<double>();
}

json mf_to_json(const IT2Gaussian<double>& m) {
  json j;
  if (const auto* um = std::get_if<UncertainMean<double>>(&m.kind)) {
    j = {{"kind", "uncertain_mean"}, {"mean_lo", um->mean_lo}, {"mean_hi", um->mean_hi}, {"sigma", um->sigma}};
  } else {
    const auto& us = std::get<UncertainSigma<double>>(m.kind);
    j = {{"kind", "uncertain_sigma"}, {"mean", us.mean}, {"sigma_lo", us.sigma_lo}, {"sigma_hi", us.sigma_hi}};
  }
  if (m.fitted_umf) j["fitted_umf"] = to_json(*m.fitted_umf);
  if (m.fitted_lmf) j["fitted_lmf"] = to_json(*m.fitted_lmf);
  return j;
}

IT2Gaussian<double> mf_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("rule base: set must be an object");
  const std::string kind = j.value("kind", "uncertain_mean");
  IT2Gaussian<double> m;
  if (kind == "uncertain_mean")
    m.kind = UncertainMean<double>{number(j, "mean_lo"), number(j, "mean_hi"), number(j, "sigma")};
  else if (kind == "uncertain_sigma")
    m.kind = UncertainSigma<double>{number(j, "mean"), number(j, "sigma_lo"), number(j, "sigma_hi")};
  else
    throw std::invalid_argument("rule base: unknown set kind '" + kind + "'");
  if (j.contains("fitted_umf")) m.fitted_umf = scaled_gaussian_from_json(j.at("fitted_umf"));
  if (j.contains("fitted_lmf")) m.fitted_lmf = scaled_gaussian_from_json(j.at("fitted_lmf"));
  return m;
}

}  // namespace

json to_json(const ScaledGaussian<double>& g) {
  return {{"mean", g.mean}, {"sigma", g.sigma}, {"scale", g.scale}};
}

ScaledGaussian<double> scaled_gaussian_from_json(const json& j) {
  return {number(j, "mean"), number(j, "sigma"), j.contains("scale") ? number(j, "scale") : 1.0};
}

json to_json(const RuleBase& rb) {
  json inputs = json::array();
  for (const auto& p : rb.partitions) {
    json sets = json::array();
    for (const auto& s : p.sets) sets.push_back(mf_to_json(s));
    json in = {{"universe", {p.universe.lo, p.universe.hi}}, {"sets", sets}};
    if (!p.labels.empty()) in["labels"] = p.labels;
    inputs.push_back(in);
  }
  json rules = json::array();
  for (const auto& r : rb.rules) {
    json jr = {{"if", r.antecedent}, {"b", r.b}};
    if (r.b_upper) jr["b_upper"] = *r.b_upper;
    if (r.b_lower) jr["b_lower"] = *r.b_lower;
    rules.push_back(jr);
  }
  return {{"inputs", inputs}, {"rules", rules}};
}

RuleBase rulebase_from_json(const json& j) {
  if (!j.is_object() || !j.contains("inputs") || !j.at("inputs").is_array())
    throw std::invalid_argument("rule base: missing 'inputs' array");
  if (!j.contains("rules") || !j.at("rules").is_array()) throw std::invalid_argument("rule base: missing 'rules' array");

  RuleBase rb;
  for (const auto& in : j.at("inputs")) {
    Partition p;
    const auto& u = in.at("universe");
    if (!u.is_array() || u.size() != 2) throw std::invalid_argument("rule base: universe must be [lo, hi]");
    p.universe = {u[0].get<double>(), u[1].get<double>()};
    for (const auto& s : in.at("sets")) p.sets.push_back(mf_from_json(s));
    if (in.contains("labels")) p.labels = in.at("labels").get<std::vector<std::string>>();
    rb.partitions.push_back(std::move(p));
  }
  for (const auto& jr : j.at("rules")) {
    Rule r;
    if (!jr.contains("if") || !jr.at("if").is_array()) throw std::invalid_argument("rule base: rule without 'if'");
    r.antecedent = jr.at("if").get<std::vector<int>>();
    r.b = number(jr, "b");
    if (jr.contains("b_upper")) r.b_upper = number(jr, "b_upper");
    if (jr.contains("b_lower")) r.b_lower = number(jr, "b_lower");
    rb.rules.push_back(std::move(r));
  }
  return rb;
}

RuleBase load_rulebase(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open rule base file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("rule base " + path.string() + ": " + e.what());
  }
  try {
    return rulebase_from_json(j);
  } catch (const json::exception& e) {
    throw std::invalid_argument("rule base " + path.string() + ": " + e.what());
  }
}

void save_rulebase(const RuleBase& rb, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(rb).dump(2) << '\n';
}

}  // namespace it2fls
