#include "it2fls/modes.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace it2fls {

namespace {

constexpr std::array<std::pair<std::string_view, Method>, 5> kMethods{{
    {"gc-closed-split", Method::GcClosedSplit},
    {"gc-closed", Method::GcClosed},
    {"nt-closed", Method::NtClosed},
    {"gc-ref", Method::GcRef},
    {"nt-ref", Method::NtRef},
}};

std::string_view method_name(Method m) {
  for (const auto& [name, method] : kMethods)
    if (method == m) return name;
  return "unknown";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string EngineMode::name() const {
  std::string out(method_name(method));
  out += bounds == BoundSource::Exact ? "-exact" : "-fitted";
  return out;
}

EngineMode parse_engine_mode(std::string_view text) {
  std::string_view s = trim(text);
  EngineMode mode;
  if (s.ends_with("-exact")) {
    mode.bounds = BoundSource::Exact;
    s.remove_suffix(6);
  } else if (s.ends_with("-fitted")) {
    s.remove_suffix(7);
  }
  for (const auto& [name, method] : kMethods) {
    if (s == name) {
      mode.method = method;
      return mode;
    }
  }
  throw std::invalid_argument("unknown engine mode '" + std::string(text) +
                              "' (expected gc-closed, gc-closed-split, nt-closed, gc-ref or nt-ref, optionally "
                              "suffixed -exact or -fitted)");
}

std::vector<EngineMode> parse_engine_list(std::string_view comma_separated) {
  std::vector<EngineMode> out;
  while (!comma_separated.empty()) {
    const auto comma = comma_separated.find(',');
    const auto item = comma_separated.substr(0, comma);
    if (!trim(item).empty()) out.push_back(parse_engine_mode(item));
    if (comma == std::string_view::npos) break;
    comma_separated.remove_prefix(comma + 1);
  }
  if (out.empty()) throw std::invalid_argument("no engine modes given");
  return out;
}

std::optional<EngineMode> matching_reference(const EngineMode& closed) {
  switch (closed.method) {
    case Method::GcClosed:
    case Method::GcClosedSplit: return EngineMode{Method::GcRef, closed.bounds};
    case Method::NtClosed: return EngineMode{Method::NtRef, closed.bounds};
    default: return std::nullopt;
  }
}

FuzzySystem::FuzzySystem(RuleBase rb, EngineMode mode, RefConfig ref, double degenerate_epsilon)
    : rb_(std::move(rb)), mode_(mode) {
  require_valid(rb_);
  // Sets loaded without fitted bounds get them here.
  if (mode.bounds == BoundSource::Fitted)
    for (auto& p : rb_.partitions)
      for (auto& s : p.sets)
        if (!s.fitted_umf || !s.fitted_lmf) s = with_fitted_bounds(s);
  engine_.bound_source = mode.bounds;
  engine_.degenerate_epsilon = degenerate_epsilon;
  switch (mode.method) {
    case Method::GcClosed: engine_.form = Form::GcClosed; break;
    case Method::GcClosedSplit:
      if (!rb_.split_consequents())
        throw std::invalid_argument("gc-closed-split needs distinct upper/lower consequents on every rule");
      engine_.form = Form::GcClosedSplit;
      break;
    case Method::NtClosed: engine_.form = Form::NtClosed; break;
    case Method::GcRef:
    case Method::NtRef:
      ref.bound_source = mode.bounds;
      ref.degenerate_epsilon = degenerate_epsilon;
      reference_.emplace(rb_, ref);
      break;
  }
}

Inference FuzzySystem::operator()(const InputVector& x) const {
  if (!reference_) return infer(rb_, engine_, x);
  try {
    return {mode_.method == Method::GcRef ? reference_->gc(x) : reference_->nt(x), false};
  } catch (const ZeroArea&) {
    return {0.0, true};
  } catch (const ZeroMass&) {
    return {0.0, true};
  }
}

}  // namespace it2fls
