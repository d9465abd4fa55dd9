#ifndef IT2FLS_MODES_HPP
#define IT2FLS_MODES_HPP

#include "it2fls/engine.hpp"
#include "it2fls/reference.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace it2fls {

enum class Method { GcClosed, GcClosedSplit, NtClosed, GcRef, NtRef };

/// An inference method plus the membership bounds it evaluates. Textual
/// form: gc-closed, gc-closed-split, nt-closed, gc-ref, nt-ref, optionally
/// suffixed with -exact or -fitted (default -fitted).
struct EngineMode {
  Method method = Method::GcClosed;
  BoundSource bounds = BoundSource::Fitted;

  std::string name() const;
  bool closed_form() const { return method != Method::GcRef && method != Method::NtRef; }

  bool operator==(const EngineMode&) const = default;
};

/// Throws std::invalid_argument on an unknown name.
EngineMode parse_engine_mode(std::string_view text);
std::vector<EngineMode> parse_engine_list(std::string_view comma_separated);

/// The reference counterpart of a closed form (gc-closed -> gc-ref), if any.
std::optional<EngineMode> matching_reference(const EngineMode& closed);

/// A rule base bound to one inference mode. Fitted modes fit any set that
/// lacks fitted bounds. Reference-mode failures on a collapsed footprint come
/// back as a flagged zero output.
class FuzzySystem {
 public:
  FuzzySystem(RuleBase rb, EngineMode mode, RefConfig ref = {}, double degenerate_epsilon = 1e-12);

  Inference operator()(const InputVector& x) const;
  Inference operator()(double x1, double x2) const { return (*this)(Eigen::Vector2d(x1, x2)); }

  const EngineMode& mode() const { return mode_; }
  const RuleBase& rulebase() const { return rb_; }

 private:
  RuleBase rb_;
  EngineMode mode_;
  EngineConfig engine_;
  std::optional<ReferenceEngine> reference_;
};

}  // namespace it2fls

#endif  // IT2FLS_MODES_HPP
