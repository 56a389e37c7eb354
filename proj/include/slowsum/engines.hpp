#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "slowsum/atoms.hpp"
#include "slowsum/real.hpp"
#include "slowsum/series.hpp"

namespace slowsum {

enum class Engine { EulerMaclaurin, Romberg, Direct };

std::string engine_name(Engine engine);
/// Accepts "em", "romberg", "direct".
Engine parse_engine(const std::string& text);

struct EngineConfig {
  long n = 20;       ///< switch-over index: terms up to n are summed directly
  int s_max = 5;     ///< highest correction order
  std::optional<long> k_hat;  ///< last index of the Romberg derivative sums
  /// When set, the series is treated as ending at this index: the tail
  /// integral stops at truncate_at + 1/2 and the Euler-Maclaurin corrections
  /// pick up the upper end point. Used to check the engines against a
  /// directly summed finite problem.
  std::optional<long> truncate_at;
  PrecisionContext precision{};
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EvaluationReport {
  Engine engine;
  SeriesSpec spec;
  EngineConfig config;
  Real value;
  Real direct_part;    ///< partial sum through n
  Real tail_integral;  ///< integral part replacing the remaining terms
  /// One entry per order s = 1..s_max. Romberg: the subtracted curvature
  /// sums [4^s (2s+1)!]^-1 sum_k f^(2s)(k). Euler-Maclaurin: the added terms
  /// beta(s)/2^(2s-1) f^(2s-1)(n+1/2).
  std::vector<Real> corrections;
};

/// Exact derivative of the series' base expression, memoized per
/// (family, alpha, order). The reference stays valid for the process lifetime.
const AtomExpression& cached_derivative(const SeriesSpec& spec, int order);

/// Direct sum through n plus tail integral, minus curvature corrections summed
/// over n+1..k_hat for s = 1..s_max. Throws ConfigError when k_hat is missing.
EvaluationReport romberg_evaluate(const SeriesSpec& spec, const EngineConfig& cfg);

/// Direct sum through n plus tail integral plus centered Euler-Maclaurin
/// corrections anchored at n + 1/2.
EvaluationReport euler_maclaurin_evaluate(const SeriesSpec& spec, const EngineConfig& cfg);

/// Partial sum through n only.
EvaluationReport direct_evaluate(const SeriesSpec& spec, const EngineConfig& cfg);

EvaluationReport run_engine(Engine engine, const SeriesSpec& spec, const EngineConfig& cfg);

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, Real previous, Real last)
      : std::runtime_error(what), previous_(std::move(previous)), last_(std::move(last)) {}
  const Real& previous() const { return previous_; }
  const Real& last() const { return last_; }

 private:
  Real previous_;
  Real last_;
};

struct EscalationStep {
  long n;
  int s_max;
};

/// (20,5) (20,7) (40,5) (40,7) (80,5) (80,7) (160,5) (160,7)
std::vector<EscalationStep> default_escalation();

/// Runs the Euler-Maclaurin engine along the escalation schedule until two
/// successive results agree to target_digits significant digits, and returns
/// the later one. Requires target_digits <= working_digits - 10.
Real evaluate_constant(const SeriesSpec& spec, int target_digits, const PrecisionContext& ctx = {},
                       const std::vector<EscalationStep>& schedule = default_escalation());

}  // namespace slowsum
