#include "slowsum/engines.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "slowsum/bernoulli.hpp"

namespace slowsum {

std::string engine_name(Engine engine) {
  switch (engine) {
    case Engine::EulerMaclaurin: return "em";
    case Engine::Romberg: return "romberg";
    case Engine::Direct: return "direct";
  }
  return "unknown";
}

Engine parse_engine(const std::string& text) {
  if (text == "em") return Engine::EulerMaclaurin;
  if (text == "romberg") return Engine::Romberg;
  if (text == "direct") return Engine::Direct;
  throw std::invalid_argument("unknown engine '" + text + "' (expected em, romberg or direct)");
}

const AtomExpression& cached_derivative(const SeriesSpec& spec, int order) {
  static std::mutex mutex;
  static std::map<std::tuple<Family, int, int>, AtomExpression> cache;
  std::lock_guard lock(mutex);
  const auto key = std::make_tuple(spec.family, spec.alpha, order);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, differentiate(spec.base_expression(), order)).first;
  }
  return it->second;
}

namespace {

void check_common(const SeriesSpec& spec, const EngineConfig& cfg) {
  spec.validate();
  cfg.precision.validate();
  if (cfg.n < spec.start_index()) {
    throw ConfigError("switch-over index n=" + std::to_string(cfg.n) + " is below the start index " +
                      std::to_string(spec.start_index()) + " of " + spec.name());
  }
  if (cfg.s_max < 0) {
    throw ConfigError("s_max must be >= 0");
  }
  if (cfg.truncate_at && *cfg.truncate_at <= cfg.n) {
    throw ConfigError("truncate_at must exceed n");
  }
}

Real half_integer(long k, const PrecisionContext& ctx) { return Real(Rational(2 * k + 1, 2), ctx); }

// Integral part of the estimate: n+1/2 to infinity, or to truncate_at+1/2.
Real integral_part(const SeriesSpec& spec, const EngineConfig& cfg) {
  const auto& ctx = cfg.precision;
  Real tail = tail_integral(spec, cfg.n, ctx);
  if (cfg.truncate_at) {
    tail -= tail_integral_from(spec, half_integer(*cfg.truncate_at, ctx), ctx);
  }
  return tail;
}

EvaluationReport make_report(Engine engine, const SeriesSpec& spec, const EngineConfig& cfg) {
  const auto& ctx = cfg.precision;
  return EvaluationReport{engine, spec, cfg, Real(ctx), Real(ctx), Real(ctx), {}};
}

}  // namespace

EvaluationReport romberg_evaluate(const SeriesSpec& spec, const EngineConfig& cfg) {
  check_common(spec, cfg);
  std::optional<long> k_hat = cfg.k_hat ? cfg.k_hat : cfg.truncate_at;
  if (!k_hat) {
    throw ConfigError("romberg engine needs k_hat");
  }
  if (*k_hat <= cfg.n) {
    throw ConfigError("k_hat must exceed n");
  }
  if (cfg.truncate_at && *k_hat > *cfg.truncate_at) {
    throw ConfigError("k_hat must not exceed truncate_at");
  }
  const auto& ctx = cfg.precision;
  EvaluationReport report = make_report(Engine::Romberg, spec, cfg);
  report.direct_part = partial_sum(spec, cfg.n, ctx);
  report.tail_integral = integral_part(spec, cfg);

  std::vector<AtomExpression> derivatives;
  for (int s = 1; s <= cfg.s_max; ++s) derivatives.push_back(cached_derivative(spec, 2 * s));
  std::vector<Real> sums(derivatives.size(), Real(ctx));
  if (!derivatives.empty()) {
    AtomEvaluator evaluator(derivatives, ctx);
    std::vector<Real> values(derivatives.size(), Real(ctx));
    Real x(ctx);
    for (long k = cfg.n + 1; k <= *k_hat; ++k) {
      mpfr_set_si(x.get(), k, MPFR_RNDN);
      evaluator.evaluate(x, values);
      for (std::size_t i = 0; i < sums.size(); ++i) sums[i] += values[i];
    }
  }

  report.value = report.direct_part + report.tail_integral;
  for (int s = 1; s <= cfg.s_max; ++s) {
    // moment of (x-k)^{2s} over a unit cell divided by (2s)!
    const mpz_class weight = (mpz_class(1) << (2 * s)) * factorial(2 * s + 1);
    Real correction = sums[s - 1] * Real(Rational(mpz_class(1), weight), ctx);
    report.value -= correction;
    report.corrections.push_back(std::move(correction));
  }
  return report;
}

EvaluationReport euler_maclaurin_evaluate(const SeriesSpec& spec, const EngineConfig& cfg) {
  check_common(spec, cfg);
  const auto& ctx = cfg.precision;
  EvaluationReport report = make_report(Engine::EulerMaclaurin, spec, cfg);
  report.direct_part = partial_sum(spec, cfg.n, ctx);
  report.tail_integral = integral_part(spec, cfg);

  std::vector<AtomExpression> derivatives;
  for (int s = 1; s <= cfg.s_max; ++s) derivatives.push_back(cached_derivative(spec, 2 * s - 1));
  std::vector<Real> at_lower(derivatives.size(), Real(ctx));
  std::vector<Real> at_upper(derivatives.size(), Real(ctx));
  if (!derivatives.empty()) {
    AtomEvaluator evaluator(derivatives, ctx);
    evaluator.evaluate(half_integer(cfg.n, ctx), at_lower);
    if (cfg.truncate_at) {
      evaluator.evaluate(half_integer(*cfg.truncate_at, ctx), at_upper);
    }
  }

  report.value = report.direct_part + report.tail_integral;
  for (int s = 1; s <= cfg.s_max; ++s) {
    const Rational coefficient = beta(s) / Rational(mpz_class(1) << (2 * s - 1), 1);
    Real correction = (at_lower[s - 1] - at_upper[s - 1]) * Real(coefficient, ctx);
    report.value += correction;
    report.corrections.push_back(std::move(correction));
  }
  return report;
}

EvaluationReport direct_evaluate(const SeriesSpec& spec, const EngineConfig& cfg) {
  spec.validate();
  if (cfg.n < spec.start_index()) {
    throw ConfigError("n=" + std::to_string(cfg.n) + " is below the start index of " + spec.name());
  }
  EvaluationReport report = make_report(Engine::Direct, spec, cfg);
  report.direct_part = partial_sum(spec, cfg.n, cfg.precision);
  report.value = report.direct_part;
  return report;
}

EvaluationReport run_engine(Engine engine, const SeriesSpec& spec, const EngineConfig& cfg) {
  switch (engine) {
    case Engine::EulerMaclaurin: return euler_maclaurin_evaluate(spec, cfg);
    case Engine::Romberg: return romberg_evaluate(spec, cfg);
    case Engine::Direct: return direct_evaluate(spec, cfg);
  }
  throw std::invalid_argument("unknown engine");
}

std::vector<EscalationStep> default_escalation() {
  std::vector<EscalationStep> steps;
  for (long n : {20L, 40L, 80L, 160L}) {
    for (int s : {5, 7}) steps.push_back({n, s});
  }
  return steps;
}

Real evaluate_constant(const SeriesSpec& spec, int target_digits, const PrecisionContext& ctx,
                       const std::vector<EscalationStep>& schedule) {
  if (target_digits <= 0 || target_digits > ctx.working_digits - 10) {
    throw std::invalid_argument("evaluate_constant: target_digits must lie in 1..working_digits-10");
  }
  if (schedule.size() < 2) {
    throw std::invalid_argument("evaluate_constant: escalation schedule needs at least two steps");
  }
  std::optional<Real> previous;
  std::optional<Real> last;
  for (const auto& step : schedule) {
    EngineConfig cfg;
    cfg.n = std::max(step.n, spec.start_index());
    cfg.s_max = step.s_max;
    cfg.precision = ctx;
    Real value = euler_maclaurin_evaluate(spec, cfg).value;
    if (last && agreeing_digits(*last, value) >= target_digits) {
      return value;
    }
    previous = std::move(last);
    last = std::move(value);
  }
  throw ConvergenceError("evaluate_constant: " + spec.name() + " did not stabilise to " +
                             std::to_string(target_digits) + " digits",
                         previous.value_or(Real(ctx)), *last);
}

}  // namespace slowsum
