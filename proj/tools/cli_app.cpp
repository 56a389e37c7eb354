#include "cli_app.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "slowsum/engines.hpp"
#include "slowsum/report.hpp"

namespace slowsum::cli {
namespace {

struct Options {
  std::optional<std::string> series;
  std::optional<int> alpha;
  std::string engine = "em";
  std::optional<long> n;
  std::optional<int> s_max;
  std::optional<long> k_hat;
  int digits = 15;
  int precision = 50;
  std::optional<int> table;
  std::string format = "plain";
  std::optional<std::string> estimate_delta;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int print_table(const Options& opt, const PrecisionContext& ctx, std::ostream& out) {
  const TableFormat format = parse_table_format(opt.format);
  if (*opt.table == 1) {
    out << render_table1(compute_table1(ctx), format);
  } else {
    out << render_table2(compute_table2(ctx), format);
  }
  return kExitOk;
}

int print_estimate(const Options& opt, const PrecisionContext& ctx, std::ostream& out) {
  const Real delta(*opt.estimate_delta, ctx);
  const DirectTermEstimate estimate = estimate_direct_terms(delta, ctx);
  out << "log10(N) = " << to_significant(estimate.log10_terms, opt.digits) << '\n'
      << "N = " << estimate.render() << '\n';
  return kExitOk;
}

int print_evaluation(const Options& opt, const PrecisionContext& ctx, std::ostream& out) {
  if (!opt.series || !opt.alpha) {
    throw UsageError("--series and --alpha are required");
  }
  if (*opt.alpha < 2) {
    throw UsageError("--alpha must be >= 2");
  }
  const SeriesSpec spec{parse_family(*opt.series), *opt.alpha};
  const Engine engine = parse_engine(opt.engine);
  const TableFormat format = parse_table_format(opt.format);
  if (opt.k_hat && engine != Engine::Romberg) {
    throw UsageError("--k-hat only applies to --engine romberg");
  }
  if (opt.s_max && engine == Engine::Direct) {
    throw UsageError("--s-max does not apply to --engine direct");
  }

  if (engine == Engine::EulerMaclaurin && !opt.n) {
    if (opt.s_max) {
      throw UsageError("--s-max needs --n; without --n the constant is converged automatically");
    }
    const int target = std::min(opt.digits + 2, ctx.working_digits - 10);
    const Real value = evaluate_constant(spec, target, ctx);
    if (format == TableFormat::Csv) {
      out << "series,alpha,value\n"
          << static_cast<char>(family_letter(spec.family) + ('a' - 'A')) << ',' << spec.alpha << ','
          << to_significant(value, opt.digits) << '\n';
    } else {
      out << to_significant(value, opt.digits) << '\n';
    }
    return kExitOk;
  }

  if (!opt.n) {
    throw UsageError("--engine " + opt.engine + " needs --n");
  }
  EngineConfig cfg;
  cfg.n = *opt.n;
  cfg.s_max = opt.s_max.value_or(engine == Engine::Romberg ? 3 : 5);
  cfg.k_hat = opt.k_hat;
  cfg.precision = ctx;
  if (engine == Engine::Romberg && !cfg.k_hat) {
    throw UsageError("--engine romberg needs --k-hat");
  }
  const EvaluationReport report = run_engine(engine, spec, cfg);
  const OutputRecord record = OutputRecord::from_report(report, opt.digits);
  if (format == TableFormat::Csv) {
    out << OutputRecord::csv_header(static_cast<int>(record.corrections.size())) << '\n'
        << record.csv_row() << '\n';
  } else {
    out << record.value << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate slowly convergent log-power series to high precision", "slowsum"};
  Options opt;
  app.add_option("--series", opt.series, "Series family: c = 1/[k log k (log log k)^a], d = 1/[k (log k)^a]")
      ->check(CLI::IsMember({"c", "d", "C", "D"}));
  app.add_option("--alpha", opt.alpha, "Exponent alpha (>= 2)");
  app.add_option("--engine", opt.engine, "em, romberg or direct")
      ->check(CLI::IsMember({"em", "romberg", "direct"}))
      ->capture_default_str();
  app.add_option("--n", opt.n, "Switch-over index N");
  app.add_option("--s-max", opt.s_max, "Highest correction order");
  app.add_option("--k-hat", opt.k_hat, "Last index of the Romberg derivative sums");
  app.add_option("--digits", opt.digits, "Significant digits printed")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--precision", opt.precision, "Working precision in decimal digits")
      ->check(CLI::Range(20, 100000))
      ->capture_default_str();
  app.add_option("--table", opt.table, "Reproduce convergence table 1 or 2")->check(CLI::IsMember({1, 2}));
  app.add_option("--format", opt.format, "plain or csv")
      ->check(CLI::IsMember({"plain", "csv"}))
      ->capture_default_str();
  app.add_option("--estimate-terms", opt.estimate_delta,
                 "Print how many directly summed terms reach accuracy DELTA");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "slowsum: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    const PrecisionContext ctx{opt.precision, 10};
    const int modes = (opt.table ? 1 : 0) + (opt.estimate_delta ? 1 : 0);
    if (modes > 1) {
      throw UsageError("--table and --estimate-terms are mutually exclusive");
    }
    if (modes == 1 && (opt.series || opt.alpha || opt.n || opt.s_max || opt.k_hat)) {
      throw UsageError("series and engine flags cannot be combined with --table or --estimate-terms");
    }
    if (opt.table) return print_table(opt, ctx, out);
    if (opt.estimate_delta) return print_estimate(opt, ctx, out);
    return print_evaluation(opt, ctx, out);
  } catch (const UsageError& e) {
    err << "slowsum: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "slowsum: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    err << "slowsum: " << e.what() << "; last two values " << to_significant(e.previous(), 25) << " and "
        << to_significant(e.last(), 25) << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "slowsum: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "slowsum: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace slowsum::cli
