#include "slowsum/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace slowsum {

TableFormat parse_table_format(const std::string& text) {
  if (text == "plain") return TableFormat::Plain;
  if (text == "csv") return TableFormat::Csv;
  throw std::invalid_argument("unknown format '" + text + "' (expected plain or csv)");
}

OutputRecord OutputRecord::from_report(const EvaluationReport& report, int significant_digits) {
  OutputRecord record;
  record.family = report.spec.family;
  record.alpha = report.spec.alpha;
  record.engine = report.engine;
  record.n = report.config.n;
  record.s_max = report.engine == Engine::Direct ? 0 : report.config.s_max;
  if (report.engine == Engine::Romberg) record.k_hat = report.config.k_hat;
  record.value = to_significant(report.value, significant_digits);
  for (const auto& c : report.corrections) {
    record.corrections.push_back(to_significant(c, significant_digits));
  }
  return record;
}

std::string OutputRecord::csv_header(int correction_columns) {
  std::string header = "series,alpha,engine,N,s_max,k_hat,value";
  for (int s = 1; s <= correction_columns; ++s) header += ",s" + std::to_string(s);
  return header;
}

std::string OutputRecord::csv_row() const {
  std::ostringstream out;
  out << static_cast<char>(family_letter(family) + ('a' - 'A')) << ',' << alpha << ','
      << engine_name(engine) << ',' << n << ',' << s_max << ',';
  if (k_hat) out << *k_hat;
  out << ',' << value;
  for (const auto& c : corrections) out << ',' << c;
  return out.str();
}

std::vector<Table1Row> compute_table1(const PrecisionContext& ctx) {
  std::vector<Table1Row> rows;
  const SeriesSpec spec = SeriesSpec::c(2);
  for (long n : kTable1SwitchOver) {
    for (long k_hat : kTable1KHat) {
      EngineConfig cfg;
      cfg.n = n;
      cfg.s_max = 3;
      cfg.k_hat = k_hat;
      cfg.precision = ctx;
      const EvaluationReport report = romberg_evaluate(spec, cfg);
      rows.push_back({n, k_hat, to_fixed(report.value, kTable1ValueDecimals),
                      to_fixed(report.corrections[0], kTable1CorrectionDecimals),
                      to_fixed(report.corrections[1], kTable1CorrectionDecimals)});
    }
  }
  return rows;
}

std::vector<Table2Row> compute_table2(const PrecisionContext& ctx) {
  std::vector<Table2Row> rows;
  for (int alpha : kTable2Alpha) {
    const SeriesSpec spec = SeriesSpec::c(alpha);
    // One run at the highest order per N; lower orders are prefixes of its
    // correction list.
    std::vector<EvaluationReport> reports;
    for (long n : kTable2SwitchOver) {
      EngineConfig cfg;
      cfg.n = n;
      cfg.s_max = kTable2MaxOrder;
      cfg.precision = ctx;
      reports.push_back(euler_maclaurin_evaluate(spec, cfg));
    }
    for (int s_hat = 0; s_hat <= kTable2MaxOrder; ++s_hat) {
      Table2Row row{alpha, s_hat, {}};
      for (std::size_t j = 0; j < reports.size(); ++j) {
        Real value = reports[j].direct_part + reports[j].tail_integral;
        for (int s = 1; s <= s_hat; ++s) value += reports[j].corrections[s - 1];
        row.values[j] = to_fixed(value, kTable2Decimals);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

std::string pad(const std::string& text, std::size_t width) {
  return text.size() >= width ? text + " " : text + std::string(width - text.size(), ' ');
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    fields.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

long to_long(const std::string& field) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != field.size()) {
    throw std::invalid_argument("expected an integer, got '" + field + "'");
  }
  return value;
}

const char* kTable1CsvHeader = "N,k_hat,C2,s1,s2";
const char* kTable2CsvHeader = "alpha,s_hat,N20,N40,N80";

}  // namespace

std::string render_table1(std::span<const Table1Row> rows, TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::Csv) {
    out << kTable1CsvHeader << '\n';
    for (const auto& r : rows) {
      out << r.n << ',' << r.k_hat << ',' << r.value << ',' << r.s1 << ',' << r.s2 << '\n';
    }
    return out.str();
  }
  out << pad("N", 5) << pad("k_hat", 7) << pad("C^(2)", 24) << pad("s=1", 17) << "s=2\n";
  for (const auto& r : rows) {
    out << pad(std::to_string(r.n), 5) << pad(std::to_string(r.k_hat), 7) << pad(r.value, 24)
        << pad(r.s1, 17) << r.s2 << '\n';
  }
  return out.str();
}

std::string render_table2(std::span<const Table2Row> rows, TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::Csv) {
    out << kTable2CsvHeader << '\n';
    for (const auto& r : rows) {
      out << r.alpha << ',' << r.s_hat << ',' << r.values[0] << ',' << r.values[1] << ','
          << r.values[2] << '\n';
    }
    return out.str();
  }
  out << pad("alpha", 7) << pad("s_hat", 7) << pad("N=20", 23) << pad("N=40", 23) << "N=80\n";
  for (const auto& r : rows) {
    out << pad(std::to_string(r.alpha), 7) << pad(std::to_string(r.s_hat), 7) << pad(r.values[0], 23)
        << pad(r.values[1], 23) << r.values[2] << '\n';
  }
  return out.str();
}

std::vector<Table1Row> parse_table1_csv(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines.front() != kTable1CsvHeader) {
    throw std::invalid_argument("table 1 csv: missing header");
  }
  std::vector<Table1Row> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i], ',');
    if (f.size() != 5) {
      throw std::invalid_argument("table 1 csv: expected 5 fields on line " + std::to_string(i + 1));
    }
    rows.push_back({to_long(f[0]), to_long(f[1]), f[2], f[3], f[4]});
  }
  return rows;
}

std::vector<Table2Row> parse_table2_csv(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines.front() != kTable2CsvHeader) {
    throw std::invalid_argument("table 2 csv: missing header");
  }
  std::vector<Table2Row> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i], ',');
    if (f.size() != 5) {
      throw std::invalid_argument("table 2 csv: expected 5 fields on line " + std::to_string(i + 1));
    }
    rows.push_back({static_cast<int>(to_long(f[0])), static_cast<int>(to_long(f[1])), {f[2], f[3], f[4]}});
  }
  return rows;
}

}  // namespace slowsum
