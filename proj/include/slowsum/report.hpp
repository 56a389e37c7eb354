#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slowsum/engines.hpp"

namespace slowsum {

enum class TableFormat { Plain, Csv };

TableFormat parse_table_format(const std::string& text);

/// One evaluation rendered to decimal strings.
struct OutputRecord {
  Family family = Family::C;
  int alpha = 2;
  Engine engine = Engine::EulerMaclaurin;
  long n = 0;
  int s_max = 0;
  std::optional<long> k_hat;
  std::string value;
  std::vector<std::string> corrections;

  static OutputRecord from_report(const EvaluationReport& report, int significant_digits);
  static std::string csv_header(int correction_columns);
  std::string csv_row() const;
};

// Convergence of the Romberg engine for C^(2) at s_max = 3.
inline constexpr std::array<long, 3> kTable1SwitchOver{20, 40, 80};
inline constexpr std::array<long, 5> kTable1KHat{400, 800, 1600, 3200, 6400};
inline constexpr int kTable1ValueDecimals = 19;
inline constexpr int kTable1CorrectionDecimals = 13;

struct Table1Row {
  long n = 0;
  long k_hat = 0;
  std::string value;
  std::string s1;
  std::string s2;

  friend bool operator==(const Table1Row&, const Table1Row&) = default;
};

// Convergence of the Euler-Maclaurin engine for C^(alpha).
inline constexpr std::array<int, 4> kTable2Alpha{2, 3, 4, 5};
inline constexpr int kTable2MaxOrder = 5;
inline constexpr std::array<long, 3> kTable2SwitchOver{20, 40, 80};
inline constexpr int kTable2Decimals = 15;

struct Table2Row {
  int alpha = 2;
  int s_hat = 0;
  std::array<std::string, 3> values;  ///< one per kTable2SwitchOver entry

  friend bool operator==(const Table2Row&, const Table2Row&) = default;
};

std::vector<Table1Row> compute_table1(const PrecisionContext& ctx = {});
std::vector<Table2Row> compute_table2(const PrecisionContext& ctx = {});

std::string render_table1(std::span<const Table1Row> rows, TableFormat format);
std::string render_table2(std::span<const Table2Row> rows, TableFormat format);

/// Inverse of render_table*(..., Csv). Throws std::invalid_argument on
/// malformed input.
std::vector<Table1Row> parse_table1_csv(std::string_view text);
std::vector<Table2Row> parse_table2_csv(std::string_view text);

}  // namespace slowsum
