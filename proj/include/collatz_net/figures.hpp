#pragma once

// Figure data series and their CSV form.
//
// CSV: UTF-8, header row, ',' separator, '.' decimal point. A rational column `q` is
// written as `p/q` text and followed by a derived `q_decimal` column; a missing value
// is written as `-`. Reals always carry a '.' or an exponent so they re-parse as reals.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "collatz_net/natural.hpp"

namespace collatz {

using Cell = std::variant<std::monostate, Natural, Rational, double>;

enum class ColumnKind : unsigned char { Integer, Rational, Real };

struct Column {
  std::string name;
  ColumnKind kind;
  friend bool operator==(const Column&, const Column&) = default;
};

struct FigureSeries {
  std::string name;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  /// Throws std::logic_error unless every row has one cell per column, cells match
  /// their column kind (or are missing), and the first column strictly increases.
  void validate() const;

  friend bool operator==(const FigureSeries&, const FigureSeries&) = default;
};

struct FigureParams {
  std::uint32_t n_max = 0;          // succ, rb, table1; 0 picks the figure's default
  std::uint64_t range_first = 1;    // quotient
  std::uint64_t range_last = 150000;
  unsigned threads = 0;
};

inline constexpr std::string_view kFigureNames[] = {"succ", "rb", "quotient", "table1"};

/// succ: (n, a_n, log a_n, -log n, reference 1)
/// rb: (n, F(n+1)/F(n), phi_1..phi_4, log3/log2)
/// quotient: (x, B/R, 5/8) for o = 3, starts without a red step skipped
/// table1: (n, red, blue, B/R) with "-" at n = 0
/// Throws std::invalid_argument on an unknown name.
FigureSeries emit_figure(std::string_view name, const FigureParams& params = {});

void write_csv(const FigureSeries& series, std::ostream& out);
std::string to_csv(const FigureSeries& series);

/// Rebuilds a series from CSV text; `name` is not stored in the file.
FigureSeries parse_csv(std::string_view text, std::string name = {});

std::string format_real(double v);

}  // namespace collatz
