#include "collatz_net/figures.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "collatz_net/asymptotics.hpp"
#include "collatz_net/path_tree.hpp"
#include "collatz_net/scanner.hpp"

namespace collatz {

namespace {

bool kind_matches(const Cell& c, ColumnKind k) {
  switch (c.index()) {
    case 0: return true;
    case 1: return k == ColumnKind::Integer;
    case 2: return k == ColumnKind::Rational;
    case 3: return k == ColumnKind::Real;
  }
  return false;
}

Rational cell_key(const Cell& c) {
  if (auto* v = std::get_if<Natural>(&c)) return Rational(*v);
  if (auto* v = std::get_if<Rational>(&c)) return *v;
  if (auto* v = std::get_if<double>(&c)) return Rational(*v);
  throw std::logic_error("first column may not have missing values");
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    out.push_back(line.substr(pos, comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

bool looks_integer(std::string_view s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

double parse_real(std::string_view s) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw std::invalid_argument("bad real '" + std::string(s) + "'");
  return v;
}

FigureSeries figure_succ(std::uint32_t n_max) {
  FigureSeries f{"succ",
                 {{"n", ColumnKind::Integer},
                  {"a_n", ColumnKind::Real},
                  {"log_a_n", ColumnKind::Real},
                  {"neg_log_n", ColumnKind::Real},
                  {"reference", ColumnKind::Real}},
                 {}};
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    const double la = a_n_log(n).value;
    f.rows.push_back({Natural(n), std::exp(la), la, -std::log(static_cast<double>(n)), 1.0});
  }
  return f;
}

FigureSeries figure_rb(std::uint32_t n_max) {
  FigureSeries f{"rb",
                 {{"n", ColumnKind::Integer},
                  {"phi_n", ColumnKind::Rational},
                  {"phi_1", ColumnKind::Rational},
                  {"phi_2", ColumnKind::Rational},
                  {"phi_3", ColumnKind::Rational},
                  {"phi_4", ColumnKind::Rational},
                  {"log3_over_log2", ColumnKind::Real}},
                 {}};
  const double threshold = std::log(3.0) / std::numbers::ln2;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    f.rows.push_back({Natural(n), phi_n(n).value, phi_n(1).value, phi_n(2).value, phi_n(3).value, phi_n(4).value,
                      threshold});
  }
  return f;
}

FigureSeries figure_quotient(const FigureParams& p) {
  FigureSeries f{"quotient",
                 {{"x", ColumnKind::Integer}, {"br", ColumnKind::Rational}, {"cutoff", ColumnKind::Rational}},
                 {}};
  const Rational cutoff(5, 8);
  for (const auto& row : scan_rows(p.range_first, p.range_last, OddMultiplier::classic(), {}, p.threads)) {
    if (row.red == 0) continue;
    f.rows.push_back({natural_from_u64(row.start),
                      make_rational(natural_from_u64(row.blue), natural_from_u64(row.red)), cutoff});
  }
  return f;
}

FigureSeries figure_table1(std::uint32_t n_max) {
  FigureSeries f{"table1",
                 {{"n", ColumnKind::Integer},
                  {"red", ColumnKind::Integer},
                  {"blue", ColumnKind::Integer},
                  {"quotient", ColumnKind::Rational}},
                 {}};
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    const auto c = edge_counts(n);
    Cell q = n == 0 ? Cell{} : Cell{quotient(n)};
    f.rows.push_back({Natural(n), c.red_edges, c.blue_edges, q});
  }
  return f;
}

}  // namespace

void FigureSeries::validate() const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != columns.size()) throw std::logic_error("row width differs from column count");
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (!kind_matches(rows[r][c], columns[c].kind)) throw std::logic_error("cell kind differs from column kind");
    }
    if (r > 0 && !(cell_key(rows[r - 1][0]) < cell_key(rows[r][0]))) {
      throw std::logic_error("first column must strictly increase");
    }
  }
}

std::string format_real(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, p);
  if (s.find_first_of(".eEni") == std::string::npos) s += ".0";
  return s;
}

void write_csv(const FigureSeries& series, std::ostream& out) {
  for (std::size_t c = 0; c < series.columns.size(); ++c) {
    if (c) out << ',';
    out << series.columns[c].name;
    if (series.columns[c].kind == ColumnKind::Rational) out << ',' << series.columns[c].name << "_decimal";
  }
  out << '\n';
  for (const auto& row : series.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      const bool rational = series.columns[c].kind == ColumnKind::Rational;
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
              out << '-';
              if (rational) out << ",-";
            } else if constexpr (std::is_same_v<T, Natural>) {
              out << v.get_str();
            } else if constexpr (std::is_same_v<T, Rational>) {
              out << rational_text(v) << ',' << format_real(to_double(v));
            } else {
              out << format_real(v);
            }
          },
          row[c]);
    }
    out << '\n';
  }
}

std::string to_csv(const FigureSeries& series) {
  std::ostringstream os;
  write_csv(series, os);
  return os.str();
}

FigureSeries parse_csv(std::string_view text, std::string name) {
  std::vector<std::vector<std::string_view>> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(split(line));
    pos = nl + 1;
  }
  if (lines.empty()) throw std::invalid_argument("CSV without header");

  const auto& header = lines.front();
  // Map each logical column to its field index.
  FigureSeries f{std::move(name), {}, {}};
  std::vector<std::size_t> field;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const bool rational = i + 1 < header.size() && header[i + 1] == std::string(header[i]) + "_decimal";
    f.columns.push_back({std::string(header[i]), rational ? ColumnKind::Rational : ColumnKind::Integer});
    field.push_back(i);
    if (rational) ++i;
  }
  for (std::size_t c = 0; c < f.columns.size(); ++c) {
    if (f.columns[c].kind == ColumnKind::Rational) continue;
    for (std::size_t r = 1; r < lines.size(); ++r) {
      const auto s = lines[r].at(field[c]);
      if (s != "-" && !looks_integer(s)) {
        f.columns[c].kind = ColumnKind::Real;
        break;
      }
    }
  }
  for (std::size_t r = 1; r < lines.size(); ++r) {
    if (lines[r].size() != header.size()) throw std::invalid_argument("CSV row width differs from header");
    std::vector<Cell> row;
    for (std::size_t c = 0; c < f.columns.size(); ++c) {
      const auto s = lines[r][field[c]];
      if (s == "-") {
        row.emplace_back();
        continue;
      }
      switch (f.columns[c].kind) {
        case ColumnKind::Integer: row.emplace_back(parse_natural(s)); break;
        case ColumnKind::Rational: row.emplace_back(parse_rational(s)); break;
        case ColumnKind::Real: row.emplace_back(parse_real(s)); break;
      }
    }
    f.rows.push_back(std::move(row));
  }
  return f;
}

FigureSeries emit_figure(std::string_view name, const FigureParams& params) {
  FigureSeries f;
  if (name == "succ") f = figure_succ(params.n_max ? params.n_max : 40);
  else if (name == "rb") f = figure_rb(params.n_max ? params.n_max : 30);
  else if (name == "quotient") f = figure_quotient(params);
  else if (name == "table1") f = figure_table1(params.n_max ? params.n_max : 7);
  else throw std::invalid_argument("unknown figure '" + std::string(name) + "'");
  f.validate();
  return f;
}

}  // namespace collatz
