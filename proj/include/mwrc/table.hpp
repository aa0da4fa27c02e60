#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mwrc {

struct SweepRow {
  double x = 0.0;
  std::vector<double> values;

  friend bool operator==(const SweepRow &, const SweepRow &) = default;
};

/// Plot-ready sweep output: one x column followed by one column per scheme.
struct SweepTable {
  std::string x_label;
  std::vector<std::string> column_labels;
  std::vector<SweepRow> rows;

  /// Throws DomainError on unsorted x, ragged rows, or negative/non-finite
  /// values.
  void validate() const;

  /// Throws ConfigError if the label is absent.
  std::size_t column_index(std::string_view label) const;
  std::vector<double> column(std::string_view label) const;
  std::vector<double> xs() const;

  friend bool operator==(const SweepTable &, const SweepTable &) = default;
};

enum class TableFormat { Dat, Csv, Json };

/// 12 significant digits, shortest form ("%.12g").
std::string format_number(double v);

/// Header line of labels, then one line per row, whitespace separated.
void write_dat(std::ostream &os, const SweepTable &t);
void write_csv(std::ostream &os, const SweepTable &t);
/// {"x_label": ..., "columns": [...], "rows": [[x, v1, ...], ...]}
void write_json(std::ostream &os, const SweepTable &t);
void write_table(std::ostream &os, const SweepTable &t, TableFormat format);

} // namespace mwrc
