#include "mwrc/table.hpp"

#include "mwrc/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace mwrc {

void SweepTable::validate() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow &r = rows[i];
    if (i > 0 && !(r.x > rows[i - 1].x))
      throw DomainError("sweep table: x values must be strictly ascending");
    if (r.values.size() != column_labels.size())
      throw DomainError("sweep table: row width does not match header");
    for (double v : r.values)
      if (!std::isfinite(v) || v < 0.0)
        throw DomainError("sweep table: values must be finite and >= 0");
  }
}

std::size_t SweepTable::column_index(std::string_view label) const {
  const auto it = std::find(column_labels.begin(), column_labels.end(), label);
  if (it == column_labels.end())
    throw ConfigError("sweep table has no column '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - column_labels.begin());
}

std::vector<double> SweepTable::column(std::string_view label) const {
  const std::size_t k = column_index(label);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const SweepRow &r : rows)
    out.push_back(r.values[k]);
  return out;
}

std::vector<double> SweepTable::xs() const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const SweepRow &r : rows)
    out.push_back(r.x);
  return out;
}

std::string format_number(double v) {
  char buf[32];
  // Avoid "-0" for values that round to zero from below.
  if (v == 0.0)
    v = 0.0;
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

void write_delimited(std::ostream &os, const SweepTable &t, char sep) {
  os << t.x_label;
  for (const std::string &l : t.column_labels)
    os << sep << l;
  os << '\n';
  for (const SweepRow &r : t.rows) {
    os << format_number(r.x);
    for (double v : r.values)
      os << sep << format_number(v);
    os << '\n';
  }
}

// Numbers go through the 12-digit text form so every format agrees.
double rounded(double v) { return std::stod(format_number(v)); }

} // namespace

void write_dat(std::ostream &os, const SweepTable &t) { write_delimited(os, t, ' '); }

void write_csv(std::ostream &os, const SweepTable &t) { write_delimited(os, t, ','); }

void write_json(std::ostream &os, const SweepTable &t) {
  nlohmann::ordered_json j;
  j["x_label"] = t.x_label;
  j["columns"] = t.column_labels;
  auto rows = nlohmann::ordered_json::array();
  for (const SweepRow &r : t.rows) {
    auto row = nlohmann::ordered_json::array();
    row.push_back(rounded(r.x));
    for (double v : r.values)
      row.push_back(rounded(v));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  os << j.dump(2) << '\n';
}

void write_table(std::ostream &os, const SweepTable &t, TableFormat format) {
  switch (format) {
  case TableFormat::Dat:
    write_dat(os, t);
    return;
  case TableFormat::Csv:
    write_csv(os, t);
    return;
  case TableFormat::Json:
    write_json(os, t);
    return;
  }
}

} // namespace mwrc
