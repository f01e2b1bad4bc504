#include "volrisk/market_data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "volrisk/csv.hpp"
#include "volrisk/errors.hpp"

namespace volrisk {

namespace {

std::size_t require_column(const csv::Table& table, const std::string& name) {
  auto idx = table.column(name);
  if (idx == csv::Table::npos) {
    throw Error(Errc::missing_column, "column '" + name + "' not found in header");
  }
  return idx;
}

double parse_positive(const std::string& cell, const char* what, std::size_t row) {
  double v;
  if (!csv::parse_double(cell, v)) {
    throw Error(Errc::non_positive_value,
                std::string(what) + " '" + cell + "' is not a number (row " +
                    std::to_string(row) + ")");
  }
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(Errc::non_positive_value,
                std::string(what) + " must be > 0, got '" + cell + "' (row " +
                    std::to_string(row) + ")");
  }
  return v;
}

template <typename Record>
void sort_and_reject_duplicates(std::vector<Record>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const Record& a, const Record& b) { return a.date < b.date; });
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].date == records[i - 1].date) {
      throw Error(Errc::duplicate_date,
                  "duplicate date " + to_string(records[i].date) + " (row " +
                      std::to_string(i + 1) + " after sorting)");
    }
  }
}

}  // namespace

std::vector<ObservationRecord> ingest_csv(std::istream& in, const CsvSchema& schema) {
  const auto table = csv::read(in);
  const auto date_idx = require_column(table, schema.date_column);
  const auto close_idx = require_column(table, schema.close_column);
  const auto volume_idx = require_column(table, schema.volume_column);

  std::vector<ObservationRecord> records;
  records.reserve(table.rows.size());
  std::size_t row_no = 1;  // header is row 0
  for (const auto& row : table.rows) {
    ++row_no;
    const auto need = std::max({date_idx, close_idx, volume_idx});
    if (row.size() <= need) {
      throw Error(Errc::missing_column, "row " + std::to_string(row_no) + " has too few cells");
    }
    ObservationRecord rec;
    rec.date = parse_date(row[date_idx], schema.date_format);
    rec.close = parse_positive(row[close_idx], "close", row_no);
    rec.volume = parse_positive(row[volume_idx], "volume", row_no);
    records.push_back(rec);
  }
  sort_and_reject_duplicates(records);
  return records;
}

std::vector<ObservationRecord> ingest_csv(const std::string& path, const CsvSchema& schema) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_failure, "cannot open '" + path + "'");
  return ingest_csv(in, schema);
}

std::vector<RiskFreeRecord> ingest_risk_free_csv(std::istream& in,
                                                 const RiskFreeCsvSchema& schema) {
  const auto table = csv::read(in);
  const auto date_idx = require_column(table, schema.date_column);
  const auto yield_idx = require_column(table, schema.yield_column);

  std::vector<RiskFreeRecord> records;
  records.reserve(table.rows.size());
  std::size_t row_no = 1;
  for (const auto& row : table.rows) {
    ++row_no;
    if (row.size() <= std::max(date_idx, yield_idx)) {
      throw Error(Errc::missing_column, "row " + std::to_string(row_no) + " has too few cells");
    }
    RiskFreeRecord rec;
    rec.date = parse_date(row[date_idx], schema.date_format);
    if (!csv::parse_double(row[yield_idx], rec.annual_yield) ||
        !std::isfinite(rec.annual_yield)) {
      throw Error(Errc::non_positive_value, "yield '" + row[yield_idx] +
                                                "' is not a finite number (row " +
                                                std::to_string(row_no) + ")");
    }
    if (schema.yield_is_percent) rec.annual_yield /= 100.0;
    records.push_back(rec);
  }
  sort_and_reject_duplicates(records);
  return records;
}

std::vector<RiskFreeRecord> ingest_risk_free_csv(const std::string& path,
                                                 const RiskFreeCsvSchema& schema) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_failure, "cannot open '" + path + "'");
  return ingest_risk_free_csv(in, schema);
}

void write_observations_csv(const std::vector<ObservationRecord>& records, std::ostream& out) {
  out << "date,close,volume\n";
  for (const auto& rec : records) {
    out << to_string(rec.date) << ',' << csv::format_double(rec.close) << ','
        << csv::format_double(rec.volume) << '\n';
  }
}

void write_risk_free_csv(const std::vector<RiskFreeRecord>& records, std::ostream& out) {
  out << "date,yield\n";
  for (const auto& rec : records) {
    out << to_string(rec.date) << ',' << csv::format_double(rec.annual_yield) << '\n';
  }
}

AlignedSeries align(const std::vector<ObservationRecord>& price_vol,
                    const std::vector<RiskFreeRecord>& rf) {
  if (price_vol.size() < 2) {
    throw Error(Errc::empty_intersection, "need at least 2 price/volume dates, got " +
                                              std::to_string(price_vol.size()));
  }
  if (rf.empty()) {
    throw Error(Errc::empty_intersection, "risk-free series is empty");
  }

  AlignedSeries out;
  out.dates.reserve(price_vol.size());
  out.prices.reserve(price_vol.size());
  out.volumes.reserve(price_vol.size());
  out.risk_free.reserve(price_vol.size());

  // Forward fill: walk both sorted sequences once.  Dates before the first
  // yield observation take the first available yield.
  std::size_t j = 0;
  double current_yield = rf.front().annual_yield;
  for (const auto& rec : price_vol) {
    while (j < rf.size() && rf[j].date <= rec.date) {
      current_yield = rf[j].annual_yield;
      ++j;
    }
    out.dates.push_back(rec.date);
    out.prices.push_back(rec.close);
    out.volumes.push_back(rec.volume);
    out.risk_free.push_back(current_yield);
  }
  return out;
}

std::vector<double> log_increments(const std::vector<double>& values) {
  if (values.size() < 2) {
    throw Error(Errc::too_short, "need at least 2 values, got " + std::to_string(values.size()));
  }
  std::vector<double> out;
  out.reserve(values.size() - 1);
  double prev_log = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw Error(Errc::non_positive, "value at index " + std::to_string(i) + " is not > 0");
    }
    const double cur_log = std::log(values[i]);
    if (i > 0) out.push_back(cur_log - prev_log);
    prev_log = cur_log;
  }
  return out;
}

}  // namespace volrisk
