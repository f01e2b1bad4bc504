#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "volrisk/date.hpp"

namespace volrisk {

/// One daily close/volume observation.  Strict positivity is enforced at
/// ingest: the GBM log transform downstream requires it.
struct ObservationRecord {
  Date date;
  double close = 0.0;   // > 0
  double volume = 0.0;  // > 0

  friend bool operator==(const ObservationRecord&, const ObservationRecord&) = default;
};

/// One risk-free yield observation (annualized decimal fraction, e.g. 0.03).
/// May be negative.
struct RiskFreeRecord {
  Date date;
  double annual_yield = 0.0;

  friend bool operator==(const RiskFreeRecord&, const RiskFreeRecord&) = default;
};

/// Date-indexed table after alignment: prices/volumes on their common dates,
/// risk-free forward-filled onto those dates.  All vectors share length >= 2.
struct AlignedSeries {
  std::vector<Date> dates;
  std::vector<double> prices;
  std::vector<double> volumes;
  std::vector<double> risk_free;

  std::size_t size() const { return dates.size(); }
};

/// Column mapping and date format for CSV ingestion.
struct CsvSchema {
  std::string date_column = "date";
  std::string close_column = "close";
  std::string volume_column = "volume";
  std::string date_format = "%Y-%m-%d";
};

struct RiskFreeCsvSchema {
  std::string date_column = "date";
  std::string yield_column = "yield";
  std::string date_format = "%Y-%m-%d";
  bool yield_is_percent = false;  // divide by 100 on ingest
};

/// Reads price/volume observations from a CSV file with header.
/// Records are returned sorted ascending by date.
/// Throws: MissingColumn, UnparseableDate, NonPositiveValue, DuplicateDate,
/// IoFailure.
std::vector<ObservationRecord> ingest_csv(const std::string& path, const CsvSchema& schema = {});
std::vector<ObservationRecord> ingest_csv(std::istream& in, const CsvSchema& schema = {});

/// Reads risk-free yield observations; sorted ascending, duplicates rejected.
std::vector<RiskFreeRecord> ingest_risk_free_csv(const std::string& path,
                                                 const RiskFreeCsvSchema& schema = {});
std::vector<RiskFreeRecord> ingest_risk_free_csv(std::istream& in,
                                                 const RiskFreeCsvSchema& schema = {});

/// Serializes observations in the ingestible `date,close,volume` layout.
/// ingest(serialize(records)) == records, value-exactly.
void write_observations_csv(const std::vector<ObservationRecord>& records, std::ostream& out);
void write_risk_free_csv(const std::vector<RiskFreeRecord>& records, std::ostream& out);

/// Joins observations with the risk-free curve.  Output dates are exactly the
/// observation dates; yields are forward-filled (last known value carried
/// forward), and dates before the first yield observation take the first
/// available yield.  Throws EmptyIntersection when fewer than 2 observation
/// dates or no yields are available.
AlignedSeries align(const std::vector<ObservationRecord>& price_vol,
                    const std::vector<RiskFreeRecord>& rf);

/// Log increments: out[k] = ln(values[k+1]) - ln(values[k]).
/// Throws TooShort (length < 2) and NonPositive.
std::vector<double> log_increments(const std::vector<double>& values);

}  // namespace volrisk
