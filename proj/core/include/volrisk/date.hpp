#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace volrisk {

/// Calendar date.  Packs to 4 bytes; ordering is plain lexicographic on
/// (year, month, day), which is all the toolkit needs -- consecutive rows are
/// one trading day apart by convention, never by calendar arithmetic.
struct Date {
  std::int16_t year = 0;
  std::uint8_t month = 0;  // 1..12
  std::uint8_t day = 0;    // 1..31

  friend auto operator<=>(const Date&, const Date&) = default;
};

bool is_valid_date(const Date& d) noexcept;

/// Parses `text` with a std::get_time format (default ISO-8601 `%Y-%m-%d`)
/// and validates the calendar (month range, day-in-month, leap years).
/// Throws Error{Errc::unparseable_date} on failure.
Date parse_date(std::string_view text, const std::string& format = "%Y-%m-%d");

/// ISO-8601 `YYYY-MM-DD`.
std::string to_string(const Date& d);

}  // namespace volrisk
