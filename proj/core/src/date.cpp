#include "volrisk/date.hpp"

#include <cstdio>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "volrisk/errors.hpp"

namespace volrisk {

namespace {

int days_in_month(int year, int month) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2) {
    const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    return leap ? 29 : 28;
  }
  return kDays[month - 1];
}

}  // namespace

bool is_valid_date(const Date& d) noexcept {
  if (d.month < 1 || d.month > 12) return false;
  if (d.day < 1 || d.day > days_in_month(d.year, d.month)) return false;
  return true;
}

Date parse_date(std::string_view text, const std::string& format) {
  std::tm tm{};
  std::istringstream in{std::string(text)};
  in >> std::get_time(&tm, format.c_str());
  if (in.fail()) {
    throw Error(Errc::unparseable_date,
                "cannot parse '" + std::string(text) + "' with format '" + format + "'");
  }
  // get_time leaves trailing garbage unread; reject it so "2020-01-0x" fails.
  char rest;
  if (in >> rest) {
    throw Error(Errc::unparseable_date,
                "trailing characters in date '" + std::string(text) + "'");
  }
  Date d{static_cast<std::int16_t>(tm.tm_year + 1900),
         static_cast<std::uint8_t>(tm.tm_mon + 1),
         static_cast<std::uint8_t>(tm.tm_mday)};
  if (!is_valid_date(d)) {
    throw Error(Errc::unparseable_date, "'" + std::string(text) + "' is not a calendar date");
  }
  return d;
}

std::string to_string(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", d.year, unsigned(d.month), unsigned(d.day));
  return buf;
}

}  // namespace volrisk
