#pragma once

#include <compare>
#include <string>

namespace octs {

/// Civil date for daily series. Thin value type over std::chrono's calendar;
/// serial numbers count days since 1970-01-01.
struct Date {
  int year = 1970;
  unsigned month = 1;  // 1..12
  unsigned day = 1;    // 1..31

  static Date from_serial(long days_since_epoch);
  static Date parse_iso(const std::string& text);  // strict YYYY-MM-DD

  long serial() const;
  int weekday() const;  // 0 = Sunday .. 6 = Saturday
  Date plus_days(long n) const;
  std::string iso() const;
  bool valid() const;

  friend bool operator==(const Date&, const Date&) = default;
  friend auto operator<=>(const Date& a, const Date& b) {
    return a.serial() <=> b.serial();
  }
};

/// Day difference a - b.
inline long operator-(const Date& a, const Date& b) { return a.serial() - b.serial(); }

}  // namespace octs
