#include "octs/calendar.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <stdexcept>

namespace octs {

namespace {

std::chrono::year_month_day to_ymd(const Date& d) {
  return std::chrono::year_month_day{std::chrono::year{d.year},
                                     std::chrono::month{d.month},
                                     std::chrono::day{d.day}};
}

}  // namespace

Date Date::from_serial(long days_since_epoch) {
  using namespace std::chrono;
  const sys_days sd{days{days_since_epoch}};
  const year_month_day ymd{sd};
  return Date{static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
              static_cast<unsigned>(ymd.day())};
}

Date Date::parse_iso(const std::string& text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-')
    throw std::invalid_argument("date not in YYYY-MM-DD form: '" + text + "'");
  auto parse_field = [&](int from, int to) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + from, text.data() + to, value);
    if (ec != std::errc{} || ptr != text.data() + to)
      throw std::invalid_argument("date not in YYYY-MM-DD form: '" + text + "'");
    return value;
  };
  Date d{parse_field(0, 4), static_cast<unsigned>(parse_field(5, 7)),
         static_cast<unsigned>(parse_field(8, 10))};
  if (!d.valid()) throw std::invalid_argument("invalid calendar date: '" + text + "'");
  return d;
}

long Date::serial() const {
  return std::chrono::sys_days{to_ymd(*this)}.time_since_epoch().count();
}

int Date::weekday() const {
  const std::chrono::weekday wd{std::chrono::sys_days{to_ymd(*this)}};
  return static_cast<int>(wd.c_encoding());
}

Date Date::plus_days(long n) const { return from_serial(serial() + n); }

std::string Date::iso() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", year, month, day);
  return buf;
}

bool Date::valid() const { return to_ymd(*this).ok(); }

}  // namespace octs
