#pragma once

#include <array>
#include <string_view>

namespace clima::calendar {

constexpr bool is_leap(int year) { return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0; }

constexpr int days_in_month(int month, bool leap) {
  constexpr std::array<int, 12> kDays{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12) return 0;
  return (month == 2 && leap) ? 29 : kDays[static_cast<std::size_t>(month - 1)];
}

/// 1-based day of year.
constexpr int day_of_year(int month, int day, bool leap) {
  int doy = day;
  for (int m = 1; m < month; ++m) doy += days_in_month(m, leap);
  return doy;
}

constexpr std::string_view month_name(int month) {
  constexpr std::array<std::string_view, 12> kNames{"January", "February", "March",     "April",   "May",      "June",
                                                    "July",    "August",   "September", "October", "November", "December"};
  return (month >= 1 && month <= 12) ? kNames[static_cast<std::size_t>(month - 1)] : std::string_view{};
}

constexpr std::string_view month_abbrev(int month) {
  constexpr std::array<std::string_view, 12> kNames{"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                    "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
  return (month >= 1 && month <= 12) ? kNames[static_cast<std::size_t>(month - 1)] : std::string_view{};
}

}  // namespace clima::calendar
