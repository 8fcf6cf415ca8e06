#pragma once

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace arxivnet {

// Seconds since the Unix epoch, UTC.
using UnixSeconds = std::int64_t;

namespace detail {

inline bool read_fixed_int(std::string_view s, std::size_t pos, std::size_t len, int& out) {
  if (pos + len > s.size()) return false;
  for (std::size_t i = pos; i < pos + len; ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  auto [p, ec] = std::from_chars(s.data() + pos, s.data() + pos + len, out);
  return ec == std::errc{} && p == s.data() + pos + len;
}

inline std::optional<std::chrono::sys_days> read_date(std::string_view s) {
  int y = 0, m = 0, d = 0;
  if (s.size() < 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  if (!read_fixed_int(s, 0, 4, y) || !read_fixed_int(s, 5, 2, m) || !read_fixed_int(s, 8, 2, d))
    return std::nullopt;
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                  std::chrono::day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  return std::chrono::sys_days{ymd};
}

}  // namespace detail

// Parses an ISO calendar date "YYYY-MM-DD" into days since the epoch.
inline std::optional<std::int64_t> parse_iso_date(std::string_view s) {
  if (s.size() != 10) return std::nullopt;
  auto days = detail::read_date(s);
  if (!days) return std::nullopt;
  return days->time_since_epoch().count();
}

// Parses an RFC 3339 timestamp. Fractional seconds are truncated; a numeric
// offset is folded into UTC. A bare "YYYY-MM-DDTHH:MM:SS" is taken as UTC.
inline std::optional<UnixSeconds> parse_rfc3339(std::string_view s) {
  auto days = detail::read_date(s);
  if (!days || s.size() < 19) return std::nullopt;
  if (s[10] != 'T' && s[10] != 't' && s[10] != ' ') return std::nullopt;
  int hh = 0, mm = 0, ss = 0;
  if (s[13] != ':' || s[16] != ':' || !detail::read_fixed_int(s, 11, 2, hh) ||
      !detail::read_fixed_int(s, 14, 2, mm) || !detail::read_fixed_int(s, 17, 2, ss))
    return std::nullopt;
  if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;

  std::size_t pos = 19;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    const std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) return std::nullopt;
  }
  std::int64_t offset = 0;
  if (pos == s.size()) {
    // no zone designator
  } else if ((s[pos] == 'Z' || s[pos] == 'z') && pos + 1 == s.size()) {
    // UTC
  } else if ((s[pos] == '+' || s[pos] == '-') && pos + 6 == s.size() && s[pos + 3] == ':') {
    int oh = 0, om = 0;
    if (!detail::read_fixed_int(s, pos + 1, 2, oh) || !detail::read_fixed_int(s, pos + 4, 2, om))
      return std::nullopt;
    offset = (oh * 3600 + om * 60) * (s[pos] == '+' ? 1 : -1);
  } else {
    return std::nullopt;
  }
  const std::int64_t day_secs = static_cast<std::int64_t>(days->time_since_epoch().count()) * 86400;
  return day_secs + hh * 3600 + mm * 60 + ss - offset;
}

inline std::string format_rfc3339(UnixSeconds t) {
  using namespace std::chrono;
  const sys_seconds tp{seconds{t}};
  const auto day = floor<days>(tp);
  const year_month_day ymd{day};
  const hh_mm_ss hms{tp - day};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

inline std::string format_iso_date(std::int64_t days_since_epoch) {
  using namespace std::chrono;
  const year_month_day ymd{sys_days{days{days_since_epoch}}};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

// Calendar year (UTC) of an instant.
inline int utc_year(UnixSeconds t) {
  using namespace std::chrono;
  const year_month_day ymd{floor<days>(sys_seconds{seconds{t}})};
  return static_cast<int>(ymd.year());
}

}  // namespace arxivnet
