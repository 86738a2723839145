#include "agtd/time_util.hpp"

#include <array>
#include <cstdio>

#include "agtd/errors.hpp"

namespace agtd {
namespace {

// Days since 1970-01-01 for a civil date (proleptic Gregorian).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y += m <= 2;
}

bool is_leap(std::int64_t y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

unsigned days_in_month(std::int64_t y, unsigned m) {
    static constexpr std::array<unsigned, 12> lengths = {31, 28, 31, 30, 31, 30,
                                                         31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return lengths[m - 1];
}

}  // namespace

UtcSeconds parse_iso8601(std::string_view text) {
    // Fixed layout: 2017-01-31T23:59:59Z
    int y, mo, d, h, mi, s;
    char tsep, zsep;
    std::string buf(text);
    if (std::sscanf(buf.c_str(), "%4d-%2d-%2d%c%2d:%2d:%2d%c",
                    &y, &mo, &d, &tsep, &h, &mi, &s, &zsep) != 8 ||
        buf.size() != 20 || tsep != 'T' || zsep != 'Z') {
        throw ParseError("bad timestamp \"" + buf + "\" (expected YYYY-MM-DDTHH:MM:SSZ)");
    }
    if (mo < 1 || mo > 12 || d < 1 ||
        static_cast<unsigned>(d) > days_in_month(y, static_cast<unsigned>(mo)) ||
        h < 0 || h > 23 || mi < 0 || mi > 59 || s < 0 || s > 59) {
        throw ParseError("timestamp out of range: \"" + buf + "\"");
    }
    return days_from_civil(y, static_cast<unsigned>(mo), static_cast<unsigned>(d)) *
               kSecondsPerDay +
           h * 3600 + mi * 60 + s;
}

std::string format_iso8601(UtcSeconds t) {
    std::int64_t days = utc_day_index(t);
    std::int64_t rem = t - days * kSecondsPerDay;
    std::int64_t y;
    unsigned mo, d;
    civil_from_days(days, y, mo, d);
    char buf[24];
    std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                  static_cast<long long>(y), mo, d,
                  static_cast<long long>(rem / 3600),
                  static_cast<long long>((rem / 60) % 60),
                  static_cast<long long>(rem % 60));
    return buf;
}

std::int64_t utc_day_index(UtcSeconds t) {
    std::int64_t d = t / kSecondsPerDay;
    if (t < 0 && t % kSecondsPerDay != 0) --d;
    return d;
}

std::int64_t days_between(UtcSeconds earlier, UtcSeconds later) {
    if (later <= earlier) return 0;
    return (later - earlier) / kSecondsPerDay;
}

}  // namespace agtd
