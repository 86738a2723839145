#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace agtd {

/// Seconds since the Unix epoch, always UTC.
using UtcSeconds = std::int64_t;

constexpr std::int64_t kSecondsPerDay = 86400;

// Parses "YYYY-MM-DDTHH:MM:SSZ" (strict, second resolution).
// Throws ParseError on anything else.
UtcSeconds parse_iso8601(std::string_view text);

std::string format_iso8601(UtcSeconds t);

// Day bucket with day boundaries at UTC midnight. Negative times round down.
std::int64_t utc_day_index(UtcSeconds t);

// Whole days between two instants, floored, never negative.
std::int64_t days_between(UtcSeconds earlier, UtcSeconds later);

}  // namespace agtd
