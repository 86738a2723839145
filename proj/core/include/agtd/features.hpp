#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "agtd/tweet.hpp"

namespace agtd {

enum class DeviceType : std::uint8_t { Mobile, Web, App, Smm, Bot, Other };
inline constexpr std::size_t kDeviceTypeCount = 6;

const char* to_string(DeviceType d);
DeviceType device_type_from(const std::string& name);  // throws ParseError

/// Source string -> device category; lookup is total (unmapped -> Other).
/// Loaded from a tab-separated file: source<TAB>category, '#' comments.
class SourceTaxonomy {
public:
    SourceTaxonomy() = default;

    static SourceTaxonomy load(std::istream& in);
    static SourceTaxonomy load_file(const std::string& path);
    /// Built-in mapping used when no file is given; covers the common
    /// clients plus the sources emitted by the synthetic generator.
    static SourceTaxonomy builtin();

    void add(const std::string& source, DeviceType type);
    DeviceType lookup(const std::string& source) const;
    std::size_t size() const { return map_.size(); }

private:
    std::unordered_map<std::string, DeviceType> map_;
};

/// The nine per-tweet properties computable from tweet metadata alone.
struct TweetProperties {
    bool is_reply = false;
    bool is_retweet = false;
    double hashtag_density = 0.0;
    double url_density = 0.0;
    double mention_density = 0.0;
    double account_reputation = 0.0;  // followers / (followers + friends), 0/0 -> 0
    double tweets_per_day = 0.0;
    double favorites_per_day = 0.0;
    DeviceType device_type = DeviceType::Other;
};

TweetProperties tweet_properties(const Tweet& t, const SourceTaxonomy& tax);

// ---------------------------------------------------------------------------
// Timeline-derived user properties. Periodicity statistics use fifteen bins
// throughout. Inter-arrival deltas feed the entropies (hour component capped
// at 14, minute/second components binned 0..59 into widths of 4); the
// chi-squared tests use minute-of-hour and second-of-minute of the absolute
// posting times against a uniform expectation.

inline constexpr std::size_t kPeriodicityBins = 15;
double max_entropy_bits();  // log2(15)

/// Shannon entropy of integer samples histogrammed into fifteen equal-width
/// bins over [lo, hi]. Samples must be non-empty and within range.
double entropy_of_samples(const std::vector<std::int64_t>& samples,
                          std::int64_t lo, std::int64_t hi);

/// Upper-tail p-value of the uniformity chi-squared statistic (14 dof) for
/// integer samples histogrammed into fifteen equal-width bins over [lo, hi].
double chi_squared_p_of_samples(const std::vector<std::int64_t>& samples,
                                std::int64_t lo, std::int64_t hi);

struct TimelineProperties {
    double hashtag_ratio = 0.0;  // total entities over the RATs / |RATs|; may exceed 1
    double url_ratio = 0.0;
    double mention_ratio = 0.0;
    double retweet_ratio = 0.0;
    double reply_ratio = 0.0;
    std::array<double, kDeviceTypeCount> source_ratio{};  // sums to 1
    double entropy_hour = 0.0;
    double entropy_min = 0.0;
    double entropy_sec = 0.0;
    double chi_squared_min = 1.0;  // p-values
    double chi_squared_sec = 1.0;
};

inline constexpr std::size_t kTimelinePropertyCount = 16;

/// Requires non-empty `rats` ordered oldest to newest (by created_at).
/// A single-tweet timeline gets the uninformative fallbacks: entropies at
/// log2(15) and p-values at 1.
TimelineProperties timeline_properties(const std::vector<Tweet>& rats,
                                       const SourceTaxonomy& tax);

}  // namespace agtd
