#pragma once

#include <cstdint>
#include <string>

#include "agtd/time_util.hpp"

namespace agtd {

/// One ingested message. Immutable by convention after construction;
/// safe to share across threads.
struct Tweet {
    std::int64_t id = 0;
    std::int64_t user_id = 0;
    UtcSeconds created_at = 0;
    std::string text;

    std::uint32_t hashtag_count = 0;
    std::uint32_t url_count = 0;
    std::uint32_t mention_count = 0;
    std::uint32_t media_count = 0;
    // Count of numeric literals in the text; derived at ingestion, not read
    // from the record, so it always agrees with the tokenizer.
    std::uint32_t number_count = 0;

    std::string source;
    bool is_reply = false;
    bool is_retweet = false;

    std::int64_t followers = 0;
    std::int64_t friends = 0;
    std::int64_t statuses_count = 0;
    std::int64_t favourites_count = 0;
    UtcSeconds account_created_at = 0;

    bool operator==(const Tweet&) const = default;
};

enum class Label : std::uint8_t { AGT, HGT };

inline const char* to_string(Label l) { return l == Label::AGT ? "AGT" : "HGT"; }

struct LabeledTweet {
    Tweet tweet;
    Label label = Label::HGT;

    bool operator==(const LabeledTweet&) const = default;
};

}  // namespace agtd
