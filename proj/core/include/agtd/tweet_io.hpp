#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agtd/tweet.hpp"

namespace agtd {

// Line-delimited JSON ingestion. One object per line, flat fields only;
// docs/golden fixture (tests/data/golden_tweets.ldjson) pin the layout.

/// Parses one record. `line_no` only feeds error messages.
/// The optional "label" field is returned separately when present.
struct ParsedRecord {
    Tweet tweet;
    std::optional<Label> label;
};

ParsedRecord parse_record(std::string_view line, std::size_t line_no = 0);

std::string serialize_record(const Tweet& t, std::optional<Label> label = std::nullopt);

enum class OnBadLine { Abort, SkipWithWarning };

struct ReadStats {
    std::size_t lines = 0;
    std::size_t skipped = 0;
};

/// Streams records from `in` in file order, invoking `sink` per record.
/// Blank lines are ignored. Bad lines follow `policy`; warnings go to
/// `warn` when provided (one line per skipped record).
ReadStats read_stream(std::istream& in,
                      const std::function<void(ParsedRecord&&)>& sink,
                      OnBadLine policy = OnBadLine::Abort,
                      std::ostream* warn = nullptr);

ReadStats read_stream_file(const std::string& path,
                           const std::function<void(ParsedRecord&&)>& sink,
                           OnBadLine policy = OnBadLine::Abort,
                           std::ostream* warn = nullptr);

std::vector<Tweet> read_tweets_file(const std::string& path,
                                    OnBadLine policy = OnBadLine::Abort);

/// Reads a labeled corpus; records without a "label" field are an error.
std::vector<LabeledTweet> read_labeled_file(const std::string& path,
                                            OnBadLine policy = OnBadLine::Abort);

void write_tweets_file(const std::string& path, const std::vector<Tweet>& tweets);
void write_labeled_file(const std::string& path, const std::vector<LabeledTweet>& tweets);

}  // namespace agtd
