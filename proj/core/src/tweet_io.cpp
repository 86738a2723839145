#include "agtd/tweet_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "agtd/errors.hpp"
#include "agtd/textprep.hpp"

namespace agtd {
namespace {

using nlohmann::json;

bool whitespace_only(std::string_view s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

std::int64_t require_int(const json& j, const char* field, std::size_t line_no,
                         bool non_negative = false) {
    auto it = j.find(field);
    if (it == j.end()) throw SchemaError(field, "missing required field", line_no);
    if (!it->is_number_integer())
        throw SchemaError(field, "expected an integer", line_no);
    std::int64_t v = it->get<std::int64_t>();
    if (non_negative && v < 0)
        throw SchemaError(field, "must be non-negative", line_no);
    return v;
}

std::string require_string(const json& j, const char* field, std::size_t line_no) {
    auto it = j.find(field);
    if (it == j.end()) throw SchemaError(field, "missing required field", line_no);
    if (!it->is_string()) throw SchemaError(field, "expected a string", line_no);
    return it->get<std::string>();
}

bool require_bool(const json& j, const char* field, std::size_t line_no) {
    auto it = j.find(field);
    if (it == j.end()) throw SchemaError(field, "missing required field", line_no);
    if (!it->is_boolean()) throw SchemaError(field, "expected a boolean", line_no);
    return it->get<bool>();
}

UtcSeconds require_timestamp(const json& j, const char* field, std::size_t line_no) {
    std::string s = require_string(j, field, line_no);
    try {
        return parse_iso8601(s);
    } catch (const ParseError& e) {
        throw SchemaError(field, e.what(), line_no);
    }
}

}  // namespace

ParsedRecord parse_record(std::string_view line, std::size_t line_no) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed record: ") + e.what(), line_no);
    }
    if (!j.is_object()) throw ParseError("record is not a JSON object", line_no);

    ParsedRecord rec;
    Tweet& t = rec.tweet;
    t.id = require_int(j, "id", line_no);
    t.user_id = require_int(j, "user_id", line_no);
    t.created_at = require_timestamp(j, "created_at", line_no);
    t.text = require_string(j, "text", line_no);
    if (t.text.empty() || whitespace_only(t.text))
        throw SchemaError("text", "empty or whitespace-only text", line_no);

    t.hashtag_count = static_cast<std::uint32_t>(require_int(j, "hashtag_count", line_no, true));
    t.url_count = static_cast<std::uint32_t>(require_int(j, "url_count", line_no, true));
    t.mention_count = static_cast<std::uint32_t>(require_int(j, "mention_count", line_no, true));
    t.media_count = static_cast<std::uint32_t>(require_int(j, "media_count", line_no, true));
    // Derived, never read from the record: keeps the count aligned with the
    // tokenizer no matter who wrote the file.
    t.number_count = count_numeric_literals(t.text);

    t.source = require_string(j, "source", line_no);
    t.is_reply = require_bool(j, "is_reply", line_no);
    t.is_retweet = require_bool(j, "is_retweet", line_no);

    t.followers = require_int(j, "followers", line_no, true);
    t.friends = require_int(j, "friends", line_no, true);
    t.statuses_count = require_int(j, "statuses_count", line_no, true);
    t.favourites_count = require_int(j, "favourites_count", line_no, true);
    t.account_created_at = require_timestamp(j, "account_created_at", line_no);

    if (t.created_at < t.account_created_at)
        throw SchemaError("created_at", "tweet predates account creation", line_no);

    if (auto it = j.find("label"); it != j.end()) {
        std::string lab = it->get<std::string>();
        if (lab == "AGT") rec.label = Label::AGT;
        else if (lab == "HGT") rec.label = Label::HGT;
        else throw SchemaError("label", "expected \"AGT\" or \"HGT\", got \"" + lab + "\"", line_no);
    }
    return rec;
}

std::string serialize_record(const Tweet& t, std::optional<Label> label) {
    json j;
    j["id"] = t.id;
    j["user_id"] = t.user_id;
    j["created_at"] = format_iso8601(t.created_at);
    j["text"] = t.text;
    j["hashtag_count"] = t.hashtag_count;
    j["url_count"] = t.url_count;
    j["mention_count"] = t.mention_count;
    j["media_count"] = t.media_count;
    j["source"] = t.source;
    j["is_reply"] = t.is_reply;
    j["is_retweet"] = t.is_retweet;
    j["followers"] = t.followers;
    j["friends"] = t.friends;
    j["statuses_count"] = t.statuses_count;
    j["favourites_count"] = t.favourites_count;
    j["account_created_at"] = format_iso8601(t.account_created_at);
    if (label) j["label"] = to_string(*label);
    return j.dump();
}

ReadStats read_stream(std::istream& in,
                      const std::function<void(ParsedRecord&&)>& sink,
                      OnBadLine policy, std::ostream* warn) {
    ReadStats stats;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || whitespace_only(line)) continue;
        ++stats.lines;
        try {
            sink(parse_record(line, line_no));
        } catch (const Error& e) {
            if (policy == OnBadLine::Abort) throw;
            ++stats.skipped;
            if (warn) *warn << "warning: skipping " << e.what() << "\n";
        }
    }
    if (in.bad()) throw IoError("stream read failure");
    return stats;
}

ReadStats read_stream_file(const std::string& path,
                           const std::function<void(ParsedRecord&&)>& sink,
                           OnBadLine policy, std::ostream* warn) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open input file: " + path);
    return read_stream(in, sink, policy, warn);
}

std::vector<Tweet> read_tweets_file(const std::string& path, OnBadLine policy) {
    std::vector<Tweet> out;
    read_stream_file(path, [&](ParsedRecord&& r) { out.push_back(std::move(r.tweet)); },
                     policy, &std::cerr);
    return out;
}

std::vector<LabeledTweet> read_labeled_file(const std::string& path, OnBadLine policy) {
    std::vector<LabeledTweet> out;
    std::size_t n = 0;
    read_stream_file(path,
                     [&](ParsedRecord&& r) {
                         ++n;
                         if (!r.label)
                             throw SchemaError("label", "missing in labeled corpus record " +
                                                            std::to_string(n));
                         out.push_back(LabeledTweet{std::move(r.tweet), *r.label});
                     },
                     policy, &std::cerr);
    return out;
}

void write_tweets_file(const std::string& path, const std::vector<Tweet>& tweets) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write output file: " + path);
    for (const auto& t : tweets) out << serialize_record(t) << "\n";
}

void write_labeled_file(const std::string& path, const std::vector<LabeledTweet>& tweets) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write output file: " + path);
    for (const auto& lt : tweets) out << serialize_record(lt.tweet, lt.label) << "\n";
}

}  // namespace agtd
