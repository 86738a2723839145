#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace agtd {

// Placeholder tokens; the closed set the classifier treats as regular words.
inline constexpr std::string_view kHashtagToken = "xhashtagx";
inline constexpr std::string_view kUrlToken = "xurlx";
inline constexpr std::string_view kUserToken = "xuserx";
inline constexpr std::string_view kMediaToken = "xmediax";
inline constexpr std::string_view kNumberToken = "xnumberx";

/// Lowercased tokens of one tweet, duplicates collapsed.
using WordSet = std::set<std::string>;

/// Ordered token list of the normalized text, duplicates kept. This is the
/// "word count" basis for the per-tweet entity densities. Hashtags, URLs,
/// user mentions and numeric literals are replaced by their placeholder
/// tokens; `media_count` appends that many xmediax tokens (media entities
/// never appear in the text itself). Inter-punctuation is stripped, emoji
/// survive as single tokens, alphabetic tokens are stemmed.
std::vector<std::string> tokenize(std::string_view text, std::uint32_t media_count = 0);

WordSet normalize(std::string_view text, std::uint32_t media_count = 0);

/// Numeric literals in the raw text per the tokenizer's definition
/// (token with >=1 digit and no letters after punctuation stripping).
std::uint32_t count_numeric_literals(std::string_view text);

/// Bag-of-words vocabulary: the `max_size` most frequent tokens with corpus
/// frequency >= `min_freq`, frequency-descending, ties lexicographic.
class Vocabulary {
public:
    Vocabulary() = default;

    static Vocabulary build(const std::vector<WordSet>& corpus,
                            std::size_t max_size = 2000,
                            std::size_t min_freq = 2);

    std::size_t size() const { return tokens_.size(); }
    const std::vector<std::string>& tokens() const { return tokens_; }

    /// Position of `token`, or -1 when out of vocabulary.
    std::int64_t index_of(std::string_view token) const;

    /// Binary presence vector of length size().
    std::vector<std::uint8_t> encode(const WordSet& ws) const;

    std::size_t build_max_size() const { return build_max_size_; }
    std::size_t build_min_freq() const { return build_min_freq_; }

    void save(std::ostream& out) const;
    void save_file(const std::string& path) const;
    static Vocabulary load(std::istream& in);
    static Vocabulary load_file(const std::string& path);

private:
    std::vector<std::string> tokens_;
    std::vector<std::pair<std::string, std::int64_t>> index_;  // sorted by token
    std::size_t build_max_size_ = 0;
    std::size_t build_min_freq_ = 0;

    void rebuild_index();
};

}  // namespace agtd
