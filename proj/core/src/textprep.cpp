#include "agtd/textprep.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "agtd/errors.hpp"
#include "agtd/stemmer.hpp"

namespace agtd {
namespace {

// Codepoint classification for the tokenizer. The full rules live in the
// README (token formats section); in short: ASCII alphanumerics and most
// non-ASCII letters are kept, emoji become standalone tokens, everything
// else (inter-punctuation, symbols, format characters) is stripped.

bool is_emoji(char32_t cp) {
    return (cp >= 0x1F300 && cp <= 0x1F5FF) || (cp >= 0x1F600 && cp <= 0x1F64F) ||
           (cp >= 0x1F680 && cp <= 0x1F6FF) || (cp >= 0x1F900 && cp <= 0x1F9FF) ||
           (cp >= 0x1FA70 && cp <= 0x1FAFF) || (cp >= 0x2600 && cp <= 0x26FF) ||
           (cp >= 0x2700 && cp <= 0x27BF) || (cp >= 0x1F1E6 && cp <= 0x1F1FF);
}

bool is_kept_letter(char32_t cp) {
    if (cp < 0x80) return false;  // ASCII handled separately
    if (cp >= 0x00C0 && cp <= 0x00FF) return cp != 0x00D7 && cp != 0x00F7;
    if (cp >= 0x0100 && cp <= 0x1FFF) return true;   // Latin ext., Greek, Cyrillic, ...
    if (cp >= 0x2C00 && cp <= 0xD7FF) return cp < 0x3000 || cp > 0x303F;
    return false;
}

bool is_space_cp(char32_t cp) {
    if (cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v')
        return true;
    return cp == 0x00A0 || (cp >= 0x2000 && cp <= 0x200B) || cp == 0x2028 ||
           cp == 0x2029 || cp == 0x3000;
}

// Minimal UTF-8 decoder; invalid sequences decode as one replacement
// char per byte so malformed input cannot stall the scanner.
char32_t decode_utf8(std::string_view s, std::size_t& i) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    unsigned char b0 = byte(i);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    std::size_t len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) { len = 2; cp = b0 & 0x1F; }
    else if ((b0 & 0xF0) == 0xE0) { len = 3; cp = b0 & 0x0F; }
    else if ((b0 & 0xF8) == 0xF0) { len = 4; cp = b0 & 0x07; }
    else { ++i; return 0xFFFD; }
    if (i + len > s.size()) { ++i; return 0xFFFD; }
    for (std::size_t k = 1; k < len; ++k) {
        if ((byte(i + k) & 0xC0) != 0x80) { ++i; return 0xFFFD; }
        cp = (cp << 6) | (byte(i + k) & 0x3F);
    }
    i += len;
    return cp;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
    if (s.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(s[i])) != prefix[i]) return false;
    return true;
}

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Emits the tokens of one whitespace-delimited chunk.
void process_chunk(std::string_view chunk, std::vector<std::string>& out) {
    if (starts_with_ci(chunk, "http://") || starts_with_ci(chunk, "https://") ||
        starts_with_ci(chunk, "www.")) {
        out.emplace_back(kUrlToken);
        return;
    }
    if (chunk.size() >= 2 && chunk[0] == '@' && is_word_char(chunk[1])) {
        out.emplace_back(kUserToken);
        return;
    }
    if (chunk.size() >= 3 && chunk[0] == '.' && chunk[1] == '@' && is_word_char(chunk[2])) {
        out.emplace_back(kUserToken);
        return;
    }
    if (chunk.size() >= 2 && chunk[0] == '#' && is_word_char(chunk[1])) {
        out.emplace_back(kHashtagToken);
        return;
    }

    std::string buf;
    bool has_digit = false, has_alpha = false;
    const auto flush = [&] {
        if (buf.empty()) return;
        if (has_digit && !has_alpha)
            out.emplace_back(kNumberToken);
        else if (has_alpha && !has_digit &&
                 std::all_of(buf.begin(), buf.end(), [](unsigned char c) {
                     return c >= 'a' && c <= 'z';
                 }))
            out.push_back(stem(buf));
        else
            out.push_back(buf);
        buf.clear();
        has_digit = has_alpha = false;
    };

    std::size_t i = 0;
    while (i < chunk.size()) {
        char32_t cp = decode_utf8(chunk, i);
        if (cp < 0x80) {
            char c = static_cast<char>(cp);
            if (std::isalpha(static_cast<unsigned char>(c))) {
                buf += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
                has_alpha = true;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                buf += c;
                has_digit = true;
            }
            // everything else: inter-punctuation, stripped
        } else if (is_emoji(cp)) {
            flush();
            std::string e;
            append_utf8(e, cp);
            out.push_back(std::move(e));
        } else if (is_kept_letter(cp)) {
            append_utf8(buf, cp);
            has_alpha = true;
        }
        // other non-ASCII (punctuation, format chars, variation selectors): stripped
    }
    flush();
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text, std::uint32_t media_count) {
    std::vector<std::string> out;
    std::size_t i = 0, start = 0;
    bool in_chunk = false;
    std::size_t prev = 0;
    while (i < text.size()) {
        prev = i;
        char32_t cp = decode_utf8(text, i);
        if (is_space_cp(cp)) {
            if (in_chunk) {
                process_chunk(text.substr(start, prev - start), out);
                in_chunk = false;
            }
        } else if (!in_chunk) {
            start = prev;
            in_chunk = true;
        }
    }
    if (in_chunk) process_chunk(text.substr(start), out);
    for (std::uint32_t k = 0; k < media_count; ++k) out.emplace_back(kMediaToken);
    return out;
}

WordSet normalize(std::string_view text, std::uint32_t media_count) {
    auto tokens = tokenize(text, media_count);
    return WordSet(tokens.begin(), tokens.end());
}

std::uint32_t count_numeric_literals(std::string_view text) {
    std::uint32_t n = 0;
    for (const auto& tok : tokenize(text))
        if (tok == kNumberToken) ++n;
    return n;
}

Vocabulary Vocabulary::build(const std::vector<WordSet>& corpus,
                             std::size_t max_size, std::size_t min_freq) {
    if (corpus.empty()) throw ConfigError("vocabulary build: empty corpus");
    if (max_size == 0) throw ConfigError("vocabulary build: max_size must be positive");
    if (min_freq == 0) throw ConfigError("vocabulary build: min_freq must be positive");

    std::unordered_map<std::string, std::size_t> freq;
    for (const auto& ws : corpus)
        for (const auto& tok : ws) ++freq[tok];

    std::vector<std::pair<std::string, std::size_t>> items;
    items.reserve(freq.size());
    for (auto& [tok, n] : freq)
        if (n >= min_freq) items.emplace_back(tok, n);
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (items.size() > max_size) items.resize(max_size);

    Vocabulary v;
    v.build_max_size_ = max_size;
    v.build_min_freq_ = min_freq;
    v.tokens_.reserve(items.size());
    for (auto& [tok, n] : items) v.tokens_.push_back(tok);
    v.rebuild_index();
    return v;
}

void Vocabulary::rebuild_index() {
    index_.clear();
    index_.reserve(tokens_.size());
    for (std::size_t i = 0; i < tokens_.size(); ++i)
        index_.emplace_back(tokens_[i], static_cast<std::int64_t>(i));
    std::sort(index_.begin(), index_.end());
}

std::int64_t Vocabulary::index_of(std::string_view token) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), token,
                               [](const auto& p, std::string_view t) { return p.first < t; });
    if (it != index_.end() && it->first == token) return it->second;
    return -1;
}

std::vector<std::uint8_t> Vocabulary::encode(const WordSet& ws) const {
    std::vector<std::uint8_t> vec(tokens_.size(), 0);
    for (const auto& tok : ws) {
        std::int64_t i = index_of(tok);
        if (i >= 0) vec[static_cast<std::size_t>(i)] = 1;
    }
    return vec;
}

void Vocabulary::save(std::ostream& out) const {
    out << "agtd-vocabulary v1 size=" << tokens_.size()
        << " max_size=" << build_max_size_ << " min_freq=" << build_min_freq_ << "\n";
    for (const auto& tok : tokens_) out << tok << "\n";
}

void Vocabulary::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write vocabulary file: " + path);
    save(out);
}

Vocabulary Vocabulary::load(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError("vocabulary file: empty");
    std::size_t size = 0;
    Vocabulary v;
    if (std::sscanf(header.c_str(), "agtd-vocabulary v1 size=%zu max_size=%zu min_freq=%zu",
                    &size, &v.build_max_size_, &v.build_min_freq_) != 3)
        throw ParseError("vocabulary file: bad header \"" + header + "\"");
    std::string tok;
    while (std::getline(in, tok))
        if (!tok.empty()) v.tokens_.push_back(tok);
    if (v.tokens_.size() != size)
        throw ParseError("vocabulary file: header says " + std::to_string(size) +
                         " tokens, found " + std::to_string(v.tokens_.size()));
    v.rebuild_index();
    return v;
}

Vocabulary Vocabulary::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read vocabulary file: " + path);
    return load(in);
}

}  // namespace agtd
