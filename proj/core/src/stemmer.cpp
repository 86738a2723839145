#include "agtd/stemmer.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <string>

namespace agtd {
namespace {

// Implementation of the revised English stemming algorithm (the "Porter2"
// variant). Within this file 'Y' marks a consonant y; callers never see it.

bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool ends_with(const std::string& w, std::string_view suf) {
    return w.size() >= suf.size() &&
           std::equal(suf.rbegin(), suf.rend(), w.rbegin());
}

bool contains_vowel(const std::string& w, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end && i < w.size(); ++i)
        if (is_vowel(w[i])) return true;
    return false;
}

// A short syllable is a vowel followed by a non-vowel other than w, x or Y,
// preceded by a non-vowel; or a vowel at the start of the word followed by a
// non-vowel.
bool ends_with_short_syllable(const std::string& w) {
    const std::size_t n = w.size();
    if (n == 2 && is_vowel(w[0]) && !is_vowel(w[1])) return true;
    if (n >= 3) {
        char a = w[n - 3], b = w[n - 2], c = w[n - 1];
        return !is_vowel(a) && is_vowel(b) && !is_vowel(c) && c != 'w' &&
               c != 'x' && c != 'Y';
    }
    return false;
}

struct Regions {
    std::size_t r1;
    std::size_t r2;
};

std::size_t region_after_vc(const std::string& w, std::size_t from) {
    std::size_t i = from;
    while (i < w.size() && !is_vowel(w[i])) ++i;
    while (i < w.size() && is_vowel(w[i])) ++i;
    return i < w.size() ? i + 1 : w.size();
}

Regions compute_regions(const std::string& w) {
    static constexpr std::array<std::string_view, 3> prefixes = {"gener", "commun", "arsen"};
    std::size_t r1 = std::string::npos;
    for (auto p : prefixes) {
        if (w.size() >= p.size() && w.compare(0, p.size(), p) == 0) {
            r1 = p.size();
            break;
        }
    }
    if (r1 == std::string::npos) r1 = region_after_vc(w, 0);
    std::size_t r2 = region_after_vc(w, r1);
    return {r1, r2};
}

bool word_is_short(const std::string& w, const Regions& r) {
    return r.r1 >= w.size() && ends_with_short_syllable(w);
}

bool suffix_in(const std::string& w, std::string_view suf, std::size_t region) {
    return w.size() - suf.size() >= region;
}

const char* exceptional_form(const std::string& w) {
    struct Pair { const char* from; const char* to; };
    static constexpr Pair table[] = {
        {"skis", "ski"},     {"skies", "sky"},   {"dying", "die"},
        {"lying", "lie"},    {"tying", "tie"},   {"idly", "idl"},
        {"gently", "gentl"}, {"ugly", "ugli"},   {"early", "earli"},
        {"only", "onli"},    {"singly", "singl"},
        {"sky", "sky"},      {"news", "news"},   {"howe", "howe"},
        {"atlas", "atlas"},  {"cosmos", "cosmos"}, {"bias", "bias"},
        {"andes", "andes"},
    };
    for (const auto& p : table)
        if (w == p.from) return p.to;
    return nullptr;
}

bool invariant_after_1a(const std::string& w) {
    static constexpr std::array<std::string_view, 8> table = {
        "inning", "outing", "canning", "herring",
        "earring", "proceed", "exceed", "succeed"};
    return std::find(table.begin(), table.end(), w) != table.end();
}

void step_0(std::string& w) {
    if (ends_with(w, "'s'")) w.resize(w.size() - 3);
    else if (ends_with(w, "'s")) w.resize(w.size() - 2);
    else if (ends_with(w, "'")) w.resize(w.size() - 1);
}

void step_1a(std::string& w) {
    if (ends_with(w, "sses")) {
        w.resize(w.size() - 2);
    } else if (ends_with(w, "ied") || ends_with(w, "ies")) {
        w.resize(w.size() - (w.size() > 4 ? 2 : 1));
    } else if (ends_with(w, "us") || ends_with(w, "ss")) {
        // leave
    } else if (ends_with(w, "s")) {
        // delete if a vowel exists before the char immediately preceding the s
        if (w.size() >= 3 && contains_vowel(w, 0, w.size() - 2))
            w.resize(w.size() - 1);
    }
}

void step_1b(std::string& w, const Regions& r) {
    if (ends_with(w, "eedly")) {
        if (suffix_in(w, "eedly", r.r1)) w.resize(w.size() - 3);
        return;
    }
    if (ends_with(w, "eed")) {
        if (suffix_in(w, "eed", r.r1)) w.resize(w.size() - 1);
        return;
    }
    std::size_t cut = 0;
    if (ends_with(w, "ingly") || ends_with(w, "edly")) cut = ends_with(w, "ingly") ? 5 : 4;
    else if (ends_with(w, "ing")) cut = 3;
    else if (ends_with(w, "ed")) cut = 2;
    if (cut == 0 || !contains_vowel(w, 0, w.size() - cut)) return;

    w.resize(w.size() - cut);
    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
        w += 'e';
    } else if (ends_with(w, "bb") || ends_with(w, "dd") || ends_with(w, "ff") ||
               ends_with(w, "gg") || ends_with(w, "mm") || ends_with(w, "nn") ||
               ends_with(w, "pp") || ends_with(w, "rr") || ends_with(w, "tt")) {
        w.resize(w.size() - 1);
    } else if (word_is_short(w, compute_regions(w))) {
        w += 'e';
    }
}

void step_1c(std::string& w) {
    const std::size_t n = w.size();
    if (n >= 3 && (w[n - 1] == 'y' || w[n - 1] == 'Y') && !is_vowel(w[n - 2]))
        w[n - 1] = 'i';
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// Longest matching suffix wins; its region/extra condition then decides
// whether anything happens at all (no fallback to shorter suffixes).
void step_2(std::string& w, const Regions& r) {
    static constexpr Rule rules[] = {
        {"ational", "ate"}, {"ization", "ize"}, {"fulness", "ful"},
        {"ousness", "ous"}, {"iveness", "ive"}, {"tional", "tion"},
        {"biliti", "ble"},  {"lessli", "less"}, {"entli", "ent"},
        {"ation", "ate"},   {"alism", "al"},    {"aliti", "al"},
        {"ousli", "ous"},   {"iviti", "ive"},   {"fulli", "ful"},
        {"enci", "ence"},   {"anci", "ance"},   {"abli", "able"},
        {"izer", "ize"},    {"ator", "ate"},    {"alli", "al"},
        {"bli", "ble"},     {"ogi", "og"},      {"li", ""},
    };
    for (const auto& rule : rules) {
        if (!ends_with(w, rule.suffix)) continue;
        if (suffix_in(w, rule.suffix, r.r1)) {
            if (rule.suffix == "ogi") {
                if (w.size() >= 4 && w[w.size() - 4] == 'l')
                    w.replace(w.size() - 3, 3, rule.replacement);
            } else if (rule.suffix == "li") {
                static constexpr std::string_view li_endings = "cdeghkmnrt";
                if (w.size() >= 3 &&
                    li_endings.find(w[w.size() - 3]) != std::string_view::npos)
                    w.resize(w.size() - 2);
            } else {
                w.replace(w.size() - rule.suffix.size(), rule.suffix.size(),
                          rule.replacement);
            }
        }
        return;
    }
}

void step_3(std::string& w, const Regions& r) {
    static constexpr Rule rules[] = {
        {"ational", "ate"}, {"tional", "tion"}, {"alize", "al"},
        {"icate", "ic"},    {"iciti", "ic"},    {"ative", ""},
        {"ical", "ic"},     {"ness", ""},       {"ful", ""},
    };
    for (const auto& rule : rules) {
        if (!ends_with(w, rule.suffix)) continue;
        if (suffix_in(w, rule.suffix, r.r1)) {
            if (rule.suffix == "ative") {
                if (suffix_in(w, rule.suffix, r.r2)) w.resize(w.size() - 5);
            } else {
                w.replace(w.size() - rule.suffix.size(), rule.suffix.size(),
                          rule.replacement);
            }
        }
        return;
    }
}

void step_4(std::string& w, const Regions& r) {
    static constexpr std::string_view rules[] = {
        "ement", "ance", "ence", "able", "ible", "ment",
        "ant",  "ent",  "ism",  "ate",  "iti",  "ous",
        "ive",  "ize",  "ion",  "al",   "er",   "ic",
    };
    for (auto suf : rules) {
        if (!ends_with(w, suf)) continue;
        if (suffix_in(w, suf, r.r2)) {
            if (suf == "ion") {
                char prev = w.size() >= 4 ? w[w.size() - 4] : '\0';
                if (prev == 's' || prev == 't') w.resize(w.size() - 3);
            } else {
                w.resize(w.size() - suf.size());
            }
        }
        return;
    }
}

void step_5(std::string& w, const Regions& r) {
    const std::size_t n = w.size();
    if (n == 0) return;
    if (w[n - 1] == 'e') {
        std::string head = w.substr(0, n - 1);
        if (n - 1 >= r.r2 ||
            (n - 1 >= r.r1 && !ends_with_short_syllable(head)))
            w.resize(n - 1);
    } else if (w[n - 1] == 'l') {
        if (n - 1 >= r.r2 && n >= 2 && w[n - 2] == 'l') w.resize(n - 1);
    }
}

}  // namespace

std::string stem(std::string_view word) {
    std::string w(word);
    if (w.size() <= 2) return w;
    for (char c : w)
        if (!((c >= 'a' && c <= 'z') || c == '\'')) return w;

    if (!w.empty() && w[0] == '\'') w.erase(0, 1);
    if (const char* ex = exceptional_form(w)) return ex;
    if (w.size() <= 2) return w;

    // Mark consonant y's.
    if (w[0] == 'y') w[0] = 'Y';
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == 'y' && is_vowel(w[i - 1])) w[i] = 'Y';

    step_0(w);
    step_1a(w);
    if (invariant_after_1a(w)) {
        std::replace(w.begin(), w.end(), 'Y', 'y');
        return w;
    }
    Regions r = compute_regions(w);
    step_1b(w, r);
    step_1c(w);
    r = compute_regions(w);
    step_2(w, r);
    r = compute_regions(w);
    step_3(w, r);
    r = compute_regions(w);
    step_4(w, r);
    r = compute_regions(w);
    step_5(w, r);

    std::replace(w.begin(), w.end(), 'Y', 'y');
    return w;
}

}  // namespace agtd
