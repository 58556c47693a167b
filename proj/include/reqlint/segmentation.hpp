#pragma once

// Sentence splitting and tokenization.
//
// Sentences end at every line break, and inside a line at `.`, `!` or `?`
// followed by whitespace and an uppercase letter or digit, unless the period
// closes a known abbreviation. Bullet lines (`- `, `* `, `• `) are sentences of
// their own by the line-break rule and are flagged as such.
//
// Words are runs of letters, digits and `_`; an internal hyphen between two
// such characters keeps the run together (`celui-ci`, `plate-forme`), as does
// a `.`/`,` between digits (`1.5`). In French an apostrophe after an elidable
// clitic ends the token (`d'` `enchaîner`).

#include <algorithm>
#include <array>
#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/corpus.hpp"
#include "reqlint/detail/builtin_data.hpp"
#include "reqlint/language.hpp"
#include "reqlint/tags.hpp"
#include "reqlint/text.hpp"

namespace reqlint {

/// Half-open byte range.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    bool contains(const Span& o) const { return begin <= o.begin && o.end <= end; }
    bool operator==(const Span&) const = default;
};

enum class TokenKind { word, number, punctuation, symbol };

inline std::string_view to_string(TokenKind k) {
    switch (k) {
    case TokenKind::word: return "word";
    case TokenKind::number: return "number";
    case TokenKind::punctuation: return "punctuation";
    case TokenKind::symbol: return "symbol";
    }
    return "";
}

struct Token {
    std::string surface;
    Span span;
    TokenKind kind = TokenKind::word;
    CategoryTag tag;

    bool counts_as_word() const { return kind == TokenKind::word || kind == TokenKind::number; }
    bool operator==(const Token&) const = default;
};

struct Sentence {
    std::string text;
    Span span;
    std::vector<Token> tokens;
    bool bullet = false; ///< first segment of a line starting with a list marker
};

class AbbreviationList {
public:
    AbbreviationList() = default;

    static AbbreviationList builtin() {
        AbbreviationList list;
        list.add_from_text(detail::builtin_abbreviations);
        return list;
    }

    /// One abbreviation per line, without the final period; `#` starts a comment.
    void add_from_text(std::string_view content) {
        for (auto line : detail::split_lines(content)) {
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            line = text::trim(line);
            if (line.empty()) continue;
            if (line.back() == '.') line.remove_suffix(1);
            entries_.insert(text::ascii_lower(line));
        }
    }

    void add_from_file(const std::filesystem::path& path) {
        const auto content = read_file(path);
        detail::check_utf8(content);
        add_from_text(content);
    }

    bool contains(std::string_view word) const { return entries_.contains(text::ascii_lower(word)); }
    std::size_t size() const { return entries_.size(); }

private:
    std::set<std::string, std::less<>> entries_;
};

namespace detail {

inline bool is_word_char(char32_t cp) { return text::is_letter(cp) || text::is_digit(cp) || cp == '_'; }

inline bool is_punctuation(char32_t cp) {
    switch (cp) {
    case '.': case ',': case ';': case ':': case '!': case '?':
    case '(': case ')': case '[': case ']': case '{': case '}':
    case '"': case '\'': case '-': case '/': case '\\':
    case 0xAB: case 0xBB: case 0xA1: case 0xBF: case 0xB7:
    case 0x2010: case 0x2011: case 0x2012: case 0x2013: case 0x2014: case 0x2015:
    case 0x2018: case 0x2019: case 0x201A: case 0x201C: case 0x201D: case 0x201E:
    case 0x2026: case 0x2039: case 0x203A:
        return true;
    default:
        return false;
    }
}

inline bool is_hyphen(char32_t cp) { return cp == '-' || cp == 0x2010 || cp == 0x2011; }

inline bool is_elision_clitic(std::string_view lowered) {
    static constexpr std::array<std::string_view, 13> clitics = {
        "l", "d", "j", "m", "n", "s", "t", "c", "qu", "lorsqu", "puisqu", "quoiqu", "jusqu"};
    return std::find(clitics.begin(), clitics.end(), lowered) != clitics.end();
}

inline bool is_bullet_marker(char32_t cp) { return cp == '-' || cp == '*' || cp == 0x2022 || cp == 0x2013; }

} // namespace detail

/// Splits `text` into tokens; spans are relative to `text` plus `offset`.
inline std::vector<Token> tokenize(std::string_view s, Language language, std::size_t offset = 0) {
    using text::decode_at;
    std::vector<Token> tokens;
    auto cp_at = [&](std::size_t i) -> char32_t { return i < s.size() ? decode_at(s, i).cp : 0; };

    std::size_t i = 0;
    while (i < s.size()) {
        const auto d = decode_at(s, i);
        if (text::is_space(d.cp)) {
            i += d.length;
            continue;
        }
        if (!detail::is_word_char(d.cp)) {
            Token t;
            t.surface = std::string(s.substr(i, d.length));
            t.span = {offset + i, offset + i + d.length};
            t.kind = detail::is_punctuation(d.cp) ? TokenKind::punctuation : TokenKind::symbol;
            tokens.push_back(std::move(t));
            i += d.length;
            continue;
        }

        const std::size_t start = i;
        bool has_letter = false, has_digit = false;
        std::size_t j = i;
        char32_t prev = 0;
        while (j < s.size()) {
            const auto c = decode_at(s, j);
            if (detail::is_word_char(c.cp)) {
                has_letter = has_letter || text::is_letter(c.cp);
                has_digit = has_digit || text::is_digit(c.cp);
                prev = c.cp;
                j += c.length;
                continue;
            }
            const char32_t next = cp_at(j + c.length);
            if (detail::is_hyphen(c.cp) && detail::is_word_char(next)) {
                prev = c.cp;
                j += c.length;
                continue;
            }
            if ((c.cp == '.' || c.cp == ',') && text::is_digit(prev) && text::is_digit(next)) {
                prev = c.cp;
                j += c.length;
                continue;
            }
            if (text::is_apostrophe(c.cp) && language == Language::fr &&
                detail::is_elision_clitic(text::ascii_lower(text::lower_first(s.substr(start, j - start))))) {
                j += c.length; // the apostrophe belongs to the clitic, even before a stray space
                break;
            }
            if (text::is_apostrophe(c.cp) && text::is_letter(next)) {
                prev = c.cp;
                j += c.length;
                continue;
            }
            break;
        }
        Token t;
        t.surface = std::string(s.substr(start, j - start));
        t.span = {offset + start, offset + j};
        t.kind = has_letter ? TokenKind::word : (has_digit ? TokenKind::number : TokenKind::symbol);
        tokens.push_back(std::move(t));
        i = j;
    }
    return tokens;
}

inline std::size_t word_count(const std::vector<Token>& tokens) {
    return static_cast<std::size_t>(
        std::count_if(tokens.begin(), tokens.end(), [](const Token& t) { return t.counts_as_word(); }));
}

inline std::size_t word_count(const Sentence& s) { return word_count(s.tokens); }

inline std::size_t word_count(const std::vector<Sentence>& sentences) {
    std::size_t n = 0;
    for (const auto& s : sentences) n += word_count(s.tokens);
    return n;
}

namespace detail {

/// The whitespace-delimited word ending right before byte `dot`, minus any
/// opening brackets or quotes.
inline std::string_view word_before(std::string_view line, std::size_t dot) {
    std::size_t b = dot;
    while (b > 0 && line[b - 1] != ' ' && line[b - 1] != '\t') --b;
    auto w = line.substr(b, dot - b);
    while (!w.empty() && (w.front() == '(' || w.front() == '[' || w.front() == '"' || w.front() == '\''))
        w.remove_prefix(1);
    return w;
}

inline bool has_alnum(std::string_view s) {
    for (std::size_t i = 0; i < s.size();) {
        const auto d = text::decode_at(s, i);
        if (text::is_letter(d.cp) || text::is_digit(d.cp)) return true;
        i += d.length;
    }
    return false;
}

} // namespace detail

/// Splits `s` into sentences. Spans and token spans are byte offsets into `s`.
inline std::vector<Sentence> split_sentences(std::string_view s, Language language,
                                             const AbbreviationList& abbreviations) {
    std::vector<Sentence> out;

    auto emit = [&](std::size_t b, std::size_t e, bool first_in_line) {
        auto seg = s.substr(b, e - b);
        const auto ws = " \t\r\v\f";
        const auto lead = seg.find_first_not_of(ws);
        if (lead == std::string_view::npos) return;
        const auto trail = seg.find_last_not_of(ws);
        const std::size_t tb = b + lead, te = b + trail + 1;
        auto trimmed = s.substr(tb, te - tb);
        if (!detail::has_alnum(trimmed)) return;
        Sentence sent;
        sent.text = std::string(trimmed);
        sent.span = {tb, te};
        sent.tokens = tokenize(trimmed, language, tb);
        if (first_in_line) {
            const auto d = text::decode_at(trimmed, 0);
            sent.bullet = detail::is_bullet_marker(d.cp) &&
                          (d.length == trimmed.size() || text::is_space(text::decode_at(trimmed, d.length).cp));
        }
        out.push_back(std::move(sent));
    };

    std::size_t line_start = 0;
    while (line_start <= s.size()) {
        std::size_t line_end = s.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = s.size();
        const auto line = s.substr(line_start, line_end - line_start);

        std::size_t seg_start = 0;
        bool first = true;
        for (std::size_t k = 0; k < line.size(); ++k) {
            const char c = line[k];
            if (c != '.' && c != '!' && c != '?') continue;
            std::size_t m = k + 1;
            if (m >= line.size() || (line[m] != ' ' && line[m] != '\t')) continue;
            while (m < line.size() && (line[m] == ' ' || line[m] == '\t')) ++m;
            if (m >= line.size()) continue;
            const char32_t nextcp = text::decode_at(line, m).cp;
            if (!text::is_upper(nextcp) && !text::is_digit(nextcp)) continue;
            if (c == '.' && abbreviations.contains(detail::word_before(line, k))) continue;
            emit(line_start + seg_start, line_start + k + 1, first);
            first = false;
            seg_start = m;
            k = m - 1;
        }
        emit(line_start + seg_start, line_end, first);
        if (line_end == s.size()) break;
        line_start = line_end + 1;
    }
    return out;
}

inline std::vector<Sentence> split_sentences(std::string_view s, Language language) {
    static const AbbreviationList builtin = AbbreviationList::builtin();
    return split_sentences(s, language, builtin);
}

} // namespace reqlint
