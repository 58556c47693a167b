#pragma once

// UTF-8 helpers. Only what the tokenizer and lexicon lookups need; this is
// not a general Unicode library.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace reqlint::text {

struct Decoded {
    char32_t cp;
    std::size_t length;
};

/// Decode the code point starting at byte `i`. Input must already be valid
/// UTF-8 (see find_invalid_utf8); a stray continuation byte decodes as itself.
inline Decoded decode_at(std::string_view s, std::size_t i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) return {b0, 1};
    auto cont = [&](std::size_t k) { return static_cast<char32_t>(static_cast<unsigned char>(s[i + k]) & 0x3F); };
    if ((b0 & 0xE0) == 0xC0 && i + 1 < s.size()) return {(static_cast<char32_t>(b0 & 0x1F) << 6) | cont(1), 2};
    if ((b0 & 0xF0) == 0xE0 && i + 2 < s.size())
        return {(static_cast<char32_t>(b0 & 0x0F) << 12) | (cont(1) << 6) | cont(2), 3};
    if ((b0 & 0xF8) == 0xF0 && i + 3 < s.size())
        return {(static_cast<char32_t>(b0 & 0x07) << 18) | (cont(1) << 12) | (cont(2) << 6) | cont(3), 4};
    return {b0, 1};
}

/// Byte offset of the first ill-formed sequence, or nullopt when `s` is valid
/// UTF-8 (overlongs, surrogates and values above U+10FFFF are rejected).
inline std::optional<std::size_t> find_invalid_utf8(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        const auto b0 = static_cast<unsigned char>(s[i]);
        if (b0 < 0x80) {
            ++i;
            continue;
        }
        std::size_t len = 0;
        char32_t min = 0;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            min = 0x80;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            min = 0x800;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            min = 0x10000;
        } else {
            return i;
        }
        if (i + len > s.size()) return i;
        for (std::size_t k = 1; k < len; ++k)
            if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return i;
        const char32_t cp = decode_at(s, i).cp;
        if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
        i += len;
    }
    return std::nullopt;
}

inline std::string encode(char32_t cp) {
    std::string out;
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
    return out;
}

inline bool is_space(char32_t cp) {
    switch (cp) {
    case ' ': case '\t': case '\n': case '\r': case '\v': case '\f':
    case 0xA0: case 0x2007: case 0x2009: case 0x200A: case 0x202F: case 0x3000:
        return true;
    default:
        return false;
    }
}

inline bool is_line_break(char32_t cp) { return cp == '\n' || cp == '\r'; }

inline bool is_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

inline bool is_letter(char32_t cp) {
    if (cp < 0x80) return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
    if (cp < 0xC0) return cp == 0xAA || cp == 0xB5 || cp == 0xBA;
    if (cp == 0xD7 || cp == 0xF7) return false;
    if (cp >= 0x2000 && cp <= 0x2BFF) return false; // punctuation, symbols, arrows, math, boxes
    if (cp >= 0x2E00 && cp <= 0x2E7F) return false;
    if (cp >= 0x3000 && cp <= 0x303F) return false;
    if (cp >= 0xFE30 && cp <= 0xFE6F) return false;
    if (cp >= 0xFF00 && cp <= 0xFF20) return false;
    if (cp >= 0xFFF0) return cp > 0xFFFF;
    return true;
}

inline bool is_apostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019; }

inline bool is_upper(char32_t cp) {
    if (cp < 0x80) return cp >= 'A' && cp <= 'Z';
    if (cp >= 0xC0 && cp <= 0xDE) return cp != 0xD7;
    if (cp >= 0x100 && cp <= 0x137) return cp % 2 == 0;
    if (cp >= 0x139 && cp <= 0x148) return cp % 2 == 1;
    if (cp >= 0x14A && cp <= 0x177) return cp % 2 == 0;
    if (cp == 0x178) return true;
    if (cp >= 0x179 && cp <= 0x17E) return cp % 2 == 1;
    if (cp >= 0x391 && cp <= 0x3A9) return true;
    if (cp >= 0x400 && cp <= 0x42F) return true;
    return false;
}

inline char32_t to_lower(char32_t cp) {
    if (!is_upper(cp)) return cp;
    if (cp < 0x80 || (cp >= 0xC0 && cp <= 0xDE) || (cp >= 0x391 && cp <= 0x3A9) || (cp >= 0x410 && cp <= 0x42F))
        return cp + 0x20;
    if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
    if (cp == 0x178) return 0xFF;
    return cp + 1;
}

/// Lowercases the first code point only.
inline std::string lower_first(std::string_view s) {
    if (s.empty()) return {};
    const auto d = decode_at(s, 0);
    std::string out = encode(to_lower(d.cp));
    out.append(s.substr(d.length));
    return out;
}

inline bool starts_upper(std::string_view s) { return !s.empty() && is_upper(decode_at(s, 0).cp); }

/// Replaces the typographic apostrophe U+2019 by ASCII `'`.
inline std::string normalize_apostrophes(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size();) {
        if (s.compare(i, 3, "\xE2\x80\x99") == 0) {
            out += '\'';
            i += 3;
        } else {
            out += s[i++];
        }
    }
    return out;
}

/// ASCII-only lowercase; enough for cue words and config keys.
inline std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

inline std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n\v\f";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace reqlint::text
