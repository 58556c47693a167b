#pragma once

// Reading requirement files (tagged mode) and comparison corpora (plain mode).
//
// Delimiter grammar, one delimiter per line, matched after removing the line
// terminator (`\n` or `\r\n`):
//   opener  `[REQ <id>]`  with <id> in [A-Za-z0-9_.-]+
//   closer  `[/REQ]`
// Text outside blocks is discarded. Nested openers are an error.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/error.hpp"
#include "reqlint/language.hpp"
#include "reqlint/text.hpp"

namespace reqlint {

struct SourceSpan {
    std::string file;
    std::size_t start_line = 0; ///< line of the opener, 1-based
    std::size_t end_line = 0;   ///< line of the closer

    bool operator==(const SourceSpan&) const = default;
};

struct Requirement {
    std::string id;
    std::string body; ///< lines between the delimiters joined by '\n'
    SourceSpan source_span;
    std::size_t line_count = 0;

    bool operator==(const Requirement&) const = default;
};

enum class CorpusMode { tagged, plain };

inline std::string_view to_string(CorpusMode m) { return m == CorpusMode::tagged ? "tagged" : "plain"; }

/// Non-fatal observation made while reading a file.
struct Diagnostic {
    std::size_t line = 0;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

struct Corpus {
    std::string name;
    Language language = Language::fr;
    CorpusMode mode = CorpusMode::tagged;
    std::vector<Requirement> requirements; ///< tagged mode
    std::string body;                      ///< plain mode
    std::vector<Diagnostic> diagnostics;
};

namespace detail {

inline bool is_id_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '.' ||
           c == '-';
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        auto line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = nl + 1;
    }
    if (!lines.empty() && !lines.back().empty() && lines.back().back() == '\r') lines.back().remove_suffix(1);
    return lines;
}

/// Tables survive badly in extracted requirements; flag lines that look like one.
inline bool looks_like_table_row(std::string_view line) {
    std::size_t tabs = 0, rule = 0, visible = 0;
    for (char c : line) {
        if (c == '\t') ++tabs;
        if (c == ' ' || c == '\t') continue;
        ++visible;
        if (c == '|' || c == '+') ++rule;
    }
    if (tabs >= 2 && visible > 0) return true;
    return rule >= 2 && rule * 2 >= visible;
}

inline void check_utf8(std::string_view bytes) {
    if (auto bad = text::find_invalid_utf8(bytes)) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < *bad; ++i)
            if (bytes[i] == '\n') ++line;
        throw Error(ErrorCode::decode_error, "invalid UTF-8 at byte " + std::to_string(*bad), line);
    }
}

} // namespace detail

/// Returns the id when `line` is an opening delimiter.
inline std::optional<std::string_view> match_opener(std::string_view line) {
    constexpr std::string_view head = "[REQ ";
    if (line.size() < head.size() + 2 || line.substr(0, head.size()) != head || line.back() != ']') return std::nullopt;
    auto id = line.substr(head.size(), line.size() - head.size() - 1);
    for (char c : id)
        if (!detail::is_id_char(c)) return std::nullopt;
    return id;
}

inline bool is_closer(std::string_view line) { return line == "[/REQ]"; }

/// Parses tagged requirement text. `source` names the origin in spans and errors.
inline Corpus parse_requirement_text(std::string_view bytes, std::string source, Language language) {
    detail::check_utf8(bytes);
    if (bytes.empty()) throw Error(ErrorCode::empty_file, source);

    Corpus corpus;
    corpus.name = std::filesystem::path(source).stem().string();
    corpus.language = language;
    corpus.mode = CorpusMode::tagged;

    std::set<std::string, std::less<>> seen;
    std::optional<Requirement> open;
    std::vector<std::string_view> body_lines;

    const auto lines = detail::split_lines(bytes);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const auto line = lines[i];
        if (auto id = match_opener(line)) {
            if (open) throw Error(ErrorCode::unbalanced_delimiter, "opener inside block '" + open->id + "'", lineno);
            if (seen.contains(*id)) throw Error(ErrorCode::duplicate_id, std::string(*id), lineno);
            open.emplace();
            open->id = std::string(*id);
            open->source_span = {source, lineno, 0};
            body_lines.clear();
            continue;
        }
        if (is_closer(line)) {
            if (!open) throw Error(ErrorCode::unbalanced_delimiter, "closer without opener", lineno);
            std::string body;
            bool has_content = false;
            for (std::size_t k = 0; k < body_lines.size(); ++k) {
                if (k) body += '\n';
                body.append(body_lines[k]);
                if (!text::trim(body_lines[k]).empty()) has_content = true;
            }
            if (!has_content)
                throw Error(ErrorCode::empty_requirement, open->id, open->source_span.start_line);
            open->body = std::move(body);
            open->source_span.end_line = lineno;
            open->line_count = body_lines.size();
            seen.insert(open->id);
            corpus.requirements.push_back(std::move(*open));
            open.reset();
            continue;
        }
        if (line.starts_with("[REQ") || line.starts_with("[/REQ"))
            corpus.diagnostics.push_back({lineno, "line resembles a delimiter but does not match the grammar"});
        if (open) {
            if (detail::looks_like_table_row(line))
                corpus.diagnostics.push_back({lineno, "line looks like a table row; tables should be removed upstream"});
            body_lines.push_back(line);
        }
    }
    if (open) throw Error(ErrorCode::unbalanced_delimiter, "block '" + open->id + "' is never closed",
                          open->source_span.start_line);
    if (corpus.requirements.empty()) throw Error(ErrorCode::no_requirements, source);
    return corpus;
}

inline Corpus parse_plain_text(std::string_view bytes, std::string source, Language language) {
    detail::check_utf8(bytes);
    if (bytes.empty()) throw Error(ErrorCode::empty_file, source);
    Corpus corpus;
    corpus.name = std::filesystem::path(source).stem().string();
    corpus.language = language;
    corpus.mode = CorpusMode::plain;
    corpus.body = std::string(bytes);
    return corpus;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Corpus parse_requirement_file(const std::filesystem::path& path, Language language) {
    return parse_requirement_text(read_file(path), path.string(), language);
}

inline Corpus parse_plain_corpus(const std::filesystem::path& path, Language language) {
    return parse_plain_text(read_file(path), path.string(), language);
}

/// True when some line of `bytes` is an opening or closing delimiter.
inline bool has_delimiters(std::string_view bytes) {
    for (auto line : detail::split_lines(bytes))
        if (match_opener(line) || is_closer(line)) return true;
    return false;
}

/// Writes a tagged corpus back in delimiter form.
inline std::string to_delimited(const Corpus& corpus) {
    std::string out;
    for (const auto& r : corpus.requirements) {
        out += "[REQ " + r.id + "]\n";
        out += r.body;
        out += "\n[/REQ]\n";
    }
    return out;
}

} // namespace reqlint
