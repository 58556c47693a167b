#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace reqlint {

enum class ErrorCode {
    decode_error,
    empty_file,
    unbalanced_delimiter,
    duplicate_id,
    empty_requirement,
    no_requirements,
    malformed_lexicon_line,
    unknown_category,
    malformed_config_line,
    unknown_rule,
    empty_corpus,
    target_too_small,
    invalid_argument,
    io_error,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::decode_error: return "DecodeError";
    case ErrorCode::empty_file: return "EmptyFile";
    case ErrorCode::unbalanced_delimiter: return "UnbalancedDelimiter";
    case ErrorCode::duplicate_id: return "DuplicateId";
    case ErrorCode::empty_requirement: return "EmptyRequirement";
    case ErrorCode::no_requirements: return "NoRequirements";
    case ErrorCode::malformed_lexicon_line: return "MalformedLexiconLine";
    case ErrorCode::unknown_category: return "UnknownCategory";
    case ErrorCode::malformed_config_line: return "MalformedConfigLine";
    case ErrorCode::unknown_rule: return "UnknownRule";
    case ErrorCode::empty_corpus: return "EmptyCorpus";
    case ErrorCode::target_too_small: return "TargetTooSmall";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::io_error: return "IOError";
    }
    return "Unknown";
}

/// Every failure raised by the library. `line` is 1-based when the error
/// points into an input file.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::optional<std::size_t> line = std::nullopt)
        : std::runtime_error(format(code, message, line)), code_(code), line_(line), detail_(std::move(message)) {}

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> line() const noexcept { return line_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    static std::string format(ErrorCode code, const std::string& message, std::optional<std::size_t> line) {
        std::string out(to_string(code));
        if (line) out += " at line " + std::to_string(*line);
        if (!message.empty()) out += ": " + message;
        return out;
    }

    ErrorCode code_;
    std::optional<std::size_t> line_;
    std::string detail_;
};

} // namespace reqlint
