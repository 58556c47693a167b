#pragma once

#include <optional>
#include <string_view>

namespace reqlint {

enum class Language { fr, en };

inline std::string_view to_string(Language lang) {
    return lang == Language::fr ? "fr" : "en";
}

inline std::optional<Language> parse_language(std::string_view s) {
    if (s == "fr") return Language::fr;
    if (s == "en") return Language::en;
    return std::nullopt;
}

} // namespace reqlint
