#pragma once

#include <optional>
#include <string_view>

namespace reqlint {

enum class Major { coordinator, subordinator, pronoun, other };

enum class PronounType { personal_subject, personal_object, impersonal, relative, demonstrative, indefinite };

enum class Provenance { lexicon_unambiguous, context_rule, default_ };

/// Closed-class category of a word token. `pronoun` is set iff major is pronoun.
struct CategoryTag {
    Major major = Major::other;
    std::optional<PronounType> pronoun;
    Provenance provenance = Provenance::default_;

    static CategoryTag other(Provenance p = Provenance::default_) { return {Major::other, std::nullopt, p}; }
    static CategoryTag of(Major m, Provenance p) { return {m, std::nullopt, p}; }
    static CategoryTag pronoun_of(PronounType t, Provenance p) { return {Major::pronoun, t, p}; }

    bool is(Major m) const { return major == m; }
    bool is(PronounType t) const { return major == Major::pronoun && pronoun == t; }
    bool is_conjunction() const { return major == Major::coordinator || major == Major::subordinator; }

    bool operator==(const CategoryTag&) const = default;
};

inline std::string_view to_string(Major m) {
    switch (m) {
    case Major::coordinator: return "coordinator";
    case Major::subordinator: return "subordinator";
    case Major::pronoun: return "pronoun";
    case Major::other: return "other";
    }
    return "other";
}

inline std::string_view to_string(PronounType t) {
    switch (t) {
    case PronounType::personal_subject: return "personal_subject";
    case PronounType::personal_object: return "personal_object";
    case PronounType::impersonal: return "impersonal";
    case PronounType::relative: return "relative";
    case PronounType::demonstrative: return "demonstrative";
    case PronounType::indefinite: return "indefinite";
    }
    return "";
}

inline std::string_view to_string(Provenance p) {
    switch (p) {
    case Provenance::lexicon_unambiguous: return "lexicon_unambiguous";
    case Provenance::context_rule: return "context_rule";
    case Provenance::default_: return "default";
    }
    return "";
}

inline std::optional<Major> parse_major(std::string_view s) {
    for (auto m : {Major::coordinator, Major::subordinator, Major::pronoun, Major::other})
        if (to_string(m) == s) return m;
    return std::nullopt;
}

inline std::optional<PronounType> parse_pronoun_type(std::string_view s) {
    for (auto t : {PronounType::personal_subject, PronounType::personal_object, PronounType::impersonal,
                   PronounType::relative, PronounType::demonstrative, PronounType::indefinite})
        if (to_string(t) == s) return t;
    return std::nullopt;
}

} // namespace reqlint
