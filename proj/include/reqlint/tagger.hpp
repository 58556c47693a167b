#pragma once

// Closed-class tagging: lexicon lookup plus ordered context rules for the
// ambiguous surfaces. Tagging is local to one sentence and reads tags already
// assigned to its left, so results are deterministic.
//
// French rules, first match wins:
//   que/qu'        relative pronoun when the previous word is tagged other and
//                  is not a verb cue, else subordinator
//   le/la/les/l'/leur
//                  object pronoun after a subject pronoun or `ne`, or before
//                  a verb cue, else other (determiner)
//   il/ils         impersonal before an impersonal verb, `y a`, or an être form
//                  followed by an impersonal adjective (negation skipped),
//                  else personal subject
//   si             other before an intensified adjective cue, else subordinator
//   s'             subordinator before il/ils, else reflexive object pronoun
//   en/y           object pronoun before a verb cue or after a subject
//                  pronoun or `ne`, else other (preposition)
// English: `that` subordinator after a verb cue or before a determiner or
// subject pronoun, relative after another word, demonstrative before a verb
// cue, determiner otherwise; this/these/those demonstrative before a verb cue
// or at the end, determiner otherwise; `it` follows the impersonal test.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/lexicon.hpp"
#include "reqlint/segmentation.hpp"
#include "reqlint/tags.hpp"
#include "reqlint/text.hpp"

namespace reqlint {

/// Key used for lexicon and cue lookups: apostrophes normalized, first letter
/// lowered when the token is the first word of its sentence.
inline std::string lookup_key(std::string_view surface, bool sentence_initial) {
    auto key = text::normalize_apostrophes(surface);
    return sentence_initial ? text::lower_first(key) : key;
}

/// Word tokens of a sentence with their lookup keys, in order.
struct WordView {
    std::vector<std::size_t> index; ///< position in Sentence::tokens
    std::vector<std::string> key;

    std::size_t size() const { return index.size(); }
};

inline WordView word_view(const Sentence& s) {
    WordView v;
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
        if (!s.tokens[i].counts_as_word()) continue;
        v.key.push_back(lookup_key(s.tokens[i].surface, v.index.empty()));
        v.index.push_back(i);
    }
    return v;
}

namespace detail {

struct LanguageCues {
    std::vector<std::string_view> subject_skip;  ///< skipped between `il` and its verb
    std::vector<std::string_view> etre_forms;    ///< copulas licensing `il est <adj>`
    std::vector<std::string_view> adj_skip;      ///< skipped between copula and adjective
};

inline const LanguageCues& language_cues(Language lang) {
    static const LanguageCues fr{{"ne", "n'", "pas", "plus", "jamais"},
                                 {"est", "sera", "serait", "était", "fut"},
                                 {"ne", "n'", "pas", "plus", "jamais"}};
    static const LanguageCues en{{"not", "shall", "will", "should", "must", "may", "might", "can", "could", "would"},
                                 {"is", "was", "be", "been", "were"},
                                 {"not"}};
    return lang == Language::fr ? fr : en;
}

inline bool contains(const std::vector<std::string_view>& v, std::string_view s) {
    for (auto x : v)
        if (x == s) return true;
    return false;
}

class SentenceTagger {
public:
    SentenceTagger(Sentence& s, const Lexicon& lex) : s_(s), lex_(lex), words_(word_view(s)) {
        verb_.reserve(words_.size());
        for (const auto& k : words_.key) verb_.push_back(lex_.verb_cues().matches(k));
    }

    void run() {
        for (std::size_t k = 0; k < words_.size(); ++k) tok(k).tag = tag_word(k);
    }

private:
    Token& tok(std::size_t k) { return s_.tokens[words_.index[k]]; }
    const std::string* key(std::size_t k) const { return k < words_.size() ? &words_.key[k] : nullptr; }
    bool key_is(std::size_t k, std::string_view v) const { return k < words_.size() && words_.key[k] == v; }
    bool verb(std::size_t k) const { return k < words_.size() && verb_[k]; }
    bool has_prev(std::size_t k) const { return k > 0; }

    CategoryTag tag_word(std::size_t k) {
        if (tok(k).kind != TokenKind::word) return CategoryTag::other();
        const LexiconEntry* entry = lex_.find(words_.key[k]);
        if (!entry && k == 0) entry = lex_.find(text::normalize_apostrophes(tok(k).surface));
        if (!entry || entry->candidates.empty()) return CategoryTag::other();

        if (!entry->ambiguous) {
            const auto& c = entry->candidates.front();
            return {c.major, c.pronoun, Provenance::lexicon_unambiguous};
        }
        if (auto resolved = resolve(k)) {
            if (resolved->major == Major::other || entry->has(resolved->major, resolved->pronoun))
                return {resolved->major, resolved->pronoun, Provenance::context_rule};
        }
        const auto& c = entry->candidates.front();
        return {c.major, c.pronoun, Provenance::default_};
    }

    std::optional<TagCandidate> resolve(std::size_t k) {
        const std::string& w = words_.key[k];
        const auto pron = [](PronounType t) { return TagCandidate{Major::pronoun, t}; };
        const TagCandidate other{Major::other, std::nullopt};
        const TagCandidate subordinator{Major::subordinator, std::nullopt};

        if (lex_.language() == Language::fr) {
            if (w == "que" || w == "qu'") {
                if (has_prev(k) && tok(k - 1).tag.is(Major::other) && !verb(k - 1)) return pron(PronounType::relative);
                return subordinator;
            }
            if (w == "le" || w == "la" || w == "les" || w == "l'" || w == "leur") {
                if (has_prev(k) && (tok(k - 1).tag.is(PronounType::personal_subject) || key_is(k - 1, "ne") ||
                                    key_is(k - 1, "n'")))
                    return pron(PronounType::personal_object);
                if (verb(k + 1)) return pron(PronounType::personal_object);
                return other;
            }
            if (w == "il" || w == "ils")
                return pron(impersonal_at(k) ? PronounType::impersonal : PronounType::personal_subject);
            if (w == "si") {
                if (auto next = key(k + 1); next && lex_.adjective_cues().matches(*next)) return other;
                return subordinator;
            }
            if (w == "s'") {
                if (key_is(k + 1, "il") || key_is(k + 1, "ils")) return subordinator;
                return pron(PronounType::personal_object);
            }
            if (w == "en" || w == "y") {
                if (verb(k + 1)) return pron(PronounType::personal_object);
                if (has_prev(k)) {
                    const auto& prev = tok(k - 1).tag;
                    if (prev.is(PronounType::personal_subject) || prev.is(PronounType::impersonal) ||
                        prev.is(PronounType::indefinite) || key_is(k - 1, "ne") || key_is(k - 1, "n'"))
                        return pron(PronounType::personal_object);
                }
                return other;
            }
            return std::nullopt;
        }

        if (w == "that") {
            if (has_prev(k) && verb(k - 1)) return subordinator;
            if (auto next = key(k + 1)) {
                if (lex_.determiners().matches(*next)) return subordinator;
                if (const auto* e = lex_.find(*next); e && e->has(Major::pronoun, PronounType::personal_subject))
                    return subordinator;
            }
            if (has_prev(k) && tok(k - 1).tag.is(Major::other) && tok(k - 1).kind == TokenKind::word)
                return pron(PronounType::relative);
            if (verb(k + 1) || !key(k + 1)) return pron(PronounType::demonstrative);
            return other;
        }
        if (w == "this" || w == "these" || w == "those") {
            if (verb(k + 1) || !key(k + 1)) return pron(PronounType::demonstrative);
            return other;
        }
        if (w == "it") return pron(impersonal_at(k) ? PronounType::impersonal : PronounType::personal_subject);
        return std::nullopt;
    }

    /// Impersonal reading of the subject pronoun at word `k`.
    bool impersonal_at(std::size_t k) const {
        const auto& cues = language_cues(lex_.language());
        std::size_t j = k + 1;
        for (int skipped = 0; skipped < 2 && j < words_.size() && contains(cues.subject_skip, words_.key[j]); ++skipped)
            ++j;
        if (j >= words_.size()) return false;

        std::string form = words_.key[j];
        if (!form.empty() && form.back() == '\'' && j + 1 < words_.size()) form += words_.key[j + 1];
        if (lex_.impersonal_verbs().matches(form)) return true;

        if (lex_.language() == Language::fr && form == "y" && j + 1 < words_.size()) {
            const auto& v = words_.key[j + 1];
            if (v == "a" || v == "aura" || v == "avait" || v == "aurait") return true;
        }
        if (contains(cues.etre_forms, words_.key[j])) {
            std::size_t a = j + 1;
            for (int skipped = 0; skipped < 2 && a < words_.size() && contains(cues.adj_skip, words_.key[a]); ++skipped)
                ++a;
            return a < words_.size() && lex_.impersonal_adjectives().matches(words_.key[a]);
        }
        return false;
    }

    Sentence& s_;
    const Lexicon& lex_;
    WordView words_;
    std::vector<bool> verb_;
};

} // namespace detail

/// Tags every word token of `sentence` in place.
inline void tag_sentence(Sentence& sentence, const Lexicon& lexicon) {
    for (auto& t : sentence.tokens) t.tag = CategoryTag::other();
    detail::SentenceTagger(sentence, lexicon).run();
}

inline Sentence tag_tokens(Sentence sentence, const Lexicon& lexicon) {
    tag_sentence(sentence, lexicon);
    return sentence;
}

inline bool is_verb_cue(const Lexicon& lexicon, std::string_view key) { return lexicon.verb_cues().matches(key); }

} // namespace reqlint
