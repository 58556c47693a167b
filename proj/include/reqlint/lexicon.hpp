#pragma once

// Closed-class lexicon and the cue lists the context rules consult.
//
// File format (UTF-8, `#` comments, blank lines ignored):
//
//   [entries]                       (implicit at the top of the file)
//   surface<TAB>major[<TAB>subtype][<TAB>ambiguous]
//   [verb_cues] [impersonal_verbs] [impersonal_adjectives] [adjective_cues] [determiners]
//   one form per line; `*ra` is a suffix pattern
//
// A surface listed on several lines collects several candidate tags. Loading a
// user file on top of the builtin lexicon replaces whole entries surface by
// surface and extends the cue lists.

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/corpus.hpp"
#include "reqlint/detail/builtin_data.hpp"
#include "reqlint/error.hpp"
#include "reqlint/language.hpp"
#include "reqlint/tags.hpp"
#include "reqlint/text.hpp"

namespace reqlint {

struct TagCandidate {
    Major major = Major::other;
    std::optional<PronounType> pronoun;

    bool operator==(const TagCandidate&) const = default;
};

struct LexiconEntry {
    std::vector<TagCandidate> candidates;
    bool ambiguous = false;

    bool has(Major m, std::optional<PronounType> p = std::nullopt) const {
        return std::find(candidates.begin(), candidates.end(), TagCandidate{m, p}) != candidates.end();
    }
};

/// Exact forms plus `*suffix` patterns.
class CueSet {
public:
    void add(std::string_view form) {
        if (form.size() > 1 && form.front() == '*') {
            std::string suffix(form.substr(1));
            if (std::find(suffixes_.begin(), suffixes_.end(), suffix) == suffixes_.end()) suffixes_.push_back(suffix);
        } else {
            forms_.insert(text::normalize_apostrophes(form));
        }
    }

    void merge(const CueSet& other) {
        for (const auto& f : other.forms_) forms_.insert(f);
        for (const auto& s : other.suffixes_) add("*" + s);
    }

    /// `form` must already have normalized apostrophes. A suffix only matches
    /// when at least two bytes precede it, so `front` is not `-ront`.
    bool matches(std::string_view form) const {
        if (form.empty()) return false;
        if (forms_.contains(form)) return true;
        for (const auto& s : suffixes_)
            if (form.size() > s.size() + 1 && text::ends_with(form, s)) return true;
        return false;
    }

    bool contains_form(std::string_view form) const { return forms_.contains(form); }
    std::size_t size() const { return forms_.size() + suffixes_.size(); }

private:
    std::set<std::string, std::less<>> forms_;
    std::vector<std::string> suffixes_;
};

class Lexicon {
public:
    explicit Lexicon(Language language = Language::fr) : language_(language) {}

    static Lexicon builtin(Language language) {
        return parse(language == Language::fr ? detail::builtin_lexicon_fr : detail::builtin_lexicon_en, language,
                     "<builtin>");
    }

    /// Parses `content` on its own, without the builtin entries.
    static Lexicon parse(std::string_view content, Language language, const std::string& source) {
        Lexicon lex(language);
        enum class Section { entries, verb_cues, impersonal_verbs, impersonal_adjectives, adjective_cues, determiners };
        Section section = Section::entries;
        std::set<std::string, std::less<>> defined_here;

        const auto lines = detail::split_lines(content);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            const std::size_t lineno = i + 1;
            std::string_view line = lines[i];
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            // trailing blanks only; tabs inside are separators
            while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
            while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
            if (line.empty()) continue;

            auto malformed = [&](const std::string& why) {
                return Error(ErrorCode::malformed_lexicon_line, source + ": " + why + ": '" + std::string(lines[i]) + "'",
                             lineno);
            };

            if (line.front() == '[') {
                if (line == "[entries]") section = Section::entries;
                else if (line == "[verb_cues]") section = Section::verb_cues;
                else if (line == "[impersonal_verbs]") section = Section::impersonal_verbs;
                else if (line == "[impersonal_adjectives]") section = Section::impersonal_adjectives;
                else if (line == "[adjective_cues]") section = Section::adjective_cues;
                else if (line == "[determiners]") section = Section::determiners;
                else throw malformed("unknown section");
                continue;
            }

            if (section != Section::entries) {
                if (line.find('\t') != std::string_view::npos) throw malformed("cue lines hold a single form");
                CueSet& set = section == Section::verb_cues              ? lex.verb_cues_
                              : section == Section::impersonal_verbs      ? lex.impersonal_verbs_
                              : section == Section::impersonal_adjectives ? lex.impersonal_adjectives_
                              : section == Section::adjective_cues        ? lex.adjective_cues_
                                                                          : lex.determiners_;
                set.add(line);
                continue;
            }

            std::vector<std::string_view> fields;
            std::size_t start = 0;
            while (true) {
                auto tab = line.find('\t', start);
                fields.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
                if (tab == std::string_view::npos) break;
                start = tab + 1;
            }
            if (fields.size() < 2) throw malformed("expected surface<TAB>major");
            if (fields[0].empty() || fields[0].find(' ') != std::string_view::npos) throw malformed("bad surface");
            const auto major = parse_major(fields[1]);
            if (!major) throw Error(ErrorCode::unknown_category, source + ": '" + std::string(fields[1]) + "'", lineno);

            TagCandidate candidate{*major, std::nullopt};
            bool ambiguous = false;
            for (std::size_t f = 2; f < fields.size(); ++f) {
                if (fields[f].empty()) continue;
                if (fields[f] == "ambiguous") {
                    ambiguous = true;
                } else if (auto sub = parse_pronoun_type(fields[f])) {
                    if (candidate.pronoun) throw malformed("two subtypes");
                    candidate.pronoun = sub;
                } else {
                    throw Error(ErrorCode::unknown_category, source + ": '" + std::string(fields[f]) + "'", lineno);
                }
            }
            if (*major == Major::pronoun && !candidate.pronoun) throw malformed("pronoun entry needs a subtype");
            if (*major != Major::pronoun && candidate.pronoun) throw malformed("subtype given for a non-pronoun");

            const std::string surface = text::normalize_apostrophes(fields[0]);
            auto& entry = lex.entries_[surface];
            if (!defined_here.contains(surface)) {
                entry = {};
                defined_here.insert(surface);
            }
            if (!entry.has(candidate.major, candidate.pronoun)) entry.candidates.push_back(candidate);
            entry.ambiguous = entry.ambiguous || ambiguous;
        }
        return lex;
    }

    /// Entries of `user` replace ours surface by surface; cue lists are merged.
    void overlay(const Lexicon& user) {
        for (const auto& [surface, entry] : user.entries_) entries_[surface] = entry;
        verb_cues_.merge(user.verb_cues_);
        impersonal_verbs_.merge(user.impersonal_verbs_);
        impersonal_adjectives_.merge(user.impersonal_adjectives_);
        adjective_cues_.merge(user.adjective_cues_);
        determiners_.merge(user.determiners_);
    }

    /// `key` must have normalized apostrophes.
    const LexiconEntry* find(std::string_view key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }

    Language language() const { return language_; }
    std::size_t size() const { return entries_.size(); }
    const std::map<std::string, LexiconEntry, std::less<>>& entries() const { return entries_; }

    const CueSet& verb_cues() const { return verb_cues_; }
    const CueSet& impersonal_verbs() const { return impersonal_verbs_; }
    const CueSet& impersonal_adjectives() const { return impersonal_adjectives_; }
    const CueSet& adjective_cues() const { return adjective_cues_; }
    const CueSet& determiners() const { return determiners_; }

private:
    Language language_;
    std::map<std::string, LexiconEntry, std::less<>> entries_;
    CueSet verb_cues_;
    CueSet impersonal_verbs_;
    CueSet impersonal_adjectives_;
    CueSet adjective_cues_;
    CueSet determiners_;
};

/// Builtin lexicon for `language`, with the file at `path` (if any) laid over it.
inline Lexicon load_lexicon(const std::optional<std::filesystem::path>& path, Language language) {
    Lexicon lex = Lexicon::builtin(language);
    if (path) {
        const auto content = read_file(*path);
        detail::check_utf8(content);
        lex.overlay(Lexicon::parse(content, language, path->string()));
    }
    return lex;
}

} // namespace reqlint
