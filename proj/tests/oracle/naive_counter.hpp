#pragma once

// Brute-force reference counter for synthetic French corpora. It shares no
// code with the library: its own word lists, its own splitting and a direct
// transcription of the disambiguation rules. It only has to understand text
// produced by tests/support/synth.hpp.

#include <set>
#include <string>
#include <vector>

namespace oracle {

struct Counts {
    std::size_t words = 0;
    std::size_t coordinators = 0;
    std::size_t subordinators = 0;
    std::size_t pronouns = 0;
    std::size_t sentences = 0;

    bool operator==(const Counts&) const = default;
};

namespace impl {

using Set = std::set<std::string>;

inline const Set coordinators = {"et", "ou", "mais", "donc", "or", "ni", "car", "alors"};
inline const Set fixed_subordinators = {"lorsque", "lorsqu'", "quand", "puisque", "puisqu'", "quoique", "quoiqu'"};
inline const Set fixed_pronouns = {"elle",  "elles",    "nous",      "vous",     "lui",      "eux",     "se",
                                   "on",    "chacun",   "chacune",   "quelqu'un", "quiconque", "qui",    "dont",
                                   "où",    "lequel",   "laquelle",  "lesquels", "lesquelles", "auquel", "auxquels",
                                   "auxquelles", "duquel", "desquels", "desquelles", "celui", "celle", "ceux",
                                   "celles", "celui-ci", "celle-ci", "ceux-ci", "celles-ci", "celui-là", "celle-là",
                                   "ceux-là", "celles-là", "cela", "ceci", "ça"};
inline const Set verbs = {"est", "sont", "doit", "peut", "vérifie", "calcule", "envoie", "transmet",
                          "sera", "faut", "existe", "suffit", "a", "reste", "semble", "active"};
inline const Set impersonal_verbs = {"faut", "s'agit", "suffit", "existe", "semble"};
inline const Set impersonal_adjectives = {"nécessaire", "possible", "utile", "interdit"};
inline const Set intensified = {"grand", "rapide", "souvent", "faible"};
inline const Set copulas = {"est", "sera"};
inline const Set negation = {"ne", "n'", "pas", "plus", "jamais"};
inline const Set clitics = {"l", "d", "j", "m", "n", "s", "t", "c", "qu", "lorsqu", "puisqu", "quoiqu", "jusqu"};

enum Tag { other, coord, subord, subject, impersonal, object, relative, indefinite, pron_other };

inline bool is_pronoun(Tag t) { return t >= subject; }

inline std::string lower_ascii_first(std::string s) {
    if (!s.empty() && s[0] >= 'A' && s[0] <= 'Z') s[0] = static_cast<char>(s[0] - 'A' + 'a');
    return s;
}

inline bool is_upper_or_digit(char c) { return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'); }

/// Sentences of one line: a period, blanks, then a capital or a digit.
inline std::vector<std::string> sentences_of_line(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] != '.') continue;
        std::size_t j = i + 1;
        if (j >= line.size() || line[j] != ' ') continue;
        while (j < line.size() && line[j] == ' ') ++j;
        if (j < line.size() && is_upper_or_digit(line[j])) {
            out.push_back(line.substr(start, i + 1 - start));
            start = j;
            i = j - 1;
        }
    }
    if (start < line.size()) out.push_back(line.substr(start));
    return out;
}

inline std::vector<std::string> words_of(const std::string& sentence) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < sentence.size()) {
        while (i < sentence.size() && sentence[i] == ' ') ++i;
        std::size_t j = i;
        while (j < sentence.size() && sentence[j] != ' ') ++j;
        std::string w = sentence.substr(i, j - i);
        i = j;
        while (!w.empty() && (w.back() == '.' || w.back() == ',')) w.pop_back();
        while (!w.empty()) {
            const auto apo = w.find('\'');
            if (apo == std::string::npos || apo + 1 >= w.size()) break;
            std::string head = w.substr(0, apo);
            for (auto& c : head)
                if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
            if (!clitics.contains(head)) break;
            out.push_back(w.substr(0, apo + 1));
            w = w.substr(apo + 1);
        }
        if (!w.empty()) out.push_back(w);
    }
    return out;
}

class SentenceCounter {
public:
    explicit SentenceCounter(std::vector<std::string> words) : w_(std::move(words)), tags_(w_.size(), other) {
        if (!w_.empty()) w_[0] = lower_ascii_first(w_[0]);
    }

    void run(Counts& c) {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            tags_[k] = tag(k);
            ++c.words;
            if (tags_[k] == coord) ++c.coordinators;
            else if (tags_[k] == subord) ++c.subordinators;
            else if (is_pronoun(tags_[k])) ++c.pronouns;
        }
    }

private:
    bool at(std::size_t k, const Set& s) const { return k < w_.size() && s.contains(w_[k]); }
    bool is(std::size_t k, const char* v) const { return k < w_.size() && w_[k] == v; }

    bool impersonal_subject(std::size_t k) const {
        std::size_t j = k + 1;
        for (int n = 0; n < 2 && at(j, negation); ++n) ++j;
        if (j >= w_.size()) return false;
        std::string form = w_[j];
        if (form.back() == '\'' && j + 1 < w_.size()) form += w_[j + 1];
        if (impersonal_verbs.contains(form)) return true;
        if (form == "y" && (is(j + 1, "a"))) return true;
        if (at(j, copulas)) {
            std::size_t a = j + 1;
            for (int n = 0; n < 2 && at(a, negation); ++n) ++a;
            return at(a, impersonal_adjectives);
        }
        return false;
    }

    Tag tag(std::size_t k) const {
        const std::string& w = w_[k];
        const bool has_prev = k > 0;
        const Tag prev = has_prev ? tags_[k - 1] : other;
        const bool prev_neg = has_prev && (w_[k - 1] == "ne" || w_[k - 1] == "n'");

        if (coordinators.contains(w)) return coord;
        if (fixed_subordinators.contains(w)) return subord;
        if (w == "on" || w == "chacun" || w == "quelqu'un" || w == "quiconque") return indefinite;
        if (w == "qui" || w == "dont" || w == "où" || w == "lequel" || w == "laquelle" || w == "auquel" ||
            w == "duquel")
            return relative;
        if (w == "elle" || w == "elles" || w == "nous" || w == "vous") return subject;
        if (fixed_pronouns.contains(w)) return pron_other;

        if (w == "que" || w == "qu'") return has_prev && prev == other && !at(k - 1, verbs) ? relative : subord;
        if (w == "le" || w == "la" || w == "les" || w == "l'" || w == "leur") {
            if (has_prev && (prev == subject || prev_neg)) return object;
            return at(k + 1, verbs) ? object : other;
        }
        if (w == "il" || w == "ils") return impersonal_subject(k) ? impersonal : subject;
        if (w == "si") return at(k + 1, intensified) ? other : subord;
        if (w == "s'") return is(k + 1, "il") || is(k + 1, "ils") ? subord : object;
        if (w == "en" || w == "y") {
            if (at(k + 1, verbs)) return object;
            if (has_prev && (prev == subject || prev == impersonal || prev == indefinite || prev_neg)) return object;
            return other;
        }
        return other;
    }

    std::vector<std::string> w_;
    std::vector<Tag> tags_;
};

inline std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string::npos) nl = text.size();
        out.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return out;
}

inline void count_text(const std::string& text, Counts& c) {
    for (const auto& line : lines_of(text)) {
        for (const auto& s : sentences_of_line(line)) {
            auto words = words_of(s);
            if (words.empty()) continue;
            ++c.sentences;
            SentenceCounter(std::move(words)).run(c);
        }
    }
}

} // namespace impl

/// Counts over a whole plain text.
inline Counts count_plain(const std::string& text) {
    Counts c;
    impl::count_text(text, c);
    return c;
}

/// Counts over the bodies of `[REQ id]` ... `[/REQ]` blocks.
inline Counts count_tagged(const std::string& text) {
    Counts c;
    std::string body;
    bool inside = false;
    for (const auto& line : impl::lines_of(text)) {
        if (line.rfind("[REQ ", 0) == 0) {
            inside = true;
            body.clear();
        } else if (line == "[/REQ]") {
            inside = false;
            impl::count_text(body, c);
        } else if (inside) {
            body += line + "\n";
        }
    }
    return c;
}

} // namespace oracle
