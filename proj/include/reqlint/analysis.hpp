#pragma once

// Segment and tag a whole corpus. A plain corpus becomes a single unit with
// no requirement id.

#include <optional>
#include <string>
#include <vector>

#include "reqlint/corpus.hpp"
#include "reqlint/lexicon.hpp"
#include "reqlint/segmentation.hpp"
#include "reqlint/tagger.hpp"

namespace reqlint {

struct AnalyzedUnit {
    std::optional<std::string> requirement_id;
    std::vector<Sentence> sentences;
    std::size_t words = 0;
};

struct AnalyzedCorpus {
    std::string name;
    Language language = Language::fr;
    CorpusMode mode = CorpusMode::tagged;
    std::vector<AnalyzedUnit> units;

    std::size_t words() const {
        std::size_t n = 0;
        for (const auto& u : units) n += u.words;
        return n;
    }
};

inline AnalyzedUnit analyze_text(std::string_view body, std::optional<std::string> id, const Lexicon& lexicon,
                                 const AbbreviationList& abbreviations) {
    AnalyzedUnit unit;
    unit.requirement_id = std::move(id);
    unit.sentences = split_sentences(body, lexicon.language(), abbreviations);
    for (auto& s : unit.sentences) {
        tag_sentence(s, lexicon);
        unit.words += word_count(s.tokens);
    }
    return unit;
}

inline AnalyzedCorpus analyze_corpus(const Corpus& corpus, const Lexicon& lexicon,
                                     const AbbreviationList& abbreviations) {
    AnalyzedCorpus out;
    out.name = corpus.name;
    out.language = corpus.language;
    out.mode = corpus.mode;
    if (corpus.mode == CorpusMode::plain) {
        out.units.push_back(analyze_text(corpus.body, std::nullopt, lexicon, abbreviations));
    } else {
        out.units.reserve(corpus.requirements.size());
        for (const auto& r : corpus.requirements)
            out.units.push_back(analyze_text(r.body, r.id, lexicon, abbreviations));
    }
    return out;
}

inline AnalyzedCorpus analyze_corpus(const Corpus& corpus, const Lexicon& lexicon) {
    return analyze_corpus(corpus, lexicon, AbbreviationList::builtin());
}

} // namespace reqlint
