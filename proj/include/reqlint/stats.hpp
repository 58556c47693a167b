#pragma once

// Genre statistics: closed-class frequencies relative to the word count and
// sentence-length distribution, for one corpus or several side by side.
//
// Percentages are exact rationals rounded half-up: two decimals for
// word-normalized frequencies, one for the share of long sentences, and the
// average sentence length to the nearest whole word.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reqlint/analysis.hpp"
#include "reqlint/corpus.hpp"
#include "reqlint/error.hpp"
#include "reqlint/rules.hpp"
#include "reqlint/segmentation.hpp"

namespace reqlint {

enum class Category { coordinator, subordinator, conjunction_total, pronoun };

inline constexpr std::array<Category, 4> all_categories = {Category::coordinator, Category::subordinator,
                                                            Category::conjunction_total, Category::pronoun};

inline std::string_view to_string(Category c) {
    switch (c) {
    case Category::coordinator: return "coordinator";
    case Category::subordinator: return "subordinator";
    case Category::conjunction_total: return "conjunction_total";
    case Category::pronoun: return "pronoun";
    }
    return "";
}

/// `part / whole * 100` rounded half-up to `decimals` places. `whole` > 0.
inline std::string percent_string(std::uint64_t part, std::uint64_t whole, int decimals) {
    std::uint64_t scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    const std::uint64_t scaled = part * 100 * scale; // exact for counts far beyond any corpus
    const std::uint64_t rounded = (2 * scaled + whole) / (2 * whole);
    std::string out = std::to_string(rounded / scale);
    if (decimals > 0) {
        std::string frac = std::to_string(rounded % scale);
        out += '.' + std::string(static_cast<std::size_t>(decimals) - frac.size(), '0') + frac;
    }
    return out;
}

/// `part / whole` rounded half-up to an integer. `whole` > 0.
inline std::uint64_t rounded_ratio(std::uint64_t part, std::uint64_t whole) { return (2 * part + whole) / (2 * whole); }

struct CorpusStats {
    std::string corpus_name;
    std::size_t total_words = 0;
    std::map<Category, std::size_t> counts;
    std::map<Category, std::string> percentages;
    std::size_t sentence_count = 0;
    std::size_t long_sentence_count = 0;
    std::string long_sentence_percent;
    std::size_t avg_sentence_length = 0;
    std::size_t threshold_used = 0;

    bool operator==(const CorpusStats&) const = default;
};

/// Builds the derived fields from raw counts.
inline CorpusStats make_stats(std::string name, std::size_t total_words, std::size_t coordinators,
                              std::size_t subordinators, std::size_t pronouns, std::size_t sentence_count,
                              std::size_t long_sentence_count, std::size_t threshold) {
    if (total_words == 0) throw Error(ErrorCode::empty_corpus, name + " has no words");
    if (sentence_count == 0) throw Error(ErrorCode::empty_corpus, name + " has no sentences");
    CorpusStats s;
    s.corpus_name = std::move(name);
    s.total_words = total_words;
    s.counts[Category::coordinator] = coordinators;
    s.counts[Category::subordinator] = subordinators;
    s.counts[Category::conjunction_total] = coordinators + subordinators;
    s.counts[Category::pronoun] = pronouns;
    for (auto c : all_categories) s.percentages[c] = percent_string(s.counts[c], total_words, 2);
    s.sentence_count = sentence_count;
    s.long_sentence_count = long_sentence_count;
    s.long_sentence_percent = percent_string(long_sentence_count, sentence_count, 1);
    s.avg_sentence_length = rounded_ratio(total_words, sentence_count);
    s.threshold_used = threshold;
    return s;
}

/// Partial counts; merging is associative and commutative.
struct StatsAccumulator {
    std::size_t words = 0;
    std::size_t coordinators = 0;
    std::size_t subordinators = 0;
    std::size_t pronouns = 0;
    std::size_t sentences = 0;
    std::size_t long_sentences = 0;

    void add(const Sentence& s, std::size_t threshold) {
        const auto wc = word_count(s.tokens);
        words += wc;
        ++sentences;
        if (wc > threshold) ++long_sentences;
        for (const auto& t : s.tokens) {
            if (t.tag.is(Major::coordinator)) ++coordinators;
            else if (t.tag.is(Major::subordinator)) ++subordinators;
            else if (t.tag.is(Major::pronoun)) ++pronouns;
        }
    }

    void add(const AnalyzedUnit& u, std::size_t threshold) {
        for (const auto& s : u.sentences) add(s, threshold);
    }

    void merge(const StatsAccumulator& o) {
        words += o.words;
        coordinators += o.coordinators;
        subordinators += o.subordinators;
        pronouns += o.pronouns;
        sentences += o.sentences;
        long_sentences += o.long_sentences;
    }

    CorpusStats finish(std::string name, std::size_t threshold) const {
        return make_stats(std::move(name), words, coordinators, subordinators, pronouns, sentences, long_sentences,
                          threshold);
    }
};

inline CorpusStats compute_stats(const AnalyzedCorpus& corpus, const RuleConfig& config) {
    StatsAccumulator acc;
    for (const auto& u : corpus.units) acc.add(u, config.long_sentence_threshold);
    return acc.finish(corpus.name, config.long_sentence_threshold);
}

inline std::size_t corpus_word_count(const Corpus& corpus, const AbbreviationList& abbreviations) {
    if (corpus.mode == CorpusMode::plain) return word_count(split_sentences(corpus.body, corpus.language, abbreviations));
    std::size_t n = 0;
    for (const auto& r : corpus.requirements) n += word_count(split_sentences(r.body, corpus.language, abbreviations));
    return n;
}

/// Keeps whole requirements (tagged) or whole sentences (plain), in order,
/// while the running word count stays within `target_words`.
inline Corpus truncate_corpus(const Corpus& corpus, std::size_t target_words, const AbbreviationList& abbreviations) {
    if (target_words < 1) throw Error(ErrorCode::invalid_argument, "target_words must be >= 1");
    Corpus out = corpus;
    std::size_t total = 0;
    if (corpus.mode == CorpusMode::tagged) {
        out.requirements.clear();
        for (const auto& r : corpus.requirements) {
            const auto wc = word_count(split_sentences(r.body, corpus.language, abbreviations));
            if (total + wc > target_words) break;
            total += wc;
            out.requirements.push_back(r);
        }
        if (out.requirements.empty())
            throw Error(ErrorCode::target_too_small, "first requirement of " + corpus.name + " exceeds " +
                                                         std::to_string(target_words) + " words");
        return out;
    }
    const auto sentences = split_sentences(corpus.body, corpus.language, abbreviations);
    std::size_t end = 0;
    std::size_t kept = 0;
    for (const auto& s : sentences) {
        const auto wc = word_count(s.tokens);
        if (total + wc > target_words) break;
        total += wc;
        end = s.span.end;
        ++kept;
    }
    if (kept == sentences.size()) return out;
    if (kept == 0)
        throw Error(ErrorCode::target_too_small,
                    "first sentence of " + corpus.name + " exceeds " + std::to_string(target_words) + " words");
    out.body = corpus.body.substr(0, end);
    return out;
}

inline Corpus truncate_corpus(const Corpus& corpus, std::size_t target_words) {
    return truncate_corpus(corpus, target_words, AbbreviationList::builtin());
}

/// Frequency of `category` in `numerator` divided by its frequency in `denominator`.
struct FrequencyRatio {
    std::string numerator;
    std::string denominator;
    Category category = Category::pronoun;
    std::optional<double> value; ///< nullopt when the denominator count is zero
};

struct ComparisonTable {
    std::vector<CorpusStats> rows;
    std::vector<FrequencyRatio> ratios;

    std::optional<double> ratio(std::string_view num, std::string_view den, Category c) const {
        for (const auto& r : ratios)
            if (r.numerator == num && r.denominator == den && r.category == c) return r.value;
        return std::nullopt;
    }
};

inline ComparisonTable compare_corpora(std::vector<CorpusStats> stats) {
    if (stats.size() < 2) throw Error(ErrorCode::invalid_argument, "comparison needs at least two corpora");
    ComparisonTable table;
    table.rows = std::move(stats);
    for (const auto& a : table.rows) {
        for (const auto& b : table.rows) {
            if (&a == &b) continue;
            for (auto c : all_categories) {
                FrequencyRatio r{a.corpus_name, b.corpus_name, c, std::nullopt};
                const auto ca = a.counts.at(c), cb = b.counts.at(c);
                if (cb != 0)
                    r.value = (static_cast<double>(ca) * static_cast<double>(b.total_words)) /
                              (static_cast<double>(cb) * static_cast<double>(a.total_words));
                table.ratios.push_back(std::move(r));
            }
        }
    }
    return table;
}

} // namespace reqlint
