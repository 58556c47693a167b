#pragma once

// Requirement checks.
//
//   R1 combinators        coordinators and subordinators, classified in order:
//                         mandatory, unexplained alternative, coordinated
//                         infinitive complement, clause coordination, useful
//   R2 pronouns           autonomy of personal and demonstrative pronouns
//   R3 long sentences     word count strictly above the threshold
//   R4 mixed connectives  and/or at the same parenthesis depth
//   R5 list connectives   a conditional intro ending in ':' followed by bullet
//                         items that never say whether all or any apply
//
// Every finding is local to one requirement.

#include <algorithm>
#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/analysis.hpp"
#include "reqlint/error.hpp"
#include "reqlint/lexicon.hpp"
#include "reqlint/segmentation.hpp"
#include "reqlint/tagger.hpp"
#include "reqlint/text.hpp"

namespace reqlint {

enum class RuleId { r1_combinator, r2_pronoun, r3_long_sentence, r4_mixed_connectives, r5_list_connective };

inline constexpr std::array<RuleId, 5> all_rules = {RuleId::r1_combinator, RuleId::r2_pronoun,
                                                     RuleId::r3_long_sentence, RuleId::r4_mixed_connectives,
                                                     RuleId::r5_list_connective};

enum class Severity { error, warning, info };

enum class Classification { mandatory, useful, undesirable, ambiguous, non_autonomous };

inline std::string_view to_string(RuleId r) {
    switch (r) {
    case RuleId::r1_combinator: return "R1_combinator";
    case RuleId::r2_pronoun: return "R2_pronoun";
    case RuleId::r3_long_sentence: return "R3_long_sentence";
    case RuleId::r4_mixed_connectives: return "R4_mixed_connectives";
    case RuleId::r5_list_connective: return "R5_list_connective";
    }
    return "";
}

inline std::string_view short_name(RuleId r) { return to_string(r).substr(0, 2); }

/// Accepts `R1` or `R1_combinator`.
inline std::optional<RuleId> parse_rule_id(std::string_view s) {
    for (auto r : all_rules)
        if (s == to_string(r) || s == short_name(r)) return r;
    return std::nullopt;
}

inline std::string_view to_string(Severity s) {
    switch (s) {
    case Severity::error: return "error";
    case Severity::warning: return "warning";
    case Severity::info: return "info";
    }
    return "";
}

inline std::optional<Severity> parse_severity(std::string_view s) {
    for (auto v : {Severity::error, Severity::warning, Severity::info})
        if (s == to_string(v)) return v;
    return std::nullopt;
}

inline std::string_view to_string(Classification c) {
    switch (c) {
    case Classification::mandatory: return "mandatory";
    case Classification::useful: return "useful";
    case Classification::undesirable: return "undesirable";
    case Classification::ambiguous: return "ambiguous";
    case Classification::non_autonomous: return "non_autonomous";
    }
    return "";
}

inline std::optional<Classification> parse_classification(std::string_view s) {
    for (auto v : {Classification::mandatory, Classification::useful, Classification::undesirable,
                   Classification::ambiguous, Classification::non_autonomous})
        if (s == to_string(v)) return v;
    return std::nullopt;
}

inline Severity default_severity(Classification c) {
    switch (c) {
    case Classification::undesirable:
    case Classification::ambiguous: return Severity::warning;
    case Classification::non_autonomous: return Severity::error;
    default: return Severity::info;
    }
}

struct Finding {
    RuleId rule = RuleId::r1_combinator;
    std::string corpus;
    std::optional<std::string> requirement_id;
    std::size_t sentence_index = 0;
    Span span;
    Severity severity = Severity::info;
    Classification classification = Classification::useful;
    std::string message;
    std::vector<std::string> evidence;

    bool operator==(const Finding&) const = default;
};

struct RuleConfig {
    std::size_t long_sentence_threshold = 25;
    bool report_mandatory = false;
    std::set<RuleId> enabled_rules{all_rules.begin(), all_rules.end()};
    std::map<RuleId, Severity> severity_overrides;

    static RuleConfig defaults(Language lang) {
        RuleConfig c;
        c.long_sentence_threshold = lang == Language::fr ? 25 : 20;
        return c;
    }

    bool enabled(RuleId r) const { return enabled_rules.contains(r); }

    /// `list` is comma separated, e.g. "R1,R4".
    void disable(std::string_view list) {
        std::size_t start = 0;
        while (start <= list.size()) {
            auto comma = list.find(',', start);
            auto item = text::trim(list.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                     : comma - start));
            if (!item.empty()) {
                auto r = parse_rule_id(item);
                if (!r) throw Error(ErrorCode::unknown_rule, std::string(item));
                enabled_rules.erase(*r);
            }
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }

    void set_threshold(long long n) {
        if (n < 1) throw Error(ErrorCode::invalid_argument, "long_sentence_threshold must be >= 1");
        long_sentence_threshold = static_cast<std::size_t>(n);
    }

    /// Applies `key = value` lines on top of the current values.
    void apply_text(std::string_view content, const std::string& source = "<config>") {
        const auto lines = detail::split_lines(content);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            std::string_view line = lines[i];
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            line = text::trim(line);
            if (line.empty()) continue;
            auto bad = [&](const std::string& why) {
                return Error(ErrorCode::malformed_config_line, source + ": " + why + ": '" + std::string(lines[i]) + "'",
                             i + 1);
            };
            const auto eq = line.find('=');
            if (eq == std::string_view::npos) throw bad("expected key = value");
            const auto key = text::trim(line.substr(0, eq));
            const auto value = text::trim(line.substr(eq + 1));
            if (key == "long_sentence_threshold") {
                long long n = 0;
                try {
                    std::size_t used = 0;
                    n = std::stoll(std::string(value), &used);
                    if (used != value.size()) throw bad("not an integer");
                } catch (const std::logic_error&) {
                    throw bad("not an integer");
                }
                try {
                    set_threshold(n);
                } catch (const Error& e) {
                    throw bad(e.detail());
                }
            } else if (key == "report_mandatory") {
                const auto v = text::ascii_lower(value);
                if (v == "true" || v == "yes" || v == "1") report_mandatory = true;
                else if (v == "false" || v == "no" || v == "0") report_mandatory = false;
                else throw bad("expected true or false");
            } else if (key == "disable") {
                disable(value);
            } else if (key.starts_with("severity.")) {
                auto r = parse_rule_id(key.substr(9));
                if (!r) throw Error(ErrorCode::unknown_rule, std::string(key.substr(9)), i + 1);
                auto s = parse_severity(value);
                if (!s) throw bad("unknown severity");
                severity_overrides[*r] = *s;
            } else {
                throw bad("unknown key");
            }
        }
    }

    void apply_file(const std::filesystem::path& path) {
        const auto content = read_file(path);
        detail::check_utf8(content);
        apply_text(content, path.string());
    }
};

namespace detail {

struct RuleCues {
    std::vector<std::string_view> logical;          ///< coordinators carrying logic (mais)
    std::string_view interval_open;                 ///< entre
    std::string_view conjunctive;                   ///< et
    std::string_view alternative;                   ///< ou
    std::string_view apodosis;                      ///< alors
    std::vector<std::string_view> condition_opener; ///< si: licenses an apodosis
    std::vector<std::string_view> condition_cues;   ///< anything telling when an alternative applies
    std::vector<std::string_view> ordering;         ///< puis, ensuite
    std::vector<std::string_view> complementizers;  ///< que
    std::vector<std::string_view> infinitive_preps; ///< de, à
    std::vector<std::string_view> infinitive_suffixes;
    std::vector<std::string_view> negation;
    std::vector<std::vector<std::string_view>> quantifiers;
};

inline const RuleCues& rule_cues(Language lang) {
    static const RuleCues fr{
        {"mais", "car", "donc"},
        "entre",
        "et",
        "ou",
        "alors",
        {"si", "s'"},
        {"si", "s'", "sinon", "selon"},
        {"puis", "ensuite", "alors"},
        {"que", "qu'"},
        {"de", "d'", "à"},
        {"er", "ir", "re", "oir"},
        {"ne", "n'"},
        {{"l'une", "des"}, {"l'un", "des"}, {"l'", "une", "des"}, {"l'", "un", "des"}, {"une", "des"}, {"un", "des"},
         {"toutes", "les"}, {"tous", "les"}, {"au", "moins"}, {"chacune", "des"}, {"chacun", "des"},
         {"l'", "ensemble", "des"}, {"n'", "importe"}}};
    static const RuleCues en{{"but"},
                             "between",
                             "and",
                             "or",
                             "then",
                             {"if"},
                             {"if", "unless", "otherwise", "depending", "whether"},
                             {"then", "afterwards", "subsequently", "next"},
                             {"that"},
                             {"to"},
                             {},
                             {"not"},
                             {{"any", "of"}, {"all", "of"}, {"one", "of"}, {"each", "of"}, {"either"}, {"both"}}};
    return lang == Language::fr ? fr : en;
}

/// Per-sentence context shared by the checks.
struct SentenceContext {
    const Sentence& sentence;
    WordView words;
    std::vector<std::size_t> depth;        ///< parenthesis depth of each word
    std::vector<std::size_t> verbs_before; ///< verb cues among words[0, k)
    std::vector<bool> verb;
    std::size_t wc = 0;

    SentenceContext(const Sentence& s, const Lexicon& lex) : sentence(s), words(word_view(s)) {
        std::size_t d = 0, w = 0;
        depth.resize(words.size());
        for (std::size_t i = 0; i < s.tokens.size(); ++i) {
            const auto& t = s.tokens[i];
            if (t.surface == "(") ++d;
            else if (t.surface == ")" && d > 0) --d;
            else if (w < words.size() && words.index[w] == i) depth[w++] = d;
        }
        verbs_before.resize(words.size() + 1, 0);
        verb.resize(words.size());
        for (std::size_t k = 0; k < words.size(); ++k) {
            verb[k] = s.tokens[words.index[k]].kind == TokenKind::word && lex.verb_cues().matches(words.key[k]);
            verbs_before[k + 1] = verbs_before[k] + (verb[k] ? 1 : 0);
        }
        wc = words.size();
    }

    const Token& tok(std::size_t k) const { return sentence.tokens[words.index[k]]; }
    const std::string& key(std::size_t k) const { return words.key[k]; }
    std::size_t verbs_after(std::size_t k) const { return verbs_before.back() - verbs_before[k + 1]; }

    bool any_key(const std::vector<std::string_view>& set) const {
        for (const auto& k : words.key)
            if (contains(set, k)) return true;
        return false;
    }

    bool punctuation_between(std::size_t a, std::size_t b) const {
        for (std::size_t i = words.index[a] + 1; i < words.index[b]; ++i)
            if (sentence.tokens[i].kind == TokenKind::punctuation) return true;
        return false;
    }
};

inline Finding make_finding(RuleId rule, const AnalyzedUnit& unit, std::size_t sentence_index, Span span,
                            Classification c, std::string message, std::vector<std::string> evidence) {
    Finding f;
    f.rule = rule;
    f.requirement_id = unit.requirement_id;
    f.sentence_index = sentence_index;
    f.span = span;
    f.classification = c;
    f.severity = default_severity(c);
    f.message = std::move(message);
    f.evidence = std::move(evidence);
    return f;
}

inline bool looks_infinitive(const SentenceContext& ctx, std::size_t k, const RuleCues& cues, const Lexicon& lex) {
    if (k >= ctx.words.size() || ctx.tok(k).kind != TokenKind::word || !ctx.tok(k).tag.is(Major::other)) return false;
    if (cues.infinitive_suffixes.empty()) return !lex.determiners().matches(ctx.key(k));
    for (auto suf : cues.infinitive_suffixes)
        if (ctx.key(k).size() > suf.size() + 1 && text::ends_with(ctx.key(k), suf)) return true;
    return false;
}

inline bool condition_opened_before(const SentenceContext& ctx, std::size_t k, const RuleCues& cues) {
    for (std::size_t j = 0; j < k; ++j)
        if (contains(cues.condition_opener, ctx.key(j)) && ctx.tok(j).tag.is(Major::subordinator)) return true;
    return false;
}

inline bool has_condition_cue(const SentenceContext& ctx, const RuleCues& cues) {
    for (std::size_t j = 0; j < ctx.words.size(); ++j) {
        if (!contains(cues.condition_cues, ctx.key(j))) continue;
        if (ctx.key(j) == "s'" && !ctx.tok(j).tag.is(Major::subordinator)) continue;
        return true;
    }
    return false;
}

} // namespace detail

/// R1. One finding per coordinator or subordinator.
inline std::vector<Finding> check_combinators(const AnalyzedUnit& unit, const Lexicon& lex, const RuleConfig& config) {
    using detail::contains;
    const auto& cues = detail::rule_cues(lex.language());
    std::vector<Finding> out;

    for (std::size_t si = 0; si < unit.sentences.size(); ++si) {
        const auto& sentence = unit.sentences[si];
        const detail::SentenceContext ctx(sentence, lex);
        const bool long_sentence = ctx.wc > config.long_sentence_threshold;

        for (std::size_t k = 0; k < ctx.words.size(); ++k) {
            const Token& t = ctx.tok(k);
            if (!t.tag.is_conjunction()) continue;
            const std::string& w = ctx.key(k);
            auto emit = [&](Classification c, std::string msg) {
                out.push_back(detail::make_finding(RuleId::r1_combinator, unit, si, t.span, c, std::move(msg),
                                                   {t.surface}));
            };

            if (t.tag.is(Major::subordinator)) {
                if (contains(cues.complementizers, w))
                    emit(Classification::mandatory, "complementizer '" + t.surface + "' introduces a dependent clause");
                else
                    emit(Classification::mandatory,
                         "subordinator '" + t.surface + "' introduces a dependent clause that cannot stand alone");
                continue;
            }

            if (contains(cues.logical, w)) {
                emit(Classification::mandatory, "'" + t.surface + "' carries logical information between the clauses");
                continue;
            }
            if (w == cues.conjunctive) {
                bool interval = false;
                for (std::size_t p = k; p-- > 0 && k - p - 1 <= 3;) {
                    if (ctx.key(p) == cues.interval_open) {
                        interval = k - p - 1 >= 1 && ctx.depth[p] == ctx.depth[k] && !ctx.punctuation_between(p, k);
                        break;
                    }
                }
                if (interval) {
                    emit(Classification::mandatory, "'" + t.surface + "' sets the bounds of an interval");
                    continue;
                }
            }
            if (w == cues.apodosis && detail::condition_opened_before(ctx, k, cues)) {
                emit(Classification::mandatory, "'" + t.surface + "' opens the consequence of a condition");
                continue;
            }

            const bool top_level = ctx.depth[k] == 0;
            if (w == cues.alternative && top_level && !detail::has_condition_cue(ctx, cues)) {
                emit(Classification::ambiguous,
                     "alternative with '" + t.surface + "' gives no criterion for choosing between the options");
                continue;
            }

            const bool verb_before = ctx.verbs_before[k] > 0;
            if (top_level && verb_before && k + 1 < ctx.words.size() &&
                contains(cues.infinitive_preps, ctx.key(k + 1)) && detail::looks_infinitive(ctx, k + 2, cues, lex)) {
                if (long_sentence)
                    emit(Classification::undesirable,
                         "'" + t.surface + "' coordinates actions in a sentence of " + std::to_string(ctx.wc) +
                             " words; multiple requirements should be written, e.g. as a bullet list");
                else
                    emit(Classification::useful, "'" + t.surface + "' coordinates infinitive complements");
                continue;
            }

            if (top_level && verb_before && ctx.verbs_after(k) > 0) {
                std::size_t n = k + 1;
                while (n < ctx.words.size() &&
                       (contains(cues.negation, ctx.key(n)) || ctx.tok(n).tag.is(PronounType::personal_object)))
                    ++n;
                const bool shared_subject = n < ctx.words.size() && ctx.verb[n];
                if (shared_subject) {
                    if (ctx.any_key(cues.ordering))
                        emit(Classification::useful, "'" + t.surface + "' joins ordered actions of one subject");
                    else if (w == cues.conjunctive)
                        emit(Classification::ambiguous, "'" + t.surface +
                                                            "' joins two actions of one subject without saying "
                                                            "whether they are simultaneous or sequential");
                    else
                        emit(Classification::useful, "'" + t.surface + "' joins two actions of one subject");
                } else {
                    std::string msg = "'" + t.surface + "' joins two clauses; multiple requirements should be written";
                    if (long_sentence)
                        msg += " (sentence has " + std::to_string(ctx.wc) + " words; consider a bullet list)";
                    emit(Classification::undesirable, std::move(msg));
                }
                continue;
            }

            emit(Classification::useful, "'" + t.surface + "' coordinates words or phrases and avoids repetition");
        }
    }
    return out;
}

/// R4. One finding per sentence mixing the conjunctive and alternative
/// coordinators at one parenthesis depth.
inline std::vector<Finding> check_mixed_connectives(const AnalyzedUnit& unit, const Lexicon& lex,
                                                    const RuleConfig&) {
    const auto& cues = detail::rule_cues(lex.language());
    std::vector<Finding> out;
    for (std::size_t si = 0; si < unit.sentences.size(); ++si) {
        const detail::SentenceContext ctx(unit.sentences[si], lex);
        std::map<std::size_t, std::vector<std::size_t>> by_depth;
        for (std::size_t k = 0; k < ctx.words.size(); ++k) {
            if (!ctx.tok(k).tag.is(Major::coordinator)) continue;
            if (ctx.key(k) == cues.conjunctive || ctx.key(k) == cues.alternative) by_depth[ctx.depth[k]].push_back(k);
        }
        const std::vector<std::size_t>* chosen = nullptr;
        for (const auto& [depth, ks] : by_depth) {
            bool conj = false, alt = false;
            for (auto k : ks) (ctx.key(k) == cues.conjunctive ? conj : alt) = true;
            if (conj && alt && (!chosen || ks.front() < chosen->front())) chosen = &ks;
        }
        if (!chosen) continue;
        std::vector<std::string> evidence;
        for (auto k : *chosen) evidence.push_back(ctx.tok(k).surface);
        const Span span{ctx.tok(chosen->front()).span.begin, ctx.tok(chosen->back()).span.end};
        out.push_back(detail::make_finding(
            RuleId::r4_mixed_connectives, unit, si, span, Classification::ambiguous,
            "'" + std::string(cues.conjunctive) + "' and '" + std::string(cues.alternative) +
                "' mixed without brackets: operator priority is unclear",
            std::move(evidence)));
    }
    return out;
}

/// R5. Intro sentences ending in ':' whose bullet items are not joined.
inline std::vector<Finding> check_list_connectives(const AnalyzedUnit& unit, const Lexicon& lex,
                                                   const RuleConfig&) {
    using detail::contains;
    const auto& cues = detail::rule_cues(lex.language());
    const std::vector<std::string_view> joiners{cues.conjunctive, cues.alternative};
    std::vector<Finding> out;
    const auto& sents = unit.sentences;

    for (std::size_t si = 0; si < sents.size(); ++si) {
        const auto& intro = sents[si];
        if (intro.text.empty() || intro.text.back() != ':') continue;
        std::size_t items = 0;
        while (si + 1 + items < sents.size() && sents[si + 1 + items].bullet) ++items;
        if (items < 2) continue;

        const detail::SentenceContext ctx(intro, lex);
        bool has_connective = false;
        for (std::size_t k = 0; k < ctx.words.size(); ++k) has_connective = has_connective || ctx.tok(k).tag.is_conjunction();
        if (!has_connective) continue;

        const auto& penultimate = sents[si + items - 1];
        const auto pv = word_view(penultimate);
        const bool joined = pv.size() > 0 && contains(joiners, pv.key.back());

        bool quantified = false;
        for (const auto& phrase : cues.quantifiers) {
            for (std::size_t k = 0; k + phrase.size() <= ctx.words.size() && !quantified; ++k) {
                bool match = true;
                for (std::size_t p = 0; p < phrase.size() && match; ++p)
                    match = text::ascii_lower(ctx.key(k + p)) == phrase[p];
                quantified = match;
            }
        }
        if (joined || quantified) continue;

        out.push_back(detail::make_finding(RuleId::r5_list_connective, unit, si, intro.span, Classification::ambiguous,
                                           "and-or list ambiguity: " + std::to_string(items) +
                                               " items follow with no coordinator or quantifier saying whether all "
                                               "or any of them apply",
                                           {}));
    }
    return out;
}

/// R2. One finding per pronoun.
inline std::vector<Finding> check_pronouns(const AnalyzedUnit& unit, const Lexicon& lex, const RuleConfig&) {
    std::vector<Finding> out;
    bool antecedent_seen = false;
    std::string nearest_noun;

    for (std::size_t si = 0; si < unit.sentences.size(); ++si) {
        const detail::SentenceContext ctx(unit.sentences[si], lex);
        for (std::size_t k = 0; k < ctx.words.size(); ++k) {
            const Token& t = ctx.tok(k);
            const std::string& w = ctx.key(k);
            auto emit = [&](Classification c, std::string msg) {
                out.push_back(
                    detail::make_finding(RuleId::r2_pronoun, unit, si, t.span, c, std::move(msg), {t.surface}));
            };

            if (t.tag.major == Major::pronoun) {
                const auto type = *t.tag.pronoun;
                const bool reflexive = w == "se" || w == "s'";
                if (type == PronounType::relative) {
                    emit(Classification::mandatory, "relative pronoun '" + t.surface + "' identifies its noun");
                } else if (type == PronounType::impersonal) {
                    emit(Classification::mandatory, "impersonal '" + t.surface + "' refers to nothing");
                } else if (type == PronounType::indefinite) {
                    emit(Classification::mandatory, "indefinite '" + t.surface + "' has no referent to repeat");
                } else if (reflexive) {
                    emit(Classification::mandatory, "reflexive '" + t.surface + "' is bound to its clause subject");
                } else if ((si == 0 && k == 0) || !antecedent_seen) {
                    emit(Classification::non_autonomous,
                         "'" + t.surface + "' has no antecedent in this requirement; repeat the noun it stands for");
                } else if (type == PronounType::demonstrative &&
                           (text::ends_with(w, "-ci") || text::ends_with(w, "-là"))) {
                    emit(Classification::useful, "'" + t.surface + "' is a nearest-noun reference (" + nearest_noun +
                                                     "); it avoids repeating the noun");
                } else {
                    emit(Classification::useful, "'" + t.surface + "' avoids repeating an antecedent of this requirement");
                }
                continue;
            }

            if (t.kind != TokenKind::word || !t.tag.is(Major::other) || ctx.verb[k]) continue;
            if (lex.determiners().matches(w)) continue;
            const bool capitalized = k > 0 && text::starts_upper(t.surface);
            const bool after_determiner =
                k > 0 && ctx.tok(k - 1).tag.is(Major::other) && lex.determiners().matches(ctx.key(k - 1));
            if (capitalized || after_determiner) {
                antecedent_seen = true;
                nearest_noun = t.surface;
            }
        }
    }
    return out;
}

/// R3. One warning per sentence longer than the threshold.
inline std::vector<Finding> check_sentence_length(const AnalyzedUnit& unit, const Lexicon&, const RuleConfig& config) {
    std::vector<Finding> out;
    for (std::size_t si = 0; si < unit.sentences.size(); ++si) {
        const auto& s = unit.sentences[si];
        const auto wc = word_count(s.tokens);
        if (wc <= config.long_sentence_threshold) continue;
        out.push_back(detail::make_finding(RuleId::r3_long_sentence, unit, si, s.span, Classification::undesirable,
                                           "sentence has " + std::to_string(wc) + " words (limit " +
                                               std::to_string(config.long_sentence_threshold) + ")",
                                           {}));
    }
    return out;
}

/// Severity overrides touch violations only; mandatory and useful findings stay info.
inline void apply_overrides(std::vector<Finding>& findings, const RuleConfig& config) {
    for (auto& f : findings) {
        if (f.severity == Severity::info) continue;
        if (auto it = config.severity_overrides.find(f.rule); it != config.severity_overrides.end())
            f.severity = it->second;
    }
}

/// All enabled checks for one requirement, in report order.
inline std::vector<Finding> check_unit(const AnalyzedUnit& unit, const Lexicon& lex, const RuleConfig& config) {
    std::vector<Finding> out;
    auto add = [&](std::vector<Finding> v) { out.insert(out.end(), v.begin(), v.end()); };
    if (config.enabled(RuleId::r1_combinator)) add(check_combinators(unit, lex, config));
    if (config.enabled(RuleId::r2_pronoun)) add(check_pronouns(unit, lex, config));
    if (config.enabled(RuleId::r3_long_sentence)) add(check_sentence_length(unit, lex, config));
    if (config.enabled(RuleId::r4_mixed_connectives)) add(check_mixed_connectives(unit, lex, config));
    if (config.enabled(RuleId::r5_list_connective)) add(check_list_connectives(unit, lex, config));

    if (!config.report_mandatory)
        std::erase_if(out, [](const Finding& f) { return f.classification == Classification::mandatory; });
    apply_overrides(out, config);
    std::stable_sort(out.begin(), out.end(), [](const Finding& a, const Finding& b) {
        if (a.sentence_index != b.sentence_index) return a.sentence_index < b.sentence_index;
        if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
        if (a.rule != b.rule) return a.rule < b.rule;
        return a.span.end < b.span.end;
    });
    return out;
}

inline std::vector<Finding> run_all(const AnalyzedCorpus& corpus, const Lexicon& lex, const RuleConfig& config) {
    std::vector<Finding> out;
    for (const auto& unit : corpus.units) {
        auto v = check_unit(unit, lex, config);
        for (auto& f : v) f.corpus = corpus.name;
        out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    }
    return out;
}

} // namespace reqlint
