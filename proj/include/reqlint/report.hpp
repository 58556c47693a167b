#pragma once

// Reports: what a run found, the corpus statistics it computed and the exit
// status it implies. Rendered as text for people or as a single JSON document
// for CI.

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "reqlint/rules.hpp"
#include "reqlint/stats.hpp"

namespace reqlint {

inline constexpr int report_schema_version = 1;
inline constexpr const char* tool_version = "0.3.0";

enum class FailOn { error, warning, never };

inline std::optional<FailOn> parse_fail_on(std::string_view s) {
    if (s == "error") return FailOn::error;
    if (s == "warning") return FailOn::warning;
    if (s == "never") return FailOn::never;
    return std::nullopt;
}

/// 2 when an error is present, 1 for a warning, 0 otherwise; `fail_on`
/// raises the bar.
inline int exit_status_for(const std::vector<Finding>& findings, FailOn fail_on) {
    if (fail_on == FailOn::never) return 0;
    bool warning = false;
    for (const auto& f : findings) {
        if (f.severity == Severity::error) return 2;
        warning = warning || f.severity == Severity::warning;
    }
    return warning && fail_on == FailOn::warning ? 1 : 0;
}

struct Report {
    int schema_version = report_schema_version;
    std::string tool_version = reqlint::tool_version;
    std::vector<std::string> invocation;
    std::vector<CorpusStats> corpora;
    std::vector<Finding> findings;
    std::map<std::string, std::size_t> summary_by_severity;
    std::map<std::string, std::size_t> summary_by_rule;
    std::vector<FrequencyRatio> ratios; ///< filled by `compare` only
    int exit_status = 0;
};

inline Report make_report(std::vector<std::string> invocation, std::vector<CorpusStats> corpora,
                          std::vector<Finding> findings, FailOn fail_on) {
    Report r;
    r.invocation = std::move(invocation);
    r.corpora = std::move(corpora);
    r.findings = std::move(findings);
    for (auto s : {Severity::error, Severity::warning, Severity::info}) r.summary_by_severity[std::string(to_string(s))] = 0;
    for (auto id : all_rules) r.summary_by_rule[std::string(to_string(id))] = 0;
    for (const auto& f : r.findings) {
        ++r.summary_by_severity[std::string(to_string(f.severity))];
        ++r.summary_by_rule[std::string(to_string(f.rule))];
    }
    r.exit_status = exit_status_for(r.findings, fail_on);
    return r;
}

// ---- JSON ------------------------------------------------------------------

namespace detail {

template <class T, class Parse>
T parse_enum(const nlohmann::json& j, Parse parse, const char* what) {
    const auto s = j.get<std::string>();
    auto v = parse(s);
    if (!v) throw Error(ErrorCode::invalid_argument, std::string("unknown ") + what + " '" + s + "'");
    return *v;
}

inline std::optional<Category> parse_category(std::string_view s) {
    for (auto c : all_categories)
        if (s == to_string(c)) return c;
    return std::nullopt;
}

} // namespace detail

inline void to_json(nlohmann::json& j, const Finding& f) {
    j = nlohmann::json{{"rule", to_string(f.rule)},
                       {"corpus", f.corpus},
                       {"requirement_id", f.requirement_id ? nlohmann::json(*f.requirement_id) : nlohmann::json()},
                       {"sentence_index", f.sentence_index},
                       {"span", {{"begin", f.span.begin}, {"end", f.span.end}}},
                       {"severity", to_string(f.severity)},
                       {"classification", to_string(f.classification)},
                       {"message", f.message},
                       {"evidence", f.evidence}};
}

inline void from_json(const nlohmann::json& j, Finding& f) {
    f.rule = detail::parse_enum<RuleId>(j.at("rule"), parse_rule_id, "rule");
    f.corpus = j.at("corpus").get<std::string>();
    const auto& id = j.at("requirement_id");
    f.requirement_id = id.is_null() ? std::nullopt : std::optional<std::string>(id.get<std::string>());
    f.sentence_index = j.at("sentence_index").get<std::size_t>();
    f.span = {j.at("span").at("begin").get<std::size_t>(), j.at("span").at("end").get<std::size_t>()};
    f.severity = detail::parse_enum<Severity>(j.at("severity"), parse_severity, "severity");
    f.classification = detail::parse_enum<Classification>(j.at("classification"), parse_classification, "classification");
    f.message = j.at("message").get<std::string>();
    f.evidence = j.at("evidence").get<std::vector<std::string>>();
}

inline void to_json(nlohmann::json& j, const CorpusStats& s) {
    nlohmann::json counts = nlohmann::json::object(), percentages = nlohmann::json::object();
    for (const auto& [c, n] : s.counts) counts[std::string(to_string(c))] = n;
    for (const auto& [c, p] : s.percentages) percentages[std::string(to_string(c))] = p;
    j = nlohmann::json{{"corpus_name", s.corpus_name},
                       {"total_words", s.total_words},
                       {"counts", counts},
                       {"percentages", percentages},
                       {"sentence_count", s.sentence_count},
                       {"long_sentence_count", s.long_sentence_count},
                       {"long_sentence_percent", s.long_sentence_percent},
                       {"avg_sentence_length", s.avg_sentence_length},
                       {"threshold_used", s.threshold_used}};
}

inline void from_json(const nlohmann::json& j, CorpusStats& s) {
    s.corpus_name = j.at("corpus_name").get<std::string>();
    s.total_words = j.at("total_words").get<std::size_t>();
    s.counts.clear();
    s.percentages.clear();
    for (const auto& [k, v] : j.at("counts").items())
        s.counts[detail::parse_enum<Category>(nlohmann::json(k), detail::parse_category, "category")] =
            v.get<std::size_t>();
    for (const auto& [k, v] : j.at("percentages").items())
        s.percentages[detail::parse_enum<Category>(nlohmann::json(k), detail::parse_category, "category")] =
            v.get<std::string>();
    s.sentence_count = j.at("sentence_count").get<std::size_t>();
    s.long_sentence_count = j.at("long_sentence_count").get<std::size_t>();
    s.long_sentence_percent = j.at("long_sentence_percent").get<std::string>();
    s.avg_sentence_length = j.at("avg_sentence_length").get<std::size_t>();
    s.threshold_used = j.at("threshold_used").get<std::size_t>();
}

inline void to_json(nlohmann::json& j, const FrequencyRatio& r) {
    j = nlohmann::json{{"numerator", r.numerator},
                       {"denominator", r.denominator},
                       {"category", to_string(r.category)},
                       {"value", r.value ? nlohmann::json(*r.value) : nlohmann::json()}};
}

inline void from_json(const nlohmann::json& j, FrequencyRatio& r) {
    r.numerator = j.at("numerator").get<std::string>();
    r.denominator = j.at("denominator").get<std::string>();
    r.category = detail::parse_enum<Category>(j.at("category"), detail::parse_category, "category");
    const auto& v = j.at("value");
    r.value = v.is_null() ? std::nullopt : std::optional<double>(v.get<double>());
}

inline void to_json(nlohmann::json& j, const Report& r) {
    j = nlohmann::json{{"schema_version", r.schema_version},
                       {"tool_version", r.tool_version},
                       {"invocation", r.invocation},
                       {"corpora", r.corpora},
                       {"findings", r.findings},
                       {"summary", {{"by_severity", r.summary_by_severity}, {"by_rule", r.summary_by_rule}}},
                       {"exit_status", r.exit_status}};
    if (!r.ratios.empty()) j["ratios"] = r.ratios;
}

inline void from_json(const nlohmann::json& j, Report& r) {
    r.schema_version = j.at("schema_version").get<int>();
    r.tool_version = j.at("tool_version").get<std::string>();
    r.invocation = j.at("invocation").get<std::vector<std::string>>();
    r.corpora = j.at("corpora").get<std::vector<CorpusStats>>();
    r.findings = j.at("findings").get<std::vector<Finding>>();
    r.summary_by_severity = j.at("summary").at("by_severity").get<std::map<std::string, std::size_t>>();
    r.summary_by_rule = j.at("summary").at("by_rule").get<std::map<std::string, std::size_t>>();
    r.ratios = j.contains("ratios") ? j.at("ratios").get<std::vector<FrequencyRatio>>() : std::vector<FrequencyRatio>{};
    r.exit_status = j.at("exit_status").get<int>();
}

inline std::string render_json(const Report& r) { return nlohmann::json(r).dump(2) + "\n"; }

// ---- text ------------------------------------------------------------------

inline std::string format_finding(const Finding& f) {
    std::ostringstream os;
    os << f.corpus << ':' << (f.requirement_id ? *f.requirement_id : std::string("-")) << ":s" << f.sentence_index
       << ':' << f.span.begin << '-' << f.span.end << ": " << to_string(f.severity) << ' ' << short_name(f.rule) << ' '
       << to_string(f.classification) << ": " << f.message;
    if (!f.evidence.empty()) {
        os << " [";
        for (std::size_t i = 0; i < f.evidence.size(); ++i) os << (i ? ", " : "") << f.evidence[i];
        os << ']';
    }
    return os.str();
}

inline void render_stats_table(std::ostream& os, const std::vector<CorpusStats>& rows) {
    if (rows.empty()) return;
    std::size_t name_w = 6;
    for (const auto& s : rows) name_w = std::max(name_w, s.corpus_name.size());
    const auto cell = [&](std::size_t n, const std::string& pct) {
        std::ostringstream c;
        c << n << " (" << pct << "%)";
        return c.str();
    };
    os << std::left << std::setw(static_cast<int>(name_w)) << "corpus" << std::right << std::setw(9) << "words"
       << std::setw(18) << "coordinators" << std::setw(18) << "subordinators" << std::setw(18) << "conjunctions"
       << std::setw(18) << "pronouns" << std::setw(11) << "sentences" << std::setw(16) << "long" << std::setw(9)
       << "avg len" << '\n';
    for (const auto& s : rows) {
        const auto long_cell = [&] {
            std::ostringstream c;
            c << s.long_sentence_count << " (" << s.long_sentence_percent << "%)";
            return c.str();
        }();
        os << std::left << std::setw(static_cast<int>(name_w)) << s.corpus_name << std::right << std::setw(9)
           << s.total_words;
        for (auto c : all_categories) os << std::setw(18) << cell(s.counts.at(c), s.percentages.at(c));
        os << std::setw(11) << s.sentence_count << std::setw(16) << long_cell << std::setw(9) << s.avg_sentence_length
           << '\n';
    }
    os << "long = sentences above " << rows.front().threshold_used << " words\n";
}

inline std::string render_text(const Report& r) {
    std::ostringstream os;
    const bool comparison = !r.ratios.empty();
    if (!comparison) {
        for (const auto& f : r.findings) os << format_finding(f) << '\n';
        os << r.findings.size() << " finding(s): " << r.summary_by_severity.at("error") << " error, "
           << r.summary_by_severity.at("warning") << " warning, " << r.summary_by_severity.at("info") << " info\n";
    }
    if (!r.corpora.empty()) {
        if (!comparison) os << '\n';
        render_stats_table(os, r.corpora);
    }
    if (!r.ratios.empty()) {
        os << "\nfrequency ratios\n";
        for (const auto& x : r.ratios) {
            os << "  " << x.numerator << " / " << x.denominator << "  " << std::left << std::setw(18)
               << to_string(x.category) << std::right;
            if (x.value) os << std::fixed << std::setprecision(3) << *x.value << std::defaultfloat;
            else os << "n/a";
            os << '\n';
        }
    }
    return os.str();
}

} // namespace reqlint
