#pragma once

// `reqlint analyze` and `reqlint compare`. run_cli never throws; it maps
// failures to exit codes: 64 for bad usage, 65 for unreadable or malformed
// input. Otherwise analyze returns the report's exit status and compare 0.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "reqlint/analysis.hpp"
#include "reqlint/corpus.hpp"
#include "reqlint/error.hpp"
#include "reqlint/lexicon.hpp"
#include "reqlint/report.hpp"
#include "reqlint/rules.hpp"
#include "reqlint/stats.hpp"

namespace reqlint {

inline constexpr int exit_usage = 64;
inline constexpr int exit_data = 65;

struct CliOptions {
    std::string lang = "fr";
    std::optional<std::string> lexicon;
    std::optional<std::string> config;
    std::optional<std::string> abbreviations;
    std::optional<long long> threshold;
    std::optional<std::string> disable;
    bool report_mandatory = false;
    std::string format = "text";
    std::optional<long long> truncate_to;
    bool truncate_to_smallest = false;
    std::string fail_on = "warning";
    std::string mode = "auto";
    std::vector<std::string> inputs;
};

namespace detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CorpusSpec {
    std::optional<std::string> name;
    std::filesystem::path path;
};

/// `name=path` or `path`. A spec naming an existing file is always a path.
inline CorpusSpec parse_corpus_spec(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || std::filesystem::exists(spec)) return {std::nullopt, spec};
    return {spec.substr(0, eq), spec.substr(eq + 1)};
}

inline Corpus load_corpus(const CorpusSpec& spec, Language lang, std::string_view mode) {
    const auto bytes = read_file(spec.path);
    const bool tagged = mode == "tagged" || (mode == "auto" && has_delimiters(bytes));
    Corpus c = tagged ? parse_requirement_text(bytes, spec.path.string(), lang)
                      : parse_plain_text(bytes, spec.path.string(), lang);
    if (spec.name) c.name = *spec.name;
    return c;
}

struct Pipeline {
    Language lang;
    Lexicon lexicon;
    AbbreviationList abbreviations;
    RuleConfig config;
    FailOn fail_on;
};

inline Pipeline build_pipeline(const CliOptions& o) {
    const auto lang = parse_language(o.lang);
    if (!lang) throw UsageError("--lang must be fr or en");
    const auto fail_on = parse_fail_on(o.fail_on);
    if (!fail_on) throw UsageError("--fail-on must be error, warning or never");
    if (o.format != "text" && o.format != "json") throw UsageError("--format must be text or json");
    if (o.mode != "auto" && o.mode != "tagged" && o.mode != "plain")
        throw UsageError("--mode must be auto, tagged or plain");
    if (o.truncate_to && *o.truncate_to < 1) throw UsageError("--truncate-to must be >= 1");

    Pipeline p{*lang, load_lexicon(o.lexicon ? std::optional<std::filesystem::path>(*o.lexicon) : std::nullopt, *lang),
               AbbreviationList::builtin(), RuleConfig::defaults(*lang), *fail_on};
    if (o.abbreviations) p.abbreviations.add_from_file(*o.abbreviations);
    if (o.config) p.config.apply_file(*o.config);
    // command-line flags win over the config file
    try {
        if (o.threshold) p.config.set_threshold(*o.threshold);
        if (o.disable) p.config.disable(*o.disable);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (o.report_mandatory) p.config.report_mandatory = true;
    return p;
}

inline std::vector<Corpus> load_all(const CliOptions& o, const Pipeline& p) {
    std::vector<Corpus> corpora;
    for (const auto& in : o.inputs) corpora.push_back(load_corpus(parse_corpus_spec(in), p.lang, o.mode));

    std::optional<std::size_t> target;
    if (o.truncate_to) target = static_cast<std::size_t>(*o.truncate_to);
    if (o.truncate_to_smallest) {
        for (const auto& c : corpora) {
            const auto n = corpus_word_count(c, p.abbreviations);
            if (!target || n < *target) target = n;
        }
        if (target && *target == 0) throw Error(ErrorCode::empty_corpus, "smallest corpus has no words");
    }
    if (target)
        for (auto& c : corpora) c = truncate_corpus(c, *target, p.abbreviations);
    return corpora;
}

inline int emit(const Report& r, const CliOptions& o, std::ostream& out) {
    out << (o.format == "json" ? render_json(r) : render_text(r));
    return r.exit_status;
}

inline int cmd_analyze(const CliOptions& o, const std::vector<std::string>& invocation, std::ostream& out,
                       std::ostream& err) {
    const auto p = build_pipeline(o);
    std::vector<CorpusStats> stats;
    std::vector<Finding> findings;
    for (const auto& corpus : load_all(o, p)) {
        for (const auto& d : corpus.diagnostics) err << corpus.name << ":" << d.line << ": note: " << d.message << '\n';
        const auto analyzed = analyze_corpus(corpus, p.lexicon, p.abbreviations);
        auto f = run_all(analyzed, p.lexicon, p.config);
        findings.insert(findings.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
        stats.push_back(compute_stats(analyzed, p.config));
    }
    return emit(make_report(invocation, std::move(stats), std::move(findings), p.fail_on), o, out);
}

inline int cmd_compare(const CliOptions& o, const std::vector<std::string>& invocation, std::ostream& out,
                       std::ostream& err) {
    const auto p = build_pipeline(o);
    std::vector<CorpusStats> stats;
    for (const auto& corpus : load_all(o, p)) {
        for (const auto& d : corpus.diagnostics) err << corpus.name << ":" << d.line << ": note: " << d.message << '\n';
        stats.push_back(compute_stats(analyze_corpus(corpus, p.lexicon, p.abbreviations), p.config));
    }
    auto table = compare_corpora(std::move(stats));
    auto report = make_report(invocation, std::move(table.rows), {}, FailOn::never);
    report.ratios = std::move(table.ratios);
    return emit(report, o, out);
}

inline void add_common_options(CLI::App& cmd, CliOptions& o) {
    cmd.add_option("--lang", o.lang, "Language of the input: fr or en")->capture_default_str();
    cmd.add_option("--lexicon", o.lexicon, "Lexicon file laid over the builtin one");
    cmd.add_option("--config", o.config, "Rule configuration file (key = value)");
    cmd.add_option("--abbreviations", o.abbreviations, "Extra abbreviations, one per line");
    cmd.add_option("--long-sentence-threshold", o.threshold, "Words above which a sentence is long");
    cmd.add_option("--disable", o.disable, "Comma-separated rules to turn off, e.g. R1,R4");
    cmd.add_flag("--report-mandatory", o.report_mandatory, "Also list mandatory uses (info)");
    cmd.add_option("--format", o.format, "Output format: text or json")->capture_default_str();
    auto* to = cmd.add_option("--truncate-to", o.truncate_to, "Reduce every corpus to at most N words");
    auto* smallest = cmd.add_flag("--truncate-to-smallest", o.truncate_to_smallest,
                                  "Reduce every corpus to the size of the smallest one");
    to->excludes(smallest);
    cmd.add_option("--fail-on", o.fail_on, "Lowest severity that fails the run: error, warning or never")
        ->capture_default_str();
    cmd.add_option("--mode", o.mode, "Input mode: auto, tagged (delimited requirements) or plain")
        ->capture_default_str();
}

} // namespace detail

/// `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Requirements linter and corpus profiler", "reqlint"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tool_version));

    CliOptions analyze_opts, compare_opts;
    auto* analyze = app.add_subcommand("analyze", "Check requirement files and print findings and statistics");
    detail::add_common_options(*analyze, analyze_opts);
    analyze->add_option("files", analyze_opts.inputs, "Requirement or plain-text files")->required();

    auto* compare = app.add_subcommand("compare", "Compare closed-class frequencies across corpora");
    detail::add_common_options(*compare, compare_opts);
    compare->add_option("corpora", compare_opts.inputs, "Corpora as PATH or NAME=PATH (at least two)")
        ->required()
        ->expected(2, -1);

    std::vector<std::string> argv_store{"reqlint"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << tool_version << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "reqlint: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (analyze->parsed()) return detail::cmd_analyze(analyze_opts, args, out, err);
        return detail::cmd_compare(compare_opts, args, out, err);
    } catch (const detail::UsageError& e) {
        err << "reqlint: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "reqlint: " << e.what() << '\n';
        return exit_data;
    } catch (const std::exception& e) {
        err << "reqlint: " << e.what() << '\n';
        return exit_data;
    }
}

} // namespace reqlint
