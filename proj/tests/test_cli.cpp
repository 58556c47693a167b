#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "reqlint/cli.hpp"
#include "support/expected.hpp"

using namespace reqlint;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("reqlint_cli_" + name);
    std::ofstream(path, std::ios::binary) << content;
    return path.string();
}

const std::string examples = REQLINT_FIXTURE_DIR "/examples.req";
const std::string long_req = REQLINT_FIXTURE_DIR "/long.req";
const std::string handbook = REQLINT_FIXTURE_DIR "/handbook.txt";
const std::string newspaper = REQLINT_FIXTURE_DIR "/newspaper.txt";

} // namespace

TEST(Cli, AnalyzeExamplesJsonMatchesExpectedTable) {
    const auto r = run({"analyze", "--lang", "fr", "--report-mandatory", "--format", "json", examples});
    EXPECT_EQ(r.code, 2);
    const auto report = nlohmann::json::parse(r.out).get<Report>();
    const auto want = expected::load(REQLINT_FIXTURE_DIR "/examples.expected.tsv");
    EXPECT_EQ(expected::diff(want, expected::to_rows(report.findings)), "");
    EXPECT_EQ(report.exit_status, r.code);
}

TEST(Cli, EmptyFileExits65) {
    const auto r = run({"analyze", "--lang", "fr", temp_file("empty.req", "")});
    EXPECT_EQ(r.code, 65);
    EXPECT_NE(r.err.find("EmptyFile"), std::string::npos);
}

TEST(Cli, MalformedInputExits65) {
    EXPECT_EQ(run({"analyze", temp_file("open.req", "[REQ A]\ntext\n")}).code, 65);
    EXPECT_EQ(run({"analyze", "/nonexistent/x.req"}).code, 65);
    EXPECT_EQ(run({"analyze", "--lexicon", temp_file("bad.lex", "foo\tverb\n"), examples}).code, 65);
    EXPECT_EQ(run({"analyze", "--config", temp_file("bad.cfg", "colour = blue\n"), examples}).code, 65);
    EXPECT_EQ(run({"analyze", temp_file("binary.req", std::string("[REQ A]\n\xc3\x28\n[/REQ]\n"))}).code, 65);
}

TEST(Cli, UsageErrorsExit64) {
    EXPECT_EQ(run({}).code, 64);
    EXPECT_EQ(run({"lint", examples}).code, 64);
    EXPECT_EQ(run({"analyze"}).code, 64);
    EXPECT_EQ(run({"analyze", "--lang", "de", examples}).code, 64);
    EXPECT_EQ(run({"analyze", "--format", "xml", examples}).code, 64);
    EXPECT_EQ(run({"analyze", "--fail-on", "sometimes", examples}).code, 64);
    EXPECT_EQ(run({"analyze", "--disable", "R9", examples}).code, 64);
    EXPECT_EQ(run({"analyze", "--long-sentence-threshold", "0", examples}).code, 64);
    EXPECT_EQ(run({"analyze", "--long-sentence-threshold", "abc", examples}).code, 64);
    EXPECT_EQ(run({"analyze", "--bogus", examples}).code, 64);
    EXPECT_EQ(run({"compare", handbook}).code, 64);
    EXPECT_EQ(run({"compare", "--truncate-to", "10", "--truncate-to-smallest", handbook, newspaper}).code, 64);
}

TEST(Cli, DisableLeavesOnlyLongSentences) {
    const auto r = run({"analyze", "--lang", "fr", "--disable", "R1,R2,R4,R5", "--format", "json", long_req});
    const auto report = nlohmann::json::parse(r.out).get<Report>();
    ASSERT_EQ(report.findings.size(), 1u);
    EXPECT_EQ(report.findings[0].rule, RuleId::r3_long_sentence);
    EXPECT_EQ(r.code, 1);
}

TEST(Cli, FailOnAndThresholdFlags) {
    EXPECT_EQ(run({"analyze", "--fail-on", "never", examples}).code, 0);
    EXPECT_EQ(run({"analyze", "--fail-on", "error", long_req}).code, 0);
    EXPECT_EQ(run({"analyze", "--long-sentence-threshold", "80", "--disable", "R1", long_req}).code, 0);
    const auto cfg = temp_file("ok.cfg", "long_sentence_threshold = 80\ndisable = R1\n");
    EXPECT_EQ(run({"analyze", "--config", cfg, long_req}).code, 0);
    // the flag beats the config file
    EXPECT_EQ(run({"analyze", "--config", cfg, "--long-sentence-threshold", "25", long_req}).code, 1);
}

TEST(Cli, TextOutputListsFindingsThenStats) {
    const auto r = run({"analyze", examples});
    const auto first_finding = r.out.find("examples:EX");
    const auto table = r.out.find("coordinators");
    ASSERT_NE(first_finding, std::string::npos);
    ASSERT_NE(table, std::string::npos);
    EXPECT_LT(first_finding, table);
}

TEST(Cli, ModeSelection) {
    // plain mode reads the delimiters as ordinary text, so no requirement ids
    const auto r = run({"analyze", "--mode", "plain", "--format", "json", examples});
    const auto report = nlohmann::json::parse(r.out).get<Report>();
    for (const auto& f : report.findings) EXPECT_FALSE(f.requirement_id.has_value());
    EXPECT_EQ(run({"analyze", "--mode", "tagged", handbook}).code, 65);
}

TEST(Cli, CompareIdenticalCorporaGivesIdenticalRows) {
    const auto r = run({"compare", "--format", "json", "a=" + handbook, "b=" + handbook});
    EXPECT_EQ(r.code, 0);
    const auto report = nlohmann::json::parse(r.out).get<Report>();
    ASSERT_EQ(report.corpora.size(), 2u);
    auto a = report.corpora[0], b = report.corpora[1];
    EXPECT_EQ(a.corpus_name, "a");
    EXPECT_EQ(b.corpus_name, "b");
    b.corpus_name = a.corpus_name;
    EXPECT_EQ(a, b);
    for (const auto& x : report.ratios) EXPECT_DOUBLE_EQ(*x.value, 1.0);
}

TEST(Cli, CompareTruncateToSmallest) {
    const auto r = run({"compare", "--format", "json", "--truncate-to-smallest", examples, handbook, newspaper});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto report = nlohmann::json::parse(r.out).get<Report>();
    ASSERT_EQ(report.corpora.size(), 3u);
    std::size_t lo = SIZE_MAX, hi = 0;
    for (const auto& s : report.corpora) {
        lo = std::min(lo, s.total_words);
        hi = std::max(hi, s.total_words);
    }
    // each corpus loses less than one sentence (plain) or requirement (tagged)
    EXPECT_LE(hi - lo, 46u);
    const auto text = run({"compare", "--truncate-to-smallest", examples, handbook, newspaper});
    EXPECT_NE(text.out.find("frequency ratios"), std::string::npos);
}

TEST(Cli, CompareTruncateToFixedTarget) {
    const auto r = run({"compare", "--format", "json", "--truncate-to", "100", handbook, newspaper});
    const auto report = nlohmann::json::parse(r.out).get<Report>();
    for (const auto& s : report.corpora) EXPECT_LE(s.total_words, 100u);
    EXPECT_EQ(run({"compare", "--truncate-to", "2", handbook, newspaper}).code, 65);
}

TEST(Cli, HelpAndVersion) {
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"analyze", "--help"}).code, 0);
    const auto v = run({"--version"});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find(tool_version), std::string::npos);
}

TEST(Cli, EnglishInput) {
    const auto path = temp_file("en.req", "[REQ E1]\nThe system shall log the event. It shall then stop.\n[/REQ]\n");
    const auto r = run({"analyze", "--lang", "en", "--format", "json", path});
    EXPECT_EQ(r.code, 0) << r.out;
}
