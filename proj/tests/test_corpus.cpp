#include <gtest/gtest.h>

#include <string>

#include "reqlint/corpus.hpp"

using namespace reqlint;

namespace {

ErrorCode code_of(std::string_view text) {
    try {
        parse_requirement_text(text, "t.req", Language::fr);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::io_error;
}

std::optional<std::size_t> line_of(std::string_view text) {
    try {
        parse_requirement_text(text, "t.req", Language::fr);
    } catch (const Error& e) {
        return e.line();
    }
    return std::nullopt;
}

} // namespace

TEST(Ingest, ReadsBlocksInOrder) {
    const auto c = parse_requirement_text("intro ignored\n[REQ A-1]\nLe logiciel démarre.\n[/REQ]\n"
                                          "between\n[REQ b.2]\nligne 1\nligne 2\n[/REQ]\n",
                                          "dir/specs.req", Language::fr);
    EXPECT_EQ(c.name, "specs");
    EXPECT_EQ(c.mode, CorpusMode::tagged);
    ASSERT_EQ(c.requirements.size(), 2u);
    EXPECT_EQ(c.requirements[0].id, "A-1");
    EXPECT_EQ(c.requirements[0].body, "Le logiciel démarre.");
    EXPECT_EQ(c.requirements[0].source_span.start_line, 2u);
    EXPECT_EQ(c.requirements[0].source_span.end_line, 4u);
    EXPECT_EQ(c.requirements[1].body, "ligne 1\nligne 2");
    EXPECT_EQ(c.requirements[1].line_count, 2u);
}

TEST(Ingest, CrlfLineEndings) {
    const auto c = parse_requirement_text("[REQ X]\r\nUne phrase.\r\n[/REQ]\r\n", "x.req", Language::fr);
    ASSERT_EQ(c.requirements.size(), 1u);
    EXPECT_EQ(c.requirements[0].body, "Une phrase.");
}

TEST(Ingest, ErrorsCarryCodesAndLines) {
    EXPECT_EQ(code_of(""), ErrorCode::empty_file);
    EXPECT_EQ(code_of("[REQ A]\ntext\n"), ErrorCode::unbalanced_delimiter);
    EXPECT_EQ(line_of("x\n[REQ A]\ntext\n"), 2u);
    EXPECT_EQ(code_of("text\n[/REQ]\n"), ErrorCode::unbalanced_delimiter);
    EXPECT_EQ(line_of("text\n[/REQ]\n"), 2u);
    EXPECT_EQ(code_of("[REQ A]\n[REQ B]\n[/REQ]\n"), ErrorCode::unbalanced_delimiter);
    EXPECT_EQ(code_of("[REQ A]\nx\n[/REQ]\n[REQ A]\ny\n[/REQ]\n"), ErrorCode::duplicate_id);
    EXPECT_EQ(line_of("[REQ A]\nx\n[/REQ]\n[REQ A]\ny\n[/REQ]\n"), 4u);
    EXPECT_EQ(code_of("[REQ A]\n  \n\t\n[/REQ]\n"), ErrorCode::empty_requirement);
    EXPECT_EQ(code_of("just prose, no blocks\n"), ErrorCode::no_requirements);
    EXPECT_EQ(code_of("[REQ A]\nbad \xff byte\n[/REQ]\n"), ErrorCode::decode_error);
    EXPECT_EQ(line_of("[REQ A]\nbad \xff byte\n[/REQ]\n"), 2u);
}

TEST(Ingest, MalformedDelimitersAreDiagnosedNotFatal) {
    const auto c = parse_requirement_text("[REQ bad id]\n[REQ A]\n| a | b |\n[/REQ]\n", "d.req", Language::fr);
    ASSERT_EQ(c.requirements.size(), 1u);
    ASSERT_EQ(c.diagnostics.size(), 2u);
    EXPECT_EQ(c.diagnostics[0].line, 1u);
    EXPECT_EQ(c.diagnostics[1].line, 3u);
}

TEST(Ingest, OpenerGrammar) {
    EXPECT_EQ(match_opener("[REQ OPS_12.a-b]"), std::optional<std::string_view>("OPS_12.a-b"));
    EXPECT_FALSE(match_opener("[REQ ]"));
    EXPECT_FALSE(match_opener("[REQ a b]"));
    EXPECT_FALSE(match_opener(" [REQ a]"));
    EXPECT_FALSE(match_opener("[REQa]"));
    EXPECT_TRUE(is_closer("[/REQ]"));
    EXPECT_FALSE(is_closer("[/REQ] "));
}

TEST(Ingest, RoundTripThroughDelimitedForm) {
    const auto a = parse_requirement_text("[REQ 1]\nUn.\n\nDeux.\n[/REQ]\n[REQ 2]\n  indenté\n[/REQ]\n", "rt.req",
                                          Language::fr);
    const auto b = parse_requirement_text(to_delimited(a), "rt.req", Language::fr);
    ASSERT_EQ(a.requirements.size(), b.requirements.size());
    for (std::size_t i = 0; i < a.requirements.size(); ++i) {
        EXPECT_EQ(a.requirements[i].id, b.requirements[i].id);
        EXPECT_EQ(a.requirements[i].body, b.requirements[i].body);
    }
}

TEST(Ingest, PlainCorpus) {
    const auto c = parse_plain_text("Du texte courant.\n", "/x/presse.txt", Language::fr);
    EXPECT_EQ(c.mode, CorpusMode::plain);
    EXPECT_EQ(c.name, "presse");
    EXPECT_EQ(c.body, "Du texte courant.\n");
    EXPECT_TRUE(c.requirements.empty());
    EXPECT_THROW(parse_plain_text("", "e.txt", Language::fr), Error);
}

TEST(Ingest, DelimiterDetection) {
    EXPECT_TRUE(has_delimiters("a\n[REQ X]\nb\n[/REQ]\n"));
    EXPECT_FALSE(has_delimiters("[REQ x y]\nplain"));
}

TEST(Ingest, FixtureFileLoads) {
    const auto c = parse_requirement_file(REQLINT_FIXTURE_DIR "/examples.req", Language::fr);
    EXPECT_EQ(c.requirements.size(), 16u);
    EXPECT_EQ(c.requirements.front().id, "EX01");
    EXPECT_EQ(c.requirements.back().id, "EX16");
}

TEST(Ingest, MissingFileIsAnIoError) {
    try {
        parse_requirement_file("/nonexistent/file.req", Language::fr);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::io_error);
    }
}
