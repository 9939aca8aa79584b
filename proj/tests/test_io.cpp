#include <gtest/gtest.h>

#include <json.hpp>

#include "symtile/golden.hpp"
#include "symtile/render.hpp"
#include "symtile/search.hpp"
#include "symtile/setfile.hpp"

using namespace symtile;

namespace {

const PointSet kAxis = PointSet::of(4, {{0, 0}, {1, 0}, {2, 0}, {3, 0}});

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i)
        if (text[i] == '\n') {
            out.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

int line_of_error(std::string_view text) {
    try {
        parse_set_file(text);
    } catch (const SetFileError& e) {
        return e.line();
    }
    return -1;
}

} // namespace

TEST(SetFile, Examples) {
    EXPECT_EQ(parse_set_file("n 4\n0 0\n3 0\n0 3\n3 3\n"), PointSet::of(4, {{0, 0}, {3, 0}, {0, 3}, {3, 3}}));
    EXPECT_EQ(parse_set_file("# comment\nn 2\n1 1\n"), PointSet::of(2, {{1, 1}}));
    EXPECT_EQ(line_of_error("n 4\n0 0\n0 0\n"), 3);
}

TEST(SetFile, Errors) {
    EXPECT_EQ(line_of_error("0 0\n"), 1);          // no header
    EXPECT_EQ(line_of_error("# only\n\n"), 0);      // empty input
    EXPECT_EQ(line_of_error("n 4\n0 4\n"), 2);     // out of range
    EXPECT_EQ(line_of_error("n 4\n1 x\n"), 2);     // malformed
    EXPECT_EQ(line_of_error("n 4\n1 2 3\n"), 2);   // trailing token
    EXPECT_EQ(line_of_error("n 1\n"), 1);          // modulus too small
    EXPECT_EQ(line_of_error("n 65\n"), 1);         // modulus too large
    EXPECT_THROW(read_set_file("/nonexistent/set/file"), std::runtime_error);
}

TEST(SetFile, CommentsAndBlankLinesAnywhere) {
    EXPECT_EQ(parse_set_file("\n# a\nn 3\n\n# b\n2 1\n  \n0 2\n"), PointSet::of(3, {{2, 1}, {0, 2}}));
}

TEST(SetFile, RoundTripIsByteIdentical) {
    const auto canonical = write_set_file(parse_set_file("# x\nn 4\n3 3\n0 0\n1 2\n"));
    EXPECT_EQ(canonical, "n 4\n0 0\n1 2\n3 3\n");
    EXPECT_EQ(write_set_file(parse_set_file(canonical)), canonical);
    EXPECT_EQ(write_set_file(PointSet(5)), "n 5\n");
}

TEST(RenderGrid, SymplecticAxisZeros) {
    const auto lines = lines_of(render_grid(zero_set(kAxis, Form::symplectic)));
    ASSERT_EQ(lines.size(), 5u);
    EXPECT_EQ(lines[0], "████");
    EXPECT_EQ(lines[1], "████");
    EXPECT_EQ(lines[2], "████");
    EXPECT_EQ(lines[3], "····");
    EXPECT_NE(lines[4].find("n=4"), std::string::npos);
    EXPECT_NE(lines[4].find("symplectic"), std::string::npos);
}

TEST(RenderGrid, EuclideanAxisZeros) {
    const auto lines = lines_of(render_grid(zero_set(kAxis, Form::euclidean)));
    ASSERT_EQ(lines.size(), 5u);
    for (int r = 0; r < 4; ++r) EXPECT_EQ(lines[static_cast<std::size_t>(r)], "·███");
    EXPECT_NE(lines[4].find("euclidean"), std::string::npos);
}

TEST(RenderGrid, EmptyAndOrientation) {
    const auto empty = lines_of(render_grid(PointSet(3)));
    for (int r = 0; r < 3; ++r) EXPECT_EQ(empty[static_cast<std::size_t>(r)], "···");
    // (2,0) is bottom-right, (0,2) is top-left.
    const auto corners = lines_of(render_grid(PointSet::of(3, {{2, 0}, {0, 2}}), "corners"));
    EXPECT_EQ(corners[0], "█··");
    EXPECT_EQ(corners[2], "··█");
    EXPECT_NE(corners[3].find("corners"), std::string::npos);
    EXPECT_THROW(render_grid(PointSet(kMaxGridModulus + 1)), BoundExceeded);
}

TEST(ReportFormat, TextAndJsonCarrySameVerdict) {
    const auto r = search_counterexamples_cyclic(4, SearchConfig::exhaustive());
    const auto text = to_text(r, false);
    const auto j = nlohmann::json::parse(to_json(r, false));
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["suite"], "cyclic-counterexample");
    EXPECT_EQ(j["passed"], r.passed());
    EXPECT_EQ(j["instances_checked"], r.instances_checked);
    EXPECT_EQ(j["findings"].size(), r.findings.size());
    EXPECT_EQ(j["summary"], r.summary_line());
    EXPECT_NE(text.find("summary: " + r.summary_line()), std::string::npos);
    EXPECT_NE(text.find("result: PASS"), std::string::npos);
    EXPECT_EQ(text.find("elapsed_ms"), std::string::npos);
    EXPECT_FALSE(j.contains("elapsed_ms"));
    // Each finding's set appears verbatim in the text form.
    for (const auto& w : r.findings) EXPECT_NE(text.find("A=" + to_string(w.set("A"))), std::string::npos);
}

TEST(ReportFormat, ConfigEchoOmitsWorkers) {
    auto cfg = SearchConfig::sampled(10, 77);
    cfg.parallelism = 3;
    const auto text = to_text(verify_lemma_diff(3, cfg), false);
    EXPECT_NE(text.find("config: mode=sampled samples=10 seed=77"), std::string::npos);
    EXPECT_EQ(text.find("workers"), std::string::npos);
}

TEST(ReportFormat, FailureWitnessesAreSerialized) {
    VerificationReport r;
    r.suite = "demo";
    r.instances_checked = 1;
    r.failures.push_back(Witness{"diff-disjoint", 4, {{"A", kAxis}}, GroupElement(1, 0, 4), "hit"});
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.summary_line(), "demo: 1 instances, 1 failures: FAIL");
    const auto j = nlohmann::json::parse(to_json(r));
    EXPECT_EQ(j["failures"][0]["kind"], "diff-disjoint");
    EXPECT_EQ(j["failures"][0]["element"], nlohmann::json::array({1, 0}));
    EXPECT_EQ(j["failures"][0]["sets"]["A"].size(), 4u);
    EXPECT_TRUE(j.contains("elapsed_ms"));
    EXPECT_NE(to_text(r).find("failure[0]: kind=diff-disjoint n=4 A={(0,0),(1,0),(2,0),(3,0)} element=(1,0)"),
              std::string::npos);
}

TEST(Golden, AllCasesPassAndTableIsStable) {
    const auto cases = reproduce_paper();
    ASSERT_EQ(cases.size(), 8u);
    for (const auto& c : cases) EXPECT_TRUE(c.passed) << c.id << ": " << c.detail;
    const auto table = format_golden_table(cases);
    EXPECT_EQ(table, format_golden_table(reproduce_paper(2)));
    EXPECT_NE(table.find("8/8 cases passed"), std::string::npos);
}
