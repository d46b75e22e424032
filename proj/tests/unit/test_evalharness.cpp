#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "tsd/error.hpp"
#include "tsd/evalharness.hpp"

using namespace tsd;
using testutil::TempDir;

namespace {

Document spread_doc(const std::vector<std::string>& toggles) {
    PatternReport r;
    r.pattern = Pattern::Spread;
    for (const auto& t : toggles) r.entries[t] = {"a", "b"};
    r.total_count_toggles = toggles.size();
    r.total_count_path = 2;
    return assemble({r});
}

GroundTruth spread_truth(const std::vector<std::string>& toggles) {
    GroundTruth g;
    for (const auto& t : toggles) g.records.push_back({Pattern::Spread, t, ""});
    return g;
}

}  // namespace

TEST_CASE("parse_ground_truth") {
    auto g = parse_ground_truth(
        "# annotator: A. Person, rev abc\n"
        "pattern,toggle,file\n"
        "\n"
        "spread,EnableFoo,\n"
        "nested,EnableBar,pkg/a/reader.go\n"
        "dead,OLD_FLAG\n");
    REQUIRE(g.records.size() == 3);
    CHECK(g.records[0] == TruthRecord{Pattern::Spread, "EnableFoo", ""});
    CHECK(g.records[1].file == "pkg/a/reader.go");
    CHECK(g.records[2].pattern == Pattern::Dead);
    CHECK(g.provenance.find("annotator") != std::string::npos);
}

TEST_CASE("parse_ground_truth errors carry line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_ground_truth(text);
        } catch (const FormatError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("pattern,toggle,file\nspread,A_FLAG,\nspread,A_FLAG,\n") == 3);
    CHECK(line_of("pattern,toggle,file\n# c\nsmelly,A_FLAG,\n") == 3);
    CHECK(line_of("spread,A_FLAG,\n") == 1);
    CHECK(line_of("pattern,toggle,file\nspread,,\n") == 2);
    CHECK(line_of("pattern,toggle,file\nspread\n") == 2);
    CHECK(line_of("") == 1);
    try {
        parse_ground_truth("pattern,toggle,file\nspread,A_FLAG,\nspread,A_FLAG,\n");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("A_FLAG") != std::string::npos);
    }
}

TEST_CASE("load_ground_truth") {
    TempDir d;
    auto p = d.write("truth.csv", "pattern,toggle,file\nspread,A_FLAG,\nnested,B_FLAG,x.go\nenum,C_FLAG,\n");
    CHECK(load_ground_truth(p).records.size() == 3);
    CHECK_THROWS_AS(load_ground_truth(d.path() / "missing.csv"), IoError);
}

TEST_CASE("score a spread row with one false positive and two misses") {
    auto doc = spread_doc({"t1", "t2", "t3", "t4", "x1"});
    auto truth = spread_truth({"t1", "t2", "t3", "t4", "m1", "m2"});
    auto s = score(doc, truth).per_pattern.at(Pattern::Spread);
    CHECK(s.manual_count == 6);
    CHECK(s.tool_count == 5);
    CHECK(s.tp == 4);
    CHECK(s.fp == 1);
    CHECK(s.fn == 2);
    CHECK(s.precision == doctest::Approx(0.8));
    CHECK(s.recall == doctest::Approx(4.0 / 6.0));
}

TEST_CASE("score identical sets") {
    auto doc = spread_doc({"t1", "t2"});
    auto s = score(doc, spread_truth({"t1", "t2"})).per_pattern.at(Pattern::Spread);
    CHECK(s.fp == 0);
    CHECK(s.fn == 0);
    CHECK(s.precision == 1.0);
    CHECK(s.recall == 1.0);
}

TEST_CASE("score with an empty tool report") {
    auto doc = assemble({});
    auto s = score(doc, spread_truth({"t1", "t2", "t3"})).per_pattern.at(Pattern::Spread);
    CHECK(s.tp == 0);
    CHECK(s.fn == 3);
    CHECK(s.precision == 1.0);
    CHECK_FALSE(s.precision_defined);
    CHECK(s.recall == 0.0);
    CHECK(s.recall_defined);
}

TEST_CASE("nested scoring resolves qualified expressions") {
    PatternReport r;
    r.pattern = Pattern::Nested;
    r.entries["archival.go"] = {"a.History.EnableRead", "EnableRead", "a.Visibility.EnableRead"};
    r.entries["attr.go"] = {"d.clusterMetadata.GetEnabledClusterInfo"};
    update_totals(r);
    auto doc = assemble({r});
    GroundTruth g;
    g.records = {{Pattern::Nested, "EnableRead", "archival.go"},
                 {Pattern::Nested, "EnableRead", "other.go"}};
    auto s = score(doc, g).per_pattern.at(Pattern::Nested);
    CHECK(s.tp == 1);
    CHECK(s.fn == 1);
    CHECK(s.fp == 1);
    CHECK(s.tool_count == 2);
}

TEST_CASE("self-consistency and identities") {
    PatternReport dead;
    dead.pattern = Pattern::Dead;
    dead.toggles = {"A_FLAG", "B_FLAG"};
    update_totals(dead);
    PatternReport mixed;
    mixed.pattern = Pattern::Mixed;
    mixed.entries["a.c"] = {"C_FLAG", "D_FLAG"};
    mixed.entries["b.c"] = {"C_FLAG"};
    update_totals(mixed);
    auto doc = assemble({dead, mixed});
    auto result = score(doc, truth_from_report(doc));
    for (const auto& [p, s] : result.per_pattern) {
        CHECK(s.precision == 1.0);
        CHECK(s.recall == 1.0);
        CHECK(s.tp + s.fn == s.manual_count);
        CHECK(s.tp + s.fp == s.tool_count);
    }
    CHECK(result.per_pattern.at(Pattern::Mixed).tp == 3);
}

TEST_CASE("table and JSON output") {
    auto result = score(spread_doc({"t1"}), spread_truth({"t1", "t2"}));
    auto table = format_table(result);
    CHECK(table.find("spread") != std::string::npos);
    CHECK(table.find("100.0%*") != std::string::npos);
    auto json = to_json(result);
    CHECK(json["patterns"]["spread"]["tp"] == 1);
    CHECK(json["patterns"]["spread"]["fn"] == 1);
    CHECK(json["patterns"]["dead"]["precision_defined"] == false);
}
