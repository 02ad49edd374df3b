#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ballotpath/golden.hpp"
#include "ballotpath/pattern.hpp"
#include "ballotpath/recurrence.hpp"

using namespace ballot;

TEST_CASE("every reference table rebuilds cell-for-cell") {
    for (const GoldenTable* g : all_golden_tables()) {
        CAPTURE(g->label);
        CountTable built = build_table_for_golden(*g);
        auto diffs = diff_against_golden(built, *g);
        if (!diffs.empty()) CAPTURE(diffs.front());
        CHECK(diffs.empty());
    }
}

TEST_CASE("reference cell inventory") {
    CHECK(golden_ra4_l5().cells.size() == 50);
    CHECK(golden_ra4_l5().extend);
    CHECK(golden_u4().pattern == "uuuu");
    CHECK_FALSE(golden_u4().extend);
    CHECK(all_golden_tables().size() == 4);
}

TEST_CASE("highlighted cells match the boundary table under reversal") {
    CountTable ra = table_ra(4, 5, 9, 4, true);
    for (const GoldenCell& b : golden_u4_bold()) {
        CAPTURE(b.n);
        CAPTURE(b.m);
        CHECK(b.m == b.n + 5);
        CHECK(ra.at(b.n + 5, b.n) == b.value);
    }
}

TEST_CASE("diffing flags a corrupted cell") {
    const GoldenTable& g = golden_urruurr();
    CountTable built = build_table_for_golden(g);
    built.set(3, 3, built.at(3, 3) + 1, Region::path_count);
    auto diffs = diff_against_golden(built, g);
    REQUIRE(diffs.size() == 1);
    CHECK(diffs[0].find("(3,3)") != std::string::npos);
}

TEST_CASE("diffing flags an undersized table") {
    const GoldenTable& g = golden_urruurr();
    PatternProfile prof = classify(parse_pattern(g.pattern));
    CountTable small = table_bifix1(prof, 3, 3);
    auto diffs = diff_against_golden(small, g);
    CHECK(diffs.size() > 0);
    CHECK(diffs.front().find("outside") != std::string::npos);
}
