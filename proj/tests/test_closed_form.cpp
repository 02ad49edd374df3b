#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "ballotpath/closed_form.hpp"
#include "ballotpath/count.hpp"
#include "ballotpath/oracle.hpp"
#include "ballotpath/pattern.hpp"

using namespace ballot;

TEST_CASE("generalized binomial via the falling factorial") {
    CHECK(gbinom(5, 2) == 10);
    CHECK(gbinom(4, 0) == 1);
    CHECK(gbinom(3, 5) == 0);
    CHECK(gbinom(5, -1) == 0);
    CHECK(gbinom(-1, 3) == -1);
    CHECK(gbinom(-1, 4) == 1);
    CHECK(gbinom(-2, 2) == 3);
}

TEST_CASE("trinomial-style multinomial") {
    CHECK(multinomial3(6, 1, 2, 3) == 60);
    CHECK(multinomial3(6, 6, 0, 0) == 1);
    CHECK(multinomial3(3, 2, 2, 0) == 0);
    CHECK(multinomial3(3, -1, 1, 1) == 0);
}

TEST_CASE("geometric coefficients at small arguments") {
    // (1 + t + t^2)^2 = 1 + 2t + 3t^2 + 2t^3 + t^4
    CHECK(geometric_coefficient(2, 0, 3) == 1);
    CHECK(geometric_coefficient(2, 1, 3) == 2);
    CHECK(geometric_coefficient(2, 2, 3) == 3);
    CHECK(geometric_coefficient(2, 3, 3) == 2);
    CHECK(geometric_coefficient(2, 4, 3) == 1);
    CHECK(geometric_coefficient(2, 5, 3) == 0);
    CHECK(geometric_coefficient(2, -1, 3) == 0);

    // Negative exponent: (1-t)/(1-t^3) has coefficients 1, -1, 0 repeating.
    CHECK(geometric_coefficient(-1, 0, 3) == 1);
    CHECK(geometric_coefficient(-1, 1, 3) == -1);
    CHECK(geometric_coefficient(-1, 2, 3) == 0);
    CHECK(geometric_coefficient(-1, 3, 3) == 1);
    CHECK(geometric_coefficient(-1, 4, 3) == -1);

    for (long long x = -3; x <= 6; ++x)
        for (long long n = 0; n <= 10; ++n) CHECK(geometric_coefficient(x, n, 2) == gbinom(x, n));
}

TEST_CASE("diagonal run-avoidance counts") {
    // Avoiding rr pins the diagonal at 1; a run longer than the path gives
    // the Catalan numbers.
    for (int n = 0; n <= 8; ++n) CHECK(ra_diagonal(2, n) == 1);
    CHECK(ra_diagonal(3, 3) == 4);
    CHECK(ra_diagonal(9, 4) == 14);
    CHECK(ra_diagonal(8, 5) == 42);
    CHECK_THROWS_AS(ra_diagonal(1, 3), std::invalid_argument);
}

TEST_CASE("boundary run-avoidance counts") {
    CHECK(ra_boundary(4, 5, 4) == 112);
    CHECK(ra_boundary(2, 1, 1) == 1);
    for (int a = 2; a <= 5; ++a)
        for (int n = 0; n <= 8; ++n) CHECK(ra_boundary(a, 0, n) == ra_diagonal(a, n));
    // Against the engine on the line m = n - l.
    for (int l : {1, 2, 5})
        for (int n = 0; n <= 6; ++n) {
            Pattern p = parse_pattern("rrrr");
            CHECK(ra_boundary(4, l, n) == count_dp({p, n + l, n, l}));
        }
}

TEST_CASE("up-run avoidance over the full wedge") {
    CHECK(uc_count(4, 0, 5) == 0);
    CHECK(uc_count(4, 1, 6) == 1);
    CHECK(uc_count(4, 2, 7) == 6);
    CHECK(uc_count(4, 3, 8) == 28);
    CHECK(uc_count(4, 4, 9) == 112);
    Pattern p = parse_pattern("uuu");
    for (int n = 0; n <= 7; ++n)
        for (int m = n; m <= 9; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(uc_count(3, n, m) == count_dp({p, n, m, 0}));
        }
    CHECK_THROWS_AS(uc_count(3, 4, 2), std::invalid_argument);
}

TEST_CASE("bifix-free evaluations match the engine weakly above the diagonal") {
    for (const char* text : {"urr", "uurrurrur"}) {
        PatternProfile prof = classify(parse_pattern(text));
        REQUIRE(prof.cls == ClassKind::bifix_free_depth0);
        for (int n = 0; n <= 7; ++n)
            for (int m = n; m <= 8; ++m) {
                CAPTURE(text);
                CAPTURE(n);
                CAPTURE(m);
                CHECK(bifixfree_s(prof, n, m) == count_dp({prof.pattern, n, m, 0}));
            }
    }
    CHECK_THROWS_AS(bifixfree_s(classify(parse_pattern("urruurr")), 2, 2),
                    std::invalid_argument);
}

TEST_CASE("basic and boundary sequences are tied on the shifted diagonal") {
    // s_n(x) = (x - n + 1)/(x + 1) b_n(x + 1) turns b back into s; at x = n
    // both count the same diagonal cell through different sums.
    PatternProfile prof = classify(parse_pattern("urr"));
    for (int n = 1; n <= 6; ++n)
        for (long long x = n; x <= 9; ++x) {
            Rational lhs(bifixfree_basic(prof, n, x + 1));
            lhs *= (x - n + 1);
            lhs /= (x + 1);
            CHECK(Rational(bifixfree_s(prof, n, x)) == lhs);
        }
}

TEST_CASE("one-bifix evaluations match the engine and the printed cells") {
    PatternProfile prof = classify(parse_pattern("urruurr"));
    REQUIRE(prof.cls == ClassKind::bifix_index1_depth0);
    CHECK(bifix1_s(prof, 4, 4) == 13);
    CHECK(bifix1_s(prof, 5, 5) == 38);
    CHECK(bifix1_s(prof, 8, 8) == 1236);
    for (int n = 0; n <= 7; ++n)
        for (int m = n; m <= 8; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(bifix1_s(prof, n, m) == count_dp({prof.pattern, n, m, 0}));
        }
    CHECK_THROWS_AS(bifix1_s(prof, 1, -1), std::domain_error);
    CHECK_THROWS_AS(bifix1_s(classify(parse_pattern("urr")), 2, 2), std::invalid_argument);
}

TEST_CASE("the r p' r shortcut sum carries a documented defect") {
    PatternProfile rur = classify(parse_pattern("rur"));

    RprSpecialResult at22 = rpr_special_s(rur, 2, 2);
    CHECK(at22.raw == Rational(3) / 2);
    CHECK_FALSE(at22.agrees);
    CHECK(at22.validated == 1);
    CHECK(at22.validated == count_dp({rur.pattern, 2, 2, 0}));

    RprSpecialResult at33 = rpr_special_s(rur, 3, 3);
    CHECK(at33.raw == 3);
    CHECK_FALSE(at33.agrees);
    CHECK(at33.validated == 2);

    // Where the shortcut is right it agrees; n = 0 and (1, 1) are such points.
    CHECK(rpr_special_s(rur, 0, 5).agrees);
    RprSpecialResult at11 = rpr_special_s(rur, 1, 1);
    CHECK(at11.agrees);
    CHECK(at11.validated == 1);

    // Whatever the shortcut does, the validated channel is the true count.
    for (int n = 0; n <= 5; ++n)
        for (int x = n; x <= 6; ++x) {
            CAPTURE(n);
            CAPTURE(x);
            CHECK(rpr_special_s(rur, n, x).validated == count_dp({rur.pattern, n, x, 0}));
        }

    // The shape guard rejects patterns that are not r p' r.
    CHECK_THROWS_AS(rpr_special_s(classify(parse_pattern("urruurr")), 2, 2),
                    std::invalid_argument);
}

TEST_CASE("length-4 avoidance sums match the engine") {
    struct Eval {
        const char* text;
        Count (*fn)(int, int);
    };
    for (Eval e : {Eval{"ruuu", ruuu_count}, Eval{"uuur", uuur_count}, Eval{"uuru", uuru_count},
                   Eval{"uruu", uuru_count}}) {
        Pattern p = parse_pattern(e.text);
        for (int n = 0; n <= 6; ++n)
            for (int j = 0; j <= 6; ++j) {
                CAPTURE(e.text);
                CAPTURE(n);
                CAPTURE(j);
                CHECK(e.fn(n, j) == count_dp({p, n, n + j, 0}));
            }
    }
}

TEST_CASE("the printed uuru sum is wrong only on the diagonal") {
    CHECK(uuru_count_direct(2, 0) == 3);
    CHECK(count_dp({parse_pattern("uuru"), 2, 2, 0}) == 2);
    CHECK(uuru_count(2, 0) == 2);
    for (int n = 0; n <= 6; ++n)
        for (int j = 1; j <= 5; ++j) CHECK(uuru_count_direct(n, j) == uuru_count(n, j));
}

TEST_CASE("worked depth-2 expansion matches the engine off the diagonal") {
    CHECK(depth2_example_s(10, 1) == 58567);
    CHECK(depth2_example_s(9, 1) == 16751);
    CHECK(depth2_example_s(8, 1) == 4854);
    CHECK(depth2_example_s(3, 2) == 28);
    Pattern p = parse_pattern("rrruuurrruu");
    for (int n = 0; n <= 7; ++n)
        for (int x = 1; x <= 4; ++x) {
            CAPTURE(n);
            CAPTURE(x);
            CHECK(depth2_example_s(n, x) == count_dp({p, n, n + x, 0}));
        }
    CHECK_THROWS_AS(depth2_example_s(3, 0), std::invalid_argument);
}

TEST_CASE("non-integral totals are detected, not truncated") {
    CHECK(to_count(Rational(6) / 3, "test") == 2);
    CHECK_THROWS_AS(to_count(Rational(3) / 2, "test"), NonIntegralError);
    // NonIntegralError is a domain_error, so blanket handlers still see it.
    CHECK_THROWS_AS(to_count(Rational(3) / 2, "test"), std::domain_error);
}
