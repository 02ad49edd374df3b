#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ballotpath/verify.hpp"

using namespace ballot;

TEST_CASE("reflection count for the unconstrained wedge") {
    CHECK(ballot_paths(0, 0, 0) == 1);
    CHECK(ballot_paths(2, 1, 1) == 2);
    CHECK(ballot_paths(2, 2, 1) == 5);
    CHECK(ballot_paths(3, 2, 0) == 0);
    CHECK(ballot_paths(3, 3, 0) == 5);
    CHECK(ballot_paths(4, 4, 0) == 14);
    CHECK(ballot_paths(1, 5, 0) == 5);
    CHECK_THROWS_AS(ballot_paths(-1, 0, 0), std::invalid_argument);
}

TEST_CASE("property suite passes, with both known issues reproducing") {
    VerifyOptions opts;
    opts.max_pattern_length = 5;
    opts.n_max = 9;
    opts.oracle_step_limit = 10;
    opts.random_patterns = 12;
    opts.random_per_class = 4;
    opts.seed = 12345;

    auto results = run_property_suite(opts);
    CHECK(results.size() == 14);

    int known = 0;
    for (const PropertyResult& r : results) {
        CAPTURE(r.name);
        CAPTURE(r.detail);
        CHECK(r.passed);
        if (r.known_issue) ++known;
    }
    CHECK(known == 2);
    CHECK(all_passed(results));
}
