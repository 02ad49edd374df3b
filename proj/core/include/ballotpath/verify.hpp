#pragma once

#include <string>
#include <vector>

#include "ballotpath/count.hpp"

namespace ballot {

// One cross-checked invariant.  `known_issue` entries document discrepancies
// that are expected to reproduce; for them `passed` means the discrepancy
// appeared exactly as documented (its absence would be the failure).
struct PropertyResult {
    std::string name;
    bool passed = false;
    bool known_issue = false;
    std::string detail;
};

struct VerifyOptions {
    int max_pattern_length = 6;  // random-corpus pattern length cap
    int n_max = 12;              // agreement and reversal extent
    int oracle_step_limit = 14;  // enumeration-vs-DP total step cap
    int random_patterns = 50;    // random-corpus size for the oracle check
    int random_per_class = 20;   // random recurrence-vs-DP patterns per class
    unsigned seed = 0x5eedu;     // corpus is deterministic given the seed
};

// Runs every cross-method invariant: enumeration vs DP, reversal, boundary
// identities, reference tables, per-class formula and recurrence agreement,
// integrality, Catalan specialization, coefficient checks, serialization
// round-trips, and the two documented known issues.
std::vector<PropertyResult> run_property_suite(const VerifyOptions& opts);

// True when every entry passed (known-issue entries count as passed when the
// documented discrepancy reproduced).
bool all_passed(const std::vector<PropertyResult>& results);

// Plain-binomial ballot rectangle count: paths (0,0) -> (n,m) weakly above
// y = x - l with no pattern constraint, by reflection.  Used to cross-check
// queries whose pattern cannot fit.
Count ballot_paths(int n, int m, int l);

}  // namespace ballot
