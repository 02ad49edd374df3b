#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ballotpath/count.hpp"
#include "ballotpath/count_table.hpp"
#include "ballotpath/pattern.hpp"

namespace ballot {

// Method selection for count queries and table builds.  Preference order for
// auto: closed form (when one covers the query), then the class recurrence,
// then the automaton DP, which covers everything.  Exhaustive enumeration is
// deliberately absent here; it exists to validate the DP, not to serve queries.

// Closed form covering the query, if any: pure runs on their valid lines,
// depth-0 evaluations weakly above the diagonal, the length-4 specials, and
// the one worked depth-2 pattern.
struct FormulaChoice {
    std::string name;  // which evaluator applies
};
std::optional<FormulaChoice> formula_for(const PatternProfile& prof, int n, int m, int l);

// Evaluates the covering formula; nullopt when none covers the query.
// Propagates std::domain_error when the formula rejects the point (zero
// denominator at an extension point).
std::optional<Count> count_via_formula(const PatternProfile& prof, int n, int m, int l);

// True when the class has a recurrence table builder valid at this offset:
// pure right runs at any l, the three l=0 classes at l=0.
bool recurrence_applies(const PatternProfile& prof, int l);

// Builds the class table and reads one cell; throws std::invalid_argument
// when recurrence_applies is false.
Count count_via_recurrence(const PatternProfile& prof, int n, int m, int l);

Count count_via_dp(const Pattern& p, int n, int m, int l);

// Formula if it covers the query (falling through on domain rejection),
// else recurrence, else DP.
Count count_auto(const PatternProfile& prof, int n, int m, int l);

// One labeled value per applicable method (dp always included), for
// cross-checking; mismatch detection is the caller's job.
struct MethodValue {
    std::string method;
    Count value;
};
std::vector<MethodValue> count_all_methods(const PatternProfile& prof, int n, int m, int l);

// Table dispatch: the class recurrence when it applies, the counting engine
// otherwise.  extend is only meaningful for pure right runs.
CountTable build_table_auto(const PatternProfile& prof, int l, int n_max, int m_max, bool extend);

// Names of the counting methods that can serve queries on this pattern at
// offset l, for reporting.
std::vector<std::string> method_names(const PatternProfile& prof, int l);

}  // namespace ballot
