#pragma once

#include <string>
#include <vector>

#include "ballotpath/count_table.hpp"

namespace ballot {

// One published cell of a reference table.  Values all fit in long long.
struct GoldenCell {
    int n;
    int m;
    long long value;
};

// A reference table as published: only the printed cells are recorded, since
// some layouts leave parts of the rectangle blank.
struct GoldenTable {
    std::string label;    // human-readable heading
    std::string pattern;  // pattern whose avoidance the table counts
    int l;                // boundary offset
    int n_max;
    int m_max;
    bool extend;          // whether cells below the boundary are extension values
    std::vector<GoldenCell> cells;
};

const GoldenTable& golden_ra4_l5();       // avoid rrrr, l=5, extended below the boundary
const GoldenTable& golden_u4();           // avoid uuuu, l=0
const GoldenTable& golden_urruurr();      // avoid urruurr, l=0
const GoldenTable& golden_rrruuurrruu();  // avoid rrruuurrruu, l=0

std::vector<const GoldenTable*> all_golden_tables();

// Cells of the uuuu table highlighted in the source layout; they sit on the
// line m = n + 5 and equal the rrrr/l=5 cells at (n+5, n) under reversal.
const std::vector<GoldenCell>& golden_u4_bold();

// Rebuilds the table the same way it was originally produced (recurrence
// where one exists, counting engine otherwise).
CountTable build_table_for_golden(const GoldenTable& g);

// Mismatch descriptions, empty when every printed cell agrees.
std::vector<std::string> diff_against_golden(const CountTable& t, const GoldenTable& g);

}  // namespace ballot
