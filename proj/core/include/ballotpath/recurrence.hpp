#pragma once

#include "ballotpath/count.hpp"
#include "ballotpath/count_table.hpp"
#include "ballotpath/pattern.hpp"

namespace ballot {

// Avoid r^a weakly above y = x - l.  Row m = 0 holds the initial values
// (1 for n <= min(a-1, l), else 0); every other in-region cell follows
//   s_n(m) = s_{n-1}(m) + s_n(m-1) - s_{n-a}(m-1)
// where terms below the region or with negative indices contribute 0.
// With `extend`, cells below the boundary are filled by running the
// rearranged recurrence downward column by column, which continues the
// columns as polynomial values (the first extended cell of each column is
// always 0).  Requires n_max <= m_max + l when extending so every column
// has a boundary cell to start from.
CountTable table_ra(int a, int l, int n_max, int m_max, bool extend);

// Bifix-free depth-0 patterns, ballot region m >= n:
//   s_n(m) = s_{n-1}(m) + s_n(m-1) - s_{n-a}(m-c).
CountTable table_bifix_free(const PatternProfile& prof, int n_max, int m_max);

// Single-bifix depth-0 patterns; the correction alternates over repeats of
// the bifix piece:
//   s_n(m) = s_{n-1}(m) + s_n(m-1) - sum_{i>=0} (-1)^i s_{n-a-b*i}(m-c-d*i).
CountTable table_bifix1(const PatternProfile& prof, int n_max, int m_max);

// Depth >= 1 patterns.  Between the lines y = x and y = x + depth the plain
// ballot recurrence D(n,m) = D(n-1,m) + D(n,m-1) holds; weakly above
// y = x + depth the pattern correction applies (single term for bifix-free,
// alternating sum for one bifix).  Correction terms below y = x are 0.
CountTable table_depth_positive(const PatternProfile& prof, int n_max, int m_max);

// Counting-engine fallback: fills the rectangle with count_dp values.  Works
// for every pattern and offset, including classes with no recurrence.
CountTable table_from_oracle(const Pattern& p, int l, int n_max, int m_max);

// Boundary-value identity for tables of depth >= 1 patterns: for 0 <= j <= depth,
//   D(n, n+j-1) = sum_{i=1}^{floor(j/2)}     C(j-i, i)   (-1)^(i-1) D(n-i, n-i+j-1)
//               + sum_{i=1}^{floor((j+1)/2)} C(j-i, i-1) (-1)^(i-1) D(n-i, n-i+j).
// Follows from the ballot recurrence alone, so it holds for oracle-built
// tables of unsupported patterns too.  Throws if a referenced cell is
// outside the table.
bool check_initial_value_lemma(const CountTable& table, int depth, int n, int j);

// Expands the near-diagonal cell (n, n+depth-1-j), 0 <= j <= depth-1, in
// terms of cells on and above the line y = x + depth - 1 (where the table
// agrees with its polynomial continuation):
//   sum_{i=0}^{floor(j/2)}     C(j-i, i)   (-1)^i D(n-i, n-i+depth-1)
// + sum_{i=1}^{floor((j+1)/2)} C(j-i, i-1) (-1)^i D(n-i, n-i+depth).
// Returns the expansion value; callers compare it against the cell.
Count near_diagonal_expansion(const CountTable& table, int depth, int n, int j);

}  // namespace ballot
