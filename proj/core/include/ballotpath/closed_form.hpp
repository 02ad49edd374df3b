#pragma once

#include "ballotpath/count.hpp"
#include "ballotpath/pattern.hpp"

namespace ballot {

// Binomial coefficient with any integer upper argument via the falling
// factorial: gbinom(x, k) = x(x-1)...(x-k+1) / k!, 0 for k < 0.
// In particular gbinom(-1, k) = (-1)^k.
Count gbinom(long long x, long long k);

// n! / (j! k! l! (n-j-k-l)!); 0 when any part or the remainder is negative.
Count multinomial3(long long n, long long j, long long k, long long l);

// Coefficient of t^n in (1 + t + ... + t^(a-1))^x, defined for negative x by
// the binomial series:  sum_i (-1)^i gbinom(x,i) gbinom(x+n-a*i-1, n-a*i).
// At a = 2 this reduces to gbinom(x, n).
Count geometric_coefficient(long long x, long long n, int a);

// Paths to (n, n) weakly above y = x avoiding r^a:  (1/(n+1)) * geom(n+1, n).
Count ra_diagonal(int a, int n);

// Paths to (n+l, n) weakly above y = x - l avoiding r^a, i.e. the entry on
// the lowest boundary diagonal:
//   sum_{k=0}^{l} 1/(n+l+1-k) * geom(k-l, k) * geom(n+l+1-k, n+l-k).
Count ra_boundary(int a, int l, int n);

// Paths to (n, m), m >= n, weakly above y = x avoiding u^c:
//   sum_{k=0}^{m-n} 1/(m+1-k) * geom(k-m+n, k) * geom(m+1-k, m-k).
Count uc_count(int c, int n, int m);

// Bifix-free depth-0 patterns (class bifix_free_depth0), basic and boundary
// sequences.  x is the evaluation argument; counts live at x = m >= n - 1.
Count bifixfree_basic(const PatternProfile& prof, int n, long long x);
Count bifixfree_s(const PatternProfile& prof, int n, long long x);

// Single-bifix depth-0 patterns (class bifix_index1_depth0): triple-sum basic
// sequence and its boundary transform s_n(x) = (x-n+1)/(x+1) * b_n(x+1).
Count bifix1_basic(const PatternProfile& prof, int n, long long x);
Count bifix1_s(const PatternProfile& prof, int n, long long x);

// Shortcut sum published for patterns of shape r p' r with a = b+1, c = d.
// The printed sum is wrong at some arguments (rur at n=2, x=2 evaluates to
// 3/2 while the true count is 1), so every evaluation is cross-checked
// against bifix1_s; `validated` is always the trustworthy value.
struct RprSpecialResult {
    Rational raw;     // the shortcut sum, exactly as printed
    Count validated;  // bifix1_s value
    bool agrees;      // raw == validated
};
RprSpecialResult rpr_special_s(const PatternProfile& prof, int n, long long x);

// Length-4 specials, all ballot counts (l = 0) to the endpoint (n, n+j).
Count ruuu_count(int n, int j);
Count uuur_count(int n, int j);
// The uuru sum exactly as printed; correct for j >= 1 but wrong on the
// diagonal (j = 0 gives 3 instead of 2 at n = 2).  Exposed so the
// verification suite can demonstrate the defect it routes around.
Count uuru_count_direct(int n, int j);
// Also covers uruu: both patterns admit the same avoider counts.  The
// direct sum breaks at j = 0; the diagonal is routed through the relation
// D(n, n) = D(n-1, n) instead (a diagonal-ending path ends in r and cannot
// finish a pattern ending in u).
Count uuru_count(int n, int j);

// Worked depth-2 expansion for the pattern rrruuurrruu: ballot count at
// (n, n+x) for x >= 1, built from the bifix1 basic sequence with
// (a, c, b, d) = (6, 5, 3, 3):
//   s_n(n+x) = 2^n + sum_{j=1}^{n} sum_{i=0}^{n-j}
//              C(n-j, i) * (x+i-1)/(j+x+i-1) * b_j(j+x+i-1).
Count depth2_example_s(int n, int x);

}  // namespace ballot
