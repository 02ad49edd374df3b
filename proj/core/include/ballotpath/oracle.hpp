#pragma once

#include <vector>

#include "ballotpath/automaton.hpp"
#include "ballotpath/count.hpp"
#include "ballotpath/pattern.hpp"

namespace ballot {

// Count paths (0,0) -> (n,m) using steps r=(1,0), u=(0,1) such that every
// visited lattice point satisfies y >= x - l and the step word avoids the
// pattern as a factor.  l = 0 is the classic ballot condition y >= x.
struct PathQuery {
    Pattern pattern;
    int n = 0;
    int m = 0;
    int l = 0;
};

// Rectangular block of counts for one (pattern, l); at(n, m) is 0 for points
// below the boundary.
class CountGrid {
public:
    CountGrid(int n_max, int m_max) : n_max_(n_max), m_max_(m_max), cells_(idx(n_max, m_max) + 1) {}

    int n_max() const { return n_max_; }
    int m_max() const { return m_max_; }

    const Count& at(int n, int m) const { return cells_[idx(n, m)]; }
    Count& at(int n, int m) { return cells_[idx(n, m)]; }

private:
    std::size_t idx(int n, int m) const {
        return static_cast<std::size_t>(m) * (n_max_ + 1) + static_cast<std::size_t>(n);
    }
    int n_max_;
    int m_max_;
    std::vector<Count> cells_;
};

// Enumerates every path explicitly; the reference the dynamic program is
// judged against.  Rejects queries with n + m above this cap.
inline constexpr int kExhaustiveStepLimit = 24;
Count count_exhaustive(const PathQuery& q);

// One enumeration pass filling all endpoints with n + m <= total_steps.
CountGrid exhaustive_grid(const Pattern& p, int l, int total_steps);

// Exact dynamic program over (x, y, automaton state); the dead state is
// excluded so every stored path already avoids the pattern.
Count count_dp(const PathQuery& q);

// The same dynamic program, keeping every endpoint (n <= n_max, m <= m_max).
CountGrid dp_grid(const Pattern& p, int l, int n_max, int m_max);

}  // namespace ballot
