#include "ballotpath/oracle.hpp"

#include <stdexcept>

namespace ballot {

namespace {

void check_query(const PathQuery& q) {
    if (q.n < 0 || q.m < 0) throw std::invalid_argument("endpoint coordinates must be >= 0");
    if (q.l < 0) throw std::invalid_argument("boundary offset l must be >= 0");
}

struct Enumerator {
    const PatternAutomaton aut;
    const int l;
    const int n_max;
    const int m_max;
    CountGrid grid;

    Enumerator(const Pattern& p, int l_, int n_max_, int m_max_)
        : aut(p), l(l_), n_max(n_max_), m_max(m_max_), grid(n_max_, m_max_) {}

    // Visit every boundary-respecting, pattern-avoiding path prefix once;
    // each visit is one distinct path to (x, y).
    void walk(int x, int y, int state, int steps_left) {
        grid.at(x, y) += 1;
        if (steps_left == 0) return;
        if (x < n_max && y >= x + 1 - l) {
            int t = aut.next(state, Step::right);
            if (t != aut.dead_state()) walk(x + 1, y, t, steps_left - 1);
        }
        if (y < m_max) {
            int t = aut.next(state, Step::up);
            if (t != aut.dead_state()) walk(x, y + 1, t, steps_left - 1);
        }
    }
};

}  // namespace

CountGrid exhaustive_grid(const Pattern& p, int l, int total_steps) {
    if (l < 0) throw std::invalid_argument("boundary offset l must be >= 0");
    if (total_steps < 0 || total_steps > kExhaustiveStepLimit)
        throw std::invalid_argument("exhaustive enumeration is capped at " +
                                    std::to_string(kExhaustiveStepLimit) + " steps");
    Enumerator e(p, l, total_steps, total_steps);
    e.walk(0, 0, 0, total_steps);
    return std::move(e.grid);
}

Count count_exhaustive(const PathQuery& q) {
    check_query(q);
    if (q.n + q.m > kExhaustiveStepLimit)
        throw std::invalid_argument("exhaustive enumeration is capped at " +
                                    std::to_string(kExhaustiveStepLimit) + " steps");
    if (q.m < q.n - q.l) return 0;
    Enumerator e(q.pattern, q.l, q.n, q.m);
    e.walk(0, 0, 0, q.n + q.m);
    return e.grid.at(q.n, q.m);
}

CountGrid dp_grid(const Pattern& p, int l, int n_max, int m_max) {
    if (n_max < 0 || m_max < 0) throw std::invalid_argument("grid extents must be >= 0");
    if (l < 0) throw std::invalid_argument("boundary offset l must be >= 0");

    const PatternAutomaton aut(p);
    const int dead = aut.dead_state();
    const int states = aut.state_count();
    const std::size_t points = static_cast<std::size_t>(n_max + 1) * (m_max + 1);

    // dp[point][s]: paths to (x, y) in live automaton state s.  Pushing in
    // lexicographic (x, y) order reaches (x+1, y) and (x, y+1) before they
    // are read.
    std::vector<std::vector<Count>> dp(points);
    auto idx = [&](int x, int y) { return static_cast<std::size_t>(x) * (m_max + 1) + y; };
    auto ensure = [&](std::size_t i) -> std::vector<Count>& {
        if (dp[i].empty()) dp[i].assign(states, Count(0));
        return dp[i];
    };
    ensure(idx(0, 0))[0] = 1;

    CountGrid grid(n_max, m_max);
    for (int x = 0; x <= n_max; ++x) {
        for (int y = 0; y <= m_max; ++y) {
            if (y < x - l) continue;  // point below the boundary: unreachable
            const auto& here = dp[idx(x, y)];
            if (here.empty()) continue;
            Count total = 0;
            for (int s = 0; s < dead; ++s) {
                const Count& ways = here[s];
                if (ways == 0) continue;
                total += ways;
                if (x < n_max && y >= x + 1 - l) {
                    int t = aut.next(s, Step::right);
                    if (t != dead) ensure(idx(x + 1, y))[t] += ways;
                }
                if (y < m_max) {
                    int t = aut.next(s, Step::up);
                    if (t != dead) ensure(idx(x, y + 1))[t] += ways;
                }
            }
            grid.at(x, y) = std::move(total);
        }
    }
    return grid;
}

Count count_dp(const PathQuery& q) {
    check_query(q);
    if (q.m < q.n - q.l) return 0;
    return dp_grid(q.pattern, q.l, q.n, q.m).at(q.n, q.m);
}

}  // namespace ballot
