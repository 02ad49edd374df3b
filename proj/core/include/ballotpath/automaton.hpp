#pragma once

#include <vector>

#include "ballotpath/pattern.hpp"

namespace ballot {

// Factor-matching automaton for one pattern.  State s < L means "the longest
// suffix of the input that is a prefix of the pattern has length s"; state L
// is the absorbing dead state reached once the pattern occurred as a factor.
class PatternAutomaton {
public:
    explicit PatternAutomaton(const Pattern& p);

    int pattern_length() const { return length_; }
    int dead_state() const { return length_; }
    int state_count() const { return length_ + 1; }

    int next(int state, Step s) const { return table_[static_cast<std::size_t>(state) * 2 + (s == Step::right ? 1 : 0)]; }

    // failure()[i] = length of the longest proper border of the length-i
    // pattern prefix; restarting from failure()[L] continues matching with
    // overlaps after a full match.
    const std::vector<int>& failure() const { return failure_; }

    bool contains(const std::vector<Step>& word) const;

    // End positions (1-based) of all, possibly overlapping, occurrences.
    std::vector<int> match_end_positions(const std::vector<Step>& word) const;

private:
    int length_;
    std::vector<int> table_;  // (L+1) x 2, dead row self-loops
    std::vector<int> failure_;
};

PatternAutomaton build_automaton(const Pattern& p);

}  // namespace ballot
