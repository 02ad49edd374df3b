#include "ballotpath/automaton.hpp"

#include <stdexcept>

namespace ballot {

PatternAutomaton::PatternAutomaton(const Pattern& p) : length_(static_cast<int>(p.size())) {
    if (p.empty()) throw std::invalid_argument("automaton needs a nonempty pattern");
    const int L = length_;

    failure_.assign(static_cast<std::size_t>(L) + 1, 0);
    for (int i = 1; i < L; ++i) {
        int k = failure_[i];
        while (k > 0 && p[k] != p[i]) k = failure_[k];
        failure_[i + 1] = (p[k] == p[i]) ? k + 1 : 0;
    }

    table_.assign(static_cast<std::size_t>(L + 1) * 2, 0);
    const Step alphabet[2] = {Step::up, Step::right};
    for (int s = 0; s <= L; ++s) {
        for (Step ch : alphabet) {
            int t;
            if (s == L) {
                t = L;  // dead state absorbs
            } else if (p[s] == ch) {
                t = s + 1;
            } else if (s == 0) {
                t = 0;
            } else {
                t = table_[static_cast<std::size_t>(failure_[s]) * 2 + (ch == Step::right ? 1 : 0)];
            }
            table_[static_cast<std::size_t>(s) * 2 + (ch == Step::right ? 1 : 0)] = t;
        }
    }
}

bool PatternAutomaton::contains(const std::vector<Step>& word) const {
    int s = 0;
    for (Step ch : word) {
        s = next(s, ch);
        if (s == dead_state()) return true;
    }
    return false;
}

std::vector<int> PatternAutomaton::match_end_positions(const std::vector<Step>& word) const {
    std::vector<int> ends;
    int s = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (s == dead_state()) s = failure_[s];  // restart via the longest border
        s = next(s, word[i]);
        if (s == dead_state()) ends.push_back(static_cast<int>(i) + 1);
    }
    return ends;
}

PatternAutomaton build_automaton(const Pattern& p) { return PatternAutomaton(p); }

}  // namespace ballot
