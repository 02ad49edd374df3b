#include "ballotpath/pattern.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ballot {

Pattern Pattern::slice(std::size_t first, std::size_t last) const {
    return Pattern(std::vector<Step>(steps_.begin() + first, steps_.begin() + last));
}

std::string Pattern::str() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(step_char(s));
    return out;
}

Pattern parse_pattern(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("pattern must be nonempty");
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case 'u':
            case 'U': steps.push_back(Step::up); break;
            case 'r':
            case 'R': steps.push_back(Step::right); break;
            default:
                throw std::invalid_argument(std::string("pattern may contain only u/r, got '") + ch + "'");
        }
    }
    return Pattern(std::move(steps));
}

Dimensions dimensions(const Pattern& p) {
    Dimensions d;
    for (Step s : p.steps()) (s == Step::right ? d.right : d.up)++;
    return d;
}

int depth(const Pattern& p) {
    // Scan suffixes from the end; the empty suffix contributes 0.
    int surplus = 0, best = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        surplus += p[i] == Step::up ? 1 : -1;
        best = std::max(best, surplus);
    }
    return best;
}

namespace {

// failure[i] = length of the longest proper border of p[0..i).
std::vector<int> failure_chain(const Pattern& p) {
    const int L = static_cast<int>(p.size());
    std::vector<int> fail(L + 1, 0);
    for (int i = 1; i < L; ++i) {
        int k = fail[i];
        while (k > 0 && p[k] != p[i]) k = fail[k];
        fail[i + 1] = (p[k] == p[i]) ? k + 1 : 0;
    }
    return fail;
}

}  // namespace

std::vector<Pattern> bifixes(const Pattern& p) {
    const auto fail = failure_chain(p);
    std::vector<int> lengths;
    for (int k = fail[p.size()]; k > 0; k = fail[k]) lengths.push_back(k);
    std::sort(lengths.begin(), lengths.end());
    std::vector<Pattern> out;
    out.reserve(lengths.size());
    for (int k : lengths) out.push_back(p.slice(0, static_cast<std::size_t>(k)));
    return out;
}

std::vector<Pattern> bifixes_by_definition(const Pattern& p) {
    std::vector<Pattern> out;
    const std::size_t L = p.size();
    for (std::size_t k = 1; k < L; ++k) {
        bool border = true;
        for (std::size_t i = 0; i < k && border; ++i) border = p[i] == p[L - k + i];
        if (border) out.push_back(p.slice(0, k));
    }
    return out;
}

Pattern reverse_pattern(const Pattern& p) {
    std::vector<Step> steps(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Step flipped = p[i] == Step::up ? Step::right : Step::up;
        steps[p.size() - 1 - i] = flipped;
    }
    return Pattern(std::move(steps));
}

std::string_view class_name(ClassKind k) {
    switch (k) {
        case ClassKind::pure_right: return "pure_right";
        case ClassKind::pure_up: return "pure_up";
        case ClassKind::bifix_free_depth0: return "bifix_free_depth0";
        case ClassKind::bifix_index1_depth0: return "bifix_index1_depth0";
        case ClassKind::depth_positive: return "depth_positive";
        case ClassKind::length4_special: return "length4_special";
        case ClassKind::unsupported: return "unsupported";
    }
    return "unsupported";
}

PatternProfile classify(const Pattern& p) {
    if (p.empty()) throw std::invalid_argument("cannot classify an empty pattern");

    PatternProfile prof;
    prof.pattern = p;
    const Dimensions dim = dimensions(p);
    prof.a = dim.right;
    prof.c = dim.up;
    prof.depth = ballot::depth(p);
    prof.bifixes = ballot::bifixes(p);
    prof.bifix_index = static_cast<int>(prof.bifixes.size());

    if (prof.bifix_index == 1) {
        // p = o p' o with o the unique bifix; the piece o p' carries the
        // remaining steps.  A unique bifix is never longer than half of p,
        // otherwise its self-overlap would produce a second, shorter bifix.
        const Dimensions od = dimensions(prof.bifixes.front());
        prof.b = prof.a - od.right;
        prof.d = prof.c - od.up;
    }

    if (prof.c == 0) {
        prof.cls = ClassKind::pure_right;
        return prof;
    }
    if (prof.a == 0) {
        prof.cls = ClassKind::pure_up;
        return prof;
    }

    static const std::array<std::pair<std::string_view, Length4>, 4> specials = {{
        {"uuur", Length4::uuur},
        {"uuru", Length4::uuru},
        {"uruu", Length4::uruu},
        {"ruuu", Length4::ruuu},
    }};
    const std::string text = p.str();
    for (const auto& [word, which] : specials) {
        if (text == word) {
            prof.cls = ClassKind::length4_special;
            prof.special = which;
            return prof;
        }
    }

    if (prof.bifix_index >= 2) {
        prof.cls = ClassKind::unsupported;
        prof.unsupported_reason =
            "has " + std::to_string(prof.bifix_index) + " bifixes; recurrences cover at most one";
        return prof;
    }

    if (prof.depth == 0) {
        if (prof.bifix_index == 0) {
            if (prof.a >= prof.c && prof.a >= 2) {
                prof.cls = ClassKind::bifix_free_depth0;
            } else {
                prof.cls = ClassKind::unsupported;
                prof.unsupported_reason = "bifix-free depth 0 requires a >= max(c, 2), have a=" +
                                          std::to_string(prof.a) + " c=" + std::to_string(prof.c);
            }
            return prof;
        }
        // One bifix o, depth 0: need a >= c >= 1, piece b >= d with b >= 1,
        // and the trailing piece p' o must not rise above what the region
        // correction can absorb: depth(p' o) <= a - c.
        const std::size_t olen = prof.bifixes.front().size();
        const Pattern trailing = p.slice(olen, p.size());  // p' o
        const int trail_depth = ballot::depth(trailing);
        if (prof.a >= prof.c && *prof.b >= *prof.d && *prof.b >= 1 && trail_depth <= prof.a - prof.c) {
            prof.cls = ClassKind::bifix_index1_depth0;
        } else {
            prof.cls = ClassKind::unsupported;
            prof.unsupported_reason = "one bifix at depth 0 but piece conditions fail (a=" +
                                      std::to_string(prof.a) + " c=" + std::to_string(prof.c) +
                                      " b=" + std::to_string(*prof.b) + " d=" + std::to_string(*prof.d) +
                                      " depth(p'o)=" + std::to_string(trail_depth) + ")";
        }
        return prof;
    }

    // depth >= 1
    if (prof.a >= prof.c && prof.bifix_index == 0) {
        prof.cls = ClassKind::depth_positive;
        return prof;
    }
    if (prof.a >= prof.c && prof.bifix_index == 1) {
        const std::size_t olen = prof.bifixes.front().size();
        const Pattern leading = p.slice(0, p.size() - olen);  // o p'
        const int lead_depth = ballot::depth(leading);
        if (*prof.b >= *prof.d && lead_depth <= *prof.d + prof.a - prof.c) {
            prof.cls = ClassKind::depth_positive;
            return prof;
        }
        prof.cls = ClassKind::unsupported;
        prof.unsupported_reason = "depth " + std::to_string(prof.depth) +
                                  " with one bifix but piece conditions fail (b=" + std::to_string(*prof.b) +
                                  " d=" + std::to_string(*prof.d) + " depth(op')=" + std::to_string(lead_depth) +
                                  " limit=" + std::to_string(*prof.d + prof.a - prof.c) + ")";
        return prof;
    }
    prof.cls = ClassKind::unsupported;
    prof.unsupported_reason = "depth " + std::to_string(prof.depth) + " with a=" + std::to_string(prof.a) +
                              " < c=" + std::to_string(prof.c) + "; corrections would leave the region";
    return prof;
}

}  // namespace ballot
