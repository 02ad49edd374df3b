#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ballot {

// A step of a lattice path: u moves up (+y), r moves right (+x).
enum class Step : std::uint8_t { up, right };

inline char step_char(Step s) { return s == Step::up ? 'u' : 'r'; }

// A nonempty word over {u, r}, used as a forbidden factor.
class Pattern {
public:
    Pattern() = default;
    explicit Pattern(std::vector<Step> steps) : steps_(std::move(steps)) {}

    const std::vector<Step>& steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    Step operator[](std::size_t i) const { return steps_[i]; }

    // Contiguous piece [first, last) as its own pattern.
    Pattern slice(std::size_t first, std::size_t last) const;

    std::string str() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    std::vector<Step> steps_;
};

// Accepts the letters u/r in either case; rejects anything else and the
// empty string.
Pattern parse_pattern(std::string_view text);

struct Dimensions {
    int right = 0;  // a: number of r steps
    int up = 0;     // c: number of u steps
};

Dimensions dimensions(const Pattern& p);

// Largest surplus of up steps over right steps among suffixes of p (the
// empty suffix counts, so depth >= 0).  A path that ends on the line y = x
// dips at most `depth` below that line while walking the pattern backwards.
int depth(const Pattern& p);

// All nonempty proper prefixes of p that are also suffixes, shortest first.
// bifixes() uses the matcher failure chain; bifixes_by_definition() is the
// quadratic reference both tests and callers can fall back on.
std::vector<Pattern> bifixes(const Pattern& p);
std::vector<Pattern> bifixes_by_definition(const Pattern& p);

// Swap u <-> r in every step, then reverse the order.  Reversing a path this
// way turns counts weakly above y = x into counts weakly above y = x - l:
// paths(n, n+l; p, offset 0) = paths(n+l, n; reverse_pattern(p), offset l).
Pattern reverse_pattern(const Pattern& p);

enum class ClassKind {
    pure_right,           // p = r^a
    pure_up,              // p = u^c
    bifix_free_depth0,    // no bifix, depth 0, a >= max(c, 2), c >= 1
    bifix_index1_depth0,  // one bifix, depth 0, piece conditions hold
    depth_positive,       // depth >= 1, at most one bifix, piece conditions hold
    length4_special,      // uuur, uuru, uruu, ruuu
    unsupported,          // everything else: only the counting engine applies
};

std::string_view class_name(ClassKind k);

enum class Length4 : std::uint8_t { uuur, uuru, uruu, ruuu };

struct PatternProfile {
    Pattern pattern;
    int a = 0;      // right steps
    int c = 0;      // up steps
    int depth = 0;  // see depth()
    std::vector<Pattern> bifixes;
    int bifix_index = 0;  // bifixes.size()
    // Dimensions of the complement piece p' o (equivalently o p') when the
    // pattern has exactly one bifix o, i.e. p = o p' o.
    std::optional<int> b;
    std::optional<int> d;
    ClassKind cls = ClassKind::unsupported;
    std::optional<Length4> special;  // set when cls == length4_special
    std::string unsupported_reason;  // set when cls == unsupported
};

// Classification is total: every pattern lands in exactly one class, and
// unsupported patterns carry a reason.  Pure runs win over every other rule
// (r^4 is pure_right, not length4_special), then the four length-4 specials,
// then the generic bifix/depth classes.
PatternProfile classify(const Pattern& p);

}  // namespace ballot
