#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ballotpath/count.hpp"

namespace ballot {

enum class Region : std::uint8_t {
    path_count,  // m >= n - l: the value counts paths
    extension,   // below the boundary, filled by running the recurrence downward
    forced_zero, // below the boundary, no extension requested
};

std::string_view region_name(Region r);
Region region_from_name(std::string_view name);

// Values over the rectangle 0 <= n <= n_max, 0 <= m <= m_max for one
// (pattern, l), each cell tagged with how its value is to be read.
class CountTable {
public:
    CountTable(int n_max, int m_max, int l);

    int n_max() const { return n_max_; }
    int m_max() const { return m_max_; }
    int l() const { return l_; }

    const Count& at(int n, int m) const { return cells_[checked(n, m)]; }
    Region region(int n, int m) const { return regions_[checked(n, m)]; }

    void set(int n, int m, Count value, Region r);

    bool in_range(int n, int m) const { return n >= 0 && n <= n_max_ && m >= 0 && m <= m_max_; }

    // Provenance carried into serialization.
    std::string pattern_text;
    std::string class_label;
    std::string builder;

    friend bool operator==(const CountTable& a, const CountTable& b);

private:
    std::size_t checked(int n, int m) const;

    int n_max_;
    int m_max_;
    int l_;
    std::vector<Count> cells_;
    std::vector<Region> regions_;
};

}  // namespace ballot
