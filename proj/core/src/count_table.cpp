#include "ballotpath/count_table.hpp"

#include <stdexcept>

namespace ballot {

std::string_view region_name(Region r) {
    switch (r) {
        case Region::path_count: return "path_count";
        case Region::extension: return "extension";
        case Region::forced_zero: return "forced_zero";
    }
    return "forced_zero";
}

Region region_from_name(std::string_view name) {
    if (name == "path_count") return Region::path_count;
    if (name == "extension") return Region::extension;
    if (name == "forced_zero") return Region::forced_zero;
    throw std::invalid_argument("unknown region tag: " + std::string(name));
}

CountTable::CountTable(int n_max, int m_max, int l) : n_max_(n_max), m_max_(m_max), l_(l) {
    if (n_max < 0 || m_max < 0) throw std::invalid_argument("table extents must be >= 0");
    if (l < 0) throw std::invalid_argument("boundary offset l must be >= 0");
    const std::size_t total = static_cast<std::size_t>(n_max + 1) * (m_max + 1);
    cells_.assign(total, Count(0));
    regions_.assign(total, Region::forced_zero);
}

std::size_t CountTable::checked(int n, int m) const {
    if (!in_range(n, m))
        throw std::out_of_range("cell (" + std::to_string(n) + ", " + std::to_string(m) +
                                ") outside table extents");
    return static_cast<std::size_t>(m) * (n_max_ + 1) + n;
}

void CountTable::set(int n, int m, Count value, Region r) {
    const std::size_t i = checked(n, m);
    cells_[i] = std::move(value);
    regions_[i] = r;
}

bool operator==(const CountTable& a, const CountTable& b) {
    return a.n_max_ == b.n_max_ && a.m_max_ == b.m_max_ && a.l_ == b.l_ && a.cells_ == b.cells_ &&
           a.regions_ == b.regions_ && a.pattern_text == b.pattern_text && a.class_label == b.class_label &&
           a.builder == b.builder;
}

}  // namespace ballot
