#include "ballotpath/recurrence.hpp"

#include <stdexcept>
#include <string>

#include "ballotpath/oracle.hpp"

namespace ballot {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

// Plain binomial on small non-negative ints, for the lemma coefficients.
Count binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Count r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - i + 1;
        r /= i;
    }
    return r;
}

}  // namespace

CountTable table_ra(int a, int l, int n_max, int m_max, bool extend) {
    require(a >= 2, "table_ra: run length must be at least 2");
    require(l >= 0, "table_ra: offset must be non-negative");
    require(n_max >= 0 && m_max >= 0, "table_ra: extents must be non-negative");
    if (extend)
        require(n_max <= m_max + l,
                "table_ra: extension needs n_max <= m_max + l so every column "
                "starts at an in-region cell");

    CountTable t(n_max, m_max, l);
    t.pattern_text = std::string(static_cast<size_t>(a), 'r');
    t.class_label = class_name(ClassKind::pure_right);
    t.builder = "recurrence";

    // In-region term lookup: below y = x - l or off the grid counts as 0.
    auto cell = [&](int n, int m) -> Count {
        if (n < 0 || m < 0) return 0;
        if (m < n - l) return 0;
        return t.at(n, m);
    };

    // Row m = 0: a path along the axis exists while it stays in the region
    // and the run of r steps stays shorter than a.
    for (int n = 0; n <= n_max; ++n) {
        if (n <= l && n <= a - 1)
            t.set(n, 0, 1, Region::path_count);
        else if (n <= l)
            t.set(n, 0, 0, Region::path_count);
        else
            t.set(n, 0, 0, Region::forced_zero);
    }

    for (int m = 1; m <= m_max; ++m) {
        for (int n = 0; n <= n_max; ++n) {
            if (m < n - l) {
                t.set(n, m, 0, Region::forced_zero);
                continue;
            }
            Count v = cell(n - 1, m) + cell(n, m - 1) - cell(n - a, m - 1);
            t.set(n, m, v, Region::path_count);
        }
    }

    if (extend) {
        // Rearranged recurrence walks each column downward past the boundary:
        //   s_n(m-1) = s_n(m) - s_{n-1}(m) + s_{n-a}(m-1).
        // Columns left to right so the s_{n-a} reference is already extended.
        auto any_cell = [&](int n, int m) -> Count {
            if (n < 0 || m < 0) return 0;
            return t.at(n, m);
        };
        for (int n = 0; n <= n_max; ++n) {
            for (int m = n - l - 1; m >= 0; --m) {
                Count v = any_cell(n, m + 1) - any_cell(n - 1, m + 1) + any_cell(n - a, m);
                t.set(n, m, v, Region::extension);
            }
        }
    }

    return t;
}

namespace {

CountTable table_depth0(const PatternProfile& prof, int n_max, int m_max) {
    const long long a = prof.a;
    const long long c = prof.c;

    CountTable t(n_max, m_max, 0);
    t.pattern_text = prof.pattern.str();
    t.class_label = class_name(prof.cls);
    t.builder = "recurrence";

    auto cell = [&](long long n, long long m) -> Count {
        if (n < 0 || m < 0) return 0;
        if (m < n) return 0;
        return t.at(static_cast<int>(n), static_cast<int>(m));
    };

    // Correction for one path-count cell.
    auto correction = [&](long long n, long long m) -> Count {
        if (prof.cls == ClassKind::bifix_free_depth0) return cell(n - a, m - c);
        const long long b = *prof.b;
        const long long d = *prof.d;
        Count sum = 0;
        for (long long i = 0;; ++i) {
            long long nn = n - a - b * i;
            long long mm = m - c - d * i;
            if (nn < 0 || mm < 0) break;
            Count term = cell(nn, mm);
            if (i % 2 == 0)
                sum += term;
            else
                sum -= term;
        }
        return sum;
    };

    for (int m = 0; m <= m_max; ++m) {
        for (int n = 0; n <= n_max; ++n) {
            if (m < n) {
                t.set(n, m, 0, Region::forced_zero);
                continue;
            }
            if (n == 0 && m == 0) {
                t.set(0, 0, 1, Region::path_count);
                continue;
            }
            Count v = cell(n - 1, m) + cell(n, m - 1) - correction(n, m);
            t.set(n, m, v, Region::path_count);
        }
    }

    return t;
}

}  // namespace

CountTable table_bifix_free(const PatternProfile& prof, int n_max, int m_max) {
    require(prof.cls == ClassKind::bifix_free_depth0,
            "table_bifix_free: pattern is not bifix-free with depth 0");
    return table_depth0(prof, n_max, m_max);
}

CountTable table_bifix1(const PatternProfile& prof, int n_max, int m_max) {
    require(prof.cls == ClassKind::bifix_index1_depth0,
            "table_bifix1: pattern does not have one bifix with depth 0");
    return table_depth0(prof, n_max, m_max);
}

CountTable table_depth_positive(const PatternProfile& prof, int n_max, int m_max) {
    require(prof.cls == ClassKind::depth_positive,
            "table_depth_positive: pattern class has no two-region recurrence");
    const long long a = prof.a;
    const long long c = prof.c;
    const int delta = prof.depth;

    CountTable t(n_max, m_max, 0);
    t.pattern_text = prof.pattern.str();
    t.class_label = class_name(prof.cls);
    t.builder = "recurrence";

    auto cell = [&](long long n, long long m) -> Count {
        if (n < 0 || m < 0) return 0;
        if (m < n) return 0;
        return t.at(static_cast<int>(n), static_cast<int>(m));
    };

    auto correction = [&](long long n, long long m) -> Count {
        if (prof.bifix_index == 0) return cell(n - a, m - c);
        const long long b = *prof.b;
        const long long d = *prof.d;
        Count sum = 0;
        for (long long i = 0;; ++i) {
            long long nn = n - a - b * i;
            long long mm = m - c - d * i;
            if (nn < 0 || mm < 0) break;
            Count term = cell(nn, mm);
            if (i % 2 == 0)
                sum += term;
            else
                sum -= term;
        }
        return sum;
    };

    for (int m = 0; m <= m_max; ++m) {
        for (int n = 0; n <= n_max; ++n) {
            if (m < n) {
                t.set(n, m, 0, Region::forced_zero);
                continue;
            }
            if (n == 0 && m == 0) {
                t.set(0, 0, 1, Region::path_count);
                continue;
            }
            Count v = cell(n - 1, m) + cell(n, m - 1);
            if (m >= n + delta) v -= correction(n, m);
            t.set(n, m, v, Region::path_count);
        }
    }

    return t;
}

CountTable table_from_oracle(const Pattern& p, int l, int n_max, int m_max) {
    CountGrid grid = dp_grid(p, l, n_max, m_max);
    PatternProfile prof = classify(p);

    CountTable t(n_max, m_max, l);
    t.pattern_text = p.str();
    t.class_label = class_name(prof.cls);
    t.builder = "oracle";

    for (int m = 0; m <= m_max; ++m)
        for (int n = 0; n <= n_max; ++n) {
            if (m < n - l)
                t.set(n, m, 0, Region::forced_zero);
            else
                t.set(n, m, grid.at(n, m), Region::path_count);
        }

    return t;
}

bool check_initial_value_lemma(const CountTable& table, int depth, int n, int j) {
    require(depth >= 1, "check_initial_value_lemma: depth must be at least 1");
    require(j >= 0 && j <= depth, "check_initial_value_lemma: need 0 <= j <= depth");
    require(n >= 1, "check_initial_value_lemma: need n >= 1");

    auto cell = [&](int nn, int mm) -> Count {
        if (nn < 0 || mm < nn) return 0;
        return table.at(nn, mm);
    };

    Count rhs = 0;
    for (int i = 1; i <= j / 2; ++i) {
        Count term = binom(j - i, i) * cell(n - i, n - i + j - 1);
        if (i % 2 == 1)
            rhs += term;
        else
            rhs -= term;
    }
    for (int i = 1; i <= (j + 1) / 2; ++i) {
        Count term = binom(j - i, i - 1) * cell(n - i, n - i + j);
        if (i % 2 == 1)
            rhs += term;
        else
            rhs -= term;
    }

    return cell(n, n + j - 1) == rhs;
}

Count near_diagonal_expansion(const CountTable& table, int depth, int n, int j) {
    require(depth >= 1, "near_diagonal_expansion: depth must be at least 1");
    require(j >= 0 && j <= depth - 1, "near_diagonal_expansion: need 0 <= j <= depth-1");

    auto cell = [&](int nn, int mm) -> Count {
        if (nn < 0 || mm < nn) return 0;
        return table.at(nn, mm);
    };

    Count sum = 0;
    for (int i = 0; i <= j / 2; ++i) {
        Count term = binom(j - i, i) * cell(n - i, n - i + depth - 1);
        if (i % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    for (int i = 1; i <= (j + 1) / 2; ++i) {
        Count term = binom(j - i, i - 1) * cell(n - i, n - i + depth);
        if (i % 2 == 0)
            sum += term;
        else
            sum -= term;
    }

    return sum;
}

}  // namespace ballot
