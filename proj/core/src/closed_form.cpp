#include "ballotpath/closed_form.hpp"

#include <stdexcept>
#include <string>

namespace ballot {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Evaluation argument of a term whose denominator may vanish.  Terms whose
// x-independent binomial factor is zero are dropped before this check; a
// surviving zero denominator means the sum is genuinely singular there.
Rational term_ratio(const Count& numerator, long long denominator, const char* what) {
    if (denominator == 0)
        throw std::domain_error(std::string(what) + ": denominator vanishes at this argument");
    Rational q(numerator);
    q /= denominator;
    return q;
}

void check_class(const PatternProfile& prof, ClassKind expected, const char* what) {
    if (prof.cls != expected)
        throw std::invalid_argument(std::string(what) + ": pattern " + prof.pattern.str() +
                                    " is classified " + std::string(class_name(prof.cls)) +
                                    ", need " + std::string(class_name(expected)));
}

}  // namespace

Count gbinom(long long x, long long k) {
    if (k < 0) return 0;
    Count result = 1;
    for (long long i = 0; i < k; ++i) {
        result *= Count(x - i);
        result /= (i + 1);  // exact: partial products are binomials of integers
    }
    return result;
}

Count multinomial3(long long n, long long j, long long k, long long l) {
    if (j < 0 || k < 0 || l < 0 || n - j - k - l < 0) return 0;
    return gbinom(n, j) * gbinom(n - j, k) * gbinom(n - j - k, l);
}

Count geometric_coefficient(long long x, long long n, int a) {
    require(a >= 1, "geometric_coefficient: a must be >= 1");
    if (n < 0) return 0;
    Count total = 0;
    for (long long i = 0; a * i <= n; ++i) {
        Count term = gbinom(x, i) * gbinom(x + n - a * i - 1, n - a * i);
        if (i % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

Count ra_diagonal(int a, int n) {
    require(a >= 2, "ra_diagonal: a must be >= 2");
    require(n >= 0, "ra_diagonal: n must be >= 0");
    Rational q(geometric_coefficient(n + 1, n, a));
    q /= (n + 1);
    return to_count(q, "ra_diagonal");
}

Count ra_boundary(int a, int l, int n) {
    require(a >= 2, "ra_boundary: a must be >= 2");
    require(l >= 0 && n >= 0, "ra_boundary: l and n must be >= 0");
    Rational total = 0;
    for (int k = 0; k <= l; ++k) {
        Count num = geometric_coefficient(k - l, k, a) * geometric_coefficient(n + l + 1 - k, n + l - k, a);
        total += term_ratio(num, n + l + 1 - k, "ra_boundary");
    }
    return to_count(total, "ra_boundary");
}

Count uc_count(int c, int n, int m) {
    require(c >= 1, "uc_count: c must be >= 1");
    require(n >= 0 && m >= n, "uc_count: need m >= n >= 0");
    Rational total = 0;
    for (int k = 0; k <= m - n; ++k) {
        Count num = geometric_coefficient(k - m + n, k, c) * geometric_coefficient(m + 1 - k, m - k, c);
        total += term_ratio(num, m + 1 - k, "uc_count");
    }
    return to_count(total, "uc_count");
}

Count bifixfree_basic(const PatternProfile& prof, int n, long long x) {
    check_class(prof, ClassKind::bifix_free_depth0, "bifixfree_basic");
    require(n >= 0, "bifixfree_basic: n must be >= 0");
    if (n == 0) return 1;
    const long long a = prof.a, c = prof.c;
    Rational total = 0;
    for (long long i = 0; (a - 1) * i <= n; ++i) {
        Count head = gbinom(n - (a - 1) * i, i);
        if (head == 0) continue;  // identically-zero term, drop before dividing
        Count num = head * gbinom(x + n - (a + c - 1) * i - 1, n - (a - 1) * i);
        Rational term = term_ratio(num, x - c * i, "bifixfree_basic");
        if (i % 2 == 0)
            total += term;
        else
            total -= term;
    }
    total *= x;
    return to_count(total, "bifixfree_basic");
}

Count bifixfree_s(const PatternProfile& prof, int n, long long x) {
    check_class(prof, ClassKind::bifix_free_depth0, "bifixfree_s");
    require(n >= 0, "bifixfree_s: n must be >= 0");
    if (n == 0) return 1;
    const long long a = prof.a, c = prof.c;
    Rational total = 0;
    for (long long i = 0; (a - 1) * i <= n; ++i) {
        Count head = gbinom(n - (a - 1) * i, i);
        if (head == 0) continue;
        Count num = head * gbinom(x + n - (a + c - 1) * i, n - (a - 1) * i);
        Rational term = term_ratio(num, x - c * i + 1, "bifixfree_s");
        if (i % 2 == 0)
            total += term;
        else
            total -= term;
    }
    total *= (x - n + 1);
    return to_count(total, "bifixfree_s");
}

namespace {

// Triple-sum basic sequence shared by bifix1_basic and the depth-2 worked
// expansion, parameterized on the dimensions (a, c) of the pattern and
// (b, d) of its complement piece.
Count bifix1_basic_impl(long long a, long long c, long long b, long long d, int n, long long x) {
    if (n == 0) return 1;
    Rational total = 0;
    for (long long j = 0; (a - 1) * j <= n - 1; ++j) {
        const long long budget = n - 1 - (a - 1) * j;
        for (long long k = 0; b * k <= budget; ++k) {
            for (long long l = 0; k + l <= budget / b; ++l) {
                const long long head = n - (a - 1) * j - b * k - (b - 1) * l;
                Count mult = multinomial3(head, j, k, l);
                if (mult == 0) continue;
                Count num = mult * gbinom(x + n - (a + c - 1) * j - (b + d) * (k + l) - 1,
                                          n - (a - 1) * j - b * (k + l) - 1);
                Rational term = term_ratio(num, head, "bifix1_basic");
                if ((j + l) % 2 == 0)
                    total += term;
                else
                    total -= term;
            }
        }
    }
    total *= x;
    return to_count(total, "bifix1_basic");
}

}  // namespace

Count bifix1_basic(const PatternProfile& prof, int n, long long x) {
    check_class(prof, ClassKind::bifix_index1_depth0, "bifix1_basic");
    require(n >= 0, "bifix1_basic: n must be >= 0");
    return bifix1_basic_impl(prof.a, prof.c, *prof.b, *prof.d, n, x);
}

Count bifix1_s(const PatternProfile& prof, int n, long long x) {
    check_class(prof, ClassKind::bifix_index1_depth0, "bifix1_s");
    require(n >= 0, "bifix1_s: n must be >= 0");
    if (n == 0) return 1;
    if (x == -1) throw std::domain_error("bifix1_s: undefined at x = -1");
    Rational total(bifix1_basic(prof, n, x + 1));
    total *= (x - n + 1);
    total /= (x + 1);
    return to_count(total, "bifix1_s");
}

RprSpecialResult rpr_special_s(const PatternProfile& prof, int n, long long x) {
    check_class(prof, ClassKind::bifix_index1_depth0, "rpr_special_s");
    require(prof.a == *prof.b + 1 && prof.c == *prof.d,
            "rpr_special_s: needs the shape r p' r (a = b+1, c = d)");
    require(n >= 0, "rpr_special_s: n must be >= 0");
    const long long b = *prof.b, d = *prof.d;

    RprSpecialResult out;
    out.raw = 0;
    if (n == 0) {
        out.raw = 1;
    } else {
        for (long long i = 0; b * i <= n; ++i) {
            Count head = gbinom(n - (b - 1) * i - 1, i);
            if (head == 0) continue;
            Count num = head * gbinom(x + n - (d + b + 1) * i, n - b * i);
            Rational term = term_ratio(num, x - d * i + 1, "rpr_special_s");
            if (i % 2 == 0)
                out.raw += term;
            else
                out.raw -= term;
        }
    }
    out.validated = bifix1_s(prof, n, x);
    out.agrees = is_integral(out.raw) && boost::multiprecision::numerator(out.raw) == out.validated;
    return out;
}

Count ruuu_count(int n, int j) {
    require(n >= 0 && j >= 0, "ruuu_count: need n, j >= 0");
    if (j == 0) return n == 0 ? Count(1) : ruuu_count(n - 1, 1);
    Count total = geometric_coefficient(n, n, 3) + geometric_coefficient(n, n - j, 3);
    for (int i = 1; i <= j - 1; ++i) total += 2 * geometric_coefficient(n, n - i, 3);
    return total;
}

Count uuur_count(int n, int j) {
    require(n >= 0 && j >= 0, "uuur_count: need n, j >= 0");
    Rational total = 0;
    for (int i = 0; i <= j; ++i) {
        for (int k = 0; k <= i + 1; ++k) {
            Count num = geometric_coefficient(k - i - 1, k, 3) *
                        geometric_coefficient(n + i + 1 - k, n + i - k, 3);
            if (num == 0) continue;  // identically-zero term, drop before dividing
            total += term_ratio(num, n + i + 1 - k, "uuur_count");
        }
    }
    return to_count(total, "uuur_count");
}

Count uuru_count_direct(int n, int j) {
    require(n >= 0 && j >= 0, "uuru_count_direct: need n, j >= 0");
    Rational total = 0;
    for (int k = 0; k <= n; ++k) {
        Count outer = gbinom(j - 1, n - k);
        if (outer == 0) continue;
        Rational inner = 0;
        for (int i = 0; 2 * i <= k; ++i) {
            Count head = gbinom(2 * i - k - 1, i);
            if (head == 0) continue;
            Count num = head * (Count(j) * gbinom(2 * k + j - 3 * i, k - 2 * i - 1) +
                                gbinom(2 * k + j - 3 * i, k - 2 * i));
            inner += term_ratio(num, k + 1 - 2 * i, "uuru_count");
        }
        Rational contribution = Rational(outer) * inner;
        if ((n - k) % 2 == 0)
            total += contribution;
        else
            total -= contribution;
    }
    return to_count(total, "uuru_count");
}

Count uuru_count(int n, int j) {
    require(n >= 0 && j >= 0, "uuru_count: need n, j >= 0");
    if (j == 0) return n == 0 ? Count(1) : uuru_count_direct(n - 1, 1);
    return uuru_count_direct(n, j);
}

Count depth2_example_s(int n, int x) {
    require(n >= 0, "depth2_example_s: n must be >= 0");
    require(x >= 1, "depth2_example_s: valid for x >= 1 only");
    // The basic sequence underneath has the dimensions of rrruuurrruu,
    // (a, c) = (6, 5), with bifix piece dimensions (b, d) = (3, 3).
    Rational total = Count(1) << n;  // 2^n
    for (int j = 1; j <= n; ++j) {
        for (int i = 0; i <= n - j; ++i) {
            Count outer = gbinom(n - j, i);
            if (outer == 0) continue;
            Count num = outer * (x + i - 1) * bifix1_basic_impl(6, 5, 3, 3, j, j + x + i - 1);
            total += term_ratio(num, j + x + i - 1, "depth2_example_s");
        }
    }
    return to_count(total, "depth2_example_s");
}

}  // namespace ballot
