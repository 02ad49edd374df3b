#include "ballotpath/methods.hpp"

#include <stdexcept>

#include "ballotpath/closed_form.hpp"
#include "ballotpath/oracle.hpp"
#include "ballotpath/recurrence.hpp"

namespace ballot {

namespace {

const std::string kDepth2Worked = "rrruuurrruu";

}  // namespace

std::optional<FormulaChoice> formula_for(const PatternProfile& prof, int n, int m, int l) {
    switch (prof.cls) {
        case ClassKind::pure_right:
            // Boundary line m = n - l only; interior cells are table territory.
            if (prof.a >= 2 && m == n - l) return FormulaChoice{"ra_boundary"};
            return std::nullopt;
        case ClassKind::pure_up:
            if (l == 0 && m >= n) return FormulaChoice{"uc_count"};
            return std::nullopt;
        case ClassKind::bifix_free_depth0:
            if (l == 0 && m >= n) return FormulaChoice{"bifixfree_s"};
            return std::nullopt;
        case ClassKind::bifix_index1_depth0:
            if (l == 0 && m >= n) return FormulaChoice{"bifix1_s"};
            return std::nullopt;
        case ClassKind::depth_positive:
            if (prof.pattern.str() == kDepth2Worked && l == 0 && m >= n + 1)
                return FormulaChoice{"depth2_example_s"};
            return std::nullopt;
        case ClassKind::length4_special:
            if (l != 0 || m < n) return std::nullopt;
            switch (*prof.special) {
                case Length4::uuur: return FormulaChoice{"uuur_count"};
                case Length4::uuru:
                case Length4::uruu: return FormulaChoice{"uuru_count"};
                case Length4::ruuu: return FormulaChoice{"ruuu_count"};
            }
            return std::nullopt;
        case ClassKind::unsupported: return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Count> count_via_formula(const PatternProfile& prof, int n, int m, int l) {
    auto choice = formula_for(prof, n, m, l);
    if (!choice) return std::nullopt;
    if (choice->name == "ra_boundary") return ra_boundary(prof.a, l, m);
    if (choice->name == "uc_count") return uc_count(prof.c, n, m);
    if (choice->name == "bifixfree_s") return bifixfree_s(prof, n, m);
    if (choice->name == "bifix1_s") return bifix1_s(prof, n, m);
    if (choice->name == "depth2_example_s") return depth2_example_s(n, m - n);
    if (choice->name == "uuur_count") return uuur_count(n, m - n);
    if (choice->name == "uuru_count") return uuru_count(n, m - n);
    if (choice->name == "ruuu_count") return ruuu_count(n, m - n);
    throw std::logic_error("formula_for returned an unknown evaluator");
}

bool recurrence_applies(const PatternProfile& prof, int l) {
    switch (prof.cls) {
        case ClassKind::pure_right: return prof.a >= 2;
        case ClassKind::bifix_free_depth0:
        case ClassKind::bifix_index1_depth0:
        case ClassKind::depth_positive: return l == 0;
        default: return false;
    }
}

Count count_via_recurrence(const PatternProfile& prof, int n, int m, int l) {
    if (!recurrence_applies(prof, l))
        throw std::invalid_argument("no recurrence covers pattern " + prof.pattern.str() +
                                    " at l=" + std::to_string(l));
    CountTable t = [&] {
        switch (prof.cls) {
            case ClassKind::pure_right: return table_ra(prof.a, l, n, m, false);
            case ClassKind::bifix_free_depth0: return table_bifix_free(prof, n, m);
            case ClassKind::bifix_index1_depth0: return table_bifix1(prof, n, m);
            default: return table_depth_positive(prof, n, m);
        }
    }();
    return t.at(n, m);
}

Count count_via_dp(const Pattern& p, int n, int m, int l) {
    return count_dp({p, n, m, l});
}

Count count_auto(const PatternProfile& prof, int n, int m, int l) {
    try {
        if (auto v = count_via_formula(prof, n, m, l)) return *v;
    } catch (const NonIntegralError&) {
        throw;  // a formula bug, not a rejected argument: surface it
    } catch (const std::domain_error&) {
        // Formula rejected the point; fall through to a table or the DP.
    }
    if (recurrence_applies(prof, l)) return count_via_recurrence(prof, n, m, l);
    return count_via_dp(prof.pattern, n, m, l);
}

std::vector<MethodValue> count_all_methods(const PatternProfile& prof, int n, int m, int l) {
    std::vector<MethodValue> out;
    try {
        if (auto v = count_via_formula(prof, n, m, l))
            out.push_back({"formula", *v});
    } catch (const NonIntegralError&) {
        throw;
    } catch (const std::domain_error&) {
        // Point outside the formula's domain: nothing to cross-check.
    }
    if (recurrence_applies(prof, l))
        out.push_back({"recurrence", count_via_recurrence(prof, n, m, l)});
    out.push_back({"dp", count_via_dp(prof.pattern, n, m, l)});
    return out;
}

CountTable build_table_auto(const PatternProfile& prof, int l, int n_max, int m_max,
                            bool extend) {
    if (extend && prof.cls != ClassKind::pure_right)
        throw std::invalid_argument("extension below the boundary is only defined for runs of r");
    if (recurrence_applies(prof, l)) {
        switch (prof.cls) {
            case ClassKind::pure_right: return table_ra(prof.a, l, n_max, m_max, extend);
            case ClassKind::bifix_free_depth0: return table_bifix_free(prof, n_max, m_max);
            case ClassKind::bifix_index1_depth0: return table_bifix1(prof, n_max, m_max);
            default: return table_depth_positive(prof, n_max, m_max);
        }
    }
    return table_from_oracle(prof.pattern, l, n_max, m_max);
}

std::vector<std::string> method_names(const PatternProfile& prof, int l) {
    std::vector<std::string> names;
    // Which formula (if any) serves part of the grid; probe the generic
    // conditions with a representative in-domain point.
    switch (prof.cls) {
        case ClassKind::pure_right:
            if (prof.a >= 2) names.push_back("formula ra_boundary (on the line m = n - l)");
            break;
        case ClassKind::pure_up:
            if (l == 0) names.push_back("formula uc_count (m >= n)");
            break;
        case ClassKind::bifix_free_depth0:
            if (l == 0) names.push_back("formula bifixfree_s (m >= n)");
            break;
        case ClassKind::bifix_index1_depth0:
            if (l == 0) names.push_back("formula bifix1_s (m >= n)");
            break;
        case ClassKind::depth_positive:
            if (l == 0 && prof.pattern.str() == kDepth2Worked)
                names.push_back("formula depth2_example_s (m > n)");
            break;
        case ClassKind::length4_special:
            if (l == 0) {
                switch (*prof.special) {
                    case Length4::uuur: names.push_back("formula uuur_count (m >= n)"); break;
                    case Length4::uuru:
                    case Length4::uruu: names.push_back("formula uuru_count (m >= n)"); break;
                    case Length4::ruuu: names.push_back("formula ruuu_count (m >= n)"); break;
                }
            }
            break;
        case ClassKind::unsupported: break;
    }
    if (recurrence_applies(prof, l)) names.push_back("recurrence table");
    names.push_back("automaton dp");
    return names;
}

}  // namespace ballot
