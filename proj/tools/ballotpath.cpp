// Command-line front end: analyze patterns, answer count queries, emit
// tables, run the cross-method verification suite, and reproduce the
// published reference tables.
//
// Exit codes: 0 success, 1 usage or argument error, 2 verification failure.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ballotpath/closed_form.hpp"
#include "ballotpath/golden.hpp"
#include "ballotpath/methods.hpp"
#include "ballotpath/oracle.hpp"
#include "ballotpath/pattern.hpp"
#include "ballotpath/recurrence.hpp"
#include "ballotpath/table_io.hpp"
#include "ballotpath/verify.hpp"

namespace {

using namespace ballot;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

int cmd_analyze(const std::string& pattern_text) {
    Pattern p = parse_pattern(pattern_text);
    PatternProfile prof = classify(p);

    std::cout << "pattern:    " << p.str() << "\n";
    std::cout << "dimensions: a=" << prof.a << " (right), c=" << prof.c << " (up)\n";
    std::cout << "depth:      " << prof.depth << "\n";

    std::cout << "bifixes:    ";
    if (prof.bifixes.empty()) {
        std::cout << "none";
    } else {
        for (size_t i = 0; i < prof.bifixes.size(); ++i)
            std::cout << (i ? ", " : "") << prof.bifixes[i].str();
    }
    std::cout << " (index " << prof.bifix_index << ")\n";

    std::cout << "reverse:    " << reverse_pattern(p).str() << "\n";

    std::cout << "class:      " << class_name(prof.cls);
    if (prof.cls != ClassKind::unsupported) {
        std::cout << " (a=" << prof.a << ", c=" << prof.c;
        if (prof.b) std::cout << ", b=" << *prof.b << ", d=" << *prof.d;
        std::cout << ", depth=" << prof.depth << ")";
    }
    std::cout << "\n";
    if (!prof.unsupported_reason.empty())
        std::cout << "reason:     " << prof.unsupported_reason << "\n";

    std::cout << "methods:    ";
    auto names = method_names(prof, 0);
    for (size_t i = 0; i < names.size(); ++i) std::cout << (i ? "; " : "") << names[i];
    std::cout << "\n";
    return kExitOk;
}

int cmd_count(const std::string& pattern_text, int n, int m, int l, const std::string& method,
              bool cross_check) {
    Pattern p = parse_pattern(pattern_text);
    PatternProfile prof = classify(p);

    if (cross_check) {
        auto values = count_all_methods(prof, n, m, l);
        bool mismatch = false;
        for (const auto& mv : values) {
            std::cout << mv.method << ": " << mv.value << "\n";
            if (mv.value != values.front().value) mismatch = true;
        }
        if (mismatch) {
            std::cerr << "error: methods disagree on this query\n";
            return kExitVerification;
        }
        return kExitOk;
    }

    Count value = [&]() -> Count {
        if (method == "auto") return count_auto(prof, n, m, l);
        if (method == "oracle") return count_dp({p, n, m, l});
        if (method == "recurrence") return count_via_recurrence(prof, n, m, l);
        if (method == "formula") {
            auto v = count_via_formula(prof, n, m, l);
            if (!v)
                throw std::invalid_argument("no closed form covers pattern " + p.str() + " at (" +
                                            std::to_string(n) + "," + std::to_string(m) +
                                            "), l=" + std::to_string(l));
            return *v;
        }
        throw std::invalid_argument("unknown method: " + method);
    }();
    std::cout << value << "\n";
    return kExitOk;
}

int cmd_table(const std::string& pattern_text, int n_max, int m_max, int l, bool extend,
              const std::string& format_name, const std::string& method) {
    Pattern p = parse_pattern(pattern_text);
    PatternProfile prof = classify(p);
    OutputFormat format = format_from_name(format_name);

    CountTable table = [&]() -> CountTable {
        if (method == "auto") return build_table_auto(prof, l, n_max, m_max, extend);
        if (method == "oracle") {
            if (extend)
                throw std::invalid_argument(
                    "the counting engine cannot extend below the boundary; drop --extend or use "
                    "the recurrence");
            return table_from_oracle(p, l, n_max, m_max);
        }
        if (method == "recurrence") {
            if (!recurrence_applies(prof, l))
                throw std::invalid_argument("no recurrence covers pattern " + p.str() +
                                            " at l=" + std::to_string(l));
            return build_table_auto(prof, l, n_max, m_max, extend);
        }
        if (method == "formula")
            throw std::invalid_argument("tables are built by recurrence or the counting engine, "
                                        "not by closed forms; use --method auto");
        throw std::invalid_argument("unknown method: " + method);
    }();

    std::cout << render_table(table, format);
    return kExitOk;
}

int cmd_verify(int max_pattern_length, int n_max, unsigned seed) {
    VerifyOptions opts;
    opts.max_pattern_length = max_pattern_length;
    opts.n_max = n_max;
    opts.seed = seed;

    auto results = run_property_suite(opts);
    int known_issues = 0;
    for (const PropertyResult& r : results) {
        const char* status = r.known_issue ? (r.passed ? "KNOWN-ISSUE" : "FAIL")
                                           : (r.passed ? "PASS" : "FAIL");
        if (r.known_issue && r.passed) ++known_issues;
        std::cout << "[" << status << "] " << r.name << "\n";
        if (!r.detail.empty()) std::cout << "    " << r.detail << "\n";
    }
    std::cout << results.size() << " properties, " << known_issues << " known issues\n";
    return all_passed(results) ? kExitOk : kExitVerification;
}

int cmd_reproduce_paper(const std::string& format_name) {
    OutputFormat format = format_from_name(format_name);
    bool any_diff = false;
    for (const GoldenTable* g : all_golden_tables()) {
        CountTable built = build_table_for_golden(*g);
        std::cout << "== " << g->label << " ==\n";
        std::cout << render_table(built, format);
        auto diffs = diff_against_golden(built, *g);
        if (diffs.empty()) {
            std::cout << "all " << g->cells.size() << " published cells match\n\n";
        } else {
            any_diff = true;
            std::cout << diffs.size() << " cells differ:\n";
            for (const std::string& d : diffs) std::cout << "  " << d << "\n";
            std::cout << "\n";
        }
    }
    if (any_diff) {
        std::cerr << "error: rebuilt tables differ from the published cells\n";
        return kExitVerification;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counts of boundary-respecting lattice paths avoiding a step pattern"};
    app.require_subcommand(1);

    std::string pattern_text;
    int n = 0, m = 0, l = 0;
    int n_max = 8, m_max = 8;
    bool extend = false;
    bool cross_check = false;
    std::string format_name = "grid";
    std::string method = "auto";
    int verify_max_len = 6;
    int verify_n_max = 12;
    unsigned verify_seed = 0x5eedu;

    auto* analyze = app.add_subcommand("analyze", "Classify a pattern and report its parameters");
    analyze->add_option("--pattern", pattern_text, "Pattern over the letters u and r")
        ->required();

    auto* count = app.add_subcommand("count", "Count paths to one endpoint");
    count->add_option("--pattern", pattern_text, "Pattern over the letters u and r")->required();
    count->add_option("--n", n, "Right steps of the endpoint")->required()
        ->check(CLI::NonNegativeNumber);
    count->add_option("--m", m, "Up steps of the endpoint")->required()
        ->check(CLI::NonNegativeNumber);
    count->add_option("--l", l, "Boundary offset: paths stay weakly above y = x - l")
        ->check(CLI::NonNegativeNumber);
    count->add_option("--method", method, "auto, oracle, recurrence, or formula")
        ->check(CLI::IsMember({"auto", "oracle", "recurrence", "formula"}));
    count->add_flag("--verify", cross_check, "Evaluate every applicable method and compare");

    auto* table = app.add_subcommand("table", "Emit a table of counts");
    table->add_option("--pattern", pattern_text, "Pattern over the letters u and r")->required();
    table->add_option("--nmax", n_max, "Largest n")->required()->check(CLI::NonNegativeNumber);
    table->add_option("--mmax", m_max, "Largest m")->required()->check(CLI::NonNegativeNumber);
    table->add_option("--l", l, "Boundary offset")->check(CLI::NonNegativeNumber);
    table->add_flag("--extend", extend,
                    "Continue cells below the boundary by the recurrence (runs of r only)");
    table->add_option("--format", format_name, "grid, csv, or json")
        ->check(CLI::IsMember({"grid", "csv", "json"}));
    table->add_option("--method", method, "auto, oracle, or recurrence")
        ->check(CLI::IsMember({"auto", "oracle", "recurrence", "formula"}));

    auto* verify = app.add_subcommand("verify", "Run the cross-method invariant suite");
    verify->add_option("--max-pattern-length", verify_max_len,
                       "Random-corpus pattern length cap")
        ->check(CLI::PositiveNumber);
    verify->add_option("--nmax", verify_n_max, "Agreement and reversal extent")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_seed, "Random-corpus seed");

    auto* reproduce = app.add_subcommand(
        "reproduce-paper", "Rebuild the published reference tables and diff them");
    reproduce->add_option("--format", format_name, "grid, csv, or json")
        ->check(CLI::IsMember({"grid", "csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(pattern_text);
        if (app.got_subcommand(count)) return cmd_count(pattern_text, n, m, l, method, cross_check);
        if (app.got_subcommand(table))
            return cmd_table(pattern_text, n_max, m_max, l, extend, format_name, method);
        if (app.got_subcommand(verify))
            return cmd_verify(verify_max_len, verify_n_max, verify_seed);
        if (app.got_subcommand(reproduce)) return cmd_reproduce_paper(format_name);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
