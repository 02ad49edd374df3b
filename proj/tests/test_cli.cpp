// Drives the installed-style binary end to end through a shell pipe; the
// path comes in from the build system.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int exit_code;
    std::string output;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(BALLOTPATH_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("count answers the documented queries") {
    CliResult r = run_cli("count --pattern rrrr --n 9 --m 4 --l 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "112\n");

    r = run_cli("count --pattern urruurr --n 8 --m 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1236\n");

    r = run_cli("count --pattern uuuu --n 2 --m 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "6\n");

    r = run_cli("count --pattern ruur --n 3 --m 4 --method oracle");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "9\n");
}

TEST_CASE("count --verify prints one value per method and agrees") {
    CliResult r = run_cli("count --pattern uuuu --n 2 --m 7 --verify");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "formula: 6"));
    CHECK(contains(r.output, "dp: 6"));

    r = run_cli("count --pattern urruurr --n 8 --m 8 --verify");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "formula: 1236"));
    CHECK(contains(r.output, "recurrence: 1236"));
    CHECK(contains(r.output, "dp: 1236"));
}

TEST_CASE("count --method formula fails cleanly off the formula's domain") {
    CliResult r = run_cli("count --pattern rrrr --n 2 --m 5 --l 5 --method formula");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "no closed form"));
}

TEST_CASE("analyze reports the classification") {
    CliResult r = run_cli("analyze --pattern urruurr");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "a=4"));
    CHECK(contains(r.output, "c=3"));
    CHECK(contains(r.output, "bifixes:    urr"));
    CHECK(contains(r.output, "reverse:    uurruur"));
    CHECK(contains(r.output, "bifix_index1_depth0"));
    CHECK(contains(r.output, "bifix1_s"));

    r = run_cli("analyze --pattern uruuru");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "unsupported"));
    CHECK(contains(r.output, "reason:"));
    CHECK(contains(r.output, "automaton dp"));

    r = run_cli("analyze --pattern rrruuurrruu");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "depth_positive"));
    CHECK(contains(r.output, "depth:      2"));
    CHECK(contains(r.output, "rrruu"));
}

TEST_CASE("table renders in all formats") {
    CliResult r = run_cli("table --pattern rrrr --nmax 9 --mmax 4 --l 5 --extend --format csv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "n,m,value,region"));
    CHECK(contains(r.output, "9,4,112,path_count"));
    CHECK(contains(r.output, "9,0,-11,extension"));

    r = run_cli("table --pattern urruurr --nmax 4 --mmax 4 --format json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"pattern\": \"urruurr\""));
    CHECK(contains(r.output, "\"value\": \"13\""));

    r = run_cli("table --pattern urruurr --nmax 4 --mmax 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "pattern urruurr"));
    CHECK(contains(r.output, "13"));

    r = run_cli("table --pattern ruur --nmax 4 --mmax 4 --method oracle");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "builder=oracle"));
}

TEST_CASE("table rejects impossible requests") {
    CliResult r = run_cli("table --pattern uuuu --nmax 3 --mmax 3 --extend");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "error:"));

    r = run_cli("table --pattern ruur --nmax 3 --mmax 3 --method recurrence");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "no recurrence"));

    r = run_cli("table --pattern rrrr --nmax 3 --mmax 3 --method formula");
    CHECK(r.exit_code == 1);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("count --pattern xyz --n 1 --m 1").exit_code == 1);
    CHECK(run_cli("count --pattern rrrr --n -2 --m 1").exit_code == 1);
    CHECK(run_cli("count --pattern rrrr").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("table --help").exit_code == 0);
}

TEST_CASE("verify runs the reduced suite and reports known issues") {
    CliResult r = run_cli("verify --max-pattern-length 4 --nmax 8 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "[PASS]"));
    CHECK(contains(r.output, "[KNOWN-ISSUE]"));
    CHECK(contains(r.output, "2 known issues"));
    CHECK_FALSE(contains(r.output, "[FAIL]"));
}

TEST_CASE("reproduce-paper rebuilds and diffs every reference table") {
    CliResult r = run_cli("reproduce-paper");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "avoid rrrr, boundary l=5"));
    CHECK(contains(r.output, "avoid uuuu, boundary l=0"));
    CHECK(contains(r.output, "avoid urruurr, boundary l=0"));
    CHECK(contains(r.output, "avoid rrruuurrruu, boundary l=0"));
    CHECK(contains(r.output, "published cells match"));
    CHECK_FALSE(contains(r.output, "differ"));

    r = run_cli("reproduce-paper --format csv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "9,4,112,path_count"));
    CHECK(contains(r.output, "10,11,58567,path_count"));
}
