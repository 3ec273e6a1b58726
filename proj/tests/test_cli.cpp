#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI with stderr folded into the captured stream so usage errors
// stay visible; the exit code is the real object under test.
RunResult run(const std::string& args) {
    const std::string cmd = std::string(ORTHOCHROMA_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("colour lookups") {
    auto r = run("color --mode three 3/5 4/5 0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"colour\":\"red\""));

    r = run("color --mode valuation --p 3 -- 9 3 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"colour\":\"black\""));

    r = run("color --mode four 0.3 -0.4 0.87");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"colour\":\"blue\""));

    r = run("color --mode four --format text -- -1 0 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "red\n");

    // floats are only legal through the sign front-end
    CHECK(run("color --mode three 0.6 0.8 0").exit_code == 2);
    // two components is a usage error
    CHECK(run("color --mode three 1 0").exit_code == 2);
    // direction without a rational unit vector
    CHECK(run("color --mode three 1 1 0").exit_code == 1);
}

TEST_CASE("gen output is canonical") {
    const auto r = run("gen --H 1 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "# gen mode=quadruple H=1 seed=0\n"
          "(-1,0,0;1) red\n"
          "(0,-1,0;1) white\n"
          "(0,0,-1;1) black\n"
          "(0,0,1;1) black\n"
          "(0,1,0;1) white\n"
          "(1,0,0;1) red\n");

    // byte determinism of the JSON stream
    const auto a = run("gen --H 6 --seed 3"), b = run("gen --H 6 --seed 3");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "\"seed\":3"));

    CHECK(run("gen --mode nowhere").exit_code == 2);
    CHECK(run("gen --H 0").exit_code == 2);
}

TEST_CASE("verify aggregates the suites") {
    const auto r = run("verify --H 20 --format text");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "numtheory: pass"));
    CHECK(contains(r.out, "graphs: pass"));
    CHECK(contains(r.out, "all suites pass"));
}

TEST_CASE("graph and chromatic work together through files") {
    const std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
    const std::string path = dir + "/orthochroma_cli_axes.json";
    const auto w = run("graph --H 1 --out " + path);
    CHECK(w.exit_code == 0);
    CHECK(w.out.empty());

    const auto c = run("chromatic --in " + path + " --format text");
    CHECK(c.exit_code == 0);
    CHECK(contains(c.out, "chi = 3"));
    std::remove(path.c_str());

    const auto d = run("graph --H 1 --format dimacs");
    CHECK(d.exit_code == 0);
    CHECK(contains(d.out, "p edge 6 12\n"));
    CHECK(contains(d.out, "c v 6 (1,0,0;1)\n"));

    // above the cap the error still carries both bounds
    const auto big = run("chromatic --H 9");
    CHECK(big.exit_code == 1);
    CHECK(contains(big.out, "\"clique_lower\":3"));
    CHECK(contains(big.out, "\"greedy_upper\""));

    CHECK(run("chromatic --in /nonexistent.json").exit_code == 2);
}

TEST_CASE("orbit and circle report the frozen facts") {
    const auto o = run("orbit --N 5 --format text");
    CHECK(o.exit_code == 0);
    CHECK(contains(o.out, "(-117,44,0;125) red\n"));
    CHECK(contains(o.out, "monochromatic"));

    const auto c = run("circle --u 1,0,0,1 --v 3,4,0,5 --H 40");
    CHECK(c.exit_code == 0);
    CHECK(contains(c.out, "\"dichotomy_holds\":true"));
    CHECK(contains(c.out, "\"same_colour_case\":true"));

    CHECK(run("circle --u 1,0,0,1 --v -1,0,0,1").exit_code == 2);  // antipodal
    CHECK(run("circle --u 1,0,0 --v 0,1,0,1").exit_code == 2);     // malformed
}

TEST_CASE("claims and table") {
    const auto c = run("claims");
    CHECK(c.exit_code == 0);
    CHECK(contains(c.out, "\"all_pass\":true"));
    CHECK(contains(c.out, "12, not 0"));

    const auto t = run("table");
    CHECK(t.exit_code == 0);
    CHECK(contains(t.out, "\"pairs_checked\":676"));
    CHECK(contains(t.out, "\"+00\":\"red\""));
}

TEST_CASE("search echoes its seed deterministically") {
    const auto a = run("search --budget 4 --seed 11 --subset-size 8");
    const auto b = run("search --budget 4 --seed 11 --subset-size 8");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "\"seed\":11"));

    const auto z = run("search --seed 11");
    CHECK(z.exit_code == 0);
    CHECK(contains(z.out, "\"candidates_tried\":0"));
}

TEST_CASE("usage errors exit with 2 and help with 0") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("gen --format dimacs").exit_code == 2);
}

TEST_SUITE_END();
