#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(BLOCKWITNESS_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("core") {
    RunResult r = run("core \"(5,4,2,2,1)\" --e 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "(3,2,1)"));
    CHECK(contains(r.out, "weight 2"));

    CHECK(run("core \"(5,4,2,2,1\"").exit_code == 2);
    CHECK(run("core \"(4,5)\"").exit_code == 2);
}

TEST_CASE("abacus") {
    RunResult r = run("abacus \"(5,4,2,2,1)\" --e 4 --t 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "{9,7,4,3,1}"));
    CHECK(contains(r.out, "0 1 2 3"));
}

TEST_CASE("block and degree and mn") {
    RunResult r = run("block \"(61,6,5,2,1)\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "S_75:B_5"));
    CHECK(contains(r.out, "weight 30"));

    r = run("degree \"(3,2)\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "5"));

    r = run("mn \"(2,1)\" \"(3)\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "-1"));
}

TEST_CASE("witness") {
    RunResult r = run("witness 75 11 5 --json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"case_tag\":\"e\""));
    CHECK(contains(r.out, "[65,9,7,3,1]"));
    CHECK(contains(r.out, "[61,6,5,2,1]"));

    CHECK(run("witness 75 11 1").exit_code == 3);   // principal block
    CHECK(run("witness 65 11 5").exit_code == 3);   // below the proven range
    CHECK(run("witness 75 11 4").exit_code == 2);   // not a block of S_75
}

TEST_CASE("oracle") {
    RunResult r = run("oracle --n-max 12 --p 3,5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "pass"));

    CHECK(run("oracle --n-max 8 --p 2").exit_code == 2);
    CHECK(run("oracle --n-max 8 --p 2 --allow-p2").exit_code == 0);
    CHECK(run("oracle --n-max 50 --p 3").exit_code == 2);
    CHECK(run("oracle --n-max 8 --p 9").exit_code == 2);
}

TEST_CASE("scan") {
    RunResult r = run("scan --n 66..68 --p 3 --group both --json --stable");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"failures\": 0"));
    CHECK_FALSE(contains(r.out, "elapsed"));

    CHECK(run("scan --n 66..67 --p 3 --group nope").exit_code == 2);
}

TEST_CASE("alternating subcommands") {
    RunResult r = run("an-blocks 15");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "A_15:b_5^+"));
    CHECK(contains(r.out, "A_15:b_5^-"));

    r = run("rational 75 11 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "yes"));

    r = run("rational 66 3 11");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "no"));

    CHECK(run("rational 75 11 4").exit_code == 3);
}

TEST_CASE("usage errors") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}
