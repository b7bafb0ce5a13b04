#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "pcc/census.hpp"
#include "pcc/report.hpp"

using namespace pcc;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the installed binary through the shell, merging stderr into stdout.
RunResult run(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + PCC_BIN " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (p == nullptr) throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    const int rc = pclose(p);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

}  // namespace

TEST_CASE("proportion exact in all three formats") {
    CHECK(run("proportion --q 2 --b 2 --c 2").out == "55/128\n");
    CHECK(run("proportion --q 2 --b 2 --c 2").code == 0);
    CHECK(run("proportion --q 2 --b 2 --c 2 --format csv").out == "2,exact,0.4296875\n");

    const RunResult j = run("proportion --q 2 --b 2 --c 2 --format json");
    CHECK(j.code == 0);
    CensusReport expected;
    expected.q = Int(2);
    expected.b = 2;
    expected.c = 2;
    expected.method = Method::SERIES;
    expected.proportion = make_rat(55, 128);
    CHECK(report_from_json(j.out) == expected);
}

TEST_CASE("proportion brute agrees with exact") {
    CHECK(run("proportion --q 3 --b 2 --c 1 --method brute").out == "2/3\n");
    CHECK(run("proportion --q 2 --b 3 --c 1 --method brute").out == "3/4\n");
}

TEST_CASE("proportion mc is seeded and omits the stderr from JSON") {
    const RunResult r = run("proportion --q 2 --b 2 --c 1 --method mc --samples 4096 --seed 7 "
                            "--format json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"proportion\": \"2057/4096\"") != std::string::npos);
    CHECK(r.out.find("\"seed\": 7") != std::string::npos);
    CHECK(r.out.find("\"samples\": 4096") != std::string::npos);
    CHECK(r.out.find("stderr") == std::string::npos);
    const CensusReport parsed = report_from_json(r.out);
    CHECK(parsed.stderr_estimate.has_value());
}

TEST_CASE("identical invocations are byte-identical") {
    const std::string cmd = "limit --q 5 --b 2 --with-constants --format json";
    const RunResult a = run(cmd);
    const RunResult b = run(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const RunResult c = run("proportion --q 2 --b 2 --c 2 --method mc --seed 3");
    const RunResult d = run("proportion --q 2 --b 2 --c 2 --method mc --seed 3");
    CHECK(c.out == d.out);
}

TEST_CASE("limit prints the window verdict and constants") {
    const RunResult r = run("limit --q 2 --b 2 --with-constants");
    CHECK(r.code == 0);
    CHECK(r.out.find("0.4214079466877717") != std::string::npos);
    CHECK(r.out.find("a_L = 8") != std::string::npos);
    CHECK(r.out.find("a_J = 8589934592/27") != std::string::npos);
    CHECK(r.out.find("window around 1 - 1/e: PASS") != std::string::npos);

    const RunResult j = run("limit --q 2 --b 2 --format json");
    CHECK(j.out.find("\"window_ok\": true") != std::string::npos);
    const CensusReport parsed = report_from_json(j.out);
    CHECK(parsed.method == Method::LIMIT);
    REQUIRE(parsed.interval.has_value());
    CHECK(parsed.interval->contains(parsed.proportion));
}

TEST_CASE("table emits one csv row per size with reference matches") {
    const RunResult r = run("table --q 2 --b 2 --cmax 5 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out == "1,exact,0.5,yes\n"
                   "2,exact,0.4296875,yes\n"
                   "3,exact,0.423614501953125,yes\n"
                   "4,exact,0.4219572246074676513671875,\n"
                   "5,exact,0.4215451594864134676754474639892578125,\n");
    const RunResult nb = run("table --q 2 --b 4 --cmax 1 --format csv");
    CHECK(nb.out.find("no; the printed small-c polynomial assumes a prime extension degree") !=
          std::string::npos);
}

TEST_CASE("verify suites pass and print both sides") {
    const RunResult ci = run("verify cycle-index --q 2 --n 2 --assignment all-ones");
    CHECK(ci.code == 0);
    CHECK(ci.out.find("2/1 vs 2/1 PASS") != std::string::npos);
    CHECK(ci.out.find("RESULT PASS") != std::string::npos);

    CHECK(run("verify criterion --q 2 --b 2 --c 1").code == 0);
    CHECK(run("verify inclusion-exclusion --q 2 --b 2 --c 2").code == 0);
    CHECK(run("verify centralizer --q 2 --max-dim 3").code == 0);
    CHECK(run("verify tail --q 2 --b 2 --c-lo 49 --c-hi 50").code == 0);
}

TEST_CASE("series dump is schema-stable") {
    const RunResult r = run("series --q 2 --b 2 --order 4 --dump-series j");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"series\": \"j\"") != std::string::npos);
    CHECK(r.out.find("\"-55609/131072\"") != std::string::npos);
    const RunResult k = run("series --q 2 --b 2 --order 3 --k 1 --dump-series pcbi");
    CHECK(k.out.find("\"k\": 1") != std::string::npos);
}

TEST_CASE("exit code 2 for usage and validation errors") {
    const RunResult b1 = run("proportion --q 2 --b 1 --c 1");
    CHECK(b1.code == 2);
    CHECK(b1.out.find("b must exceed 1") != std::string::npos);
    CHECK(run("proportion --q 6 --b 2 --c 1").code == 2);
    CHECK(run("proportion --q 2 --b 2").code == 2);          // missing --c
    CHECK(run("proportion --q 2 --b 2 --c 1 --method fancy").code == 2);
    CHECK(run("nonsense").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("verify nosuite").code == 2);
}

TEST_CASE("exit code 3 when a guard refuses the enumeration") {
    const RunResult r = run("proportion --q 2 --b 2 --c 4 --method brute");
    CHECK(r.code == 3);
    CHECK(r.out.find("4294967296") != std::string::npos);
    CHECK(r.out.find("--raise-guard") != std::string::npos);
    CHECK(run("--raise-guard proportion --q 3 --b 2 --c 2 --method brute").code == 0);
    // Global flags also work after the subcommand, where the guard message suggests them.
    CHECK(run("proportion --q 3 --b 2 --c 2 --method brute --raise-guard").code == 0);
}

TEST_CASE("help exits zero") {
    CHECK(run("--help").code == 0);
    CHECK(run("proportion --help").code == 0);
}

TEST_CASE("PCC_CACHE_DIR overrides --cache-dir") {
    namespace fs = std::filesystem;
    const fs::path envdir = fs::temp_directory_path() / "pcc-cli-env-cache";
    const fs::path flagdir = fs::temp_directory_path() / "pcc-cli-flag-cache";
    fs::remove_all(envdir);
    fs::remove_all(flagdir);
    const RunResult r = run("--cache-dir " + flagdir.string() +
                                " proportion --q 2 --b 2 --c 1 --method brute",
                            "PCC_CACHE_DIR=" + envdir.string() + " ");
    CHECK(r.code == 0);
    CHECK(fs::exists(envdir));
    CHECK(!fs::exists(flagdir));
    fs::remove_all(envdir);
}
