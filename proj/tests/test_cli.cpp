#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <json.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Golden runs of the installed binary: exit-status contract and output
// formats. The binary path arrives via the CODEWEIGHTS_CLI environment
// variable set by the test harness.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string cli_path() {
    const char* p = std::getenv("CODEWEIGHTS_CLI");
    REQUIRE_MESSAGE(p != nullptr, "CODEWEIGHTS_CLI must point at the binary");
    return p;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

RunResult run_env(const std::string& env, const std::string& args) {
    static int counter = 0;
    const std::string out = "cli_out_" + std::to_string(counter) + ".txt";
    const std::string err = "cli_err_" + std::to_string(counter) + ".txt";
    ++counter;
    const std::string cmd =
        env + (env.empty() ? "" : " ") + cli_path() + " " + args + " >" + out + " 2>" + err;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    std::remove(out.c_str());
    std::remove(err.c_str());
    return r;
}

RunResult run(const std::string& args) { return run_env("", args); }

}  // namespace

TEST_CASE("construct reports the code summary") {
    const RunResult r = run("construct -p 3 -e 3 -i 0 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[6,3,3]") != std::string::npos);
    CHECK(r.out.find("1+6z^3+12z^4+6z^5+2z^6") != std::string::npos);
    CHECK(r.out.find("griesmer-optimal-candidate") != std::string::npos);

    const RunResult r2 = run("construct -p 5 -e 2 -i 1 --format text");
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("[7,2,5]") != std::string::npos);
}

TEST_CASE("operational errors exit 1 with a diagnostic on stderr") {
    const RunResult r = run("construct -p 2 -e 3 -i 0");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("odd prime") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("verify exit codes gate on the verdict") {
    CHECK(run("verify -p 7 -e 4 -i 1 --format text").exit_code == 0);
    CHECK(run("verify -p 5 -e 2 -i 0 --format text").exit_code == 0);
    const RunResult bad = run("verify -p 3 -e 3 -i 0 --format text");
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("FORMULA_ANOMALY") != std::string::npos);
    CHECK(bad.out.find("diff weight") != std::string::npos);
}

TEST_CASE("verify emits parseable JSON") {
    const RunResult r = run("verify -p 5 -e 2 -i 0 --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "MATCH");
    CHECK(j["n"] == 12);
    CHECK(j["k"] == 2);
    CHECK(j["modulus"].is_array());
}

TEST_CASE("modulus override changes the representation, not the distribution") {
    const RunResult a = run("construct -p 3 -e 3 -i 0 --format csv");
    const RunResult b = run("construct -p 3 -e 3 -i 0 --modulus 1,1,2,1 --format csv");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(run("construct -p 3 -e 3 -i 0 --modulus 1,0,1,1").exit_code == 1);
}

TEST_CASE("sweep covers the default grid") {
    const RunResult r = run("sweep --format json --jobs 2");
    // default grid {3,5,7} x {2,3,4,5} x {0,1} = 24 cases; known table
    // defects make the overall status a mismatch
    CHECK(r.exit_code == 2);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["cases"].size() == 24);
    std::size_t match = j["summary"]["match"];
    std::size_t mismatch = j["summary"]["mismatch"];
    std::size_t skipped = j["summary"]["skipped"];
    CHECK(match + mismatch + skipped == 24);
    CHECK(mismatch > 0);
    CHECK(j["summary"]["errors"] == 0);
    // per-case reports survive a serialization round trip
    for (const auto& rec : j["cases"]) {
        REQUIRE(rec.contains("report"));
        CHECK(nlohmann::json::parse(rec["report"].dump()) == rec["report"]);
    }
}

TEST_CASE("budgets gate sweep cases by q * |D|") {
    // budget 1 is below even the smallest case in the grid
    const RunResult r = run("sweep --budget 1 --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["summary"]["skipped"] == 24);

    // with a budget of 10^3 exactly the eight cases with q * |D| <= 1000 run
    const RunResult r2 = run("sweep --budget 1000 --format json");
    const nlohmann::json j2 = nlohmann::json::parse(r2.out);
    CHECK(j2["summary"]["skipped"] == 16);
    std::size_t match2 = j2["summary"]["match"];
    std::size_t mismatch2 = j2["summary"]["mismatch"];
    CHECK(match2 + mismatch2 == 8);
}

TEST_CASE("CODEWEIGHTS_BUDGET seeds the default budget") {
    const RunResult r = run_env("CODEWEIGHTS_BUDGET=1", "sweep --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["summary"]["skipped"] == 24);
    // the field representation is recorded even for skipped cases
    for (const auto& rec : j["cases"]) CHECK(rec["modulus"].is_array());
    // an explicit flag still overrides the environment
    const RunResult r2 = run_env("CODEWEIGHTS_BUDGET=1", "verify -p 5 -e 2 -i 0 --budget 1000000");
    CHECK(r2.exit_code == 0);
}

TEST_CASE("oversized fields are an operational error") {
    const RunResult r = run("verify -p 3 -e 13 -i 0");
    CHECK(r.exit_code == 1);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("field-info") {
    const RunResult r = run("field-info -p 3 -e 3 --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["q"] == 27);
    CHECK(j["modulus"].size() == 4);
}
