// Drives the installed CLI binary end to end: exit codes, output shapes,
// report files. THETAQ_CLI_PATH is injected by the build.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <unistd.h>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

std::string temp_path(const char* tag) {
    static int counter = 0;
    return "/tmp/thetaq_test_" + std::to_string(::getpid()) + "_" + std::to_string(++counter) +
           "_" + tag;
}

RunResult run_cli(const std::string& args) {
    std::string out_file = temp_path("out");
    std::string cmd = std::string(THETAQ_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    int code = WEXITSTATUS(status);
    std::ifstream f(out_file);
    std::stringstream ss;
    ss << f.rdbuf();
    std::remove(out_file.c_str());
    return {code, ss.str()};
}

} // namespace

TEST_CASE("verify subcommand exit codes") {
    RunResult all = run_cli("verify --all --cutoff 8");
    CHECK(all.exit_code == 0);
    CHECK(all.output.find("failed 0") != std::string::npos);
    CHECK(run_cli("verify --id eq-2/32/3 --cutoff 10").exit_code == 0);
    CHECK(run_cli("verify --id nope").exit_code == 2);
    CHECK(run_cli("verify --family third --cutoff 6").exit_code == 0);
    CHECK(run_cli("verify --family bogus").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("expand output") {
    RunResult r = run_cli("expand \"eta(tau)^3\" --cutoff 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("q^1/8") != std::string::npos);
    CHECK(r.output.find("9/8") != std::string::npos);
    CHECK(r.output.find("-3") != std::string::npos);
    CHECK(r.output.find("25/8") != std::string::npos);

    RunResult zero = run_cli("expand \"theta[1,1](tau)\" --cutoff 3");
    CHECK(zero.exit_code == 0);
    CHECK(zero.output.find("zero series") != std::string::npos);

    RunResult js = run_cli("expand \"eta(tau)^3\" --cutoff 4 --format json");
    CHECK(js.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(js.output);
    CHECK(parsed["terms"].size() == 3);
    CHECK(parsed["terms"][1]["exact"] == "-3");

    CHECK(run_cli("expand \"theta[0,0](tau\" --cutoff 3").exit_code == 2);
}

TEST_CASE("coeff queries") {
    RunResult r = run_cli("coeff \"Theta3(tau)\" --at 7/2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("12") != std::string::npos);

    RunResult z = run_cli("coeff \"theta[0,0](tau)^2\" --at 3/2");
    CHECK(z.exit_code == 0);
    CHECK(z.output.find(": 0") != std::string::npos);

    RunResult e = run_cli("coeff \"eta(tau)\" --at 1/24");
    CHECK(e.exit_code == 0);
    CHECK(e.output.find(": 1") != std::string::npos);

    CHECK(run_cli("coeff \"eta(tau)\" --at 9 --cutoff 8").exit_code == 2);
}

TEST_CASE("numeric spot checks") {
    CHECK(run_cli("numeric --id clasder --tau 0+1i").exit_code == 0);
    CHECK(run_cli("numeric --id eq-01/4 --tau 0.1+0.8i").exit_code == 0);
    CHECK(run_cli("numeric --id clasder --tau 0-1i").exit_code == 2);
    CHECK(run_cli("numeric --expr \"eta(tau)\" --tau 0.2+1.3i").exit_code == 0);
}

TEST_CASE("json reports: schema, stability, --out") {
    std::string path = temp_path("report.json");
    RunResult r = run_cli("verify --family classical --cutoff 6 --format json --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    nlohmann::json j = nlohmann::json::parse(f);
    REQUIRE(j.contains("records"));
    REQUIRE(j.contains("summary"));
    CHECK(j["summary"]["fail"] == 0);
    for (const auto& rec : j["records"]) {
        CHECK(rec.contains("id"));
        CHECK(rec.contains("pass"));
        CHECK(rec.contains("cutoff"));
        CHECK_FALSE(rec.contains("ms")); // timings only with --timings
    }
    std::remove(path.c_str());

    RunResult a = run_cli("verify --family series-level --cutoff 5 --format json --jobs 1");
    RunResult b = run_cli("verify --family series-level --cutoff 5 --format json --jobs 8");
    CHECK(a.output == b.output);
}

TEST_CASE("catalog export") {
    RunResult r = run_cli("catalog");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j.size() >= 75);
    bool found = false;
    for (const auto& rec : j)
        if (rec["id"] == "eq-11/3") {
            found = true;
            CHECK(rec["family"] == "third");
            CHECK(rec["lhs"].get<std::string>().find("dtheta[1,1/3]") != std::string::npos);
        }
    CHECK(found);
}
