#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

#include "dfib/report.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the installed binary through the shell; stdout is captured, stderr
// dropped so usage errors stay quiet in the test log.
RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd;
    if (!env.empty()) {
        cmd += env + " ";
    }
    cmd += "\"" DFIB_CLI_PATH "\" " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        result.output.append(buf, n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

const std::string kOddTableCsv =
    "position,fibonacci,shift_gamma_2,shift_gamma_3,shift_gamma_4,status\n"
    "1,1,-0.176340,0.209938,0.601617,ok\n"
    "3,2,0.764837,1.861967,3.058216,ok\n"
    "5,5,-0.678174,0.381427,1.614796,ok\n"
    "7,13,-5.638242,-5.053536,-4.371555,ok\n";

}  // namespace

TEST_CASE("default table emits the reference CSV bytes") {
    const RunResult r = run_cli("table");
    CHECK(r.exit_code == 0);
    CHECK(r.output == kOddTableCsv);
}

TEST_CASE("table output is byte-stable across runs") {
    const RunResult a = run_cli("table --parity even --gamma 2,3,4 --count 5");
    const RunResult b = run_cli("table --parity even --gamma 2,3,4 --count 5");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("0,0,-1.600000,-2.400000,-3.200000,ok\n") != std::string::npos);
    CHECK(a.output.find("4,3,-1.377405,-1.712509,-2.394837,ok\n") != std::string::npos);
    CHECK(a.output.find("8,21,-11.270985,-11.189434,-11.173753,ok\n")
          != std::string::npos);
}

TEST_CASE("emitted tables parse back and re-serialize identically") {
    for (const char* args : {"table", "table --parity even --count 5",
                             "table --gamma 2.5 --count 3"}) {
        const RunResult r = run_cli(args);
        REQUIRE(r.exit_code == 0);
        const dfib::ShiftTable t = dfib::parse_shift_table_csv(r.output);
        CHECK(dfib::to_csv(t) == r.output);
    }
}

TEST_CASE("table JSON keeps full precision") {
    const RunResult r = run_cli("table --format json");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["parity"] == "odd");
    CHECK(j["positions"] == nlohmann::json({1, 3, 5, 7}));
    const double cell = j["shifts"][0][0].get<double>();
    CHECK(std::abs(cell - (-0.17634047352154235)) <= 1e-15);
    CHECK(j["status"][0][0] == "ok");
}

TEST_CASE("series defaults produce a full grid with the odd component") {
    const RunResult r = run_cli("series --function fo --range 0,1 --step 0.5");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output ==
          "x,value,status\n"
          "0.000000,0.894427,ok\n"
          "0.500000,0.920442,ok\n"
          "1.000000,1.000000,ok\n");
}

TEST_CASE("series marks the even second solution as singular at the origin") {
    const RunResult r = run_cli("series --function G --parity even --range 0,1 --step 1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("0.000000,,singular\n") != std::string::npos);
    CHECK(r.output.find("1.000000,") != std::string::npos);
}

TEST_CASE("series covers the nonlinear amplitude") {
    const RunResult r = run_cli("series --function pinney --range 0,1 --step 0.5");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output ==
          "x,value,status\n"
          "0.000000,2.323372,ok\n"
          "0.500000,2.400801,ok\n"
          "1.000000,2.635824,ok\n");
}

TEST_CASE("series JSON reports the generating parameters") {
    const RunResult r =
        run_cli("series --function F --gamma 3 --range 1,2 --step 0.5 --format json");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["function"] == "F");
    CHECK(j["points"].size() == 3);
    CHECK(j["points"][0]["status"] == "ok");
    CHECK(j["parameters"].get<std::string>().find("gamma=3") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--definitely-not-a-flag").exit_code == 2);
    CHECK(run_cli("table --parity diagonal").exit_code == 2);
    CHECK(run_cli("table --count 0").exit_code == 2);
    CHECK(run_cli("series").exit_code == 2);  // --function is required
    CHECK(run_cli("series --function nope").exit_code == 2);
    CHECK(run_cli("series --function fo --range 5,1").exit_code == 2);
    CHECK(run_cli("series --function fo --range 1").exit_code == 2);
    CHECK(run_cli("series --function fo --step 0").exit_code == 2);
    CHECK(run_cli("series --function fo --step -0.5").exit_code == 2);
    CHECK(run_cli("table --w-norm 0").exit_code == 2);
}

TEST_CASE("help is available and exits cleanly") {
    const RunResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("table") != std::string::npos);
    CHECK(r.output.find("verify") != std::string::npos);
}

TEST_CASE("the precision gate accepts only the native float width") {
    CHECK(run_cli("table", "DARBOUX_FIB_PRECISION=f64").exit_code == 0);
    CHECK(run_cli("table", "DARBOUX_FIB_PRECISION=f32").exit_code == 2);
    CHECK(run_cli("table", "DARBOUX_FIB_PRECISION=quad").exit_code == 2);
}

TEST_CASE("verification exits nonzero while a source discrepancy stands") {
    const RunResult r = run_cli("verify --level quick");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("[FAIL] published_even_table_match") != std::string::npos);
    CHECK(r.output.find("[FAIL] deformation_fade_relative_shift") != std::string::npos);
    CHECK(r.output.find("overall: FAIL (28/30 checks passed)") != std::string::npos);
    // Every other check line reports a pass.
    CHECK(r.output.find("[PASS] published_odd_table_match") != std::string::npos);
    CHECK(r.output.find("[PASS] cross_engine_deformed_solution") != std::string::npos);
}

TEST_CASE("verification honors the requested normalization") {
    const RunResult r = run_cli("verify --level quick --w-norm 1.0");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("[FAIL] published_odd_table_match") != std::string::npos);
    CHECK(r.output.find("[PASS] wronskian_magnitude_matches_w_norm") != std::string::npos);
}

TEST_CASE("verification JSON parses and matches the text verdict") {
    const RunResult r = run_cli("verify --level quick --format json");
    CHECK(r.exit_code == 1);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["overall"] == false);
    CHECK(j["checks"].size() == 30);
}

TEST_CASE("invariant reports close over their grid") {
    const RunResult flat = run_cli("invariant --m 0 --n 1 --k -1");
    REQUIRE(flat.exit_code == 0);
    CHECK(flat.output.find("# mean=0.148201\n") != std::string::npos);
    CHECK(flat.output.find("# max_abs_deviation=0.000000\n") != std::string::npos);
    CHECK(flat.output.find("# closed_form=0.148201\n") != std::string::npos);

    const RunResult def = run_cli("invariant --deformed --m 1 --n 1 --parity odd --gamma 2");
    REQUIRE(def.exit_code == 0);
    CHECK(def.output.find("# mean=1.148201\n") != std::string::npos);
    CHECK(def.output.find("# closed_form=1.148201\n") != std::string::npos);

    const RunResult j = run_cli("invariant --m 1 --n 0 --k -1 --format json");
    REQUIRE(j.exit_code == 0);
    const nlohmann::json parsed = nlohmann::json::parse(j.output);
    CHECK(std::abs(parsed["closed_form"].get<double>() - 1.0) <= 1e-15);
    CHECK(std::abs(parsed["mean"].get<double>() - 1.0) <= 1e-10);
}
