// End-to-end checks of the command-line tool: exit codes, verdict
// expectations, JSON output shape, and determinism across runs.

#include <catch2/catch_amalgamated.hpp>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string out_path = "cli_test_out_" + std::to_string(counter++) + ".txt";
    std::string cmd = std::string(CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream is(out_path);
    std::ostringstream os;
    os << is.rdbuf();
    r.output = os.str();
    std::remove(out_path.c_str());
    return r;
}

nlohmann::json parse_json(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST_CASE("models validate passes for every kind") {
    for (std::string args : {"models validate --kind unit-sphere --n 2",
                             "models validate --kind deformed-sphere --n 2 --a 0.5",
                             "models validate --kind flat --n 2"}) {
        RunResult r = run_cli(args + " --trials 3");
        INFO(args << "\n" << r.output);
        REQUIRE(r.exit_code == 0);
        nlohmann::json j = parse_json(r.output);
        CHECK(j.at("pass").get<bool>());
    }
}

TEST_CASE("invalid model parameters exit with a usage error") {
    RunResult r = run_cli("models validate --kind deformed-sphere --n 2 --a -1");
    CHECK(r.exit_code == 2);
    RunResult u = run_cli("curve generate --no-such-flag");
    CHECK(u.exit_code == 2);
    RunResult k = run_cli("models validate --kind pseudo-sphere");
    CHECK(k.exit_code == 2);
}

TEST_CASE("curve generate honors --expect") {
    RunResult ok = run_cli("curve generate --family circle --n 2 --expect proper-biharmonic");
    INFO(ok.output);
    CHECK(ok.exit_code == 0);
    nlohmann::json j = parse_json(ok.output);
    CHECK(j.at("report").at("verdict").get<std::string>() == "proper-biharmonic");
    CHECK(j.at("legendre_residual").get<double>() < 1e-8);

    RunResult bad = run_cli("curve generate --family circle --n 2 --expect harmonic");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("MISMATCH") != std::string::npos);
}

TEST_CASE("order-4 family outside its admissible window is infeasible") {
    RunResult r = run_cli("curve generate --family order4 --c 2");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("infeasible") != std::string::npos);
}

TEST_CASE("curve classify reports the case analysis") {
    RunResult r = run_cli(
        "curve classify --family case3 --c 5 --kappa1 2 --kappa2 1 --length 2 "
        "--expect proper-biharmonic");
    INFO(r.output);
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = parse_json(r.output);
    CHECK(j.at("classification").at("case").get<std::string>() == "III");
}

TEST_CASE("hopf solve emits the expected roots as JSON") {
    RunResult r = run_cli("hopf solve --type A1 --c 1 --n 2");
    INFO(r.output);
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = parse_json(r.output);
    auto roots = j.at("roots");
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].at("tan2_u").get<double>() == Catch::Approx(1.0).margin(1e-12));
    CHECK(roots[1].at("tan2_u").get<double>() == Catch::Approx(3.0).margin(1e-12));
    CHECK(roots[0].at("verdict").get<std::string>() == "proper-biharmonic");
    CHECK(roots[1].at("verdict").get<std::string>() == "minimal");
}

TEST_CASE("hopf threshold matches the reference value at n = 2") {
    RunResult r = run_cli("hopf threshold --type A1 --n 2");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = parse_json(r.output);
    double want = (-7.0 + 8.0 * std::sqrt(3.0)) / 13.0;
    CHECK(j.at("c_min").get<double>() == Catch::Approx(want).margin(1e-12));
    CHECK(j.at("c_min_numeric").get<double>() == Catch::Approx(want).margin(1e-8));
}

TEST_CASE("hopf scan output is deterministic across jobs settings") {
    RunResult one = run_cli("hopf scan --type A1 --n 3 --c-min -2 --c-max 8 --steps 50 --jobs 1");
    RunResult four = run_cli("hopf scan --type A1 --n 3 --c-min -2 --c-max 8 --steps 50 --jobs 4");
    REQUIRE(one.exit_code == 0);
    REQUIRE(four.exit_code == 0);
    CHECK(one.output == four.output);
    CHECK(one.output.rfind("type,c,n,p,q,root_index,tan2u,u,H,verdict", 0) == 0);
}

TEST_CASE("hopf roots for unsupported hypersurface types are refused") {
    for (std::string t : {"B", "C", "D", "E"}) {
        RunResult r = run_cli("hopf solve --type " + t + " --c 1 --n 2");
        INFO(r.output);
        CHECK(r.exit_code == 1);
        CHECK(r.output.find("infeasible") != std::string::npos);
    }
}

TEST_CASE("criterion3d verdicts") {
    RunResult ok = run_cli("hopf criterion3d --c 5 --kappa 2 --expect proper-biharmonic");
    CHECK(ok.exit_code == 0);
    RunResult off = run_cli("hopf criterion3d --c 5 --kappa 1 --expect not-proper-biharmonic");
    CHECK(off.exit_code == 0);
    RunResult low = run_cli("hopf criterion3d --c 0.5 --kappa 1 --expect minimal-only");
    CHECK(low.exit_code == 0);
    RunResult wrong = run_cli("hopf criterion3d --c 0.5 --kappa 1 --expect proper-biharmonic");
    CHECK(wrong.exit_code == 1);
}

TEST_CASE("repeated runs produce byte-identical JSON") {
    std::string args = "curve generate --family helix --kappa1 0.6 --n 2 --length 2";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
}
