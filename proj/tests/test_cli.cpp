// End-to-end checks of the eddtool binary: spawns the real executable on
// the shipped data files and inspects the JSON it prints and the exit
// codes it returns.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    json output;
    std::string raw;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(EDDTOOL_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.raw = out;
    if (!out.empty() && (out[0] == '{' || out[0] == '[')) r.output = json::parse(out);
    return r;
}

std::string data(const std::string& name) { return std::string(EDD_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("smith on the integer example") {
    const auto r = run("smith " + data("int_2x2.mat"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.output["schema"] == 1);
    CHECK(r.output["rank"] == 2);
    CHECK(r.output["invariant_factors"] == json::array({"2", "4"}));
}

TEST_CASE("smith on a polynomial file") {
    const auto r = run("smith " + data("poly_2x2.mat"));
    REQUIRE(r.exit_code == 0);
    // x and x^2 - x as coefficient arrays, lowest degree first.
    CHECK(r.output["invariant_factors"] == json::array({json::array({"0", "1"}), json::array({"0", "-1", "1"})}));
}

TEST_CASE("eig reports a non-eigenvalue") {
    const auto r = run("eig --lambda 5 " + data("poly_identity2.mat"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.output["eigenvalue"] == false);
    CHECK(r.output["partial_multiplicities"] == json::array());
}

TEST_CASE("eig reports multiplicities") {
    const auto r = run("eig --lambda 0 " + data("poly_2x2.mat"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.output["eigenvalue"] == true);
    CHECK(r.output["partial_multiplicities"] == json::array({2, 1}));
    CHECK(r.output["algebraic_multiplicity"] == 3);
}

TEST_CASE("nullbasis on a rank-deficient row") {
    const auto r = run("nullbasis " + data("poly_row.mat"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.output["dimension"] == 1);
    CHECK(r.output["checks"]["annihilates"] == true);
    CHECK(r.output["checks"]["left_inverse"] == true);
    CHECK(r.output["checks"]["trivial_smith_form"] == true);
}

TEST_CASE("check-invertible is deterministic under a fixed seed") {
    const auto r1 = run("check-invertible --seed 99 " + data("poly_identity2.mat"));
    const auto r2 = run("check-invertible --seed 99 " + data("poly_identity2.mat"));
    REQUIRE(r1.exit_code == 0);
    CHECK(r1.raw == r2.raw);
    CHECK(r1.output["invertible"] == true);
    CHECK(r1.output["conditions"]["full_rank_at_samples"]["sampled"] == true);
}

TEST_CASE("local on the worked example") {
    const auto r = run("local " + data("paper_4_1.mat"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.output["rank"]["value"] == 2);
    CHECK(r.output["rank"]["certified"] == false);
    CHECK(r.output["partial_multiplicities"] ==
          json::array({json{{"value", 2}, {"certified", true}}, json{{"value", 1}, {"certified", true}}}));
}

TEST_CASE("rootvectors with provided candidates on the worked example") {
    const auto r = run("rootvectors --lambda 0 --vec '1, -exp(z), 0' --vec '1, -2*exp(z), 0' " +
                       data("paper_4_1.mat"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.output["orders"] ==
          json::array({json{{"value", 1}, {"certified", true}}, json{{"value", 2}, {"certified", true}}}));
    CHECK(r.output["flags"]["maximal"]["value"] == true);
    CHECK(r.output["flags"]["maximal"]["certified"] == false);
    CHECK(r.output["flags"]["lambda_independent"] == true);
}

TEST_CASE("kerlambda on the worked example") {
    const auto r = run("kerlambda " + data("paper_4_1.mat"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.output["dimension"]["value"] == 1);
    const auto basis = r.output["basis_at_lambda"];
    REQUIRE(basis.size() == 3);
    // One column spanning (1, -2, 1).
    const double top = std::stod(basis[0][0].get<std::string>());
    CHECK(basis[1][0].get<std::string>() == std::to_string(static_cast<int>(-2 * top)));
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("smith /nonexistent/file.mat").exit_code == 2);
    CHECK(run("frobnicate x").exit_code == 2);
    CHECK(run("smith").exit_code == 2);
}

TEST_CASE("domain errors exit with 1") {
    // Analytic file under `smith`.
    CHECK(run("smith " + data("paper_4_1.mat")).exit_code == 1);
    // Missing --lambda for a polynomial eig.
    CHECK(run("eig " + data("poly_2x2.mat")).exit_code == 1);
    // lambda disagreeing with the expansion point.
    const auto r = run("local --lambda 3 " + data("paper_4_1.mat"));
    CHECK(run("rootvectors --lambda 3 " + data("paper_4_1.mat")).exit_code == 1);
    // Truncation too small to certify the multiplicities.
    const auto t = run("local --trunc 3 " + data("paper_4_1.mat"));
    CHECK(t.exit_code == 1);
    CHECK(t.output["error"]["type"] == "insufficient_truncation");
}

TEST_CASE("pretty output is still valid JSON") {
    const auto r = run("smith --pretty " + data("int_2x2.mat"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.output["rank"] == 2);
    CHECK(r.raw.find('\n') != std::string::npos);
}
