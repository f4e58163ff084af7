#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CmdResult {
    int exit_code;
    std::string output;
};

CmdResult run_cli(const std::string& args) {
    const std::string out_path = "cli_test_output.tmp";
    const std::string cmd = std::string(POLYRED_BIN) + " " + args + " > " + out_path + " 2>&1";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_path.c_str());
    return {rc == 0 ? 0 : 1, ss.str()};
}

} // namespace

TEST_CASE("factor subcommand") {
    auto r = run_cli("factor 4,0,2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"is_reducible\": false") != std::string::npos);
    CHECK(r.output.find("\"decision_path\"") != std::string::npos);

    r = run_cli("factor -1,0,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"is_reducible\": true") != std::string::npos);
    CHECK(r.output.find("\"min_factor_degree\": 1") != std::string::npos);

    // parse error: nonzero exit
    r = run_cli("factor \"\"");
    CHECK(r.exit_code != 0);
    r = run_cli("factor 1,banana");
    CHECK(r.exit_code != 0);
    // constant polynomial: domain error
    r = run_cli("factor 7");
    CHECK(r.exit_code != 0);
}

TEST_CASE("analytic subcommand") {
    auto r = run_cli("analytic chela --degree 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("3.78986813") != std::string::npos);

    r = run_cli("analytic slab --degree 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"exact\": \"3\"") != std::string::npos);

    r = run_cli("analytic nope --degree 3");
    CHECK(r.exit_code != 0);
    r = run_cli("analytic chela --degree 2");
    CHECK(r.exit_code != 0);
}

TEST_CASE("simulate and enumerate subcommands") {
    auto r = run_cli("simulate --model pm1:4 --trials 2000 --seed 9 --workers 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"reducible\": 0") != std::string::npos);
    CHECK(r.output.find("\"seed\": 9") != std::string::npos);

    // identical invocations give identical output
    auto r2 = run_cli("simulate --model pm1:4 --trials 2000 --seed 9 --workers 1");
    CHECK(r.output == r2.output);

    r = run_cli("enumerate --model z1:3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"reducible_prob\": \"1/2\"") != std::string::npos);

    r = run_cli("enumerate --model pm1:40");
    CHECK(r.exit_code != 0);

    r = run_cli("simulate --model bogus:3");
    CHECK(r.exit_code != 0);
}

TEST_CASE("figure subcommand") {
    auto r = run_cli("figure --list");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("fig9-matrix") != std::string::npos);

    r = run_cli("figure fig9-matrix --trials 50 --out cli_test_figs");
    CHECK(r.exit_code == 0);
    std::ifstream csv("cli_test_figs/fig9-matrix.csv");
    CHECK(csv.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header.rfind("figure_id,series,degree", 0) == 0);
    std::ifstream svg("cli_test_figs/fig9-matrix.svg");
    CHECK(svg.good());

    r = run_cli("figure fig0-unknown");
    CHECK(r.exit_code != 0);
}
