#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include <array>
#include <cstdio>
#include <string>

#ifndef DPOLY_CLI_PATH
#define DPOLY_CLI_PATH "dpoly"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args)
{
    const std::string cmd = std::string(DPOLY_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string pair_arg(const std::string& name)
{
    return "--pair " + dpoly::testing::pair_path(name);
}

} // namespace

TEST_CASE("exit codes: valid pair, math failure, usage error")
{
    CHECK(run_cli("validate " + pair_arg("sl2_borel")).exit_code == 0);

    RunResult broken = run_cli("validate " + pair_arg("jacobi_broken"));
    CHECK(broken.exit_code == 1);
    // the offending triple is named
    CHECK(broken.output.find("jacobi") != std::string::npos);
    CHECK(broken.output.find("0") != std::string::npos);

    CHECK(run_cli("validate --pair /nonexistent/file.json").exit_code == 2);
    CHECK(run_cli("nonsense-subcommand " + pair_arg("sl2_borel")).exit_code == 2);
    CHECK(run_cli("hopf " + pair_arg("sl2_borel") + " --max-weight 0").exit_code == 2);
    CHECK(run_cli("hopf " + pair_arg("sl2_borel") + " --antipode bogus").exit_code == 2);
}

TEST_CASE("reports are byte-identical across runs with the same config")
{
    const std::string args = "report " + pair_arg("sl2_borel") +
                             " --max-weight 2 --max-degree 2 --format json --seed 0";
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(second.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(!first.output.empty());
}

TEST_CASE("subcommands emit their sections")
{
    RunResult hopf = run_cli("hopf " + pair_arg("abelian2_sub1") + " --max-weight 2 --max-degree 2 --format json");
    CHECK(hopf.exit_code == 0);
    CHECK(hopf.output.find("\"selected_convention\": \"standard\"") != std::string::npos);

    RunResult hopf_paper = run_cli("hopf " + pair_arg("abelian2_sub1") +
                                   " --max-weight 2 --max-degree 2 --antipode paper --format json");
    CHECK(hopf_paper.exit_code == 0); // recorded outcome, not an error

    RunResult cohomology = run_cli("cohomology " + pair_arg("sl2_borel") +
                                   " --max-weight 4 --max-degree 3 --format json");
    CHECK(cohomology.exit_code == 0);
    CHECK(cohomology.output.find("\"graded_oracle\"") != std::string::npos);

    RunResult atiyah = run_cli("atiyah " + pair_arg("abelian2_sub1") + " --format json");
    CHECK(atiyah.exit_code == 0);
    CHECK(atiyah.output.find("\"class_nonzero\": false") != std::string::npos);

    RunResult atiyah_sl2 = run_cli("atiyah " + pair_arg("sl2_borel") + " --format json");
    CHECK(atiyah_sl2.exit_code == 0);
    CHECK(atiyah_sl2.output.find("\"class_nonzero\": true") != std::string::npos);

    RunResult hkr = run_cli("hkr " + pair_arg("heisenberg_center") +
                            " --max-weight 2 --max-degree 2 --format json");
    CHECK(hkr.exit_code == 0);

    RunResult freelie = run_cli("freelie " + pair_arg("solvable2_sub1") +
                                " --max-weight 2 --max-degree 2 --format json");
    CHECK(freelie.exit_code == 0);

    RunResult text = run_cli("report " + pair_arg("abelian2_sub1") + " --max-weight 2 --max-degree 2");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("verdict") != std::string::npos);
}
