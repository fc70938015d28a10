#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

/// Run the CLI through the shell, capturing stdout. stderr is dropped; the
/// inherited HTRIG_SEED is cleared so seed tests control it explicitly.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd =
        "env -u HTRIG_SEED " + env_prefix + " \"" + HTRIG_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        r.out.append(buf, n);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        lines.push_back(line);
    }
    return lines;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("help and usage errors") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);          // a subcommand is required
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("sample --knots 0,1 --order 1 --step 0.5").exit_code == 2);  // --h missing
}

TEST_CASE("sample: grid shape and byte determinism") {
    const std::string args = "sample --h 1 --knots 0,1,2,3 --order 2 --step 0.25 --from 0 --to 1";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    const auto lines = lines_of(a.out);
    REQUIRE(lines.size() == 5);  // header plus ceil(1/0.25) rows, end excluded
    CHECK(lines[0] == "x,T_0_2,T_1_2");
    CHECK(lines[1].substr(0, 2) == "0,");
}

TEST_CASE("sample: complex flavors get split columns") {
    const RunResult r = run_cli("sample --h 1 --knots 0,1,2 --order 1 --step 0.5 --flavor E");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(!lines.empty());
    CHECK(lines[0] == "x,E_0_1_re,E_0_1_im,E_1_1_re,E_1_1_im");

    const RunResult t = run_cli("sample --h 1 --knots 0,1,2 --order 1 --step 0.5 --flavor T~");
    CHECK(lines_of(t.out)[0] == "x,Tt_0_1,Tt_1_1");
}

TEST_CASE("sample: argument validation") {
    CHECK(run_cli("sample --h 1 --knots 0,1,2 --order 1 --step 0.5 --flavor T~ "
                  "--method recurrence").exit_code == 2);
    CHECK(run_cli("sample --h 1 --knots 0,1,2 --order 1 --step 0.5 --method from_E "
                  "--flavor E").exit_code == 2);
    CHECK(run_cli("sample --h 1 --knots 0,1,2 --order 1 --step 0.5 --from 1 --to 1").exit_code ==
          2);
    CHECK(run_cli("sample --h 1 --knots 0,1,2 --order 1 --step 0").exit_code == 2);
    CHECK(run_cli("sample --h 1 --knots 0,1 --order 2 --step 0.5").exit_code == 2);
    CHECK(run_cli("sample --h 0 --knots 0,1,2 --order 1 --step 0.5").exit_code == 2);
    CHECK(run_cli("sample --h 1 --knots 0,9.5 --order 1 --step 0.5").exit_code == 2);
    CHECK(run_cli("sample --h 1 --knots 0,oops,2 --order 1 --step 0.5").exit_code == 2);
}

TEST_CASE("sample: knot file with comments matches inline knots") {
    const auto path = temp_path("htrig_cli_test_knots.txt");
    {
        std::ofstream out(path);
        out << "# spline knots\n0\n1 # second\n\n2\n3\n";
    }
    const RunResult inline_run =
        run_cli("sample --h 1 --knots 0,1,2,3 --order 2 --step 0.25");
    const RunResult file_run =
        run_cli("sample --h 1 --knots @" + path.string() + " --order 2 --step 0.25");
    CHECK(file_run.exit_code == 0);
    CHECK(file_run.out == inline_run.out);
    std::filesystem::remove(path);

    CHECK(run_cli("sample --h 1 --knots @/nonexistent.txt --order 1 --step 0.5").exit_code == 2);
}

TEST_CASE("check: pass line, JSON report and failure exit codes") {
    const RunResult r = run_cli("check --suite trig-identities --h 1 --samples 120");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 38) == "[PASS] suite=trig-identities h=1 seed=");

    const auto json_path = temp_path("htrig_cli_test_report.json");
    const RunResult j = run_cli("check --suite bspline-equiv --h 1 --samples 80 --json " +
                                json_path.string());
    CHECK(j.exit_code == 0);
    std::ifstream in(json_path);
    REQUIRE(in.good());
    const nlohmann::json reports = nlohmann::json::parse(in);
    REQUIRE(reports.is_array());
    REQUIRE(reports.size() == 1);
    const auto& rep = reports[0];
    for (const char* key : {"suite", "h", "seed", "samples", "max_residual", "mean_residual",
                            "tol", "passed"}) {
        CHECK(rep.contains(key));
    }
    CHECK(rep["suite"] == "bspline-equiv");
    CHECK(rep["h"] == 1.0);
    CHECK(rep["seed"] == 42);
    CHECK(rep["passed"] == true);
    std::filesystem::remove(json_path);

    CHECK(run_cli("check --suite bogus").exit_code == 2);
    const RunResult f =
        run_cli("check --suite trig-identities --h 1 --samples 50 --tol 1e-30");
    CHECK(f.exit_code == 1);
    CHECK(f.out.substr(0, 6) == "[FAIL]");
}

TEST_CASE("check: seed precedence") {
    const std::string args = "check --suite trig-identities --h 0.25 --samples 60";
    const RunResult flagged = run_cli(args + " --seed 7");
    const RunResult env_seeded = run_cli(args, "HTRIG_SEED=7");
    CHECK(flagged.exit_code == 0);
    CHECK(flagged.out == env_seeded.out);

    const RunResult overridden = run_cli(args + " --seed 7", "HTRIG_SEED=99");
    CHECK(overridden.out == flagged.out);

    CHECK(run_cli(args, "HTRIG_SEED=abc").exit_code == 2);
}

TEST_CASE("converge: ratio table doubles its accuracy per halving") {
    const RunResult r = run_cli(
        "converge --knots 0,0.6,1.1,1.9,2.5,3.2,3.9 --order 3 --h-start 0.1 --halvings 4 "
        "--points 60");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "h,max_error,ratio");
    CHECK(lines[1].back() == ',');  // no ratio on the first row
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto comma = lines[i].rfind(',');
        const double ratio = std::stod(lines[i].substr(comma + 1));
        CHECK(ratio > 1.7);
        CHECK(ratio < 2.3);
    }
}

TEST_SUITE_END();
