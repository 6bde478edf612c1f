#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string command = std::string(TOOL_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), got);
    const int status = pclose(pipe);
    return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(output)};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("burau subcommand prints the exact matrix") {
    const RunResult pretty = run("--n 3 --word \"1 -2\" burau");
    CHECK(pretty.exit_code == 0);
    CHECK(pretty.output.find("-t") != std::string::npos);
    CHECK(pretty.output.find("-t^-1+1") != std::string::npos);

    const RunResult identity = run("--n 3 --word \"\" burau");
    CHECK(identity.exit_code == 0);
    CHECK(identity.output == "[ 1, 0 ]\n[ 0, 1 ]\n");

    const RunResult degenerate = run("--n 2 --word \"1\" burau");
    CHECK(degenerate.exit_code == 0);
    CHECK(degenerate.output == "[ -t ]\n");

    const RunResult json = run("--n 3 --word \"1 -2\" --format json burau");
    const auto doc = nlohmann::json::parse(json.output);
    CHECK(doc["dim"] == 2);
    CHECK(doc["entries"][0][0] == nlohmann::json({{"1", -1}}));
    CHECK(doc["entries"][1][1] == nlohmann::json({{"-1", -1}, {"0", 1}}));
}

TEST_CASE("word files are read like inline words") {
    const RunResult r = run(std::string("--n 9 --word-file ") + DATA_DIR +
                            "/words/beta_3.braid --format json burau");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["dim"] == 8);
}

TEST_CASE("charpoly subcommand") {
    const RunResult pretty = run("--n 3 --word \"1 -2\" charpoly");
    CHECK(pretty.exit_code == 0);
    CHECK(pretty.output == "x^2+(t^-1-1+t)x+1\n");

    const RunResult json = run("--n 3 --word \"1 -2\" --format json charpoly");
    const auto doc = nlohmann::json::parse(json.output);
    CHECK(doc["x_degree"] == 2);
    CHECK(doc["coefficients"][2] == nlohmann::json({{"0", 1}}));
    CHECK(doc["coefficients"][1] == nlohmann::json({{"-1", 1}, {"0", -1}, {"1", 1}}));
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("--n 3 --word \"0\" burau").exit_code == 2);
    CHECK(run("--n 3 --word \"7\" burau").exit_code == 2);
    CHECK(run("--word \"1\" burau").exit_code == 2);  // missing --n
    CHECK(run("--n 3 --word \"1\" --format csv burau").exit_code == 2);
    CHECK(run("--n 3 --word \"1\" frobnicate").exit_code == 2);
    CHECK(run("--n 3 --word \"1\" scan").exit_code == 2);  // missing --resolution
}

TEST_CASE("scan writes deterministic csv atomically") {
    const auto path = temp_file("burau_cli_scan_test.csv");
    std::filesystem::remove(path);
    const std::string args =
        "--n 3 --word \"1 -2\" scan --resolution 8 --out " + path.string();
    CHECK(run(args).exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream first;
    first << in.rdbuf();
    CHECK(first.str().starts_with("theta,spectral_radius\n0,1\n"));
    CHECK(run(args).exit_code == 0);
    std::ifstream again(path);
    std::stringstream second;
    second << again.rdbuf();
    CHECK(first.str() == second.str());  // byte-identical rerun
    CHECK(!std::filesystem::exists(path.string() + ".tmp"));
    std::filesystem::remove(path);
}

TEST_CASE("sharp subcommand reports the golden root") {
    const RunResult r = run("--n 3 --word \"1 -2\" sharp --lambda 2.6180339887 --kmax 16");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    REQUIRE(doc["sharp"].size() == 1);
    CHECK(doc["sharp"][0]["j"] == 1);
    CHECK(doc["sharp"][0]["k"] == 2);
    CHECK(doc["minimal_k"] == 2);
}

TEST_CASE("unity subcommand") {
    const RunResult r = run("--n 3 --word \"1 -2\" unity --k 2");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["k"] == 2);
    CHECK(doc["spectra"].size() == 2);
}

TEST_CASE("cover-check subcommand") {
    const RunResult r = run("--n 4 --word \"1 -2 3 3\" cover-check --k 6");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["pass"] == true);
    CHECK(doc["shift_commutes"] == true);
    CHECK(doc["dim"] == 18);
}

TEST_CASE("predict subcommand") {
    const RunResult r = run(std::string("predict --reduction ") + DATA_DIR + "/reductions/beta_prime_2.json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["sharp"].empty());
    CHECK(doc["minimal_k"].is_null());

    const RunResult golden = run(std::string("predict --reduction ") + DATA_DIR + "/reductions/beta_1.json");
    const auto golden_doc = nlohmann::json::parse(golden.output);
    REQUIRE(golden_doc["sharp"].size() == 1);
    CHECK(golden_doc["sharp"][0] == nlohmann::json({{"j", 1}, {"k", 2}}));
    CHECK(golden_doc["k_bound"]["attains"] == true);

    // an inconsistent file is refused with exit 1
    const auto bad = temp_file("burau_cli_bad_reduction.json");
    std::ofstream out(bad);
    out << R"({"n": 9, "components": [{"ell": 1, "genus": 0, "is_pA": true,
               "is_max_entropy": true, "boundary": [{"m": 3, "kappa": 1}, {"m": 3, "kappa": 1},
               {"m": 3, "kappa": 1}], "interior": []}]})";
    out.close();
    CHECK(run("predict --reduction " + bad.string()).exit_code == 1);
    std::filesystem::remove(bad);

    CHECK(run("predict --reduction /nonexistent/file.json").exit_code == 1);
}
