#include <doctest.h>

#include <array>
#include <cstdio>
#include <regex>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
    int exit_code;
    std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args, const std::string& stdin_data = "") {
    std::string cmd = std::string(DUPCODE_CLI_PATH) + " " + args + " 2>&1";
    if (!stdin_data.empty()) {
        cmd = "printf '%s' '" + stdin_data + "' | " + cmd;
    } else {
        cmd = cmd + " < /dev/null";
    }
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return CliResult{WEXITSTATUS(status), out};
}

std::string strip_elapsed(std::string text) {
    // elapsed_ms is wall-clock and explicitly excluded from byte-stability.
    static const std::regex re("\"elapsed_ms\": *[0-9.e+-]+,?\n?");
    return std::regex_replace(text, re, "");
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("channel reproduces the worked duplication") {
    const auto r = run_cli("channel --q 2 --kind rc --k 4 --pos 6 000111000");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0001110001110") != std::string::npos);
    CHECK(r.output.find("\"position\":6") != std::string::npos);
}

TEST_CASE("channel echoes its input at t=0 and reads stdin") {
    const auto r = run_cli("channel --q 4 --k 1 --t 0", "01230\n");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("01230") != std::string::npos);
    CHECK(r.output.find("[]") != std::string::npos);
}

TEST_CASE("channel transcripts replay deterministically for fixed seeds") {
    const auto a = run_cli("channel --q 4 --k 1 --t 2 --seed 9 --format json 23230101");
    const auto b = run_cli("channel --q 4 --k 1 --t 2 --seed 9 --format json 23230101");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    const auto c = run_cli("channel --q 4 --k 1 --t 2 --seed 10 --format json 23230101");
    CHECK(a.output != c.output);
}

TEST_CASE("invalid input exits with code 2") {
    CHECK(run_cli("channel --q 2 --k 4 --pos 99 000111000").exit_code == 2);
    CHECK(run_cli("channel --q 2 --k 4 --pos 6 0002111000").exit_code == 2);
    CHECK(run_cli("verify no-such-suite").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("verify reports counts and exits zero on success") {
    const auto r = run_cli("verify lemma5 --q 2 --n 8");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["failures"] == 0);
    CHECK(j["data"]["counts"][0]["count"] >= 128);
    CHECK(j.contains("version"));
}

TEST_CASE("verify accepts the documented exhaustive-roundtrip invocation") {
    const auto r = run_cli("verify roundtrip-rll --q 4 --n 10 --exhaustive");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["failures"] == 0);
    CHECK(j["data"]["golden_output"] == "01213333003000000030");
}

TEST_CASE("verify example1 reproduces both collisions") {
    const auto r = run_cli("verify example1 --q 4");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["failures"] == 0);
    CHECK(j["data"]["target"] == "23230101");
}

TEST_CASE("reports are byte-stable apart from elapsed time") {
    const auto a = run_cli("verify lemma8 --n 4 --trials 50 --seed 5");
    const auto b = run_cli("verify lemma8 --n 4 --trials 50 --seed 5");
    CHECK(a.exit_code == 0);
    CHECK(strip_elapsed(a.output) == strip_elapsed(b.output));
}

TEST_CASE("the environment seed is picked up when no flag is given") {
    const std::string cmd = "env DUPCODE_SEED=1234 " + std::string(DUPCODE_CLI_PATH) +
                            " verify lemma8 --n 3 --trials 10 2>&1 < /dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    const auto j = nlohmann::json::parse(out);
    CHECK(j["seed"] == 1234);
}

TEST_CASE("construction pipelines round trip through containers") {
    const auto enc = run_cli("encode --code c1 --q 4 --n 16 --t 1 012301230123012");
    REQUIRE(enc.exit_code == 0);
    const auto container = nlohmann::json::parse(enc.output);
    CHECK(container["mode"] == "c1");
    const std::string line = container.dump();
    const auto dec = run_cli("decode --code c1", line);
    REQUIRE(dec.exit_code == 0);
    CHECK(dec.output.find("012301230123012") != std::string::npos);
}

TEST_CASE("root and rll pipelines round trip words") {
    const auto enc = run_cli("encode --code root --q 2 --n 12 01100110011");
    REQUIRE(enc.exit_code == 0);
    const std::string cw = enc.output.substr(0, enc.output.find('\n'));
    const auto dec = run_cli("decode --code root --q 2 --n 12 " + cw);
    REQUIRE(dec.exit_code == 0);
    CHECK(dec.output.find("01100110011") != std::string::npos);

    const auto enc2 = run_cli("encode --code rll --q 4 --n 20 0122222222233333333");
    REQUIRE(enc2.exit_code == 0);
    CHECK(enc2.output.find("01213333003000000030") != std::string::npos);
}

TEST_CASE("gv emits the report fields") {
    const auto r = run_cli("gv --q 2 --n 6 --vertices all");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["n"] == 6);
    CHECK(j.contains("alon_bound"));
    CHECK(j.contains("code_size"));
    CHECK(j.contains("redundancy"));
    CHECK(j.contains("max_degree"));
    CHECK(j.contains("per_k_max_neighborhood"));
}

TEST_CASE("fuzz campaigns are reproducible and pass") {
    const auto a = run_cli("fuzz --code c2 --q 4 --n 24 --t 1 --trials 40 --seed 3");
    REQUIRE(a.exit_code == 0);
    const auto b = run_cli("fuzz --code c2 --q 4 --n 24 --t 1 --trials 40 --seed 3");
    CHECK(strip_elapsed(a.output) == strip_elapsed(b.output));
    const auto j = nlohmann::json::parse(a.output);
    CHECK(j["failures"] == 0);
    CHECK(j["trials"] == 40);
}

TEST_SUITE_END();
