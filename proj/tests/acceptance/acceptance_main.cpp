// Acceptance harness: runs the fifteen desk-scale criteria through the
// named verification suites with their pinned parameters and prints one
// pass/fail line per criterion. Exit code 0 iff every selected criterion
// passes.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "dupcode/numeric.hpp"
#include "dupcode/suites.hpp"

using dupcode::suites::RunReport;
using dupcode::suites::SuiteOptions;
using dupcode::suites::run_suite;

namespace {

struct Criterion {
    int number;
    std::string suite;
    // Extra validation on the suite's report beyond failures == 0.
    bool (*extra)(const RunReport&, std::string&);
};

bool no_extra(const RunReport&, std::string&) { return true; }

bool check_lemma5(const RunReport& r, std::string& why) {
    const auto& counts = r.data.at("counts");
    if (counts.size() != 2) {
        why = "expected both pinned count cases";
        return false;
    }
    const std::uint64_t a8 = counts[0].at("count").get<std::uint64_t>();
    const std::uint64_t a16 = counts[1].at("count").get<std::uint64_t>();
    if (a8 < 128) {
        why = "count at n=8 below 128";
        return false;
    }
    if (a16 < 32768) {
        why = "count at n=16 below 2^15";
        return false;
    }
    why = "counts " + std::to_string(a8) + ", " + std::to_string(a16);
    return true;
}

bool check_theorem8(const RunReport& r, std::string& why) {
    const double reported = r.data.at("gv_quotient").get<double>();
    const double local = 1.0 * std::pow(2.0, 9.0) / (3.0 * 10 * 10 * dupcode::ceil_log(2, 10));
    if (std::abs(reported - local) > 1e-9) {
        why = "reported quotient diverges from the recomputed one";
        return false;
    }
    const auto size = r.data.at("report").at("code_size").get<double>();
    if (size < local) {
        why = "greedy code smaller than the quotient";
        return false;
    }
    why = "code size " + std::to_string(static_cast<long long>(size));
    return true;
}

bool check_lemma9(const RunReport& r, std::string& why) {
    const std::uint64_t count = r.data.at("count").get<std::uint64_t>();
    if (count < 2048) {
        why = "count below 4^6 - 2*4^5";
        return false;
    }
    why = "count " + std::to_string(count);
    return true;
}

bool check_rll(const RunReport& r, std::string& why) {
    if (r.data.at("golden_output").get<std::string>() != "01213333003000000030") {
        why = "length-20 golden vector mismatch";
        return false;
    }
    return true;
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "counterexample", no_extra},
        {2, "example1", no_extra},
        {3, "lemma7", no_extra},
        {4, "lemma5", check_lemma5},
        {5, "theorem1", no_extra},
        {6, "theorem2", no_extra},
        {7, "lemma6", no_extra},
        {8, "theorem8", check_theorem8},
        {9, "lemma8", no_extra},
        {10, "lemma9", check_lemma9},
        {11, "example2", no_extra},
        {12, "roundtrip-rll", check_rll},
        {13, "protect", no_extra},
        {14, "construction1", no_extra},
        {15, "construction2", no_extra},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const Criterion& c : criteria()) {
        if (!wanted.empty() &&
            std::find(wanted.begin(), wanted.end(), c.number) == wanted.end())
            continue;
        SuiteOptions opts;
        opts.seed = 0;
        RunReport report;
        bool ok = true;
        std::string detail;
        try {
            report = run_suite(c.suite, opts);
            ok = report.passed() && c.extra(report, detail);
            if (!report.passed() && !report.notes.empty()) detail = report.notes.front();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        if (!ok) ++failures;
        std::printf("criterion %02d [%s] %s (%llu checks, %llu failures, %.1f ms)%s%s\n",
                    c.number, c.suite.c_str(), ok ? "PASS" : "FAIL",
                    static_cast<unsigned long long>(report.trials),
                    static_cast<unsigned long long>(report.failures), report.elapsed_ms,
                    detail.empty() ? "" : " -- ", detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
