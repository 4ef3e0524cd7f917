#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dupcode/dup_codes.hpp"
#include "dupcode/json_io.hpp"

namespace dupcode::suites {

// Optional overrides; every suite has pinned defaults chosen so that the
// default run is the normative desk-scale check.
struct SuiteOptions {
    std::optional<int> q;
    std::optional<std::size_t> n;
    std::optional<std::size_t> m;
    std::optional<std::size_t> k;
    std::optional<int> t;
    std::optional<std::uint64_t> trials;
    std::uint64_t seed = 0;
    std::uint64_t budget = std::uint64_t{1} << 26;
    DuplicationKind kind = DuplicationKind::ReverseComplement;
};

struct RunReport {
    std::string command = "verify";
    std::string suite;
    json parameters = json::object();
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    json data = json::object();
    std::uint64_t seed = 0;
    double elapsed_ms = 0.0;  // informational; not part of the stable bytes
    std::vector<std::string> notes;

    json to_json() const;
    bool passed() const { return failures == 0; }
};

std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

RunReport run_suite(const std::string& name, const SuiteOptions& opts);

// Seeded end-to-end campaign against one construction layout: encode a
// random payload, apply exactly t length-one duplications at random
// positions, decode, and (optionally) assert the first-window invariants
// per trial. Used by the construction suites and the fuzz command.
RunReport fuzz_construction(const CodeLayout& layout, std::uint64_t trials, std::uint64_t seed,
                            bool window_checks);

}  // namespace dupcode::suites
