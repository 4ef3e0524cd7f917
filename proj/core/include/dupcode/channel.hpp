#pragma once

#include <cstdint>
#include <vector>

#include "dupcode/word.hpp"

namespace dupcode {

enum class DuplicationKind { ReverseComplement, Palindromic };

// One duplication: the length-k source block starting at `position`
// (1-based, against the word as it exists when the event is applied) gets
// its reversed-complemented (or merely reversed) copy inserted right after.
struct DuplicationEvent {
    DuplicationKind kind = DuplicationKind::ReverseComplement;
    std::size_t position = 1;
    std::size_t length = 1;
};

using Transcript = std::vector<DuplicationEvent>;

// Positions refer to the original word; consecutive positions must be at
// least `length` apart so the source blocks do not overlap.
struct DisjointPattern {
    std::size_t length = 1;
    std::vector<std::size_t> positions;
};

inline constexpr std::uint64_t kDefaultBallBudget = std::uint64_t{1} << 20;

Word apply(const Word& w, const DuplicationEvent& e, const ComplementMap& map);

// Sequential replay; each event is validated against the running length.
Word replay(const Word& w, const Transcript& events, const ComplementMap& map);

Word apply_disjoint(const Word& w, const DisjointPattern& pattern, const ComplementMap& map,
                    DuplicationKind kind = DuplicationKind::ReverseComplement);

// Exact radius-t ball: all words reachable by exactly t length-k
// duplications. Returned sorted (shortlex) without duplicates; t = 0
// yields {w}. Serves as the brute-force oracle everywhere.
std::vector<Word> ball(const Word& w, std::size_t k, int t, const ComplementMap& map,
                       DuplicationKind kind = DuplicationKind::ReverseComplement,
                       std::uint64_t budget = kDefaultBallBudget);

bool ball_contains(const std::vector<Word>& sorted_ball, const Word& w);

struct SampleResult {
    Word word;
    Transcript transcript;
};

// Deterministic for fixed (seed, trial): t events of length k at uniformly
// chosen valid positions. The result is reproducible by replaying the
// transcript.
SampleResult sample(const Word& w, std::size_t k, int t, const ComplementMap& map,
                    DuplicationKind kind, std::uint64_t seed, std::uint64_t trial = 0);

}  // namespace dupcode
