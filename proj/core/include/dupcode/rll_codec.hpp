#pragma once

#include <cstdint>
#include <vector>

#include "dupcode/word.hpp"

namespace dupcode {

// Run-length-limited codec: one redundant symbol turns any message of
// length n-1 into a length-n word whose runs all have length at most
// m = m1 + m2 + 1. Removed oversized-run windows are re-encoded at the
// tail as (phi value, position) fields behind an even marker symbol; the
// initial marker is odd, so the final symbol's parity tells the decoder
// whether anything was removed.
struct RllParams {
    int q;
    std::size_t n;
    std::size_t m1;  // width of the position field
    std::size_t m2;  // width of the phi field
    std::size_t m;
    ComplementMap map;  // the paired complement

    static RllParams make(int q, std::size_t n);
};

// Marker symbols: h1 is odd, h2 is even, and both avoid {a, complement(a)}.
Symbol h1(Symbol a, int q);
Symbol h2(Symbol a, int q);

Word rll_encode(const Word& x, const RllParams& params);
Word rll_decode(const Word& y, const RllParams& params);

bool is_rll(const Word& w, std::size_t m, const ComplementMap& map);

inline constexpr std::uint64_t kDefaultRllBudget = std::uint64_t{1} << 26;

// Exact count of m-RLL words of length n over the paired alphabet.
std::uint64_t count_rll(std::size_t n, std::size_t m, int q,
                        std::uint64_t budget = kDefaultRllBudget);

}  // namespace dupcode
