#pragma once

#include "dupcode/rcd_root.hpp"
#include "dupcode/word.hpp"

namespace dupcode {

// Sequence-replacement codec into roots: messages of length n-1 map to
// roots of length n, exactly one redundant symbol. The window length
// defaults to ceil(log_q n) + 1 so the index field fits in m-1 symbols.
struct RootCodecParams {
    int q;
    std::size_t n;
    std::size_t m;
    ComplementMap map;

    static RootCodecParams make(int q, std::size_t n, ComplementMap map);
    static RootCodecParams with_m(int q, std::size_t n, std::size_t m, ComplementMap map);

    RootParams root_params() const { return RootParams{q, n, m, map}; }
};

// Replaces the first violating window pair by its index: output length n-1.
Word xi(const Word& x, const RootCodecParams& params);

// Re-expands a replaced window from the trailing index field: output
// length n.
Word xi_inv(const Word& y, const RootCodecParams& params);

// Iterative encoder: append marker 1, then replace violating windows
// (appending marker 0) until the word is a root.
Word encode(const Word& x, const RootCodecParams& params);

// Unwinds replacements while the last symbol is 0, then strips the
// trailing 1.
Word decode(const Word& y, const RootCodecParams& params);

}  // namespace dupcode
