#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dupcode/word.hpp"

namespace dupcode {

// Parameters of the root constraint: no two adjacent length-m windows may
// be reverse-complements of each other. With the identity map the same
// machinery covers the palindromic setting.
struct RootParams {
    int q;
    std::size_t n;
    std::size_t m;
    ComplementMap map;

    static RootParams make(int q, std::size_t n, std::size_t m, ComplementMap map);
};

// Symbol-comparison counter for the cost assertions on the deduplication
// scans; the scans are linear in word length with length-(3m-3) windows,
// independent of the duplication length.
struct OpCount {
    std::uint64_t symbol_compares = 0;
};

// Smallest 1-based window index violating the constraint, or 0 when none.
std::size_t first_violation(const Word& w, std::size_t m, const ComplementMap& map);

bool is_root(const Word& w, const RootParams& params);

struct SingleDecodeResult {
    Word word;
    std::size_t position;  // 1-based duplication position
};

// Removes one length-k duplication from the image of a root. Requires
// k >= 3m-3; the k = 2 case is additionally supported when m = 2. For
// k = 2 the reported position may be one short of the true one; the
// decoded word is exact either way.
SingleDecodeResult decode_single(const Word& y, const RootParams& params, std::size_t k,
                                 OpCount* ops = nullptr);

// Left-to-right removal of t disjoint length-k duplications, skipping k
// positions after each correction.
Word decode_disjoint(const Word& y, const RootParams& params, std::size_t k, int t,
                     OpCount* ops = nullptr);

inline constexpr std::uint64_t kDefaultEnumBudget = std::uint64_t{1} << 26;

// Exact count of roots of length n; DFS with pruning on the first violated
// window, so the amortized cost per word scanned is constant.
std::uint64_t count_roots(const RootParams& params, std::uint64_t budget = kDefaultEnumBudget);

// Visits roots in lexicographic order until the visitor returns false.
void for_each_root(const RootParams& params, const std::function<bool(const Word&)>& visit,
                   std::uint64_t budget = kDefaultEnumBudget);

std::vector<Word> enumerate_roots(const RootParams& params,
                                  std::uint64_t budget = kDefaultEnumBudget);

}  // namespace dupcode
