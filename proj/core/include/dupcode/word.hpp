#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dupcode/errors.hpp"

namespace dupcode {

using Symbol = std::int32_t;

// A finite string over the q-ary alphabet [0, q-1].
//
// Positions in public interfaces are 1-based throughout the library;
// subword(i, j) mirrors the closed-interval notation and yields the empty
// word when i > j. operator[] is the usual 0-based accessor.
class Word {
public:
    Word() = default;
    explicit Word(int q);
    Word(int q, std::vector<Symbol> symbols);

    // Text form shared by every module and the CLI: a contiguous ASCII
    // digit string for q <= 10, comma-separated decimal integers otherwise.
    static Word from_text(std::string_view text, int q);
    std::string text() const;

    int q() const noexcept { return q_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }

    Symbol operator[](std::size_t index0) const { return symbols_[index0]; }
    Symbol at1(std::size_t pos1) const;

    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

    Word subword(std::size_t first1, std::size_t last1) const;

    Word& append(Symbol s);
    Word& append(const Word& other);

    friend bool operator==(const Word& a, const Word& b) {
        return a.q_ == b.q_ && a.symbols_ == b.symbols_;
    }
    // Shortlex: by length, then lexicographically. Gives every set of words
    // a canonical deterministic order.
    friend bool operator<(const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.symbols_ < b.symbols_;
    }

private:
    int q_ = 0;
    std::vector<Symbol> symbols_;
};

Word concat(const Word& a, const Word& b);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

enum class ComplementMode { Paired, Identity, Custom };

// An involution on the alphabet. Paired mode is the fixed-point-free
// pairing {2i, 2i+1}; identity models the purely palindromic setting;
// custom tables are validated eagerly.
class ComplementMap {
public:
    static ComplementMap paired(int q);
    static ComplementMap identity(int q);
    static ComplementMap custom(int q, std::vector<Symbol> table);

    int q() const noexcept { return q_; }
    ComplementMode mode() const noexcept { return mode_; }

    Symbol operator()(Symbol a) const;

    bool fixed_point_free() const;

private:
    ComplementMap(int q, ComplementMode mode, std::vector<Symbol> table);

    int q_ = 0;
    ComplementMode mode_ = ComplementMode::Identity;
    std::vector<Symbol> table_;
};

Word complement(const ComplementMap& map, const Word& w);
Word reversed(const Word& w);
Word reverse_complement(const ComplementMap& map, const Word& w);

// Fixed-width base-q integer representation, big-endian.
struct RepWidth {
    int q;
    std::size_t m;
};

Word rep(const RepWidth& width, std::uint64_t value);
std::uint64_t rep_inv(const RepWidth& width, const Word& w);

}  // namespace dupcode
