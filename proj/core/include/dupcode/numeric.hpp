#pragma once

#include <cstdint>

namespace dupcode {

// Smallest e >= 0 with base^e >= n. Requires base >= 2, n >= 1.
std::size_t ceil_log(std::uint64_t base, std::uint64_t n);

// base^exp; throws Overflow if the result does not fit 64 bits.
std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp);

// True iff base^exp <= limit, evaluated without overflow.
bool pow_at_most(std::uint64_t base, std::uint64_t exp, std::uint64_t limit);

bool is_prime_u64(std::uint64_t n);
std::uint64_t next_prime_at_least(std::uint64_t n);

// Counter-based generator: every draw is a pure function of
// (seed, stream, draw index), so campaigns partition deterministically.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next();

    // Uniform in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace dupcode
