#include "dupcode/numeric.hpp"

#include <limits>

#include "dupcode/errors.hpp"

namespace dupcode {

std::size_t ceil_log(std::uint64_t base, std::uint64_t n) {
    if (base < 2 || n < 1) throw InvalidArgument("ceil_log: base >= 2 and n >= 1 required");
    std::size_t e = 0;
    std::uint64_t p = 1;
    while (p < n) {
        if (p > std::numeric_limits<std::uint64_t>::max() / base)
            throw Overflow("ceil_log: power overflow");
        p *= base;
        ++e;
    }
    return e;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            throw Overflow("pow_u64: result exceeds 64 bits");
        r *= base;
    }
    return r;
}

bool pow_at_most(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) return false;
        r *= base;
        if (r > limit) return false;
    }
    return r <= limit;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::uint64_t next_prime_at_least(std::uint64_t n) {
    if (n <= 2) return 2;
    std::uint64_t c = n | 1;
    while (!is_prime_u64(c)) c += 2;
    return c;
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed ^ mix64(stream + 0xa5a5a5a5a5a5a5a5ULL))) {}

std::uint64_t CounterRng::next() {
    return mix64(key_ ^ (0xd6e8feb86659fd93ULL * ++counter_));
}

std::uint64_t CounterRng::below(std::uint64_t bound) {
    if (bound == 0) throw InvalidArgument("CounterRng::below: bound must be positive");
    // Rejection sampling keeps the draw unbiased and platform independent.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
}

}  // namespace dupcode
