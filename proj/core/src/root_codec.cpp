#include "dupcode/root_codec.hpp"

#include "dupcode/numeric.hpp"

namespace dupcode {

RootCodecParams RootCodecParams::make(int q, std::size_t n, ComplementMap map) {
    return with_m(q, n, ceil_log(static_cast<std::uint64_t>(q), n) + 1, std::move(map));
}

RootCodecParams RootCodecParams::with_m(int q, std::size_t n, std::size_t m, ComplementMap map) {
    if (map.q() != q) throw AlphabetMismatch("root codec: alphabet mismatch");
    if (m < 2) throw InvalidArgument("root codec: m must be at least 2");
    if (n < 2) throw InvalidArgument("root codec: n must be at least 2");
    // The index field must be able to address any window start.
    if (n >= 2 * m && pow_at_most(static_cast<std::uint64_t>(q), m - 1, n - 2 * m + 1))
        throw InvalidArgument("root codec: index field q^(m-1) too narrow for n");
    return RootCodecParams{q, n, m, std::move(map)};
}

Word xi(const Word& x, const RootCodecParams& params) {
    if (x.size() != params.n) throw InvalidArgument("xi: length mismatch");
    const std::size_t i = first_violation(x, params.m, params.map);
    if (i == 0) throw IllegalInput("xi: input is already a root");
    const std::size_t m = params.m;
    Word out = x.subword(1, i + m - 1);
    out.append(x.subword(i + 2 * m, params.n));
    out.append(rep(RepWidth{params.q, m - 1}, i));
    return out;
}

Word xi_inv(const Word& y, const RootCodecParams& params) {
    const std::size_t n = params.n;
    const std::size_t m = params.m;
    if (y.size() != n - 1) throw InvalidArgument("xi_inv: length mismatch");
    const std::uint64_t i = rep_inv(RepWidth{params.q, m - 1}, y.subword(n - m + 1, n - 1));
    if (i < 1 || (n < 2 * m) || i > n - 2 * m + 1)
        throw CorruptIndex("xi_inv: recovered window index out of range");
    const std::size_t pos = static_cast<std::size_t>(i);
    Word out = y.subword(1, pos + m - 1);
    out.append(reverse_complement(params.map, y.subword(pos, pos + m - 1)));
    out.append(y.subword(pos + m, n - m));
    return out;
}

Word encode(const Word& x, const RootCodecParams& params) {
    if (x.size() != params.n - 1) throw InvalidArgument("encode: message must have length n-1");
    if (x.q() != params.q) throw AlphabetMismatch("encode: alphabet mismatch");
    Word y = x;
    y.append(Symbol{1});
    // Termination is guaranteed on valid inputs; the cap turns a broken
    // custom map into a hard error instead of a hang.
    const std::uint64_t cap = static_cast<std::uint64_t>(params.q) * params.n + 2;
    for (std::uint64_t iter = 0; iter < cap; ++iter) {
        if (first_violation(y, params.m, params.map) == 0) return y;
        y = xi(y, params);
        y.append(Symbol{0});
    }
    throw Error("encode: replacement loop exceeded its iteration cap");
}

Word decode(const Word& y, const RootCodecParams& params) {
    if (y.size() != params.n) throw InvalidArgument("decode: length mismatch");
    if (y.q() != params.q) throw AlphabetMismatch("decode: alphabet mismatch");
    Word cur = y;
    const std::uint64_t cap = static_cast<std::uint64_t>(params.q) * params.n + 2;
    for (std::uint64_t iter = 0; iter < cap; ++iter) {
        if (cur[cur.size() - 1] != 0) return cur.subword(1, params.n - 1);
        cur = xi_inv(cur.subword(1, params.n - 1), params);
    }
    throw CorruptIndex("decode: unwinding loop exceeded its iteration cap");
}

}  // namespace dupcode
