#include "dupcode/rll_codec.hpp"

#include <cstdint>

#include "dupcode/numeric.hpp"
#include "dupcode/run_algebra.hpp"

namespace dupcode {

namespace {

void check_rll_q(int q) {
    if (q < 4 || q % 2 != 0)
        throw InvalidArgument("run-length-limited coding requires an even alphabet with q >= 4");
}

}  // namespace

RllParams RllParams::make(int q, std::size_t n) {
    check_rll_q(q);
    if (n < 2) throw InvalidArgument("rll params: n must be at least 2");
    const std::size_t m1 = ceil_log(static_cast<std::uint64_t>(q), n);
    // Smallest m2 with (q/2)^m2 >= 2^(m1+1); equivalently q^m2 >= 2^m.
    const std::size_t m2 = ceil_log(static_cast<std::uint64_t>(q) / 2, pow_u64(2, m1 + 1));
    const std::size_t m = m1 + m2 + 1;
    if (m > 62) throw Overflow("rll params: phi field exceeds the 64-bit carrier");
    if (pow_u64(static_cast<std::uint64_t>(q), m2) < pow_u64(2, m))
        throw Error("rll params: phi field width is inconsistent");
    return RllParams{q, n, m1, m2, m, ComplementMap::paired(q)};
}

Symbol h1(Symbol a, int q) {
    check_rll_q(q);
    if (a < 0 || a >= q) throw InvalidArgument("h1: symbol out of range");
    return static_cast<Symbol>((2 * (a / 2) + 3) % q);
}

Symbol h2(Symbol a, int q) {
    check_rll_q(q);
    if (a < 0 || a >= q) throw InvalidArgument("h2: symbol out of range");
    return static_cast<Symbol>((2 * (a / 2) + 2) % q);
}

bool is_rll(const Word& w, std::size_t m, const ComplementMap& map) {
    for (std::size_t len : decompose(w, map).lengths) {
        if (len > m) return false;
    }
    return true;
}

Word rll_encode(const Word& x, const RllParams& params) {
    const std::size_t n = params.n;
    const std::size_t m = params.m;
    if (x.size() != n - 1) throw InvalidArgument("rll_encode: message must have length n-1");
    if (x.q() != params.q) throw AlphabetMismatch("rll_encode: alphabet mismatch");

    std::vector<Symbol> y = x.symbols();
    y.push_back(h1(y.back(), params.q));

    std::int64_t i = 1;  // 1-based head of the run under inspection
    std::int64_t i_end = static_cast<std::int64_t>(n) - 1 - static_cast<std::int64_t>(m);
    while (i <= i_end) {
        const Symbol a = y[static_cast<std::size_t>(i - 1)];
        const Symbol b = params.map(a);
        std::int64_t j = i + 1;
        while (j <= static_cast<std::int64_t>(n)) {
            const Symbol s = y[static_cast<std::size_t>(j - 1)];
            if (s != a && s != b) break;
            ++j;
        }
        // The final symbol is always a marker for its left neighbour, so a
        // run starting at i <= i_end cannot reach past position n.
        if (j > static_cast<std::int64_t>(n))
            throw Error("rll_encode: run reached the end of the word");
        while (j >= i + static_cast<std::int64_t>(m) + 1) {
            // Cut y[i+1 .. i+m], keeping y_i, and append the phi and
            // position fields plus an even marker.
            std::uint64_t val = 0;
            for (std::int64_t s = i; s <= i + static_cast<std::int64_t>(m); ++s)
                val = (val << 1) | (y[static_cast<std::size_t>(s - 1)] == a ? 1u : 0u);
            std::vector<Symbol> ny(y.begin(), y.begin() + i);
            ny.insert(ny.end(), y.begin() + i + static_cast<std::int64_t>(m), y.end());
            const Word phi_field = rep(RepWidth{params.q, params.m2}, val - (std::uint64_t{1} << m));
            const Word pos_field = rep(RepWidth{params.q, params.m1}, static_cast<std::uint64_t>(i));
            ny.insert(ny.end(), phi_field.symbols().begin(), phi_field.symbols().end());
            ny.insert(ny.end(), pos_field.symbols().begin(), pos_field.symbols().end());
            ny.push_back(h2(ny.back(), params.q));
            y.swap(ny);
            j -= static_cast<std::int64_t>(m);
            i_end -= static_cast<std::int64_t>(m);
        }
        i = j;
    }
    return Word(params.q, std::move(y));
}

Word rll_decode(const Word& y, const RllParams& params) {
    const std::size_t n = params.n;
    const std::size_t m = params.m;
    if (y.size() != n) throw InvalidArgument("rll_decode: length mismatch");
    if (y.q() != params.q) throw AlphabetMismatch("rll_decode: alphabet mismatch");

    std::vector<Symbol> v = y.symbols();
    std::size_t guard = 0;
    while (v.back() % 2 == 0) {
        if (++guard > n) throw CorruptField("rll_decode: unwinding loop exceeded its cap");
        const Word cur(params.q, v);
        const std::uint64_t i = rep_inv(RepWidth{params.q, params.m1}, cur.subword(n - params.m1, n - 1));
        const std::uint64_t a =
            rep_inv(RepWidth{params.q, params.m2}, cur.subword(n - params.m1 - params.m2, n - params.m1 - 1)) +
            (std::uint64_t{1} << m);
        if (i < 1 || i > n - m) throw CorruptField("rll_decode: position field out of range");
        if (a >= (std::uint64_t{1} << (m + 1)))
            throw CorruptField("rll_decode: phi field out of range");
        const Symbol first = v[static_cast<std::size_t>(i - 1)];
        const Symbol other = params.map(first);
        std::vector<Symbol> nv(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(i - 1));
        for (std::size_t p = m + 1; p-- > 0;) nv.push_back(((a >> p) & 1) ? first : other);
        nv.insert(nv.end(), v.begin() + static_cast<std::ptrdiff_t>(i),
                  v.begin() + static_cast<std::ptrdiff_t>(n - m));
        v.swap(nv);
    }
    v.pop_back();
    return Word(params.q, std::move(v));
}

namespace {

struct RllDfs {
    std::size_t n;
    std::size_t m;
    int q;
    const ComplementMap& map;
    std::uint64_t budget;
    std::uint64_t visited = 0;
    std::uint64_t count = 0;

    void run(std::size_t depth, Symbol run_first, std::size_t run_len) {
        if (++visited > budget) throw BudgetExceeded("rll count budget exceeded");
        if (depth == n) {
            ++count;
            return;
        }
        for (Symbol s = 0; s < q; ++s) {
            if (depth > 0 && (s == run_first || s == map(run_first))) {
                if (run_len + 1 > m) continue;
                run(depth + 1, run_first, run_len + 1);
            } else {
                run(depth + 1, s, 1);
            }
        }
    }
};

}  // namespace

std::uint64_t count_rll(std::size_t n, std::size_t m, int q, std::uint64_t budget) {
    check_rll_q(q);
    if (m < 1) throw InvalidArgument("count_rll: m must be positive");
    const ComplementMap map = ComplementMap::paired(q);
    RllDfs dfs{n, m, q, map, budget, 0, 0};
    dfs.run(0, 0, 0);
    return dfs.count;
}

}  // namespace dupcode
