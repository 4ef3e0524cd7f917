#include "dupcode/rcd_root.hpp"

#include "dupcode/numeric.hpp"

namespace dupcode {

namespace {

// True iff the two adjacent length-`len` windows starting at 0-based
// `start` form a reverse-complement repeat. Short-circuits on the first
// mismatching symbol pair.
bool rc_repeat_at(const std::vector<Symbol>& y, std::size_t start, std::size_t len,
                  const ComplementMap& map, OpCount* ops) {
    for (std::size_t j = 0; j < len; ++j) {
        if (ops) ++ops->symbol_compares;
        if (y[start + len + j] != map(y[start + len - 1 - j])) return false;
    }
    return true;
}

}  // namespace

RootParams RootParams::make(int q, std::size_t n, std::size_t m, ComplementMap map) {
    if (m < 2) throw InvalidArgument("root window length m must be at least 2");
    if (map.q() != q) throw AlphabetMismatch("root params: alphabet mismatch");
    return RootParams{q, n, m, std::move(map)};
}

std::size_t first_violation(const Word& w, std::size_t m, const ComplementMap& map) {
    if (map.q() != w.q()) throw AlphabetMismatch("first_violation: alphabet mismatch");
    if (m < 2) throw InvalidArgument("window length m must be at least 2");
    const auto& y = w.symbols();
    if (w.size() < 2 * m) return 0;
    for (std::size_t i0 = 0; i0 + 2 * m <= w.size(); ++i0) {
        if (rc_repeat_at(y, i0, m, map, nullptr)) return i0 + 1;
    }
    return 0;
}

bool is_root(const Word& w, const RootParams& params) {
    if (w.size() != params.n) throw InvalidArgument("is_root: length mismatch");
    return first_violation(w, params.m, params.map) == 0;
}

SingleDecodeResult decode_single(const Word& y, const RootParams& params, std::size_t k,
                                 OpCount* ops) {
    const std::size_t m = params.m;
    if (y.q() != params.q) throw AlphabetMismatch("decode_single: alphabet mismatch");
    if (k < 1 || k > params.n) throw InvalidArgument("decode_single: k outside [1, n]");
    if (y.size() != params.n + k) throw InvalidArgument("decode_single: length mismatch");
    const bool short_pair_case = (m == 2 && k == 2);
    if (k + 3 < 3 * m && !short_pair_case)
        throw InvalidArgument("decode_single: duplication length below the decodable threshold");

    const std::size_t window = short_pair_case ? 2 : 3 * m - 3;
    const auto& syms = y.symbols();
    const std::size_t len = y.size();
    if (len < 2 * window) throw NoMatch("decode_single: received word too short");
    for (std::size_t p0 = 0; p0 + 2 * window <= len; ++p0) {
        if (!rc_repeat_at(syms, p0, window, params.map, ops)) continue;
        // Smallest matching window; remove the k inserted symbols that
        // start right after it.
        const std::size_t cut0 = p0 + window;
        const std::size_t pos = short_pair_case ? p0 + 1 : p0 + 1 + (3 * m - 3) - k;
        if (pos < 1 || pos > params.n - k + 1)
            throw NoMatch("decode_single: matched window implies an invalid position");
        std::vector<Symbol> out(syms.begin(), syms.begin() + static_cast<std::ptrdiff_t>(cut0));
        out.insert(out.end(), syms.begin() + static_cast<std::ptrdiff_t>(cut0 + k), syms.end());
        return SingleDecodeResult{Word(params.q, std::move(out)), pos};
    }
    throw NoMatch("decode_single: no reverse-complement repeat found");
}

Word decode_disjoint(const Word& y, const RootParams& params, std::size_t k, int t,
                     OpCount* ops) {
    const std::size_t m = params.m;
    if (y.q() != params.q) throw AlphabetMismatch("decode_disjoint: alphabet mismatch");
    if (t < 0) throw InvalidArgument("decode_disjoint: negative duplication count");
    if (k < 1 || (t > 0 && k > params.n)) throw InvalidArgument("decode_disjoint: k outside [1, n]");
    if (k + 3 < 3 * m)
        throw InvalidArgument("decode_disjoint: duplication length below the decodable threshold");
    if (y.size() != params.n + static_cast<std::size_t>(t) * k)
        throw InvalidArgument("decode_disjoint: length mismatch");
    if (t == 0) return y;

    const std::size_t window = 3 * m - 3;
    std::vector<Symbol> cur = y.symbols();
    std::size_t p0 = 0;
    int remaining = t;
    while (remaining > 0) {
        if (p0 + 2 * window > cur.size())
            throw NoMatch("decode_disjoint: ran out of windows before all duplications were removed");
        if (rc_repeat_at(cur, p0, window, params.map, ops)) {
            cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(p0 + window),
                      cur.begin() + static_cast<std::ptrdiff_t>(p0 + window + k));
            --remaining;
            p0 += k;
        } else {
            ++p0;
        }
    }
    return Word(params.q, std::move(cur));
}

namespace {

struct RootDfs {
    const RootParams& params;
    std::uint64_t budget;
    std::uint64_t visited = 0;
    std::uint64_t count = 0;
    std::vector<Symbol> buf;
    const std::function<bool(const Word&)>* visit;
    bool stopped = false;

    // Extending the prefix only requires checking the single window that
    // ends at the new symbol; earlier windows were checked when completed.
    bool prefix_ok(std::size_t depth_done) const {
        const std::size_t m = params.m;
        if (depth_done < 2 * m) return true;
        const std::size_t i0 = depth_done - 2 * m;
        for (std::size_t j = 0; j < m; ++j) {
            if (buf[i0 + m + j] != params.map(buf[i0 + m - 1 - j])) return true;
        }
        return false;
    }

    void run(std::size_t depth) {
        if (stopped) return;
        if (++visited > budget) throw BudgetExceeded("root enumeration budget exceeded");
        if (depth == params.n) {
            ++count;
            if (visit && !(*visit)(Word(params.q, buf))) stopped = true;
            return;
        }
        for (Symbol s = 0; s < params.q && !stopped; ++s) {
            buf[depth] = s;
            if (!prefix_ok(depth + 1)) continue;
            run(depth + 1);
        }
    }
};

}  // namespace

std::uint64_t count_roots(const RootParams& params, std::uint64_t budget) {
    RootDfs dfs{params, budget, 0, 0, std::vector<Symbol>(params.n), nullptr, false};
    dfs.run(0);
    return dfs.count;
}

void for_each_root(const RootParams& params, const std::function<bool(const Word&)>& visit,
                   std::uint64_t budget) {
    RootDfs dfs{params, budget, 0, 0, std::vector<Symbol>(params.n), &visit, false};
    dfs.run(0);
}

std::vector<Word> enumerate_roots(const RootParams& params, std::uint64_t budget) {
    std::vector<Word> out;
    for_each_root(
        params,
        [&](const Word& w) {
            out.push_back(w);
            return true;
        },
        budget);
    return out;
}

}  // namespace dupcode
