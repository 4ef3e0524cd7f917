#include "dupcode/protect.hpp"

#include <algorithm>
#include <optional>

#include "dupcode/numeric.hpp"

namespace dupcode {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % mod);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t r = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t prime) { return powmod(a, prime - 2, prime); }

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return (a + mod - b % mod) % mod;
}

// Solves the square system A x = b over F_prime in place. Returns nullopt
// when A is singular.
std::optional<std::vector<std::uint64_t>> solve_mod(std::vector<std::vector<std::uint64_t>> a,
                                                    std::vector<std::uint64_t> b,
                                                    std::uint64_t prime) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        const std::uint64_t inv = invmod(a[col][col], prime);
        for (std::size_t j = col; j < n; ++j) a[col][j] = mulmod(a[col][j], inv, prime);
        b[col] = mulmod(b[col], inv, prime);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const std::uint64_t f = a[row][col];
            for (std::size_t j = col; j < n; ++j)
                a[row][j] = submod(a[row][j], mulmod(f, a[col][j], prime), prime);
            b[row] = submod(b[row], mulmod(f, b[col], prime), prime);
        }
    }
    return b;
}

std::vector<std::uint64_t> power_sums(const std::vector<std::uint64_t>& msg,
                                      const SubstHashParams& p) {
    std::vector<std::uint64_t> s(2 * static_cast<std::size_t>(p.t), 0);
    for (std::size_t i = 0; i < msg.size(); ++i) {
        const std::uint64_t node = (i + 1) % p.prime;
        std::uint64_t term = msg[i] % p.prime;
        for (auto& sj : s) {
            term = mulmod(term, node, p.prime);
            sj = (sj + term) % p.prime;
        }
    }
    return s;
}

void check_zeta_msg(const std::vector<std::uint64_t>& msg, const SubstHashParams& p,
                    const char* who) {
    if (msg.size() != p.length) throw InvalidArgument(std::string(who) + ": length mismatch");
    for (std::uint64_t v : msg) {
        if (v >= p.alphabet) throw InvalidArgument(std::string(who) + ": symbol overflow");
    }
}

}  // namespace

SubstHashParams SubstHashParams::make(int t, std::uint64_t alphabet, std::size_t length) {
    if (t < 1) throw InvalidArgument("substitution hash: t must be positive");
    if (alphabet < 2) throw InvalidArgument("substitution hash: alphabet must have size >= 2");
    if (length < 1) throw InvalidArgument("substitution hash: empty message");
    const std::uint64_t floor =
        std::max<std::uint64_t>(length + 1, 2 * static_cast<std::uint64_t>(t) * (alphabet - 1) + 1);
    return SubstHashParams{t, alphabet, length, next_prime_at_least(floor)};
}

std::vector<std::uint64_t> zeta_hash(const std::vector<std::uint64_t>& msg,
                                     const SubstHashParams& params) {
    check_zeta_msg(msg, params, "zeta_hash");
    return power_sums(msg, params);
}

std::vector<std::uint64_t> zeta_decode(const std::vector<std::uint64_t>& corrupted,
                                       const std::vector<std::uint64_t>& digest,
                                       const SubstHashParams& params) {
    check_zeta_msg(corrupted, params, "zeta_decode");
    if (digest.size() != 2 * static_cast<std::size_t>(params.t))
        throw InvalidArgument("zeta_decode: digest size mismatch");
    const std::uint64_t ell = params.prime;
    const std::size_t two_t = digest.size();

    std::vector<std::uint64_t> want(two_t);
    for (std::size_t j = 0; j < two_t; ++j) want[j] = digest[j] % ell;
    const std::vector<std::uint64_t> have = power_sums(corrupted, params);
    std::vector<std::uint64_t> diff(two_t);
    for (std::size_t j = 0; j < two_t; ++j) diff[j] = submod(want[j], have[j], ell);

    if (std::all_of(diff.begin(), diff.end(), [](std::uint64_t v) { return v == 0; }))
        return corrupted;

    for (std::size_t w = 1; w <= static_cast<std::size_t>(params.t); ++w) {
        // Locator coefficients from the Hankel system
        // diff[j+w] = sum_i lambda_i diff[j+w-i].
        std::vector<std::vector<std::uint64_t>> a(w, std::vector<std::uint64_t>(w));
        std::vector<std::uint64_t> b(w);
        for (std::size_t row = 0; row < w; ++row) {
            for (std::size_t col = 0; col < w; ++col) a[row][col] = diff[row + w - 1 - col];
            b[row] = diff[row + w];
        }
        auto lambda = solve_mod(a, b, ell);
        if (!lambda) continue;

        // Error positions are the nodes where the locator recurrence holds.
        std::vector<std::uint64_t> positions;
        for (std::uint64_t pos = 1; pos <= params.length; ++pos) {
            std::uint64_t lhs = powmod(pos, w, ell);
            std::uint64_t rhs = 0;
            for (std::size_t i = 0; i < w; ++i)
                rhs = (rhs + mulmod((*lambda)[i], powmod(pos, w - 1 - i, ell), ell)) % ell;
            if (lhs == rhs) positions.push_back(pos);
            if (positions.size() > w) break;
        }
        if (positions.size() != w) continue;

        // Magnitudes from the first w syndromes, verified on the rest.
        std::vector<std::vector<std::uint64_t>> vm(w, std::vector<std::uint64_t>(w));
        std::vector<std::uint64_t> rhs(w);
        for (std::size_t row = 0; row < w; ++row) {
            for (std::size_t col = 0; col < w; ++col)
                vm[row][col] = powmod(positions[col], row + 1, ell);
            rhs[row] = diff[row];
        }
        auto mags = solve_mod(vm, rhs, ell);
        if (!mags) continue;
        bool consistent = true;
        for (std::size_t j = w; j < two_t && consistent; ++j) {
            std::uint64_t sum = 0;
            for (std::size_t i = 0; i < w; ++i)
                sum = (sum + mulmod((*mags)[i], powmod(positions[i], j + 1, ell), ell)) % ell;
            consistent = (sum == diff[j]);
        }
        if (!consistent) continue;

        // Residues map back to signed magnitudes in [-(Q-1), Q-1]; the
        // prime floor makes the signed representative unique.
        std::vector<std::uint64_t> out = corrupted;
        bool valid = true;
        for (std::size_t i = 0; i < w && valid; ++i) {
            const std::uint64_t r = (*mags)[i];
            const std::size_t idx = static_cast<std::size_t>(positions[i] - 1);
            if (r == 0) {
                valid = false;
            } else if (r <= params.alphabet - 1 && out[idx] + r <= params.alphabet - 1) {
                out[idx] += r;
            } else if (ell - r <= params.alphabet - 1 && out[idx] >= ell - r) {
                out[idx] -= (ell - r);
            } else {
                valid = false;
            }
        }
        if (!valid) continue;
        if (power_sums(out, params) == want) return out;
    }
    throw DecodeFail("zeta_decode: no candidate within t substitutions matches the digest");
}

IndelHashParams IndelHashParams::tenengolts(std::uint64_t alphabet, std::size_t length) {
    if (alphabet < 2) throw InvalidArgument("indel hash: alphabet must have size >= 2");
    if (length < 1) throw InvalidArgument("indel hash: empty message");
    return IndelHashParams{1, EtaMode::TenengoltsT1, alphabet, length};
}

IndelHashParams IndelHashParams::full(int t, std::uint64_t alphabet, std::size_t length) {
    if (t < 1) throw InvalidArgument("indel hash: t must be positive");
    return IndelHashParams{t, EtaMode::Full, alphabet, length};
}

namespace {

void check_eta_msg(const std::vector<std::uint64_t>& msg, const IndelHashParams& p,
                   const char* who) {
    for (std::uint64_t v : msg) {
        if (v >= p.alphabet) throw InvalidArgument(std::string(who) + ": symbol overflow");
    }
}

std::vector<std::uint64_t> tenengolts_pair(const std::vector<std::uint64_t>& msg,
                                           const IndelHashParams& p) {
    std::uint64_t gamma = 0;
    std::uint64_t delta = 0;
    for (std::uint64_t v : msg) gamma = (gamma + v) % p.alphabet;
    for (std::size_t i = 1; i < msg.size(); ++i) {
        if (msg[i] >= msg[i - 1]) delta += i;
    }
    return {gamma, delta % std::max<std::uint64_t>(p.length, 1)};
}

}  // namespace

std::vector<std::uint64_t> eta_hash(const std::vector<std::uint64_t>& msg,
                                    const IndelHashParams& params) {
    if (msg.size() != params.length) throw InvalidArgument("eta_hash: length mismatch");
    check_eta_msg(msg, params, "eta_hash");
    if (params.mode == EtaMode::Full) return msg;
    return tenengolts_pair(msg, params);
}

std::vector<std::uint64_t> eta_decode(const std::vector<std::uint64_t>& corrupted,
                                      const std::vector<std::uint64_t>& digest,
                                      const IndelHashParams& params) {
    check_eta_msg(corrupted, params, "eta_decode");
    if (params.mode == EtaMode::Full) {
        if (digest.size() != params.length) throw DecodeFail("eta_decode: stored message malformed");
        return digest;
    }
    if (digest.size() != 2) throw InvalidArgument("eta_decode: digest size mismatch");
    const std::size_t n = params.length;
    if (corrupted.size() == n) {
        if (tenengolts_pair(corrupted, params) != digest)
            throw DecodeFail("eta_decode: checksum mismatch on an unchanged-length word");
        return corrupted;
    }
    if (corrupted.size() == n + 1) {
        for (std::size_t d = 0; d <= n; ++d) {
            std::vector<std::uint64_t> cand = corrupted;
            cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(d));
            if (tenengolts_pair(cand, params) == digest) return cand;
        }
        throw DecodeFail("eta_decode: no single deletion matches the checksum");
    }
    if (corrupted.size() + 1 == n) {
        for (std::size_t pos = 0; pos <= corrupted.size(); ++pos) {
            for (std::uint64_t sym = 0; sym < params.alphabet; ++sym) {
                std::vector<std::uint64_t> cand = corrupted;
                cand.insert(cand.begin() + static_cast<std::ptrdiff_t>(pos), sym);
                if (tenengolts_pair(cand, params) == digest) return cand;
            }
        }
        throw DecodeFail("eta_decode: no single insertion matches the checksum");
    }
    throw DecodeFail("eta_decode: corrupted length outside the single-indel range");
}

Word rep_encode(const Word& msg, int t) {
    if (t < 0) throw InvalidArgument("rep_encode: t must be nonnegative");
    Word out(msg.q());
    for (Symbol s : msg.symbols()) {
        for (int r = 0; r <= t; ++r) out.append(s);
    }
    return out;
}

namespace {

// Enumerates deletion index subsets in lexicographic order, so the first
// valid candidate is deterministic.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::optional<Word> repetition_message(const std::vector<Symbol>& w, int t, int q) {
    const std::size_t block = static_cast<std::size_t>(t) + 1;
    Word msg(q);
    for (std::size_t i = 0; i < w.size(); i += block) {
        for (std::size_t j = 1; j < block; ++j) {
            if (w[i + j] != w[i]) return std::nullopt;
        }
        msg.append(w[i]);
    }
    return msg;
}

}  // namespace

Word rep_decode(const Word& received, int t, std::size_t msg_len) {
    if (t < 0) throw InvalidArgument("rep_decode: t must be nonnegative");
    const std::size_t code_len = msg_len * (static_cast<std::size_t>(t) + 1);
    if (received.size() < code_len) throw DecodeFail("rep_decode: received word too short");
    const std::size_t ins = received.size() - code_len;
    if (ins > static_cast<std::size_t>(t)) throw TooManyErrors("rep_decode: too many insertions");

    std::optional<Word> found;
    std::vector<std::size_t> del(ins);
    for (std::size_t i = 0; i < ins; ++i) del[i] = i;
    bool more = true;
    while (more) {
        std::vector<Symbol> cand;
        cand.reserve(code_len);
        std::size_t di = 0;
        for (std::size_t i = 0; i < received.size(); ++i) {
            if (di < ins && del[di] == i) {
                ++di;
                continue;
            }
            cand.push_back(received[i]);
        }
        if (auto msg = repetition_message(cand, t, received.q())) {
            if (found && !(*found == *msg))
                throw AmbiguousDecode("rep_decode: two distinct repetition preimages");
            found = msg;
        }
        more = ins > 0 && next_combination(del, received.size());
    }
    if (!found) throw DecodeFail("rep_decode: no deletion set restores a repetition word");
    return *found;
}

}  // namespace dupcode
