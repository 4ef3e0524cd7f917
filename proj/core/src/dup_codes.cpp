#include "dupcode/dup_codes.hpp"

#include <algorithm>
#include <bit>

#include "dupcode/numeric.hpp"

namespace dupcode {

namespace {

// C2 packs a run hash into one vector entry. VtT1 carries (length,
// checksum); Full carries the indicator integer, whose bit width is the
// length. Entry 0 stays reserved for padding, and the ranges are sized
// for received-window runs of length up to m + t.
std::uint64_t pack_alphabet(const CodeLayout& layout) {
    const std::size_t m = layout.m;
    const std::size_t t = static_cast<std::size_t>(layout.params.t);
    if (layout.params.run_hash_mode == RunHashMode::Full)
        return std::uint64_t{1} << (m + t);
    const std::uint64_t smax = m + 2 * t + 1;  // checksum < length + t + 1 <= m + 2t + 1
    return (m + t) * smax + 1;
}

std::uint64_t pack_run_hash(const RunHash& h, const CodeLayout& layout) {
    if (h.mode == RunHashMode::Full) return h.payload;
    const std::uint64_t smax = layout.m + 2 * static_cast<std::uint64_t>(layout.params.t) + 1;
    return (static_cast<std::uint64_t>(h.length) - 1) * smax + h.payload + 1;
}

RunHash unpack_run_hash(std::uint64_t value, const CodeLayout& layout) {
    RunHash h;
    h.mode = layout.params.run_hash_mode;
    h.t = layout.params.t;
    if (h.mode == RunHashMode::Full) {
        if (value == 0) throw DecodeFail("run hash entry must be nonzero");
        h.payload = value;
        h.length = static_cast<std::size_t>(std::bit_width(value));
        return h;
    }
    const std::uint64_t smax = layout.m + 2 * static_cast<std::uint64_t>(layout.params.t) + 1;
    if (value == 0) throw DecodeFail("run hash entry must be nonzero");
    --value;
    h.length = static_cast<std::size_t>(value / smax) + 1;
    h.payload = value % smax;
    return h;
}

std::vector<std::uint64_t> block_to_ints(const Word& w) {
    std::vector<std::uint64_t> out;
    out.reserve(w.size());
    for (Symbol s : w.symbols()) out.push_back(static_cast<std::uint64_t>(s));
    return out;
}

Word ints_to_block(const std::vector<std::uint64_t>& v, int q) {
    Word out(q);
    for (std::uint64_t s : v) out.append(static_cast<Symbol>(s));
    return out;
}

Word eta_digest_word(const std::vector<std::uint64_t>& digest, const CodeLayout& layout) {
    const int q = layout.params.q;
    if (layout.eta_mode == EtaMode::Full) return ints_to_block(digest, q);
    Word out(q);
    out.append(static_cast<Symbol>(digest[0]));
    out.append(rep(RepWidth{q, layout.eta_delta_width}, digest[1]));
    return out;
}

std::vector<std::uint64_t> eta_digest_from_word(const Word& w, const CodeLayout& layout) {
    if (layout.eta_mode == EtaMode::Full) return block_to_ints(w);
    return {static_cast<std::uint64_t>(w[0]),
            rep_inv(RepWidth{layout.params.q, layout.eta_delta_width}, w.subword(2, w.size()))};
}

}  // namespace

CodeLayout make_layout(const CodeParams& params) {
    if (params.q < 4 || params.q % 2 != 0)
        throw InvalidArgument("constructions require an even alphabet with q >= 4");
    if (params.t < 1) throw InvalidArgument("constructions require t >= 1");
    if (params.construction == Construction::C2 && params.run_hash_mode == RunHashMode::VtT1 &&
        params.t != 1)
        throw InvalidArgument("compact per-run hashes require t = 1; use Full mode for t >= 2");

    CodeLayout layout;
    layout.params = params;
    const RllParams rll = RllParams::make(params.q, params.n);
    layout.m1 = rll.m1;
    layout.m2 = rll.m2;
    layout.m = rll.m;

    layout.vec_alphabet = params.construction == Construction::C1
                              ? (std::uint64_t{1} << layout.m)
                              : pack_alphabet(layout);
    const SubstHashParams zeta =
        SubstHashParams::make(params.t, layout.vec_alphabet, params.n);
    layout.zeta_prime = zeta.prime;
    layout.residue_width = ceil_log(static_cast<std::uint64_t>(params.q), zeta.prime);
    layout.n1 = 2 * static_cast<std::size_t>(params.t) * layout.residue_width;

    layout.eta_mode = (params.protection == Protection::InnerHash && params.t == 1)
                          ? EtaMode::TenengoltsT1
                          : EtaMode::Full;
    if (layout.eta_mode == EtaMode::TenengoltsT1) {
        layout.eta_delta_width = ceil_log(static_cast<std::uint64_t>(params.q), layout.n1);
        layout.eta_len = 1 + layout.eta_delta_width;
    } else {
        layout.eta_len = layout.n1;
    }
    layout.n2 = (static_cast<std::size_t>(params.t) + 1) * layout.eta_len;
    return layout;
}

std::vector<std::uint64_t> protected_vector(const Word& word, const CodeLayout& layout,
                                            bool received_window) {
    const RllParams rll{layout.params.q, layout.params.n, layout.m1,
                        layout.m2,       layout.m,        ComplementMap::paired(layout.params.q)};
    const RunDecomposition d = decompose(word, rll.map);
    if (d.run_count() > layout.params.n)
        throw DecodeFail("protected_vector: run count exceeds the layout length");
    std::vector<std::uint64_t> out(layout.params.n - d.run_count(), 0);
    for (const Word& run : d.runs) {
        if (layout.params.construction == Construction::C1) {
            if (run.size() > layout.m) {
                // An oversized run pinpoints where duplications landed;
                // its entry carries no payload information.
                if (!received_window)
                    throw Error("protected_vector: payload run exceeds the length limit");
                out.push_back(0);
            } else {
                out.push_back(phi(run, rll.map));
            }
        } else {
            const std::size_t cap = layout.m + static_cast<std::size_t>(layout.params.t);
            if (run.size() > cap) {
                if (!received_window)
                    throw Error("protected_vector: payload run exceeds the length limit");
                throw TooManyErrors("protected_vector: received run exceeds m + t");
            }
            out.push_back(pack_run_hash(
                run_hash(run, layout.params.t, layout.params.run_hash_mode, rll.map), layout));
        }
    }
    return out;
}

Word c_encode(const Word& x, const CodeLayout& layout) {
    const CodeParams& p = layout.params;
    if (x.size() != layout.message_length())
        throw InvalidArgument("c_encode: message must have length n-1");
    if (x.q() != p.q) throw AlphabetMismatch("c_encode: alphabet mismatch");

    const RllParams rll{p.q, p.n, layout.m1, layout.m2, layout.m, ComplementMap::paired(p.q)};
    const Word payload = rll_encode(x, rll);

    Word cw = payload;
    const Symbol guard = rll.map(payload[payload.size() - 1]);
    for (int i = 0; i < p.t; ++i) cw.append(guard);

    const SubstHashParams zeta = SubstHashParams::make(p.t, layout.vec_alphabet, p.n);
    const std::vector<std::uint64_t> digest = zeta_hash(protected_vector(payload, layout, false), zeta);
    Word zeta_block(p.q);
    for (std::uint64_t r : digest) zeta_block.append(rep(RepWidth{p.q, layout.residue_width}, r));
    cw.append(zeta_block);

    const IndelHashParams eta =
        layout.eta_mode == EtaMode::TenengoltsT1
            ? IndelHashParams::tenengolts(static_cast<std::uint64_t>(p.q), layout.n1)
            : IndelHashParams::full(p.t, static_cast<std::uint64_t>(p.q), layout.n1);
    const Word eta_word = eta_digest_word(eta_hash(block_to_ints(zeta_block), eta), layout);
    cw.append(rep_encode(eta_word, p.t));
    return cw;
}

Word c_decode(const Word& y, const CodeLayout& layout) {
    const CodeParams& p = layout.params;
    if (y.q() != p.q) throw AlphabetMismatch("c_decode: alphabet mismatch");
    if (y.size() < layout.total_length())
        throw TooManyErrors("c_decode: received word shorter than the layout");
    const std::size_t d = y.size() - layout.total_length();
    if (d > static_cast<std::size_t>(p.t))
        throw TooManyErrors("c_decode: more extra symbols than the code tolerates");

    const std::size_t n = p.n;
    const std::size_t t = static_cast<std::size_t>(p.t);
    // The second and third windows overlap by d symbols; seam slack reaches
    // the inner decoders as insertions.
    const Word w1 = y.subword(1, n + t);
    const Word w2 = y.subword(n + t + 1, n + t + layout.n1 + d);
    const Word w3 = y.subword(n + t + layout.n1 + 1, y.size());

    const Word eta_word = rep_decode(w3, p.t, layout.eta_len);
    const IndelHashParams eta =
        layout.eta_mode == EtaMode::TenengoltsT1
            ? IndelHashParams::tenengolts(static_cast<std::uint64_t>(p.q), layout.n1)
            : IndelHashParams::full(p.t, static_cast<std::uint64_t>(p.q), layout.n1);
    const std::vector<std::uint64_t> zeta_block_ints =
        eta_decode(block_to_ints(w2), eta_digest_from_word(eta_word, layout), eta);
    const Word zeta_block = ints_to_block(zeta_block_ints, p.q);

    std::vector<std::uint64_t> digest;
    for (std::size_t j = 0; j < 2 * t; ++j) {
        digest.push_back(rep_inv(
            RepWidth{p.q, layout.residue_width},
            zeta_block.subword(j * layout.residue_width + 1, (j + 1) * layout.residue_width)));
    }

    const RllParams rll{p.q, n, layout.m1, layout.m2, layout.m, ComplementMap::paired(p.q)};
    const SubstHashParams zeta = SubstHashParams::make(p.t, layout.vec_alphabet, n);
    const std::vector<std::uint64_t> corrected =
        zeta_decode(protected_vector(w1, layout, true), digest, zeta);

    const RunDecomposition window_runs = decompose(w1, rll.map);
    const std::size_t r = window_runs.run_count();
    if (r > n) throw DecodeFail("c_decode: window run count exceeds n");
    for (std::size_t i = 0; i + r < n; ++i) {
        if (corrected[i] != 0) throw DecodeFail("c_decode: nonzero entry in the zero padding");
    }

    Word payload(p.q);
    for (std::size_t i = 0; i < r; ++i) {
        const std::uint64_t entry = corrected[n - r + i];
        if (entry == 0) throw DecodeFail("c_decode: zero entry for a live run");
        if (p.construction == Construction::C1) {
            payload.append(phi_inv(entry, window_runs.signature[i], rll.map));
        } else {
            payload.append(
                run_recover(window_runs.runs[i], unpack_run_hash(entry, layout), rll.map));
        }
    }
    if (payload.size() != n) throw DecodeFail("c_decode: reconstructed payload has wrong length");
    return rll_decode(payload, rll);
}

}  // namespace dupcode
