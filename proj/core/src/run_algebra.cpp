#include "dupcode/run_algebra.hpp"

#include <bit>

namespace dupcode {

namespace {

std::vector<std::uint8_t> indicator_bits(const Word& w) {
    std::vector<std::uint8_t> bits(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) bits[i] = (w[i] == w[0]) ? 1 : 0;
    return bits;
}

std::uint64_t vt_checksum(const std::vector<std::uint8_t>& bits, std::uint64_t modulus) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (bits[j]) s += static_cast<std::uint64_t>(j + 1);
    }
    return s % modulus;
}

Word word_from_bits(const std::vector<std::uint8_t>& bits, Symbol first,
                    const ComplementMap& map) {
    Word out(map.q());
    const Symbol other = map(first);
    for (std::uint8_t b : bits) out.append(b ? first : other);
    return out;
}

void check_is_run(const Word& run, const ComplementMap& map) {
    if (run.empty()) throw InvalidArgument("run word must be nonempty");
    const Symbol a = run[0];
    const Symbol b = map(a);
    for (Symbol s : run.symbols()) {
        if (s != a && s != b) throw InvalidArgument("word is not a run");
    }
}

}  // namespace

RunDecomposition decompose(const Word& w, const ComplementMap& map) {
    if (map.q() != w.q()) throw AlphabetMismatch("decompose: alphabet mismatch");
    RunDecomposition d;
    d.signature = Word(w.q());
    std::size_t i = 0;
    while (i < w.size()) {
        const Symbol a = w[i];
        const Symbol b = map(a);
        std::size_t j = i + 1;
        while (j < w.size() && (w[j] == a || w[j] == b)) ++j;
        d.runs.push_back(w.subword(i + 1, j));
        d.signature.append(a);
        d.lengths.push_back(j - i);
        i = j;
    }
    return d;
}

std::uint64_t phi(const Word& run, const ComplementMap& map) {
    check_is_run(run, map);
    if (run.size() > 63) throw Overflow("phi: run longer than 63 symbols");
    std::uint64_t v = 0;
    for (Symbol s : run.symbols()) v = (v << 1) | (s == run[0] ? 1u : 0u);
    return v;
}

Word phi_inv(std::uint64_t value, Symbol first, const ComplementMap& map) {
    if (value == 0) throw InvalidArgument("phi_inv: value must be positive");
    const int len = std::bit_width(value);
    Word out(map.q());
    const Symbol other = map(first);
    for (int p = len - 1; p >= 0; --p) out.append(((value >> p) & 1) ? first : other);
    return out;
}

std::vector<std::uint64_t> associated_vector(const Word& w, std::size_t pad_to,
                                             const ComplementMap& map) {
    RunDecomposition d = decompose(w, map);
    if (pad_to < d.run_count())
        throw InvalidArgument("associated_vector: pad_to below the run count");
    std::vector<std::uint64_t> out(pad_to - d.run_count(), 0);
    for (const Word& run : d.runs) out.push_back(phi(run, map));
    return out;
}

Word assemble_from_vector(const std::vector<std::uint64_t>& values, const Word& signature,
                          const ComplementMap& map) {
    std::size_t sig_index = 0;
    Word out(map.q());
    for (std::uint64_t v : values) {
        if (v == 0) continue;
        if (sig_index >= signature.size())
            throw InvalidArgument("assemble_from_vector: more entries than signature symbols");
        out.append(phi_inv(v, signature[sig_index], map));
        ++sig_index;
    }
    if (sig_index != signature.size())
        throw InvalidArgument("assemble_from_vector: fewer entries than signature symbols");
    return out;
}

RunHash run_hash(const Word& run, int t, RunHashMode mode, const ComplementMap& map) {
    if (t < 1) throw InvalidArgument("run_hash: t must be positive");
    if (mode == RunHashMode::VtT1 && t != 1)
        throw InvalidArgument("run_hash: VtT1 mode is only defined for t = 1");
    check_is_run(run, map);
    RunHash h{mode, t, run.size(), 0};
    if (mode == RunHashMode::Full) {
        h.payload = phi(run, map);
    } else {
        h.payload = vt_checksum(indicator_bits(run), run.size() + static_cast<std::size_t>(t) + 1);
    }
    return h;
}

RunHash run_hash(const Word& run, int t, const ComplementMap& map) {
    return run_hash(run, t, t == 1 ? RunHashMode::VtT1 : RunHashMode::Full, map);
}

Word run_recover(const Word& corrupted, const RunHash& hash, const ComplementMap& map) {
    check_is_run(corrupted, map);
    if (corrupted.size() < hash.length ||
        corrupted.size() > hash.length + static_cast<std::size_t>(hash.t))
        throw DecodeFail("run_recover: corrupted length outside the admissible range");

    if (hash.mode == RunHashMode::Full) {
        Word out = phi_inv(hash.payload, corrupted[0], map);
        if (out.size() != hash.length) throw DecodeFail("run_recover: stored indicator malformed");
        return out;
    }

    const std::uint64_t modulus = hash.length + static_cast<std::size_t>(hash.t) + 1;
    std::vector<std::uint8_t> bits = indicator_bits(corrupted);
    if (corrupted.size() == hash.length) {
        if (vt_checksum(bits, modulus) != hash.payload)
            throw DecodeFail("run_recover: checksum mismatch on an unchanged-length run");
        return corrupted;
    }
    // One inserted bit: the unique deletion restoring the stored checksum
    // recovers the original indicator.
    for (std::size_t d = 0; d < bits.size(); ++d) {
        std::vector<std::uint8_t> cand = bits;
        cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(d));
        if (cand[0] != 1) continue;
        if (vt_checksum(cand, modulus) == hash.payload)
            return word_from_bits(cand, corrupted[0], map);
    }
    throw DecodeFail("run_recover: no single deletion matches the checksum");
}

}  // namespace dupcode
