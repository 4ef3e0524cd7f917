#pragma once

#include <cstdint>
#include <vector>

#include "dupcode/word.hpp"

namespace dupcode {

// Power-sum checksum family for substitution recovery: the digest of a
// length-N message over [0, Q) is s_j = sum_i msg_i * i^j mod ell for
// j in [1, 2t], with ell prime, ell > N, and ell >= 2t(Q-1)+1. Any two
// messages within Hamming distance t of a common word then have distinct
// digests (a 2t x 2t Vandermonde minor on distinct nonzero nodes).
struct SubstHashParams {
    int t;
    std::uint64_t alphabet;
    std::size_t length;
    std::uint64_t prime;

    static SubstHashParams make(int t, std::uint64_t alphabet, std::size_t length);
};

std::vector<std::uint64_t> zeta_hash(const std::vector<std::uint64_t>& msg,
                                     const SubstHashParams& params);

// Recovers the unique original within t substitutions of `corrupted`
// matching the digest. Tries error weights 0..t in order; each weight
// admits at most one candidate (error locator + magnitudes mod ell).
std::vector<std::uint64_t> zeta_decode(const std::vector<std::uint64_t>& corrupted,
                                       const std::vector<std::uint64_t>& digest,
                                       const SubstHashParams& params);

enum class EtaMode { TenengoltsT1, Full };

// Indel recovery hint. TenengoltsT1 is the classical nonbinary single
// insertion/deletion checksum pair (symbol sum mod Q, weighted ascent
// indicator sum mod N); Full stores the message verbatim and tolerates
// anything.
struct IndelHashParams {
    int t;
    EtaMode mode;
    std::uint64_t alphabet;
    std::size_t length;

    static IndelHashParams tenengolts(std::uint64_t alphabet, std::size_t length);
    static IndelHashParams full(int t, std::uint64_t alphabet, std::size_t length);
};

std::vector<std::uint64_t> eta_hash(const std::vector<std::uint64_t>& msg,
                                    const IndelHashParams& params);

std::vector<std::uint64_t> eta_decode(const std::vector<std::uint64_t>& corrupted,
                                      const std::vector<std::uint64_t>& digest,
                                      const IndelHashParams& params);

// (t+1)-fold repetition code with insertion-tolerant decoding: distinct
// codewords are at edit distance >= 2(t+1), so up to t insertions decode
// uniquely by searching deletions that restore a valid repetition word.
Word rep_encode(const Word& msg, int t);
Word rep_decode(const Word& received, int t, std::size_t msg_len);

}  // namespace dupcode
