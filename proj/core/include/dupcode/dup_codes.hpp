#pragma once

#include <cstdint>
#include <vector>

#include "dupcode/protect.hpp"
#include "dupcode/rll_codec.hpp"
#include "dupcode/run_algebra.hpp"
#include "dupcode/word.hpp"

namespace dupcode {

// Per-run protected vector: C1 records each run's phi value, C2 records a
// per-run recovery hash instead.
enum class Construction { C1, C2 };

// Inner-hash protection wraps the substitution digest in an indel checksum
// before the repetition code; repetition-only puts the repetition code
// directly on the substitution digest (more redundancy, valid for all t).
enum class Protection { InnerHash, RepetitionOnly };

struct CodeParams {
    int q = 4;
    std::size_t n = 32;  // length of the run-length-limited payload block
    int t = 1;
    Construction construction = Construction::C1;
    Protection protection = Protection::InnerHash;
    RunHashMode run_hash_mode = RunHashMode::VtT1;  // C2 only
};

// Segment geometry of a codeword: payload [1, n], guards [n+1, n+t],
// substitution digest [n+t+1, n+t+n1], repetition block to the end. The
// guards repeat the complement of the payload's last symbol so that they
// extend its final run without changing the signature.
struct CodeLayout {
    CodeParams params;
    std::size_t m1 = 0, m2 = 0, m = 0;
    std::uint64_t vec_alphabet = 0;   // alphabet of the protected vector
    std::uint64_t zeta_prime = 0;
    std::size_t residue_width = 0;    // q-ary symbols per digest residue
    std::size_t n1 = 0;               // substitution digest block length
    EtaMode eta_mode = EtaMode::Full;
    std::size_t eta_delta_width = 0;  // TenengoltsT1 only
    std::size_t eta_len = 0;          // indel digest symbols
    std::size_t n2 = 0;               // repetition block length

    std::size_t total_length() const { return params.n + params.t + n1 + n2; }
    std::size_t message_length() const { return params.n - 1; }
};

CodeLayout make_layout(const CodeParams& params);

Word c_encode(const Word& x, const CodeLayout& layout);

// Corrects d <= t length-one reverse-complement duplications anywhere in
// the codeword; d is derived from the received length.
Word c_decode(const Word& y, const CodeLayout& layout);

// Internals exposed for the verification suites: the protected vector of
// a payload (hash side) and of a received first window (decode side, with
// oversized runs mapped to entry zero in C1).
std::vector<std::uint64_t> protected_vector(const Word& word, const CodeLayout& layout,
                                            bool received_window);

}  // namespace dupcode
