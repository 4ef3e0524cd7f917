#pragma once

#include <cstdint>
#include <vector>

#include "dupcode/word.hpp"

namespace dupcode {

// Maximal segmentation of a word into runs: each run starts with some
// symbol a and continues while symbols stay inside {a, complement(a)}.
// Length-one duplications extend a run without changing its first symbol,
// which is what makes the signature a channel invariant.
struct RunDecomposition {
    std::vector<Word> runs;
    Word signature;                    // first symbol of each run
    std::vector<std::size_t> lengths;  // run lengths

    std::size_t run_count() const { return runs.size(); }
};

RunDecomposition decompose(const Word& w, const ComplementMap& map);

// Integer form of a run's indicator word: bit 1 where the symbol equals
// the run's first symbol, first position as the top bit. The value of a
// length-p run lies in [2^(p-1), 2^p - 1], so the length is recoverable.
// Runs longer than 63 symbols do not fit the carrier and raise Overflow.
std::uint64_t phi(const Word& run, const ComplementMap& map);

Word phi_inv(std::uint64_t value, Symbol first, const ComplementMap& map);

// Per-run phi values padded with leading zeros to `pad_to` entries.
std::vector<std::uint64_t> associated_vector(const Word& w, std::size_t pad_to,
                                             const ComplementMap& map);

// Inverse of associated_vector given the signature; zero padding entries
// are skipped.
Word assemble_from_vector(const std::vector<std::uint64_t>& values, const Word& signature,
                          const ComplementMap& map);

enum class RunHashMode { VtT1, Full };

// Recovery hint for one run under at most t in-run length-one
// duplications. VtT1 stores the original length plus the checksum
// sum(j * bit_j) mod (length + t + 1) of the indicator word; a length-one
// duplication inside a run is exactly one bit insertion there. Full mode
// stores the indicator verbatim.
struct RunHash {
    RunHashMode mode = RunHashMode::VtT1;
    int t = 1;
    std::size_t length = 0;
    std::uint64_t payload = 0;
};

RunHash run_hash(const Word& run, int t, RunHashMode mode, const ComplementMap& map);
RunHash run_hash(const Word& run, int t, const ComplementMap& map);

Word run_recover(const Word& corrupted, const RunHash& hash, const ComplementMap& map);

}  // namespace dupcode
