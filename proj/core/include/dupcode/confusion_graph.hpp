#pragma once

#include <cstdint>
#include <vector>

#include "dupcode/channel.hpp"
#include "dupcode/word.hpp"

namespace dupcode {

enum class VertexMode { AllWords, RcdRoots, Custom };

// Vertices are candidate codewords; two vertices are adjacent when their
// single-duplication balls intersect for some length k. An independent
// set is exactly a code correcting one duplication of arbitrary length.
struct GraphSpec {
    int q;
    std::size_t n;
    VertexMode mode = VertexMode::AllWords;
    ComplementMap map;
    DuplicationKind kind = DuplicationKind::ReverseComplement;
    std::size_t k_max = 0;                     // 0 means n
    std::uint64_t budget = std::uint64_t{1} << 20;  // ball-entry budget
    std::vector<Word> custom_vertices;         // Custom mode only

    static GraphSpec make(int q, std::size_t n, VertexMode mode, ComplementMap map);
    static GraphSpec custom(int q, std::size_t n, std::vector<Word> vertices, ComplementMap map);

    std::size_t effective_k_max() const { return k_max == 0 ? n : k_max; }
    // Window length of the root constraint in root mode.
    std::size_t root_m() const;
};

std::vector<Word> vertex_set(const GraphSpec& spec);
bool in_vertex_set(const Word& w, const GraphSpec& spec);

// Exact neighborhood at one duplication length, computed by walking
// forward into the ball and back through every deduplication, never by
// the counting bound — so the degree bounds stay genuine tests.
std::vector<Word> neighborhood(const Word& x, std::size_t k, const GraphSpec& spec);

std::size_t degree(const Word& x, const GraphSpec& spec);

struct GvReport {
    int q = 0;
    std::size_t n = 0;
    VertexMode mode = VertexMode::AllWords;
    std::size_t vertex_count = 0;
    std::vector<std::size_t> per_k_max_neighborhood;
    std::size_t max_degree = 0;
    double alon_bound = 0.0;  // sum over vertices of 1/(degree+1)
    std::size_t code_size = 0;
    double redundancy = 0.0;  // n - log_q(code size)
};

struct GreedyResult {
    std::vector<Word> code;
    GvReport report;
};

// Maximal independent set grown in ascending-degree order with a
// lexicographic tie-break; deterministic, and re-verifiable against the
// ball oracle.
GreedyResult greedy_code(const GraphSpec& spec);

}  // namespace dupcode
