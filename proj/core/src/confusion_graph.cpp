#include "dupcode/confusion_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_map>

#include "dupcode/numeric.hpp"
#include "dupcode/rcd_root.hpp"

namespace dupcode {

GraphSpec GraphSpec::make(int q, std::size_t n, VertexMode mode, ComplementMap map) {
    if (map.q() != q) throw AlphabetMismatch("graph spec: alphabet mismatch");
    if (n < 1) throw InvalidArgument("graph spec: n must be positive");
    if (mode == VertexMode::Custom)
        throw InvalidArgument("graph spec: custom mode requires an explicit vertex list");
    return GraphSpec{q, n, mode, std::move(map), DuplicationKind::ReverseComplement,
                     0,  std::uint64_t{1} << 20, {}};
}

GraphSpec GraphSpec::custom(int q, std::size_t n, std::vector<Word> vertices, ComplementMap map) {
    if (map.q() != q) throw AlphabetMismatch("graph spec: alphabet mismatch");
    if (vertices.empty()) throw InvalidArgument("graph spec: empty vertex set");
    for (const Word& w : vertices) {
        if (w.q() != q || w.size() != n)
            throw InvalidArgument("graph spec: vertex outside the word space");
    }
    GraphSpec spec{q,
                   n,
                   VertexMode::Custom,
                   std::move(map),
                   DuplicationKind::ReverseComplement,
                   0,
                   std::uint64_t{1} << 20,
                   {}};
    spec.custom_vertices = std::move(vertices);
    return spec;
}

std::size_t GraphSpec::root_m() const {
    return ceil_log(static_cast<std::uint64_t>(q), n) + 1;
}

bool in_vertex_set(const Word& w, const GraphSpec& spec) {
    if (w.q() != spec.q || w.size() != spec.n) return false;
    switch (spec.mode) {
        case VertexMode::AllWords:
            return true;
        case VertexMode::RcdRoots:
            return is_root(w, RootParams{spec.q, spec.n, spec.root_m(), spec.map});
        case VertexMode::Custom:
            return std::find(spec.custom_vertices.begin(), spec.custom_vertices.end(), w) !=
                   spec.custom_vertices.end();
    }
    return false;
}

std::vector<Word> vertex_set(const GraphSpec& spec) {
    if (spec.mode == VertexMode::Custom) return spec.custom_vertices;
    if (!pow_at_most(static_cast<std::uint64_t>(spec.q), spec.n, spec.budget))
        throw BudgetExceeded("vertex_set: q^n exceeds the budget");
    if (spec.mode == VertexMode::RcdRoots) {
        // The enumeration visits interior nodes too, so give it headroom.
        const std::uint64_t dfs_budget =
            spec.budget > (std::numeric_limits<std::uint64_t>::max() / 4)
                ? std::numeric_limits<std::uint64_t>::max()
                : spec.budget * 4;
        return enumerate_roots(RootParams{spec.q, spec.n, spec.root_m(), spec.map}, dfs_budget);
    }
    std::vector<Word> out;
    std::vector<Symbol> buf(spec.n, 0);
    while (true) {
        out.emplace_back(spec.q, buf);
        std::size_t pos = spec.n;
        while (pos > 0 && buf[pos - 1] == spec.q - 1) buf[--pos] = 0;
        if (pos == 0) break;
        ++buf[pos - 1];
    }
    return out;
}

std::vector<Word> neighborhood(const Word& x, std::size_t k, const GraphSpec& spec) {
    if (!in_vertex_set(x, spec)) throw InvalidArgument("neighborhood: x is not a vertex");
    std::set<Word> out;
    if (k < 1 || k > x.size()) return {};
    std::uint64_t work = 0;
    for (const Word& y : ball(x, k, 1, spec.map, spec.kind, spec.budget)) {
        // Walk back: every admissible deduplication of y is a potential
        // neighbour sharing the descendant y.
        for (std::size_t i = 1; i + 2 * k - 1 <= y.size(); ++i) {
            if (++work > spec.budget) throw BudgetExceeded("neighborhood: budget exceeded");
            bool match = true;
            for (std::size_t j = 0; j < k && match; ++j) {
                const Symbol expect = spec.kind == DuplicationKind::Palindromic
                                          ? y[i - 1 + k - 1 - j]
                                          : spec.map(y[i - 1 + k - 1 - j]);
                match = (y[i - 1 + k + j] == expect);
            }
            if (!match) continue;
            Word z = concat(y.subword(1, i + k - 1), y.subword(i + 2 * k, y.size()));
            if (z == x || !in_vertex_set(z, spec)) continue;
            out.insert(std::move(z));
        }
    }
    return std::vector<Word>(out.begin(), out.end());
}

std::size_t degree(const Word& x, const GraphSpec& spec) {
    std::set<Word> all;
    for (std::size_t k = 1; k <= spec.effective_k_max(); ++k) {
        for (Word& z : neighborhood(x, k, spec)) all.insert(std::move(z));
    }
    return all.size();
}

GreedyResult greedy_code(const GraphSpec& spec) {
    const std::vector<Word> vertices = vertex_set(spec);
    std::unordered_map<Word, std::size_t, WordHash> index;
    index.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);

    const std::size_t k_max = spec.effective_k_max();
    std::vector<std::set<std::size_t>> adj(vertices.size());
    std::vector<std::size_t> per_k_max(k_max, 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t k = 1; k <= k_max; ++k) {
            const std::vector<Word> nk = neighborhood(vertices[i], k, spec);
            per_k_max[k - 1] = std::max(per_k_max[k - 1], nk.size());
            for (const Word& z : nk) adj[i].insert(index.at(z));
        }
    }

    GvReport report;
    report.q = spec.q;
    report.n = spec.n;
    report.mode = spec.mode;
    report.vertex_count = vertices.size();
    report.per_k_max_neighborhood = per_k_max;
    for (const auto& nbrs : adj) report.max_degree = std::max(report.max_degree, nbrs.size());
    for (const auto& nbrs : adj) report.alon_bound += 1.0 / (static_cast<double>(nbrs.size()) + 1.0);

    std::vector<std::size_t> order(vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (adj[a].size() != adj[b].size()) return adj[a].size() < adj[b].size();
        return vertices[a] < vertices[b];
    });

    std::vector<bool> blocked(vertices.size(), false);
    std::vector<Word> code;
    for (std::size_t i : order) {
        if (blocked[i]) continue;
        code.push_back(vertices[i]);
        for (std::size_t nb : adj[i]) blocked[nb] = true;
    }
    std::sort(code.begin(), code.end());

    report.code_size = code.size();
    report.redundancy =
        static_cast<double>(spec.n) -
        std::log(static_cast<double>(code.size())) / std::log(static_cast<double>(spec.q));
    return GreedyResult{std::move(code), std::move(report)};
}

}  // namespace dupcode
