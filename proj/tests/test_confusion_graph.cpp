#include <doctest.h>

#include <algorithm>

#include "dupcode/confusion_graph.hpp"
#include "dupcode/json_io.hpp"
#include "dupcode/rcd_root.hpp"

using namespace dupcode;

TEST_SUITE_BEGIN("confusion_graph");

TEST_CASE("the collision pair are neighbours at duplication length four") {
    GraphSpec spec = GraphSpec::make(2, 9, VertexMode::AllWords, ComplementMap::paired(2));
    const Word a = Word::from_text("000111000", 2);
    const Word b = Word::from_text("000111110", 2);
    const auto nb = neighborhood(a, 4, spec);
    CHECK(std::binary_search(nb.begin(), nb.end(), b));
    const auto nb_back = neighborhood(b, 4, spec);
    CHECK(std::binary_search(nb_back.begin(), nb_back.end(), a));
}

TEST_CASE("singleton vertex sets have empty neighborhoods and zero degree") {
    const Word x = Word::from_text("011010", 2);
    GraphSpec spec = GraphSpec::custom(2, 6, {x}, ComplementMap::paired(2));
    for (std::size_t k = 1; k <= 6; ++k) CHECK(neighborhood(x, k, spec).empty());
    CHECK(degree(x, spec) == 0);
}

TEST_CASE("adjacency is symmetric") {
    GraphSpec spec = GraphSpec::make(2, 6, VertexMode::AllWords, ComplementMap::paired(2));
    const auto vertices = vertex_set(spec);
    for (std::size_t k = 1; k <= 6; ++k) {
        for (const Word& x : vertices) {
            for (const Word& z : neighborhood(x, k, spec)) {
                const auto back = neighborhood(z, k, spec);
                REQUIRE(std::binary_search(back.begin(), back.end(), x));
            }
        }
    }
}

TEST_CASE("neighborhood sizes respect the counting bound") {
    GraphSpec spec = GraphSpec::make(2, 6, VertexMode::AllWords, ComplementMap::paired(2));
    for (const Word& x : vertex_set(spec)) {
        std::size_t union_size = degree(x, spec);
        CHECK(union_size <= 6 * 6 * 6 - 1);
        for (std::size_t k = 1; k <= 6; ++k) {
            CHECK(neighborhood(x, k, spec).size() <= 6 * (6 - k + 1) - 1);
        }
    }
}

TEST_CASE("restricting the vertex set never raises the degree") {
    GraphSpec all = GraphSpec::make(2, 8, VertexMode::AllWords, ComplementMap::paired(2));
    GraphSpec roots = GraphSpec::make(2, 8, VertexMode::RcdRoots, ComplementMap::paired(2));
    const RootParams rp{2, 8, roots.root_m(), roots.map};
    std::size_t seen = 0;
    for (const Word& x : vertex_set(all)) {
        if (!is_root(x, rp)) continue;
        if (++seen > 40) break;
        CHECK(degree(x, roots) <= degree(x, all));
    }
    CHECK(seen > 0);
}

TEST_CASE("root-mode neighborhoods vanish at the whole-word level when the threshold is reached") {
    // At n=12 the decodable threshold 3*ceil(log2 n) equals n, so the k=12
    // level must be empty for every root.
    GraphSpec roots = GraphSpec::make(2, 12, VertexMode::RcdRoots, ComplementMap::paired(2));
    roots.budget = std::uint64_t{1} << 22;
    for (const Word& x : vertex_set(roots)) {
        REQUIRE(neighborhood(x, 12, roots).empty());
    }
}

TEST_CASE("greedy output is independent, deterministic, and reported") {
    GraphSpec spec = GraphSpec::make(2, 6, VertexMode::AllWords, ComplementMap::paired(2));
    const GreedyResult a = greedy_code(spec);
    const GreedyResult b = greedy_code(spec);
    CHECK(a.code == b.code);
    CHECK(a.report.code_size == a.code.size());
    CHECK(a.report.vertex_count == 64);
    CHECK(a.report.code_size >= a.report.vertex_count / (a.report.max_degree + 1));

    // Independence against the ball oracle.
    for (std::size_t i = 0; i < a.code.size(); ++i) {
        for (std::size_t j = i + 1; j < a.code.size(); ++j) {
            for (std::size_t k = 1; k <= 6; ++k) {
                const auto bi = ball(a.code[i], k, 1, spec.map);
                const auto bj = ball(a.code[j], k, 1, spec.map);
                std::vector<Word> shared;
                std::set_intersection(bi.begin(), bi.end(), bj.begin(), bj.end(),
                                      std::back_inserter(shared));
                REQUIRE(shared.empty());
            }
        }
    }

    const json j = to_json(a.report);
    CHECK(j.contains("alon_bound"));
    CHECK(j.contains("per_k_max_neighborhood"));
    CHECK(j.contains("redundancy"));
}

TEST_CASE("budgets guard the vertex and ball enumerations") {
    GraphSpec spec = GraphSpec::make(2, 26, VertexMode::AllWords, ComplementMap::paired(2));
    spec.budget = 1000;
    CHECK_THROWS_AS(vertex_set(spec), BudgetExceeded);
}

TEST_SUITE_END();
