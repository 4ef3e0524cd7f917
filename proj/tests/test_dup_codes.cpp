#include <doctest.h>

#include "dupcode/channel.hpp"
#include "dupcode/json_io.hpp"
#include "dupcode/numeric.hpp"
#include "dupcode/suites.hpp"

using namespace dupcode;

namespace {

template <typename Fn>
void for_each_word(int q, std::size_t n, Fn&& fn) {
    std::vector<Symbol> buf(n, 0);
    while (true) {
        fn(Word(q, buf));
        std::size_t pos = n;
        while (pos > 0 && buf[pos - 1] == q - 1) buf[--pos] = 0;
        if (pos == 0) break;
        ++buf[pos - 1];
    }
}

Word random_word(int q, std::size_t n, CounterRng& rng) {
    Word w(q);
    for (std::size_t i = 0; i < n; ++i) w.append(static_cast<Symbol>(rng.below(q)));
    return w;
}

CodeLayout c1_layout(std::size_t n, int t, Protection prot) {
    CodeParams p;
    p.q = 4;
    p.n = n;
    p.t = t;
    p.construction = Construction::C1;
    p.protection = prot;
    p.run_hash_mode = t == 1 ? RunHashMode::VtT1 : RunHashMode::Full;
    return make_layout(p);
}

CodeLayout c2_layout(std::size_t n, int t, RunHashMode rhm) {
    CodeParams p;
    p.q = 4;
    p.n = n;
    p.t = t;
    p.construction = Construction::C2;
    p.protection = t == 1 ? Protection::InnerHash : Protection::RepetitionOnly;
    p.run_hash_mode = rhm;
    return make_layout(p);
}

}  // namespace

TEST_SUITE_BEGIN("dup_codes");

TEST_CASE("layout geometry at the pinned sizes") {
    const CodeLayout l8 = c1_layout(8, 1, Protection::InnerHash);
    CHECK(l8.m == 6);
    CHECK(l8.vec_alphabet == 64);
    CHECK(l8.zeta_prime == 127);
    CHECK(l8.residue_width == 4);
    CHECK(l8.n1 == 8);
    CHECK(l8.eta_mode == EtaMode::TenengoltsT1);
    CHECK(l8.eta_len == 1 + 2);
    CHECK(l8.n2 == 6);
    CHECK(l8.total_length() == 8 + 1 + 8 + 6);

    const CodeLayout l64 = c1_layout(64, 1, Protection::InnerHash);
    CHECK(l64.total_length() - l64.message_length() == 18);

    CHECK_THROWS_AS(c1_layout(8, 0, Protection::InnerHash), InvalidArgument);
    CHECK_THROWS_AS(c2_layout(8, 2, RunHashMode::VtT1), InvalidArgument);
    CodeParams bad;
    bad.q = 2;
    CHECK_THROWS_AS(make_layout(bad), InvalidArgument);
}

TEST_CASE("guards repeat the complement of the last payload symbol") {
    const ComplementMap map = ComplementMap::paired(4);
    const RllParams rll = RllParams::make(4, 32);
    for (int t : {1, 2}) {
        const CodeLayout layout = c1_layout(32, t, t == 1 ? Protection::InnerHash
                                                           : Protection::RepetitionOnly);
        for (std::uint64_t trial = 0; trial < 50; ++trial) {
            CounterRng rng(31, trial);
            const Word x = random_word(4, 31, rng);
            const Word payload = rll_encode(x, rll);
            const Word cw = c_encode(x, layout);
            CHECK(cw.subword(1, 32) == payload);
            for (int g = 0; g < t; ++g) {
                CHECK(cw[32 + static_cast<std::size_t>(g)] == map(payload[31]));
            }
            CHECK(cw.size() == layout.total_length());
        }
    }
}

TEST_CASE("zero-error channel round trips exhaustively at n=8") {
    const CodeLayout c1 = c1_layout(8, 1, Protection::InnerHash);
    const CodeLayout c2full = c2_layout(8, 1, RunHashMode::Full);
    for_each_word(4, 7, [&](const Word& x) {
        REQUIRE(c_decode(c_encode(x, c1), c1) == x);
        REQUIRE(c_decode(c_encode(x, c2full), c2full) == x);
    });
}

TEST_CASE("fewer than t duplications still decode") {
    const CodeLayout layout = c1_layout(16, 2, Protection::RepetitionOnly);
    const ComplementMap map = ComplementMap::paired(4);
    for (std::uint64_t trial = 0; trial < 300; ++trial) {
        CounterRng rng(41, trial);
        const Word x = random_word(4, 15, rng);
        const Word cw = c_encode(x, layout);
        for (int d = 0; d <= 2; ++d) {
            const auto s = sample(cw, 1, d, map, DuplicationKind::ReverseComplement, 43, trial);
            REQUIRE(c_decode(s.word, layout) == x);
        }
    }
}

TEST_CASE("every single duplication position decodes at n=16") {
    const CodeLayout layout = c1_layout(16, 1, Protection::InnerHash);
    const ComplementMap map = ComplementMap::paired(4);
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        CounterRng rng(47, trial);
        const Word x = random_word(4, 15, rng);
        const Word cw = c_encode(x, layout);
        for (std::size_t pos = 1; pos <= cw.size(); ++pos) {
            const Word y = apply(cw, {DuplicationKind::ReverseComplement, pos, 1}, map);
            REQUIRE(c_decode(y, layout) == x);
        }
    }
}

TEST_CASE("compact per-run hashes handle one duplication end to end") {
    const CodeLayout layout = c2_layout(16, 1, RunHashMode::VtT1);
    const ComplementMap map = ComplementMap::paired(4);
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        CounterRng rng(53, trial);
        const Word x = random_word(4, 15, rng);
        const Word cw = c_encode(x, layout);
        for (std::size_t pos = 1; pos <= cw.size(); ++pos) {
            const Word y = apply(cw, {DuplicationKind::ReverseComplement, pos, 1}, map);
            REQUIRE(c_decode(y, layout) == x);
        }
    }
}

TEST_CASE("every ordered pair of duplication positions decodes at t=2") {
    const CodeLayout layout = c1_layout(12, 2, Protection::RepetitionOnly);
    const ComplementMap map = ComplementMap::paired(4);
    for (std::uint64_t trial = 0; trial < 3; ++trial) {
        CounterRng rng(59, trial);
        const Word x = random_word(4, 11, rng);
        const Word cw = c_encode(x, layout);
        for (std::size_t p1 = 1; p1 <= cw.size(); ++p1) {
            const Word once = apply(cw, {DuplicationKind::ReverseComplement, p1, 1}, map);
            REQUIRE(c_decode(once, layout) == x);
            for (std::size_t p2 = 1; p2 <= once.size(); ++p2) {
                const Word twice = apply(once, {DuplicationKind::ReverseComplement, p2, 1}, map);
                REQUIRE(c_decode(twice, layout) == x);
            }
        }
    }
}

TEST_CASE("every ordered pair of duplication positions decodes for c2 full hashes") {
    const CodeLayout layout = c2_layout(12, 2, RunHashMode::Full);
    const ComplementMap map = ComplementMap::paired(4);
    CounterRng rng(61, 0);
    const Word x = random_word(4, 11, rng);
    const Word cw = c_encode(x, layout);
    for (std::size_t p1 = 1; p1 <= cw.size(); ++p1) {
        const Word once = apply(cw, {DuplicationKind::ReverseComplement, p1, 1}, map);
        for (std::size_t p2 = 1; p2 <= once.size(); ++p2) {
            const Word twice = apply(once, {DuplicationKind::ReverseComplement, p2, 1}, map);
            REQUIRE(c_decode(twice, layout) == x);
        }
    }
}

TEST_CASE("received lengths outside the tolerance are rejected") {
    const CodeLayout layout = c1_layout(8, 1, Protection::InnerHash);
    const ComplementMap map = ComplementMap::paired(4);
    const Word x = Word::from_text("0123012", 4);
    const Word cw = c_encode(x, layout);
    Word too_long = cw;
    too_long.append(0);
    too_long.append(0);
    CHECK_THROWS_AS(c_decode(too_long, layout), TooManyErrors);
    CHECK_THROWS_AS(c_decode(cw.subword(1, cw.size() - 1), layout), TooManyErrors);
    (void)map;
}

TEST_CASE("codeword containers are self-describing") {
    const CodeLayout layout = c1_layout(8, 1, Protection::InnerHash);
    const Word x = Word::from_text("0123012", 4);
    const Word cw = c_encode(x, layout);
    const json j = codeword_container(layout, cw);
    const auto [layout2, word2] = codeword_from_container(j);
    CHECK(word2 == cw);
    CHECK(c_decode(word2, layout2) == x);

    json tampered = j;
    tampered["layout"]["n1"] = 99;
    CHECK_THROWS_AS(codeword_from_container(tampered), InvalidArgument);
}

TEST_CASE("fuzz harness reports clean runs with window checks") {
    const CodeLayout layout = c1_layout(32, 2, Protection::RepetitionOnly);
    const auto report = suites::fuzz_construction(layout, 200, 7, true);
    CHECK(report.trials == 200);
    CHECK(report.failures == 0);
}

TEST_SUITE_END();
