#include <doctest.h>

#include "dupcode/channel.hpp"
#include "dupcode/json_io.hpp"
#include "dupcode/run_algebra.hpp"

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

// All runs of the given length with the given first symbol.
template <typename Fn>
void for_each_run(int q, Symbol first, std::size_t len, const ComplementMap& map, Fn&& fn) {
    const std::uint64_t combos = std::uint64_t{1} << (len - 1);
    for (std::uint64_t bits = 0; bits < combos; ++bits) {
        Word run(q);
        run.append(first);
        for (std::size_t i = 1; i < len; ++i)
            run.append(((bits >> (i - 1)) & 1) ? first : map(first));
        fn(run);
    }
}

}  // namespace

TEST_SUITE_BEGIN("run_algebra");

TEST_CASE("worked decomposition") {
    const ComplementMap map = ComplementMap::paired(4);
    const RunDecomposition d = decompose(Word::from_text("01123221001", 4), map);
    REQUIRE(d.run_count() == 3);
    CHECK(d.runs[0].text() == "011");
    CHECK(d.runs[1].text() == "2322");
    CHECK(d.runs[2].text() == "1001");
    CHECK(d.signature.text() == "021");
    CHECK(d.lengths == std::vector<std::size_t>{3, 4, 4});
}

TEST_CASE("single symbols and empty words decompose trivially") {
    const ComplementMap map = ComplementMap::paired(4);
    const RunDecomposition one = decompose(Word::from_text("2", 4), map);
    CHECK(one.run_count() == 1);
    CHECK(one.signature.text() == "2");
    CHECK(decompose(Word(4), map).run_count() == 0);
}

TEST_CASE("runs reassemble to the original word") {
    const ComplementMap map = ComplementMap::paired(4);
    for_each_word(4, 6, [&](const Word& w) {
        const RunDecomposition d = decompose(w, map);
        Word glued(4);
        for (const Word& run : d.runs) glued.append(run);
        REQUIRE(glued == w);
        for (std::size_t i = 0; i < d.run_count(); ++i) {
            REQUIRE(d.signature[i] == d.runs[i][0]);
            REQUIRE(d.lengths[i] == d.runs[i].size());
        }
    });
}

TEST_CASE("identity maps give classical single-symbol runs") {
    const ComplementMap id = ComplementMap::identity(4);
    const RunDecomposition d = decompose(Word::from_text("001122", 4), id);
    CHECK(d.run_count() == 3);
    CHECK(d.signature.text() == "012");
}

TEST_CASE("worked phi values and inversion") {
    const ComplementMap map = ComplementMap::paired(4);
    CHECK(phi(Word::from_text("011", 4), map) == 4);
    CHECK(phi(Word::from_text("2322", 4), map) == 11);
    CHECK(phi(Word::from_text("1001", 4), map) == 9);
    CHECK(phi_inv(11, 2, map).text() == "2322");
    CHECK(phi_inv(9, 1, map).text() == "1001");
}

TEST_CASE("phi round trips over every short run and stays in its range") {
    const ComplementMap map = ComplementMap::paired(4);
    for (std::size_t len = 1; len <= 10; ++len) {
        for (Symbol first = 0; first < 4; ++first) {
            for_each_run(4, first, len, map, [&](const Word& run) {
                const std::uint64_t v = phi(run, map);
                REQUIRE(v >= (std::uint64_t{1} << (len - 1)));
                REQUIRE(v < (std::uint64_t{1} << len));
                REQUIRE(phi_inv(v, first, map) == run);
            });
        }
    }
}

TEST_CASE("phi rejects non-runs, empties, and oversized carriers") {
    const ComplementMap map = ComplementMap::paired(4);
    CHECK_THROWS_AS(phi(Word::from_text("02", 4), map), InvalidArgument);
    CHECK_THROWS_AS(phi(Word(4), map), InvalidArgument);
    CHECK_THROWS_AS(phi_inv(0, 1, map), InvalidArgument);
    Word longrun(4);
    for (int i = 0; i < 64; ++i) longrun.append(i % 2);
    CHECK_THROWS_AS(phi(longrun, map), Overflow);
}

TEST_CASE("padded associated vector") {
    const ComplementMap map = ComplementMap::paired(4);
    const Word x = Word::from_text("01123221001", 4);
    const std::vector<std::uint64_t> expected{0, 0, 0, 0, 0, 0, 0, 0, 4, 11, 9};
    CHECK(associated_vector(x, 11, map) == expected);
    CHECK(associated_vector(x, 3, map) == std::vector<std::uint64_t>{4, 11, 9});
    CHECK_THROWS_AS(associated_vector(x, 2, map), InvalidArgument);
}

TEST_CASE("vector inversion with the signature recovers every word") {
    const ComplementMap map = ComplementMap::paired(4);
    for_each_word(4, 6, [&](const Word& w) {
        const RunDecomposition d = decompose(w, map);
        const auto vec = associated_vector(w, 6, map);
        REQUIRE(assemble_from_vector(vec, d.signature, map) == w);
    });
}

TEST_CASE("a duplication inside a run inserts one complementary bit") {
    const ComplementMap map = ComplementMap::paired(4);
    for (std::size_t len = 1; len <= 6; ++len) {
        for_each_run(4, 2, len, map, [&](const Word& run) {
            std::vector<int> bits;
            for (Symbol s : run.symbols()) bits.push_back(s == run[0] ? 1 : 0);
            for (std::size_t pos = 1; pos <= len; ++pos) {
                const Word z = apply(run, {DuplicationKind::ReverseComplement, pos, 1}, map);
                std::vector<int> zbits;
                for (Symbol s : z.symbols()) zbits.push_back(s == z[0] ? 1 : 0);
                std::vector<int> expected = bits;
                expected.insert(expected.begin() + static_cast<std::ptrdiff_t>(pos),
                                1 - bits[pos - 1]);
                REQUIRE(zbits == expected);
            }
        });
    }
}

TEST_CASE("signature survives in-run duplications elsewhere in a word") {
    const ComplementMap map = ComplementMap::paired(4);
    const Word w = Word::from_text("01123221001", 4);
    for (int t = 1; t <= 2; ++t) {
        for (const Word& y : ball(w, 1, t, map)) {
            const RunDecomposition dy = decompose(y, map);
            REQUIRE(dy.signature == decompose(w, map).signature);
        }
    }
}

TEST_CASE("checksum hash recovers runs from one in-run duplication") {
    const ComplementMap map = ComplementMap::paired(4);
    for (std::size_t len = 1; len <= 8; ++len) {
        for_each_run(4, 0, len, map, [&](const Word& run) {
            const RunHash h = run_hash(run, 1, map);
            CHECK(h.mode == RunHashMode::VtT1);
            REQUIRE(run_recover(run, h, map) == run);
            for (std::size_t pos = 1; pos <= len; ++pos) {
                const Word z = apply(run, {DuplicationKind::ReverseComplement, pos, 1}, map);
                REQUIRE(run_recover(z, h, map) == run);
            }
        });
    }
}

TEST_CASE("full-mode hash recovers runs from up to two duplications") {
    const ComplementMap map = ComplementMap::paired(4);
    for (std::size_t len = 1; len <= 6; ++len) {
        for_each_run(4, 3, len, map, [&](const Word& run) {
            const RunHash h = run_hash(run, 2, map);
            CHECK(h.mode == RunHashMode::Full);
            for (int t = 0; t <= 2; ++t) {
                for (const Word& z : ball(run, 1, t, map)) {
                    REQUIRE(run_recover(z, h, map) == run);
                }
            }
        });
    }
}

TEST_CASE("run recovery fails loudly outside its contract") {
    const ComplementMap map = ComplementMap::paired(4);
    const Word run = Word::from_text("2332", 4);
    const RunHash h = run_hash(run, 1, map);
    // Three extra symbols exceed the t=1 budget.
    CHECK_THROWS_AS(run_recover(Word::from_text("2333233", 4), h, map), DecodeFail);
    CHECK_THROWS_AS(run_hash(run, 2, RunHashMode::VtT1, map), InvalidArgument);
}

TEST_CASE("run hashes serialize") {
    const ComplementMap map = ComplementMap::paired(4);
    const RunHash h = run_hash(Word::from_text("2322", 4), 1, map);
    const json j = to_json(h);
    CHECK(j["mode"] == "vt-t1");
    CHECK(j["length"] == 4);
    const RunHash back = run_hash_from_json(j);
    CHECK(back.payload == h.payload);
    CHECK(back.length == h.length);
}

TEST_SUITE_END();
