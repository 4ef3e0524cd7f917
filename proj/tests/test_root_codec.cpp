#include <doctest.h>

#include "dupcode/channel.hpp"
#include "dupcode/numeric.hpp"
#include "dupcode/root_codec.hpp"

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

}  // namespace

TEST_SUITE_BEGIN("root_codec");

TEST_CASE("window replacement and its inverse cancel on every non-root") {
    const RootCodecParams params = RootCodecParams::with_m(2, 8, 3, ComplementMap::paired(2));
    const RootParams rp = params.root_params();
    std::size_t non_roots = 0;
    for_each_word(2, 8, [&](const Word& x) {
        if (is_root(x, rp)) {
            CHECK_THROWS_AS(xi(x, params), IllegalInput);
            return;
        }
        ++non_roots;
        const Word y = xi(x, params);
        REQUIRE(y.size() == 7);
        REQUIRE(xi_inv(y, params) == x);
        // The trailing field names the replaced window.
        const std::uint64_t idx = rep_inv(RepWidth{2, 2}, y.subword(6, 7));
        REQUIRE(idx == first_violation(x, 3, params.map));
    });
    CHECK(non_roots > 0);
}

TEST_CASE("xi_inv validates the recovered index") {
    const RootCodecParams params = RootCodecParams::with_m(2, 8, 3, ComplementMap::paired(2));
    // Index field 0 is never a valid window position.
    CHECK_THROWS_AS(xi_inv(Word::from_text("0000000", 2), params), CorruptIndex);
}

TEST_CASE("encoding appends the odd marker when the constraint is vacuous") {
    const RootCodecParams params = RootCodecParams::make(2, 4, ComplementMap::paired(2));
    CHECK(params.m == 3);
    for_each_word(2, 3, [&](const Word& x) {
        Word expected = x;
        expected.append(Symbol{1});
        CHECK(encode(x, params) == expected);
        CHECK(decode(expected, params) == x);
    });
}

TEST_CASE("exhaustive roundtrip with one redundant symbol") {
    for (std::size_t n : {std::size_t{6}, std::size_t{8}}) {
        const RootCodecParams params = RootCodecParams::make(4, n, ComplementMap::paired(4));
        const RootParams rp = params.root_params();
        for_each_word(4, n - 1, [&](const Word& x) {
            const Word y = encode(x, params);
            REQUIRE(y.size() == x.size() + 1);
            REQUIRE(is_root(y, rp));
            REQUIRE(decode(y, params) == x);
        });
    }
}

TEST_CASE("encoded words satisfy the root predicate at production sizes") {
    const RootCodecParams params = RootCodecParams::make(4, 64, ComplementMap::paired(4));
    const RootParams rp = params.root_params();
    for (std::uint64_t trial = 0; trial < 10000; ++trial) {
        CounterRng rng(11, trial);
        const Word x = random_word(4, 63, rng);
        const Word y = encode(x, params);
        REQUIRE(is_root(y, rp));
        REQUIRE(decode(y, params) == x);
    }
}

TEST_CASE("codec output survives the disjoint-duplication channel end to end") {
    for (int q : {2, 4}) {
        for (std::size_t n : {std::size_t{32}, std::size_t{64}}) {
            const RootCodecParams params = RootCodecParams::make(q, n, ComplementMap::paired(q));
            const RootParams rp = params.root_params();
            const std::size_t k = 3 * ceil_log(static_cast<std::uint64_t>(q), n);
            REQUIRE(k + 3 >= 3 * params.m);
            for (std::uint64_t trial = 0; trial < 200; ++trial) {
                CounterRng rng(17, trial);
                const Word x = random_word(q, n - 1, rng);
                const Word cw = encode(x, params);

                // Random disjoint pattern with gaps of at least k.
                std::vector<std::size_t> positions;
                std::size_t next_min = 1;
                const int t = 1 + static_cast<int>(rng.below(2));
                for (int j = 0; j < t && next_min + k - 1 <= n; ++j) {
                    const std::size_t span = n - k + 1 - next_min + 1;
                    const std::size_t i = next_min + rng.below(span);
                    if (i + k - 1 > n) break;
                    positions.push_back(i);
                    next_min = i + k;
                }
                const Word y =
                    apply_disjoint(cw, DisjointPattern{k, positions}, params.map);
                const Word back =
                    decode_disjoint(y, rp, k, static_cast<int>(positions.size()));
                REQUIRE(back == cw);
                REQUIRE(decode(back, params) == x);
            }
        }
    }
}

TEST_CASE("palindromic twin of the codec") {
    const RootCodecParams params = RootCodecParams::with_m(2, 10, 4, ComplementMap::identity(2));
    const RootParams rp = params.root_params();
    for_each_word(2, 9, [&](const Word& x) {
        const Word y = encode(x, params);
        REQUIRE(is_root(y, rp));
        REQUIRE(decode(y, params) == x);
    });
}

TEST_CASE("message length is validated") {
    const RootCodecParams params = RootCodecParams::make(2, 8, ComplementMap::paired(2));
    CHECK_THROWS_AS(encode(Word::from_text("0000", 2), params), InvalidArgument);
    CHECK_THROWS_AS(decode(Word::from_text("0000", 2), params), InvalidArgument);
    // A window length whose index field cannot address every window start.
    CHECK_THROWS_AS(RootCodecParams::with_m(2, 10, 3, ComplementMap::paired(2)),
                    InvalidArgument);
}

TEST_SUITE_END();
