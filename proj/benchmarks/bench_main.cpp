#include <benchmark/benchmark.h>

#include "dupcode/channel.hpp"
#include "dupcode/dup_codes.hpp"
#include "dupcode/numeric.hpp"
#include "dupcode/protect.hpp"
#include "dupcode/rcd_root.hpp"
#include "dupcode/rll_codec.hpp"
#include "dupcode/root_codec.hpp"

using namespace dupcode;

namespace {

Word random_word(int q, std::size_t n, std::uint64_t seed) {
    CounterRng rng(seed);
    Word w(q);
    for (std::size_t i = 0; i < n; ++i) w.append(static_cast<Symbol>(rng.below(q)));
    return w;
}

void BM_BallEnumeration(benchmark::State& state) {
    const ComplementMap map = ComplementMap::paired(4);
    const Word w = random_word(4, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ball(w, 1, 2, map));
    }
}
BENCHMARK(BM_BallEnumeration)->Arg(8)->Arg(16)->Arg(24);

void BM_DisjointDecode(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const RootCodecParams codec = RootCodecParams::make(2, n, ComplementMap::paired(2));
    const RootParams rp = codec.root_params();
    const std::size_t k = 3 * ceil_log(2, n);
    const Word cw = encode(random_word(2, n - 1, 2), codec);
    const Word y = apply_disjoint(cw, DisjointPattern{k, {1, 1 + k, 1 + 2 * k}}, rp.map);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decode_disjoint(y, rp, k, 3));
    }
}
BENCHMARK(BM_DisjointDecode)->Arg(64)->Arg(256)->Arg(1024);

void BM_RootEncode(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const RootCodecParams codec = RootCodecParams::make(4, n, ComplementMap::paired(4));
    const Word x = random_word(4, n - 1, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode(x, codec));
    }
}
BENCHMARK(BM_RootEncode)->Arg(64)->Arg(256);

void BM_RllRoundtrip(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const RllParams params = RllParams::make(4, n);
    const Word x = random_word(4, n - 1, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rll_decode(rll_encode(x, params), params));
    }
}
BENCHMARK(BM_RllRoundtrip)->Arg(64)->Arg(256);

void BM_SubstitutionDecode(benchmark::State& state) {
    const SubstHashParams p = SubstHashParams::make(2, 256, 64);
    CounterRng rng(5);
    std::vector<std::uint64_t> msg(64);
    for (auto& v : msg) v = rng.below(256);
    const auto digest = zeta_hash(msg, p);
    std::vector<std::uint64_t> bad = msg;
    bad[7] = (bad[7] + 9) % 256;
    bad[40] = (bad[40] + 100) % 256;
    for (auto _ : state) {
        benchmark::DoNotOptimize(zeta_decode(bad, digest, p));
    }
}
BENCHMARK(BM_SubstitutionDecode);

void BM_ConstructionRoundtrip(benchmark::State& state) {
    CodeParams params;
    params.q = 4;
    params.n = 64;
    params.t = 1;
    const CodeLayout layout = make_layout(params);
    const ComplementMap map = ComplementMap::paired(4);
    const Word x = random_word(4, layout.message_length(), 6);
    const Word cw = c_encode(x, layout);
    const Word y = apply(cw, {DuplicationKind::ReverseComplement, 20, 1}, map);
    for (auto _ : state) {
        benchmark::DoNotOptimize(c_decode(y, layout));
    }
}
BENCHMARK(BM_ConstructionRoundtrip);

}  // namespace

BENCHMARK_MAIN();
