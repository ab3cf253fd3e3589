#include <benchmark/benchmark.h>

#include "reconlab/balls.hpp"
#include "reconlab/bounds.hpp"
#include "reconlab/channels.hpp"
#include "reconlab/decoders.hpp"

using namespace reconlab;

static void BM_ChannelsUnique(benchmark::State& state) {
    const auto n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(channels_unique(n, 3, 2, 2));
}
BENCHMARK(BM_ChannelsUnique)->Arg(16)->Arg(64)->Arg(256);

static void BM_EraSubChannels(benchmark::State& state) {
    const auto n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(era_sub_channels(n, 4, 2, 3, 3));
}
BENCHMARK(BM_EraSubChannels)->Arg(16)->Arg(64);

static void BM_EnumerateSubstitutionBall(benchmark::State& state) {
    const BallSpec spec{ErrorModel::substitution(static_cast<std::size_t>(state.range(0))), Word::zeros(3, 12)};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_ball(spec).size());
}
BENCHMARK(BM_EnumerateSubstitutionBall)->Arg(1)->Arg(2)->Arg(3);

static void BM_EnumerateDeletionBall(benchmark::State& state) {
    std::vector<Symbol> s(14);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<Symbol>(i % 3);
    const BallSpec spec{ErrorModel::deletion(static_cast<std::size_t>(state.range(0))), Word(3, s)};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_ball(spec).size());
}
BENCHMARK(BM_EnumerateDeletionBall)->Arg(2)->Arg(4);

static void BM_MajorityWord(benchmark::State& state) {
    const Word x = Word::zeros(3, 64);
    const auto batch = transmit(x, ErrorModel::substitution(4), static_cast<std::size_t>(state.range(0)), true, 1);
    const Rational tau(static_cast<long>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(majority_word(batch, tau).unknown.size());
}
BENCHMARK(BM_MajorityWord)->Arg(32)->Arg(512);

static void BM_ReconstructionList(benchmark::State& state) {
    const Word x = Word::zeros(3, 8);
    const auto batch = transmit(x, ErrorModel::substitution(2), 20, false, 7);
    const CodeRef code = FullSpace{3, 8};
    for (auto _ : state) benchmark::DoNotOptimize(reconstruction_list(batch, code).candidates.size());
}
BENCHMARK(BM_ReconstructionList);
BENCHMARK_MAIN();
