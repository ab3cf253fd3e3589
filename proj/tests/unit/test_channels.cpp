#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "reconlab/balls.hpp"
#include "reconlab/channels.hpp"
#include "reconlab/error.hpp"

using namespace reconlab;

TEST(Rng, SameSeedAndStreamRepeat) {
    Rng a(42, 3), b(42, 3), c(42, 4), d(43, 3);
    bool differs_stream = false, differs_seed = false;
    for (int i = 0; i < 16; ++i) {
        const auto va = a.next();
        EXPECT_EQ(va, b.next());
        differs_stream |= va != c.next();
        differs_seed |= va != d.next();
    }
    EXPECT_TRUE(differs_stream);
    EXPECT_TRUE(differs_seed);
}

TEST(Rng, BelowStaysInRangeAndCoversIt) {
    Rng r(1, 0);
    std::vector<int> hits(7);
    for (int i = 0; i < 70000; ++i) {
        const auto v = r.below(std::uint64_t{7});
        ASSERT_LT(v, 7u);
        ++hits[v];
    }
    // Chi-square with 6 degrees of freedom; 22.46 is the 0.999 quantile.
    double chi = 0;
    for (int h : hits) chi += (h - 10000.0) * (h - 10000.0) / 10000.0;
    EXPECT_LT(chi, 22.46);
    EXPECT_THROW(r.below(std::uint64_t{0}), PreconditionError);
}

TEST(Rng, BigBelowStaysInRange) {
    Rng r(9, 1);
    const BigCount bound = BigCount("340282366920938463463374607431768211507");  // just above 2^128
    bool high_half = false;
    for (int i = 0; i < 200; ++i) {
        const BigCount v = r.below(bound);
        ASSERT_TRUE(v >= 0 && v < bound);
        high_half |= v > bound / 2;
    }
    EXPECT_TRUE(high_half);
    EXPECT_EQ(r.below(BigCount(1)), 0);
}

TEST(BallSampler, SmallBallsAreEnumerated) {
    const BallSampler s(parse_word("012", 3), ErrorModel::substitution(1));
    EXPECT_EQ(s.regime(), SamplingRegime::UniformOverBall);
    EXPECT_EQ(s.ball(), enumerate_ball({ErrorModel::substitution(1), parse_word("012", 3)}));
    EXPECT_EQ(s.volume(), 7);
}

TEST(BallSampler, DrawsAreUniformOverTheBall) {
    const BallSampler s(parse_word("0110", 2), ErrorModel::deletion(2));
    Rng r(5, 0);
    std::map<Word, int> hits;
    const int draws = 40000;
    for (int i = 0; i < draws; ++i) ++hits[s.draw(r)];
    ASSERT_EQ(hits.size(), s.ball().size());
    const double expect = static_cast<double>(draws) / static_cast<double>(hits.size());
    double chi = 0;
    for (const auto& [w, h] : hits) chi += (h - expect) * (h - expect) / expect;
    EXPECT_LT(chi, 3.0 * static_cast<double>(hits.size()));
}

TEST(BallSampler, LargeBallsSwitchToPatterns) {
    Limits small;
    small.ball_words = 50;
    for (const ErrorModel& m : {ErrorModel::substitution(3), ErrorModel::erasure_substitution(2, 2),
                                ErrorModel::deletion(3), ErrorModel::insertion(3), ErrorModel::erasure(3)}) {
        const Word x = parse_word("01230123", 4);
        const BallSampler s(x, m, small);
        EXPECT_EQ(s.regime(), SamplingRegime::UniformOverPatterns) << to_string(m.kind);
        EXPECT_TRUE(s.ball().empty());
        Rng r(3, 0);
        for (int i = 0; i < 500; ++i) {
            const Word y = s.draw(r);
            ASSERT_TRUE(oracle::in_ball(x, y, m)) << to_string(m.kind) << " " << to_string(y);
        }
    }
}

TEST(BallSampler, RejectsImpossibleInputs) {
    EXPECT_THROW(BallSampler(parse_word("0*", 2), ErrorModel::substitution(1)), PreconditionError);
    EXPECT_THROW(BallSampler(parse_word("01", 2), ErrorModel::deletion(3)), PreconditionError);
}

TEST(Transmit, SetSemanticsGiveDistinctBallWords) {
    oracle::Gen g(17);
    for (int iter = 0; iter < 100; ++iter) {
        const unsigned q = static_cast<unsigned>(g.uniform(2, 4));
        const std::size_t n = g.uniform(2, 5);
        const Word x = g.word(q, n);
        const ErrorModel m = ErrorModel::erasure_substitution(g.uniform(0, 1), g.uniform(1, 2));
        const auto volume = enumerate_ball({m, x}).size();
        const std::size_t N = g.uniform(1, std::min<std::size_t>(volume, 6));
        const OutputBatch y = transmit(x, m, N, false, 99, static_cast<std::uint64_t>(iter));
        ASSERT_EQ(y.outputs.size(), N);
        ASSERT_NO_THROW(y.validate());
        ASSERT_EQ(std::set<Word>(y.outputs.begin(), y.outputs.end()).size(), N);
        for (const Word& w : y.outputs) ASSERT_TRUE(oracle::in_ball(x, w, m));
    }
}

TEST(Transmit, MultisetAllowsRepeats) {
    const OutputBatch y = transmit(parse_word("00", 2), ErrorModel::substitution(1), 30, true, 1);
    EXPECT_TRUE(y.multiset);
    EXPECT_EQ(y.outputs.size(), 30u);
    EXPECT_LE(y.distinct_outputs().size(), 3u);
}

TEST(Transmit, IsReproducible) {
    const Word x = parse_word("0123", 4);
    const auto m = ErrorModel::insertion(2);
    EXPECT_EQ(transmit(x, m, 5, false, 8, 2).outputs, transmit(x, m, 5, false, 8, 2).outputs);
    EXPECT_NE(transmit(x, m, 5, false, 8, 2).outputs, transmit(x, m, 5, false, 8, 3).outputs);
}

TEST(Transmit, SetModeNeedsEnoughWords) {
    EXPECT_THROW(transmit(parse_word("00", 2), ErrorModel::substitution(1), 4, false, 1), PreconditionError);
}

TEST(AdversarialBatches, EnumeratesEverySubsetOnce) {
    const Word x = parse_word("010", 2);
    const auto m = ErrorModel::substitution(1);
    AdversarialBatches batches(x, m, 2);
    EXPECT_EQ(batches.count(), 6);
    std::set<std::vector<Word>> seen;
    OutputBatch y;
    while (batches.next(y)) {
        ASSERT_EQ(y.outputs.size(), 2u);
        ASSERT_NO_THROW(y.validate());
        seen.insert(y.outputs);
    }
    EXPECT_EQ(seen.size(), 6u);
    EXPECT_FALSE(batches.next(y));
}

TEST(AdversarialBatches, RespectsTheCap) {
    Limits small;
    small.adversarial_batches = 9;  // C(5, 2) = 10 sets
    EXPECT_THROW(AdversarialBatches(parse_word("0000", 2), ErrorModel::substitution(1), 2, small), CapExceeded);
}
