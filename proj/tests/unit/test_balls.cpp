#include <gtest/gtest.h>

#include "oracles.hpp"
#include "reconlab/balls.hpp"
#include "reconlab/bounds.hpp"
#include "reconlab/error.hpp"

using namespace reconlab;

namespace {

std::vector<ErrorModel> small_models() {
    std::vector<ErrorModel> out;
    for (std::size_t t = 0; t <= 2; ++t) {
        out.push_back(ErrorModel::substitution(t));
        out.push_back(ErrorModel::erasure(t));
        out.push_back(ErrorModel::deletion(t));
        out.push_back(ErrorModel::insertion(t));
        for (std::size_t ts = 0; ts <= 2; ++ts) out.push_back(ErrorModel::erasure_substitution(t, ts));
    }
    return out;
}

std::vector<Word> W(unsigned q, std::initializer_list<const char*> words) {
    std::vector<Word> out;
    for (const char* w : words) out.push_back(parse_word(w, q));
    return out;
}

}  // namespace

TEST(Ball, SubstitutionExample) {
    EXPECT_EQ(enumerate_ball({ErrorModel::substitution(1), parse_word("000", 2)}),
              W(2, {"000", "001", "010", "100"}));
}

TEST(Ball, DeletionExample) {
    EXPECT_EQ(enumerate_ball({ErrorModel::deletion(1), parse_word("0110", 2)}), W(2, {"010", "011", "0110", "110"}));
}

TEST(Ball, InsertionCountMatchesClosedForm) {
    // |I_t(x)| = sum_{i<=t} C(n+t, i) (q-1)^i for any x of length n.
    for (unsigned q = 2; q <= 3; ++q) {
        for (std::size_t n = 1; n <= 4; ++n) {
            for (std::size_t t = 0; t <= 2; ++t) {
                oracle::Gen g(n * 31 + t * 7 + q);
                const Word x = g.word(q, n);
                const auto ball = enumerate_ball({ErrorModel::insertion(t), x});
                const auto exact_len = std::count_if(ball.begin(), ball.end(),
                                                     [&](const Word& y) { return y.size() == n + t; });
                EXPECT_EQ(BigCount(static_cast<unsigned long>(exact_len)),
                          ball_volume(static_cast<long long>(n + t), q, static_cast<long long>(t)));
            }
        }
    }
}

TEST(Ball, MatchesFilterAndSearchOraclesExhaustively) {
    for (const ErrorModel& m : small_models()) {
        for (unsigned q = 2; q <= 3; ++q) {
            for (std::size_t n = 1; n <= 3; ++n) {
                if (m.kind == ErrorKind::Deletion && m.deletions > n) {
                    EXPECT_THROW(enumerate_ball({m, Word::zeros(q, n)}), PreconditionError);
                    continue;
                }
                for (const Word& x : oracle::all_words(q, n)) {
                    const auto got = enumerate_ball({m, x});
                    ASSERT_EQ(got, oracle::filter_ball(x, m)) << to_string(m.kind) << " x=" << to_string(x);
                    ASSERT_EQ(got, oracle::bfs_ball(x, m)) << to_string(m.kind) << " x=" << to_string(x);
                    ASSERT_LE(BigCount(static_cast<unsigned long>(got.size())), ball_size_bound(m, q, n));
                }
            }
        }
    }
}

TEST(Ball, MixedModelIsOrderIndependent) {
    for (std::size_t te = 0; te <= 2; ++te) {
        for (std::size_t ts = 0; ts <= 2; ++ts) {
            const ErrorModel m = ErrorModel::erasure_substitution(te, ts);
            for (const Word& x : oracle::all_words(3, 3)) {
                ASSERT_EQ(oracle::bfs_ball(x, m, true), oracle::bfs_ball(x, m, false));
                ASSERT_EQ(enumerate_ball({m, x}), oracle::bfs_ball(x, m, true));
            }
        }
    }
}

TEST(Ball, ExactVolumesForCoordinatewiseModels) {
    for (unsigned q = 2; q <= 4; ++q) {
        for (std::size_t n = 1; n <= 4; ++n) {
            const Word x = Word::zeros(q, n);
            for (std::size_t t = 0; t <= 2; ++t) {
                const auto ln = static_cast<long long>(n);
                const auto lt = static_cast<long long>(t);
                EXPECT_EQ(ball_size_bound(ErrorModel::substitution(t), q, n), ball_volume(ln, q, lt));
                EXPECT_EQ(BigCount(static_cast<unsigned long>(enumerate_ball({ErrorModel::erasure(t), x}).size())),
                          ball_volume(ln, 2, lt));
            }
        }
    }
}

TEST(Ball, CapIsEnforced) {
    EXPECT_THROW(enumerate_ball({ErrorModel::substitution(3), Word::zeros(4, 10)}, 100), CapExceeded);
}

TEST(Reachable, AgreesWithTextbookMembership) {
    oracle::Gen g(7);
    for (int iter = 0; iter < 3000; ++iter) {
        const unsigned q = static_cast<unsigned>(g.uniform(2, 4));
        const std::size_t n = g.uniform(1, 5);
        const auto models = small_models();
        const ErrorModel& m = models[g.uniform(0, models.size() - 1)];
        const Word x = g.word(q, n);
        Word y;
        switch (m.kind) {
            case ErrorKind::Deletion: y = g.word(q, n - std::min(n, g.uniform(0, 2))); break;
            case ErrorKind::Insertion: y = g.word(q, n + g.uniform(0, 2)); break;
            case ErrorKind::Substitution: y = g.word(q, n); break;
            default: y = g.erased_word(q, n); break;
        }
        ASSERT_EQ(reachable(x, y, m), oracle::in_ball(x, y, m)) << to_string(x) << " -> " << to_string(y);
    }
}

TEST(Intersection, WorkedExample) {
    const ErrorModel m = ErrorModel::substitution(1);
    const auto common = intersection({{m, parse_word("100", 2)}, {m, parse_word("010", 2)}});
    EXPECT_EQ(common, W(2, {"000", "110"}));
    EXPECT_EQ(intersection_size({{m, parse_word("000", 2)}, {m, parse_word("111", 2)}}), 0);
}

TEST(Intersection, IsSymmetricAndBoundedByEachBall) {
    oracle::Gen g(11);
    for (int iter = 0; iter < 300; ++iter) {
        const unsigned q = static_cast<unsigned>(g.uniform(2, 4));
        const std::size_t n = g.uniform(2, 5);
        const ErrorModel m = ErrorModel::substitution(g.uniform(1, 2));
        const Word a = g.word(q, n), b = g.word(q, n);
        const auto ab = intersection({{m, a}, {m, b}});
        ASSERT_EQ(ab, intersection({{m, b}, {m, a}}));
        ASSERT_LE(ab.size(), enumerate_ball({m, a}).size());
        for (const Word& y : ab) ASSERT_TRUE(oracle::in_ball(a, y, m) && oracle::in_ball(b, y, m));
    }
}

TEST(Intersection, RejectsMixedModels) {
    EXPECT_THROW(intersection({{ErrorModel::substitution(1), parse_word("00", 2)},
                               {ErrorModel::deletion(1), parse_word("00", 2)}}),
                 PreconditionError);
}

TEST(Preimage, MatchesFilteringTheWholeSpace) {
    for (const ErrorModel& m : small_models()) {
        for (unsigned q = 2; q <= 3; ++q) {
            const std::size_t n = 3;
            oracle::Gen g(q * 100 + m.substitutions * 10 + m.erasures + m.deletions * 3 + m.insertions * 5);
            for (int iter = 0; iter < 5; ++iter) {
                const Word x = g.word(q, n);
                const auto ball = enumerate_ball({m, x});
                const Word& y = ball[g.uniform(0, ball.size() - 1)];
                std::vector<Word> want;
                for (const Word& c : oracle::all_words(q, n)) {
                    if (oracle::in_ball(c, y, m)) want.push_back(c);
                }
                ASSERT_EQ(preimage_candidates(y, m, n), want) << to_string(m.kind) << " y=" << to_string(y);
            }
        }
    }
}

TEST(ReconstructionList, AlwaysContainsTheTransmittedWord) {
    oracle::Gen g(5);
    for (int iter = 0; iter < 200; ++iter) {
        const unsigned q = static_cast<unsigned>(g.uniform(2, 3));
        const std::size_t n = g.uniform(2, 4);
        const auto models = small_models();
        const ErrorModel m = models[g.uniform(0, models.size() - 1)];
        const Word x = g.word(q, n);
        const auto ball = enumerate_ball({m, x});
        OutputBatch y;
        y.q = q;
        y.n = n;
        y.model = m;
        for (std::size_t k = 0, N = g.uniform(1, 3); k < N; ++k) {
            const Word& w = ball[g.uniform(0, ball.size() - 1)];
            if (std::find(y.outputs.begin(), y.outputs.end(), w) == y.outputs.end()) y.outputs.push_back(w);
        }
        const auto list = reconstruction_list(y, FullSpace{q, n});
        const auto want = oracle::naive_list(y.outputs, oracle::all_words(q, n), m);
        ASSERT_EQ(list.candidates, want);
        ASSERT_TRUE(std::binary_search(want.begin(), want.end(), x));
        ASSERT_EQ(list.status, want.size() == 1 ? DecodeStatus::Unique : DecodeStatus::List);
    }
}

TEST(ReconstructionList, RestrictsToTheCode) {
    const Code code(2, 3, W(2, {"000", "111"}));
    OutputBatch y;
    y.q = 2;
    y.n = 3;
    y.model = ErrorModel::substitution(1);
    y.outputs = W(2, {"100", "010"});
    const auto out = reconstruction_list(y, std::cref(code));
    EXPECT_EQ(out.status, DecodeStatus::Unique);
    EXPECT_EQ(out.candidates, W(2, {"000"}));
}

TEST(Subsequences, Examples) {
    const Word w = parse_word("0110", 2);
    EXPECT_EQ(subsequences(w, 3), W(2, {"010", "011", "110"}));
    EXPECT_EQ(subsequences(w, 0).size(), 1u);
    EXPECT_TRUE(is_subsequence(parse_word("10", 2), w));
    EXPECT_FALSE(is_subsequence(parse_word("100", 2), w));
}

TEST(Supersequences, AreDistinctAndContainTheWord) {
    for (unsigned q = 2; q <= 3; ++q) {
        for (const Word& w : oracle::all_words(q, 3)) {
            for (std::size_t m = 3; m <= 5; ++m) {
                auto sup = supersequences(w, m);
                for (const Word& s : sup) ASSERT_TRUE(is_subsequence(w, s));
                const std::size_t count = sup.size();
                std::sort(sup.begin(), sup.end());
                ASSERT_EQ(std::unique(sup.begin(), sup.end()), sup.end());
                ASSERT_EQ(BigCount(static_cast<unsigned long>(count)),
                          ball_volume(static_cast<long long>(m), q, static_cast<long long>(m - 3)));
            }
        }
    }
}
