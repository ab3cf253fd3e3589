#include <gtest/gtest.h>

#include "oracles.hpp"
#include "reconlab/balls.hpp"
#include "reconlab/bounds.hpp"
#include "reconlab/error.hpp"

using namespace reconlab;

namespace {

BigCount B(unsigned long v) { return BigCount(v); }

// 1 + max over x' != 0 of |B(0) ∩ B(x')|, optionally at one distance only, by filtering.
std::size_t oracle_channels(const ErrorModel& m, unsigned q, std::size_t n, std::size_t only_d = 0) {
    const Word zero = Word::zeros(q, n);
    const auto ball0 = oracle::filter_ball(zero, m);
    std::size_t best = 0;
    for (const Word& x : oracle::all_words(q, n)) {
        if (x == zero || (only_d != 0 && oracle::plain_diff(zero, x) != only_d)) continue;
        std::size_t common = 0;
        for (const Word& y : ball0) common += oracle::in_ball(x, y, m);
        best = std::max(best, common);
    }
    return best + 1;
}

}  // namespace

TEST(Numeric, BinomialConventions) {
    EXPECT_EQ(binom(5, 2), 10);
    EXPECT_EQ(binom(3, 4), 0);
    EXPECT_EQ(binom(3, -1), 0);
    EXPECT_EQ(binom(-2, 0), 0);
    EXPECT_EQ(binom(0, 0), 1);
    EXPECT_EQ(ipow(0, 0), 1);
    EXPECT_EQ(ipow(0, 3), 0);
    EXPECT_EQ(ipow(-1, 3), -1);
}

TEST(Numeric, RationalParsing) {
    EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_THROW(parse_rational("x"), PreconditionError);
    EXPECT_EQ(ceil(Rational(7, 2)), 4);
    EXPECT_EQ(ceil(Rational(4)), 4);
}

TEST(BallVolume, Examples) {
    EXPECT_EQ(ball_volume(3, 2, 1), B(4));
    EXPECT_EQ(ball_volume(9, 5, 0), B(1));
    EXPECT_EQ(ball_volume(15, 3, 2), B(451));
    EXPECT_EQ(ball_volume(3, 4, 7), B(64));
    EXPECT_EQ(ball_volume(-1, 2, 3), B(0));
}

TEST(MixedVolume, Examples) {
    EXPECT_EQ(mixed_volume(4, 3, 0, 2), ball_volume(4, 3, 2));
    EXPECT_EQ(mixed_volume(2, 2, 1, 0), B(3));
    EXPECT_EQ(mixed_volume(3, 3, 1, 1), B(22));
}

TEST(MixedVolume, MatchesFilteredBall) {
    for (unsigned q = 2; q <= 3; ++q) {
        for (std::size_t n = 1; n <= 3; ++n) {
            for (std::size_t te = 0; te <= 2; ++te) {
                for (std::size_t ts = 0; ts <= 2; ++ts) {
                    const auto ball = oracle::filter_ball(Word::zeros(q, n), ErrorModel::erasure_substitution(te, ts));
                    EXPECT_EQ(mixed_volume(static_cast<long long>(n), q, static_cast<long long>(te),
                                           static_cast<long long>(ts)),
                              B(ball.size()));
                }
            }
        }
    }
}

TEST(ChannelsUnique, Examples) {
    EXPECT_EQ(channels_unique(3, 2, 0, 1), B(3));
    EXPECT_EQ(channels_unique(2, 3, 0, 1), B(4));
    EXPECT_EQ(channels_unique(15, 3, 1, 1), B(13));
}

TEST(ChannelsUnique, SimplifiedFormAgreesForEZero) {
    for (unsigned q = 2; q <= 6; ++q) {
        for (long long n = 1; n <= 12; ++n) {
            for (long long t = 1; t <= 4; ++t) {
                EXPECT_EQ(channels_unique_general(n, q, 0, t), channels_unique_simplified(n, q, t));
            }
        }
    }
}

TEST(ChannelsUnique, MatchesEnumerationOracle) {
    for (unsigned q = 2; q <= 3; ++q) {
        for (std::size_t n = 2; n <= 4; ++n) {
            for (std::size_t t = 1; t <= 2; ++t) {
                EXPECT_EQ(channels_unique(static_cast<long long>(n), q, 0, static_cast<long long>(t)),
                          B(oracle_channels(ErrorModel::substitution(t), q, n)))
                    << "q=" << q << " n=" << n << " t=" << t;
            }
        }
    }
}

TEST(ChannelsUnique, CodeCaseMatchesDistanceRestrictedOracle) {
    // e = 1, l = 1: intersections of radius-2 balls at distance 3.
    for (unsigned q = 2; q <= 3; ++q) {
        for (std::size_t n = 3; n <= 5; ++n) {
            EXPECT_EQ(channels_unique(static_cast<long long>(n), q, 1, 1),
                      B(oracle_channels(ErrorModel::substitution(2), q, n, 3)))
                << "q=" << q << " n=" << n;
        }
    }
}

TEST(ErasureListSize, Examples) {
    const auto r = erasure_list_size(3, 3, 2, 3);
    EXPECT_EQ(r.a, 1);
    EXPECT_EQ(r.list_size, B(3));
    EXPECT_EQ(erasure_list_size(6, 4, 3, ball_volume(5, 2, 2) + 1).list_size, B(1));
    // N = 1 lands in the a = t bracket; the ternary repetition code of length 3 has 3 words.
    const auto top = erasure_list_size(5, 3, 3, 1, std::size_t{3});
    EXPECT_EQ(top.a, 3);
    EXPECT_EQ(top.list_size, B(3));
}

TEST(ErasureListSize, BracketsPartitionTheRange) {
    for (long long n = 1; n <= 6; ++n) {
        for (long long t = 0; t <= n; ++t) {
            const BigCount top = ball_volume(n, 2, t);
            long long prev_a = t + 1;
            for (BigCount N = 1; N <= top; ++N) {
                const auto r = erasure_list_size(n, 2, t, N);
                EXPECT_LE(r.a, prev_a);  // a falls as N grows
                prev_a = r.a;
                int hits = 0;
                for (long long a = 0; a <= t; ++a) {
                    hits += (ball_volume(n - a - 1, 2, t - a - 1) + 1 <= N && N <= ball_volume(n - a, 2, t - a));
                }
                EXPECT_EQ(hits, 1) << "n=" << n << " t=" << t << " N=" << N.get_str();
            }
            EXPECT_THROW(erasure_list_size(n, 2, t, top + 1), PreconditionError);
            EXPECT_THROW(erasure_list_size(n, 2, t, 0), PreconditionError);
        }
    }
}

TEST(MaxCodeSize, Examples) {
    EXPECT_EQ(max_code_size(3, 2, 3), B(2));
    EXPECT_EQ(max_code_size(3, 3, 1), B(27));
    EXPECT_EQ(max_code_size(2, 3, 3), B(1));
    EXPECT_EQ(max_code_size(2, 3, 2), B(3));
    EXPECT_EQ(max_code_size(4, 2, 2), B(8));
    EXPECT_EQ(max_code_size(5, 2, 3), B(4));
}

TEST(MaxCodeSize, AgreesWithSubsetSearch) {
    for (std::size_t d = 1; d <= 3; ++d) {
        EXPECT_EQ(max_code_size(2, 3, d), B(oracle::naive_max_code(oracle::all_words(3, 2), d)));
        EXPECT_EQ(max_code_size(4, 2, d), B(oracle::naive_max_code(oracle::all_words(2, 4), d)));
    }
}

TEST(MaxCodeSize, RespectsTheCap) {
    Limits small;
    small.code_search_words = 100;
    EXPECT_THROW(max_code_size(5, 3, 2, small), CapExceeded);
}

TEST(EraSubChannels, FormsAgreeAndMatchOracle) {
    for (unsigned q = 2; q <= 3; ++q) {
        for (std::size_t n = 1; n <= 4; ++n) {
            for (std::size_t te = 0; te <= 2; ++te) {
                for (std::size_t ts = 0; ts <= 2; ++ts) {
                    if (te + ts == 0 || te + ts > n) continue;
                    for (std::size_t d = 1; d <= n; ++d) {
                        const auto ln = static_cast<long long>(n);
                        const auto f1 = era_sub_channels_first_form(ln, q, static_cast<long long>(te),
                                                                    static_cast<long long>(ts), static_cast<long long>(d));
                        const auto f2 = era_sub_channels_second_form(ln, q, static_cast<long long>(te),
                                                                     static_cast<long long>(ts), static_cast<long long>(d));
                        EXPECT_EQ(f1, f2);
                        EXPECT_EQ(f1, B(oracle_channels(ErrorModel::erasure_substitution(te, ts), q, n, d)))
                            << "q=" << q << " n=" << n << " te=" << te << " ts=" << ts << " d=" << d;
                    }
                }
            }
        }
    }
}

TEST(EraSubChannels, RequiresRoomForTheBudgets) { EXPECT_THROW(era_sub_channels(2, 2, 2, 1, 1), PreconditionError); }

TEST(ConstantListBounds, Examples) {
    EXPECT_EQ(*constant_list_bounds(12, 3, 2, 2).list_cap, B(5));
    const auto l1 = constant_list_bounds(8, 3, 1, 1);
    EXPECT_EQ(l1.threshold, B(2));
    EXPECT_EQ(*l1.list_cap, B(3));
    EXPECT_EQ(constant_list_bounds(7, 3, 2, 1).lower_bound, B(2));
    EXPECT_FALSE(constant_list_bounds(7, 2, 2, 1).list_cap.has_value());
}

TEST(MajorityThresholds, Examples) {
    const auto th = majority_thresholds(15, 3, 1, 1);
    EXPECT_EQ(th.tau_prime, Rational(1, 2));
    EXPECT_EQ(th.tau, Rational(7));
    EXPECT_EQ(th.channels, B(13));
    const auto z = majority_thresholds(6, 3, 0, 2);
    EXPECT_EQ(z.tau, z.tau_prime);
    EXPECT_EQ(z.tau_prime, Rational(ball_volume(5, 3, 1)));
}

TEST(ListThresholds, Examples) {
    EXPECT_EQ(list_channel_count(12, 1, 2, 0, 1), B(23));
    EXPECT_EQ(list_channel_count(12, 1, 2, 1, Rational(1, 2)), B(3));
    EXPECT_EQ(list_channel_count(12, 1, 2, 1, 1), B(3));
    const auto lt = list_thresholds(12, 1, 2, 0, 1);
    EXPECT_EQ(lt.tau_prime, Rational(11, 2));
    EXPECT_EQ(lt.tau, Rational(11, 2) + Rational(23, 2));
    EXPECT_THROW(list_channel_count(12, 1, 2, 2, 1), PreconditionError);
    EXPECT_THROW(list_channel_count(12, 1, 2, 0, 0), PreconditionError);
}

TEST(BinaryListCaps, Examples) {
    const auto c0 = binary_list_caps(12, 1, 3, 0, 1);
    EXPECT_EQ(c0.cap_simple, B(8));
    EXPECT_FALSE(c0.cap_refined.has_value());
    // l = a + 1: the refined precondition reads n >= -1.
    const auto c1 = binary_list_caps(5, 1, 2, 1, 2);
    ASSERT_TRUE(c1.cap_refined.has_value());
    EXPECT_EQ(c1.b, BigCount("4913674934934"));
    EXPECT_EQ(*c1.cap_refined, BigCount("4913674934934") / 6);
    // l - a - 1 = 1 needs n >= 2^b, far out of reach.
    EXPECT_FALSE(binary_list_caps(40, 1, 3, 1, 2).cap_refined.has_value());
}

TEST(EulerPowerCeiling, SmallCases) {
    // ceil(2^e) = 7 and ceil(4^(2e)) = 1876.
    EXPECT_EQ(euler_power_ceiling(2, 1), B(7));
    EXPECT_EQ(euler_power_ceiling(4, 2), B(1876));
}

TEST(Bounds, MonotoneInNAndQ) {
    for (unsigned q = 2; q <= 5; ++q) {
        for (long long n = 3; n <= 10; ++n) {
            for (long long t = 0; t <= 3; ++t) {
                EXPECT_LE(ball_volume(n, q, t), ball_volume(n + 1, q, t));
                EXPECT_LE(ball_volume(n, q, t), ball_volume(n, q + 1, t));
            }
            for (long long ell = 1; ell <= 2; ++ell) {
                for (long long e = 0; e <= 1; ++e) {
                    if (n < 2 * e + 1) continue;
                    EXPECT_LE(channels_unique(n, q, e, ell), channels_unique(n + 1, q, e, ell));
                    EXPECT_LE(channels_unique(n, q, e, ell), channels_unique(n, q + 1, e, ell));
                }
            }
        }
    }
}
