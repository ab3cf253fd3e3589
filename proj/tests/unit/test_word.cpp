#include <gtest/gtest.h>

#include "oracles.hpp"
#include "reconlab/error.hpp"
#include "reconlab/word.hpp"

using namespace reconlab;

TEST(Word, ParsesDigitsStarsAndQuestionMarks) {
    const Word w = parse_word("0*4?", 5);
    ASSERT_EQ(w.size(), 4u);
    EXPECT_TRUE(w.is_plain(0));
    EXPECT_TRUE(w.is_erased(1));
    EXPECT_EQ(w[2], 4u);
    EXPECT_TRUE(w.is_unknown(3));
    EXPECT_EQ(to_string(w), "0*4?");
}

TEST(Word, WideAlphabetsAreSpaceSeparated) {
    const Word w = parse_word("12 0 * 255", 256);
    EXPECT_EQ(w.size(), 4u);
    EXPECT_EQ(w[0], 12u);
    EXPECT_EQ(to_string(w), "12 0 * 255");
}

TEST(Word, RejectsSymbolsOutsideTheAlphabet) {
    EXPECT_THROW(parse_word("015", 5), PreconditionError);
    EXPECT_THROW(parse_word("0a", 5), PreconditionError);
}

TEST(SupportView, PlainWord) {
    const SupportView v = support_view(parse_word("014", 5));
    EXPECT_EQ(v.support, (std::vector<std::size_t>{2, 3}));
    EXPECT_EQ(v.vsupport, (std::vector<std::pair<std::size_t, Symbol>>{{2, 1}, {3, 4}}));
    EXPECT_EQ(v.weight, 2u);
}

TEST(SupportView, ZeroWord) {
    const SupportView v = support_view(parse_word("000", 2));
    EXPECT_TRUE(v.support.empty());
    EXPECT_EQ(v.weight, 0u);
}

TEST(SupportView, ErasuresJoinTheSupport) {
    const Word w = parse_word("0*4", 5);
    const SupportView v = support_view(w);
    EXPECT_EQ(v.support, (std::vector<std::size_t>{2, 3}));
    EXPECT_EQ(v.weight, 2u);
    // Same answer when the word is read as a plain 6-ary word.
    const Word wide(6, w.symbols());
    EXPECT_EQ(support_view(wide).vsupport, v.vsupport);
}

TEST(SupportView, RejectsUnknown) { EXPECT_THROW(support_view(parse_word("0?", 2)), PreconditionError); }

TEST(Distance, Examples) {
    EXPECT_EQ(hamming_distance(parse_word("000", 2), parse_word("110", 2)), 2u);
    EXPECT_EQ(hamming_distance(parse_word("0*4", 5), parse_word("014", 5)), 1u);
    EXPECT_EQ(erasure_aware_distance(parse_word("0*4", 5), parse_word("014", 5)), 0u);
    EXPECT_EQ(erasure_aware_distance(parse_word("*14", 5), parse_word("024", 5)), 1u);
}

TEST(Distance, RejectsMismatches) {
    EXPECT_THROW(hamming_distance(parse_word("00", 2), parse_word("000", 2)), PreconditionError);
    EXPECT_THROW(hamming_distance(parse_word("00", 2), parse_word("00", 3)), PreconditionError);
    EXPECT_THROW(hamming_distance(parse_word("0?", 2), parse_word("00", 2)), PreconditionError);
}

TEST(Distance, MetricAxiomsExhaustive) {
    for (unsigned q = 2; q <= 4; ++q) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto words = oracle::all_extended_words(q, n);
            for (const Word& x : words) {
                for (const Word& y : words) {
                    const auto dxy = hamming_distance(x, y);
                    ASSERT_EQ(dxy, hamming_distance(y, x));
                    ASSERT_EQ(dxy == 0, x == y);
                    ASSERT_LE(erasure_aware_distance(x, y), dxy);
                    for (const Word& z : words) ASSERT_LE(hamming_distance(x, z), dxy + hamming_distance(y, z));
                }
            }
        }
    }
}

TEST(Distance, SupportIdentityExhaustive) {
    // d(x,y) = w(x) + w(y) - |supp x ∩ supp y| - |vsupp x ∩ vsupp y|
    for (unsigned q = 2; q <= 4; ++q) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto words = oracle::all_words(q, n);
            for (const Word& x : words) {
                const auto sx = support_view(x);
                for (const Word& y : words) {
                    const auto sy = support_view(y);
                    std::size_t common = 0, vcommon = 0;
                    for (auto i : sx.support) common += std::count(sy.support.begin(), sy.support.end(), i);
                    for (auto p : sx.vsupport) vcommon += std::count(sy.vsupport.begin(), sy.vsupport.end(), p);
                    ASSERT_EQ(hamming_distance(x, y), sx.weight + sy.weight - common - vcommon);
                }
            }
        }
    }
}

TEST(Word, ReinterpretAndIdentical) {
    const Word x = parse_word("01", 3);
    const Word y = reinterpret(x, 7);
    EXPECT_EQ(y.q(), 7u);
    EXPECT_TRUE(identical(x, y));
    EXPECT_FALSE(x == y);
    EXPECT_FALSE(identical(parse_word("0*", 3), parse_word("03", 7)));
    EXPECT_THROW(reinterpret(parse_word("5", 7), 3), PreconditionError);
}

TEST(Word, EmptyWordIsAllowed) {
    const Word w(3, {});
    EXPECT_TRUE(w.empty());
    EXPECT_EQ(to_string(w), "");
}
