#include <gtest/gtest.h>

#include "oracles.hpp"
#include "reconlab/balls.hpp"
#include "reconlab/code.hpp"
#include "reconlab/error.hpp"

using namespace reconlab;

namespace {

std::vector<std::string> texts(const Code& c) {
    std::vector<std::string> out;
    for (const Word& w : c.words()) out.push_back(to_string(w));
    return out;
}

}  // namespace

TEST(Code, SortsDeduplicatesAndMeasuresDistance) {
    const Code c(3, 3, {parse_word("111", 3), parse_word("000", 3), parse_word("111", 3)});
    EXPECT_EQ(c.size(), 2u);
    EXPECT_EQ(c.min_distance(), 3u);
    EXPECT_EQ(c.correction_radius(), 1u);
    EXPECT_TRUE(c.corrects(1));
    EXPECT_FALSE(c.corrects(2));
    EXPECT_TRUE(c.contains(parse_word("000", 3)));
    EXPECT_FALSE(c.contains(parse_word("001", 3)));
}

TEST(Code, SingleWordCorrectsEverything) {
    const Code c(2, 4, {parse_word("0101", 2)});
    EXPECT_FALSE(c.min_distance().has_value());
    EXPECT_EQ(c.correction_radius(), 4u);
}

TEST(Code, RejectsBadWords) {
    EXPECT_THROW(Code(2, 2, {}), PreconditionError);
    EXPECT_THROW(Code(2, 2, {parse_word("010", 2)}), PreconditionError);
    EXPECT_THROW(Code(2, 2, {parse_word("0*", 2)}), PreconditionError);
    EXPECT_THROW(Code(2, 2, {parse_word("01", 3)}), PreconditionError);
}

TEST(ConstantWeightCode, WorkedExample) {
    EXPECT_EQ(texts(constant_weight_code(7, 2)), (std::vector<std::string>{"0001110", "1110000"}));
}

TEST(ConstantWeightCode, HasDistance2ePlus2) {
    for (std::size_t e = 0; e <= 3; ++e) {
        for (std::size_t n = 2 * (e + 1); n <= 12; ++n) {
            const Code c = constant_weight_code(n, e);
            EXPECT_EQ(c.size(), n / (e + 1));
            EXPECT_EQ(c.min_distance(), 2 * e + 2);
            EXPECT_TRUE(c.corrects(e));
            for (const Word& w : c.words()) EXPECT_EQ(support_view(w).weight, e + 1);
        }
    }
}

TEST(AdversarialCode, WorkedExample) {
    const auto inst = adversarial_code(2, 2, 3);
    EXPECT_EQ(texts(inst.code), (std::vector<std::string>{"000000000011", "010000110000", "020000001100",
                                                          "101100000000", "200011000000"}));
    EXPECT_EQ(inst.code.min_distance(), 5u);
    EXPECT_EQ(inst.outputs.outputs.size(), 26u);
    EXPECT_NO_THROW(inst.outputs.validate());
}

TEST(AdversarialCode, EveryCodewordIsConsistentWithEveryOutput) {
    for (std::size_t e = 1; e <= 2; ++e) {
        for (std::size_t ell = 1; ell <= 3; ++ell) {
            for (unsigned q = 2; q <= 4; ++q) {
                const auto inst = adversarial_code(e, ell, q);
                EXPECT_EQ(inst.code.n(), e * (q - 1) * ell + e + ell);
                EXPECT_EQ(inst.code.size(), (q - 1) * ell + 1);
                EXPECT_TRUE(inst.code.corrects(e));
                const auto list = reconstruction_list(inst.outputs, std::cref(inst.code));
                EXPECT_EQ(list.candidates, inst.code.words()) << "e=" << e << " l=" << ell << " q=" << q;
            }
        }
    }
}

TEST(CodeDecoder, FindsCodewordsWithinRadius) {
    const Code c(2, 5, {parse_word("00000", 2), parse_word("11100", 2), parse_word("00111", 2)});
    EXPECT_EQ(code_decoder(c, parse_word("10000", 2), 1), (std::vector<Word>{parse_word("00000", 2)}));
    EXPECT_EQ(code_decoder(c, parse_word("10100", 2), 3).size(), 3u);
    EXPECT_THROW(code_decoder(c, parse_word("10100", 2), 3, 2), PreconditionError);
    EXPECT_TRUE(code_decoder(c, parse_word("11011", 2), 1).empty());
}

TEST(MaxDistanceSubset, AgreesWithSubsetSearch) {
    oracle::Gen g(23);
    for (int iter = 0; iter < 60; ++iter) {
        const unsigned q = static_cast<unsigned>(g.uniform(2, 3));
        const std::size_t n = g.uniform(2, 5);
        std::vector<Word> words;
        for (std::size_t k = 0, m = g.uniform(1, 14); k < m; ++k) words.push_back(g.word(q, n));
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        const std::size_t d = g.uniform(1, n);
        const auto best = max_distance_subset(words, d);
        ASSERT_EQ(best.size(), oracle::naive_max_code(words, d));
        for (std::size_t i = 0; i < best.size(); ++i) {
            for (std::size_t j = i + 1; j < best.size(); ++j) ASSERT_GE(hamming_distance(best[i], best[j]), d);
        }
    }
}

TEST(AllWords, CountAndCap) {
    EXPECT_EQ(all_words(3, 4, 1000).size(), 81u);
    EXPECT_EQ(all_words(3, 4, 1000), oracle::all_words(3, 4));
    EXPECT_THROW(all_words(3, 7, 1000), CapExceeded);
}
