#include <gtest/gtest.h>

#include "palred/generators.hpp"
#include "palred/pal_length.hpp"
#include "palred/verify/fixtures.hpp"
#include "palred/verify/reference.hpp"

using namespace palred;

namespace {

Word W(std::string_view s) { return Word::from_text(s); }

std::vector<std::size_t> tail(std::vector<std::size_t> v) { return {v.begin() + 1, v.end()}; }

}  // namespace

TEST(PalLength, OracleValues) {
    EXPECT_EQ(pl_oracle(W("aba").letters()), 1u);
    EXPECT_EQ(pl_oracle(W("abaab").letters()), 2u);
    EXPECT_EQ(pl_oracle(W("abc").letters()), 3u);
    EXPECT_EQ(pl_oracle(Word{}.letters()), 0u);
}

TEST(PalLength, Profiles) {
    using V = std::vector<std::size_t>;
    EXPECT_EQ(tail(pl_oracle_profile(W("aaaa").letters())), (V{1, 1, 1, 1}));
    EXPECT_EQ(tail(pl_oracle_profile(W("abaab").letters())), (V{1, 2, 1, 2, 2}));
    EXPECT_EQ(tail(pl_oracle_profile(W("abcab").letters())), (V{1, 2, 3, 4, 5}));
    EXPECT_EQ(tail(pl_profile_online(W("abcab").letters())), (V{1, 2, 3, 4, 5}));
}

TEST(PalLength, OracleMatchesExhaustiveSplit) {
    auto rng = fixtures::case_rng(21, 0);
    for (int t = 0; t < 3000; ++t) {
        const Word w = fixtures::random_word(rng, fixtures::uniform(rng, 1, 12), t % 2 ? "ab" : "abc");
        ASSERT_EQ(pl_oracle(w.letters()), ref::pl_exhaustive(w)) << w.text();
    }
}

TEST(PalLength, OnlineMatchesOracle) {
    auto rng = fixtures::case_rng(22, 0);
    for (int t = 0; t < 500; ++t) {
        const Word w = fixtures::random_word(rng, fixtures::uniform(rng, 1, 400), t % 2 ? "ab" : "abc");
        ASSERT_EQ(pl_profile_online(w.letters()), pl_oracle_profile(w.letters())) << w.text();
    }
}

TEST(PalLength, EertreeIncremental) {
    Eertree<Letter> tree;
    const Word w = W("abaabbaab");
    const auto want = pl_oracle_profile(w.letters());
    for (std::size_t k = 0; k < w.size(); ++k) {
        tree.push(w.letters()[k]);
        EXPECT_EQ(tree.palindromic_length(), want[k + 1]);
    }
    // a, b, aba, aa, baab, bb, abba, aabbaa, baabbaab
    EXPECT_EQ(tree.distinct_palindromes(), 9u);
}

TEST(PalLength, MaxPl) {
    EXPECT_EQ(max_pl(W("aaaa")), 1u);
    EXPECT_EQ(max_pl(W("aab")), 2u);
    EXPECT_EQ(max_pl(Word{}), 0u);
    EXPECT_EQ(max_pl(W("abaab"), MaxPlMode::oracle_per_suffix), max_pl(W("abaab")));
}

TEST(PalLength, MaxPlOracleModeLimit) {
    EXPECT_THROW((void)max_pl(Word(std::vector<Letter>(65, 0)), MaxPlMode::oracle_per_suffix), std::invalid_argument);
}

TEST(PalLength, ThueMorsePrefix) {
    const Word tm = thue_morse().prefix(16);
    EXPECT_EQ(tm.text(), "0110100110010110");
    EXPECT_EQ(pl_profile_online(tm.letters()), pl_oracle_profile(tm.letters()));
}

TEST(PalLength, RatioSeries) {
    const auto rows = ppl_ratio_series(thue_morse(), 16, Normalizer::ln);
    ASSERT_EQ(rows.size(), 16u);
    EXPECT_FALSE(rows[0].ratio.has_value());  // ln 1 = 0
    for (std::size_t k = 1; k < rows.size(); ++k) {
        ASSERT_TRUE(rows[k].ratio.has_value());
        EXPECT_GT(*rows[k].ratio, 0.0);
    }
    EXPECT_THROW((void)ppl_ratio_series(thue_morse(), 1, Normalizer::ln), std::invalid_argument);
}

TEST(PalLength, PplIsMonotoneAndSubadditive) {
    auto rng = fixtures::case_rng(23, 0);
    for (int t = 0; t < 200; ++t) {
        const Word w = fixtures::random_word(rng, fixtures::uniform(rng, 2, 40), "ab");
        const std::size_t cut = fixtures::uniform(rng, 1, w.size() - 1);
        const auto a = pl_oracle(w.prefix(cut).letters());
        const auto b = pl_oracle(w.factor(cut + 1, w.size()).letters());
        ASSERT_LE(pl_oracle(w.letters()), a + b);
        ASSERT_LE(max_pl(w.prefix(cut)), max_pl(w));
    }
}
