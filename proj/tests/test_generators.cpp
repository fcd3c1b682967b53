#include <gtest/gtest.h>

#include <cmath>

#include "palred/generators.hpp"
#include "palred/runs.hpp"

using namespace palred;

namespace {

Word W(std::string_view s) { return Word::from_text(s); }

}  // namespace

TEST(Generators, ThueMorse) {
    EXPECT_EQ(thue_morse().prefix(8).text(), "01101001");
    const Word w = thue_morse().prefix(1024);
    for (Pos n = 1; n <= 1024; ++n) ASSERT_EQ(w.at(n), std::popcount(n - 1) % 2) << n;
}

TEST(Generators, PrefixesAreConsistent) {
    for (const auto& src : {thue_morse(), fibonacci_word(), slow_pl_word({})}) {
        const Word a = src.prefix(300), b = src.prefix(301);
        EXPECT_EQ(b.prefix(300), a);
        for (Pos n = 1; n <= 301; n += 37) EXPECT_EQ(src.get(n), b.at(n));
    }
}

TEST(Generators, Fibonacci) {
    EXPECT_EQ(fibonacci_word().prefix(13).text(), "0100101001001");
}

TEST(Generators, UltimatelyPeriodic) {
    const WordSource src(UltimatelyPeriodicSpec{W("ab"), W("c")}, 13);
    EXPECT_EQ(src.prefix(5), W("abccc"));
    EXPECT_EQ(src.get(100), W("c").at(1));
    EXPECT_THROW(WordSource(UltimatelyPeriodicSpec{W("ab"), Word{}}, 13), std::invalid_argument);
}

TEST(Generators, SlowPlLn) {
    EXPECT_EQ(slow_pl_word({}).prefix(6).text(), "000000");
    const auto blocks = WordSource::slow_pl_blocks({}, 3);
    ASSERT_EQ(blocks.size(), 3u);
    EXPECT_EQ(blocks[0], static_cast<std::uint64_t>(std::ceil(std::exp(2.0))));
    EXPECT_EQ(blocks[1], static_cast<std::uint64_t>(std::ceil(std::exp(4.0))));
    EXPECT_EQ(blocks[2], static_cast<std::uint64_t>(std::ceil(std::exp(6.0))));
    EXPECT_EQ(blocks, (std::vector<std::uint64_t>{8, 55, 404}));
}

TEST(Generators, SlowPlIdentity) {
    SlowPlSpec s;
    s.inverse = SlowPlSpec::Inverse::identity;
    EXPECT_EQ(WordSource::slow_pl_blocks(s, 3), (std::vector<std::uint64_t>{2, 4, 6}));
}

TEST(Generators, SlowPlContainsLongZeroBlocks) {
    SlowPlSpec s;
    s.inverse = SlowPlSpec::Inverse::sqrt;
    const Word w = slow_pl_word(s).prefix(2000);
    std::size_t best = 0, cur = 0;
    for (Letter a : w) {
        cur = a == 0 ? cur + 1 : 0;
        best = std::max(best, cur);
    }
    EXPECT_GE(best, 64u);
}

TEST(Generators, SlowPlTable) {
    SlowPlSpec s;
    s.inverse = SlowPlSpec::Inverse::table;
    s.table = {3, 2};
    EXPECT_THROW((void)slow_pl_word(s), std::invalid_argument);
    s.table = {2, 3};
    const auto src = slow_pl_word(s);
    EXPECT_THROW((void)src.prefix(100), std::out_of_range);
}

TEST(Generators, MorphicValidation) {
    MorphicSpec m;
    m.images = {W("10"), W("01")};
    EXPECT_THROW(WordSource(m, 2), std::invalid_argument);
    m.images = {W("01")};
    EXPECT_THROW(WordSource(m, 2), std::invalid_argument);
}

TEST(Generators, PumpedRunExample) {
    const auto src = pumped_word({W("cccc")}, W("ab"), constant_exponent(power(4, 2)));
    const Word w = src.prefix(15);
    EXPECT_EQ(w, W("ccccababababccc"));
    const auto scan = find_runs(w, W("ab"));
    ASSERT_EQ(scan.runs.size(), 1u);
    EXPECT_EQ(scan.runs[0].interval, Interval(7, 10));
}

TEST(Generators, ParityExponents) {
    const auto src = pumped_word({W("cc")}, W("ab"), parity_exponents(power(3, 2), power(4, 2)));
    for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(src.pumped_exponent(k), k % 2 ? power(3, 2) : power(4, 2));
}

TEST(Generators, MorphicExponents) {
    const auto src = pumped_word({W("cc")}, W("ab"), morphic_exponents(thue_morse(), 3));
    const Word tm = thue_morse().prefix(16);
    for (std::size_t k = 1; k <= 16; ++k) EXPECT_EQ(src.pumped_exponent(k), power(3 + tm.at(k), 2));
}

TEST(Generators, PumpedErrors) {
    EXPECT_THROW((void)pumped_word({W("cb")}, W("ab"), constant_exponent(power(4, 2))), std::invalid_argument);
    EXPECT_THROW((void)pumped_word({W("cc")}, W("abab"), constant_exponent(power(4, 4))), std::invalid_argument);
    EXPECT_THROW((void)pumped_word({W("cc")}, W("ab"), constant_exponent(power(2, 2))), std::invalid_argument);
    EXPECT_THROW((void)pumped_word({}, W("ab"), constant_exponent(power(4, 2))), std::invalid_argument);
}

TEST(Generators, Literal) {
    const WordSource src(LiteralSpec{W("abc")}, 13);
    EXPECT_EQ(src.prefix(3), W("abc"));
    EXPECT_THROW((void)src.prefix(4), std::out_of_range);
    EXPECT_THROW((void)src.get(0), std::out_of_range);
}

TEST(Generators, Sturmian) {
    const WordSource src(SturmianSpec{1, 3, 0, 1}, 2);
    const Word w = src.prefix(300);
    std::size_t ones = 0;
    for (Letter a : w) ones += a;
    EXPECT_EQ(ones, 100u);
    EXPECT_THROW(WordSource(SturmianSpec{3, 2, 0, 1}, 2), std::invalid_argument);
}
