#include <gtest/gtest.h>

#include "palred/std_pal.hpp"
#include "palred/verify/fixtures.hpp"
#include "palred/verify/reference.hpp"

using namespace palred;

namespace {

Word W(std::string_view s) { return Word::from_text(s); }

const Word kU = W("ab");
// run (8, 10) inside the stretch (ab)^{7/2} at 6..12
const Word kSmall = W("ddddcabababacdddd");
// run (8, 14) inside the stretch (ab)^{11/2} at 6..16
const Word kLarge = W("ddddcabababababacddd");

}  // namespace

TEST(StdPal, FixtureScan) {
    const StdPalContext ctx(kSmall, kU);
    ASSERT_EQ(ctx.scan().runs.size(), 1u);
    EXPECT_EQ(ctx.scan().runs[0].interval, Interval(8, 10));
}

TEST(StdPal, IsStdPal) {
    const StdPalContext ctx(kSmall, kU);
    EXPECT_TRUE(is_std_pal(ctx, {6, 12}));
    EXPECT_FALSE(is_std_pal(ctx, {6, 11}));
    EXPECT_FALSE(is_std_pal(ctx, {8, 10}));  // endpoints covered
    EXPECT_THROW((void)is_std_pal(ctx, {1, 3}), std::invalid_argument);
    EXPECT_THROW((void)is_std_pal(ctx, {6, 14}), std::out_of_range);
}

TEST(StdPal, RunFreeStdPal) {
    const StdPalContext ctx(W("ddcacdddd"), kU);
    EXPECT_TRUE(ctx.scan().runs.empty());
    EXPECT_TRUE(is_std_pal(ctx, {3, 5}));
}

TEST(StdPal, MatchesReferenceClauses) {
    auto rng = fixtures::case_rng(51, 0);
    for (int t = 0; t < 150; ++t) {
        const auto fx = fixtures::mixed_fixture(rng);
        const StdPalContext ctx(fx.word, fx.u);
        const auto dom = ref::domain_mask(fx.word.size(), ref::run_border(fx.word, fx.u, 3));
        for (Pos j = 2; j + 1 <= ctx.limit(); ++j)
            for (Pos i = 2; i <= j; ++i)
                ASSERT_EQ(is_std_pal(ctx, {i, j}), ref::is_std_pal(fx.word, dom, fx.u.size(), i, j))
                    << fx.word.text() << " (" << i << "," << j << ")";
    }
}

TEST(StdPal, ImageOfSmallFixture) {
    const Reduction red(kSmall, kU, GammaConfig{}, ReductionPolicy::canonical());
    EXPECT_TRUE(image_is_palindrome(red, {6, 12}));
    // run exponent 3/2 is already least
    EXPECT_EQ(red.reduced, kSmall);
}

TEST(StdPal, ImageOfLargeFixtureIsShorter) {
    const Reduction red(kLarge, kU, GammaConfig{}, ReductionPolicy::canonical());
    ASSERT_TRUE(is_std_pal(StdPalContext(kLarge, kU), {6, 16}));
    EXPECT_TRUE(image_is_palindrome(red, {6, 16}));
    EXPECT_EQ(red.maps.rpo(16) - red.maps.rpo(6) + 1, 7u);
}

TEST(StdPal, RunFreeImageVerbatim) {
    const Word w = W("ddcacddddcababababcd");
    const Reduction red(w, kU, GammaConfig{}, ReductionPolicy::canonical());
    ASSERT_TRUE(image_is_palindrome(red, {3, 5}));
    EXPECT_EQ(red.reduced.factor(red.maps.rpo(3), red.maps.rpo(5)), w.factor(3, 5));
}

TEST(StdPal, CenteredStdPals) {
    const StdPalContext ctx(kSmall, kU);
    const auto all = centered_std_pals(ctx, {5, 13});
    EXPECT_NE(std::find(all.begin(), all.end(), Interval(6, 12)), all.end());
    // (5, 13) is standard too: its hull dcabababacd is a palindrome
    EXPECT_EQ(max_csp(ctx, {5, 13}), Interval(5, 13));
    for (std::size_t k = 1; k < all.size(); ++k) EXPECT_LT(all[k - 1].length(), all[k].length());
    EXPECT_THROW((void)centered_std_pals(ctx, {5, 12}), std::invalid_argument);
}

TEST(StdPal, Overlap) {
    EXPECT_EQ(overlap({1, 5}, {3, 7}), 0);
    EXPECT_EQ(overlap({3, 7}, {1, 5}), 0);
    EXPECT_EQ(overlap({1, 2}, {5, 9}), 1);
    EXPECT_EQ(overlap({5, 9}, {1, 2}), 1);
    EXPECT_EQ(overlap({1, 4}, {4, 9}), 0);
}

TEST(StdPal, HatWithOneRun) {
    const StdPalContext ctx(W("bbababaab"), kU);
    const Interval cand(3, 5);
    ASSERT_EQ(ctx.runs_inside(3, 5), 1u);
    const auto cls = classify_upsilon(ctx, cand, 8);
    EXPECT_EQ(cls.tag(), UpsilonTag::hat);
    EXPECT_TRUE(run_count_bound_check(ctx, cand, UpsilonTag::hat));
}

TEST(StdPal, BarWithOneRun) {
    const StdPalContext ctx(W("bccabababbababbcaa"), kU);
    const Interval cand(5, 8);
    ASSERT_EQ(ctx.runs_inside(5, 8), 1u);
    const auto cls = classify_upsilon(ctx, cand, 8);
    ASSERT_TRUE(cls.bar);
    EXPECT_EQ(cls.enclosing, Interval(5, 14));
    EXPECT_EQ(cls.enclosing_csp, Interval(9, 10));
    EXPECT_TRUE(run_count_bound_check(ctx, cand, UpsilonTag::bar));
    EXPECT_THROW((void)run_count_bound_check(ctx, cand, UpsilonTag::neither), std::invalid_argument);
}

TEST(StdPal, Neither) {
    const StdPalContext ctx(W("ddcacddddcd"), kU);
    EXPECT_EQ(classify_upsilon(ctx, {2, 3}, 0).tag(), UpsilonTag::neither);
}

TEST(StdPal, ThreeRunPalindromesHaveCenteredStdPalAndBarFlanks) {
    auto rng = fixtures::case_rng(52, 0);
    int seen = 0, flanks = 0;
    for (int t = 0; t < 400 && seen < 40; ++t) {
        const auto fx = fixtures::palindromic_fixture(rng);
        const StdPalContext ctx(fx.word, fx.u);
        const Interval pal = *fx.pal;
        if (pal.j + 1 > ctx.limit() || ctx.runs_inside(pal.i, pal.j) < 3) continue;
        ++seen;
        const auto csp = max_csp(ctx, pal);
        ASSERT_TRUE(csp.has_value()) << fx.word.text();
        if (csp->i == pal.i) continue;
        const Interval left(pal.i, csp->i - 1);
        const auto cls = classify_upsilon(ctx, left, pal.j - left.j);
        ASSERT_TRUE(cls.bar) << fx.word.text();
        ASSERT_TRUE(run_count_bound_check(ctx, left, UpsilonTag::bar));
        ++flanks;
    }
    EXPECT_GE(seen, 10);
    EXPECT_GE(flanks, 5);
}

TEST(StdPal, PalFactorizations) {
    EXPECT_EQ(pal_factorizations(W("abaab"), 3, {1, 5}), (std::vector<Pos>{1, 2, 6}));
    EXPECT_FALSE(pal_factorizations(W("abc"), 2, {1, 3}).has_value());
    EXPECT_EQ(pal_factorizations(W("abcba"), 2, {1, 5}), (std::vector<Pos>{1, 6}));
    EXPECT_THROW((void)pal_factorizations(W("abc"), 0, {1, 3}), std::invalid_argument);
}

TEST(StdPal, FactorizationOfOneStdPal) {
    const StdPalContext ctx(kSmall, kU);
    const auto sp = std_pal_factorization(ctx, {6, 12}, 2);
    ASSERT_EQ(sp.pieces.size(), 1u);
    EXPECT_EQ(sp.pieces[0].kind, StdPalFactorization::Kind::std_pal);
    EXPECT_EQ(sp.cut_points, (std::vector<Pos>{6, 13}));
}

TEST(StdPal, FactorizationOfRunFreeSegment) {
    const StdPalContext ctx(W("ddcacddddcdcc"), kU);
    const Interval seg(1, 9);
    const std::size_t k = 1 + max_pl(ctx.word().factor(1, 9));
    const auto sp = std_pal_factorization(ctx, seg, k);
    for (const auto& pc : sp.pieces) EXPECT_EQ(pc.runs, 0u);
    EXPECT_TRUE(certify_std_pal_factorization(ctx.word(), ctx.scan(), seg, k, sp.cut_points).ok);
}

TEST(StdPal, FactorizationOfPumpedFixtures) {
    auto rng = fixtures::case_rng(53, 0);
    int mixed = 0;
    for (int t = 0; t < 60; ++t) {
        const auto fx = fixtures::pumped_fixture(rng, 8, 60, 140);
        const StdPalContext ctx(fx.word, fx.u);
        Pos a = 1, b = ctx.limit() - 1;
        while (a < b && !ctx.in_domain(a)) ++a;
        while (b > a && !ctx.in_domain(b)) --b;
        if (a >= b) continue;
        const std::size_t k = 1 + max_pl(fx.word.factor(a, b));
        const auto sp = std_pal_factorization(ctx, {a, b}, k);
        ASSERT_LE(sp.g(), k + 1);
        ASSERT_TRUE(certify_std_pal_factorization(fx.word, ctx.scan(), {a, b}, k, sp.cut_points).ok);
        bool has_std = false, has_runs = false;
        for (const auto& pc : sp.pieces) {
            has_std |= pc.kind == StdPalFactorization::Kind::std_pal;
            has_runs |= pc.kind == StdPalFactorization::Kind::bounded_runs;
            if (pc.kind == StdPalFactorization::Kind::bounded_runs) {
                ASSERT_LE(pc.runs, 3 * k);
            }
        }
        mixed += has_std && has_runs;
    }
    EXPECT_GT(mixed, 0);
}

TEST(StdPal, CertifierRejectsBadCuts) {
    const StdPalContext ctx(kSmall, kU);
    // cut inside the run
    EXPECT_FALSE(certify_std_pal_factorization(kSmall, ctx.scan(), {6, 12}, 3, {6, 9, 13}).ok);
    // does not reach the end of the segment
    EXPECT_FALSE(certify_std_pal_factorization(kSmall, ctx.scan(), {6, 12}, 3, {6, 12}).ok);
}

TEST(StdPal, ReducedPlBoundRunFree) {
    const Word w = W("ddcacddddcababababcd");
    const Reduction red(w, kU, GammaConfig{}, ReductionPolicy::canonical());
    const auto r = reduced_pl_bound_check(red, find_runs(w, kU), {1, 6});
    EXPECT_EQ(r.pl_reduced, pl_oracle(w.factor(1, 6).letters()));
    EXPECT_LE(r.pl_reduced, r.k - 1);
    EXPECT_TRUE(r.ok);
}
