#include <gtest/gtest.h>

#include "palred/runs.hpp"
#include "palred/verify/fixtures.hpp"
#include "palred/verify/reference.hpp"

using namespace palred;

namespace {

Word W(std::string_view s) { return Word::from_text(s); }

RunScan scan_of(std::vector<Interval> runs, std::size_t horizon, std::size_t p) {
    RunScan s;
    s.horizon = horizon;
    s.complete_upto = horizon;
    s.u_len = p;
    for (const auto& iv : runs) s.runs.push_back({iv, Word{}, QExponent(static_cast<std::int64_t>(iv.length() < p ? p : iv.length()), static_cast<std::int64_t>(p))});
    return s;
}

}  // namespace

TEST(Runs, SingleRun) {
    const auto scan = find_runs(W("ccccababababccc"), W("ab"));
    ASSERT_EQ(scan.runs.size(), 1u);
    EXPECT_EQ(scan.runs[0].interval, Interval(7, 10));
    EXPECT_EQ(scan.runs[0].base, W("ab"));
    EXPECT_EQ(scan.runs[0].exponent, QExponent(4, 2));
}

TEST(Runs, PrefixTouchingStretchIgnored) {
    const auto scan = find_runs(W("ababababccccababababcc"), W("ab"));
    for (const auto& r : scan.runs) EXPECT_GT(r.i(), 3u);
}

TEST(Runs, ShortStretchHasNoRun) { EXPECT_TRUE(find_runs(W("ccccababcccc"), W("ab")).runs.empty()); }

TEST(Runs, BaseErrors) {
    EXPECT_THROW((void)find_runs(W("cccc"), W("abab")), std::invalid_argument);
    EXPECT_THROW((void)find_runs(W("cccc"), Word{}), std::invalid_argument);
    EXPECT_THROW(GammaConfig(2), std::invalid_argument);
}

TEST(Runs, CompleteUptoStopsAtOpenStretch) {
    // The stretch touching the end may still grow.
    const auto scan = find_runs(W("ccccababab"), W("ab"));
    EXPECT_TRUE(scan.runs.empty());
    EXPECT_EQ(scan.complete_upto, 6u);
}

TEST(Runs, MatchesBruteForceClauses) {
    auto rng = fixtures::case_rng(31, 0);
    for (int t = 0; t < 3000; ++t) {
        const Word u = fixtures::random_primitive(rng, 3, "ab");
        const Word w = fixtures::random_word(rng, fixtures::uniform(rng, 1, 22), t % 2 ? "ab" : "abc");
        for (int gamma : {3, 4}) {
            const auto scan = find_runs(w, u, GammaConfig(gamma));
            std::vector<Interval> got;
            for (const auto& r : scan.runs)
                if (r.j() <= scan.complete_upto) got.push_back(r.interval);
            std::vector<Interval> want;
            for (const auto& iv : ref::run_border(w, u, gamma))
                if (iv.j <= scan.complete_upto) want.push_back(iv);
            ASSERT_EQ(got, want) << w.text() << " u=" << u.text() << " gamma=" << gamma;
        }
    }
}

TEST(Runs, BaseAndExponentDescribeTheFactor) {
    auto rng = fixtures::case_rng(32, 0);
    for (int t = 0; t < 200; ++t) {
        const auto fx = fixtures::pumped_fixture(rng, 12, 60, 200);
        for (const auto& r : find_runs(fx.word, fx.u).runs) {
            ASSERT_EQ(q_power(r.base, r.exponent), fx.word.factor(r.i(), r.j()));
            ASSERT_TRUE(in_pow_factor(r.base, fx.u));
        }
    }
}

TEST(Runs, PiGamma) {
    const GammaConfig cfg;
    EXPECT_EQ(pi_gamma_status(W("abababcc"), W("ab"), cfg, 1).status, PiGamma::non_member);
    Word w = W("cc");
    for (int k = 0; k < 5; ++k) w += W("abababcc");
    EXPECT_EQ(pi_gamma_status(w, W("ab"), cfg, 3).status, PiGamma::member);
    EXPECT_EQ(pi_gamma_status(w, W("abab"), cfg, 1).status, PiGamma::non_member);
    EXPECT_EQ(pi_gamma_status(W("ccab"), W("ab"), cfg, 1).status, PiGamma::undecidable);
    EXPECT_EQ(pi_gamma_status(W("ccccccab"), W("ab"), cfg, 1).status, PiGamma::undecidable);
}

TEST(Runs, PiGammaThreshold) {
    Word w = W("cc");
    for (int k = 0; k < 2; ++k) w += W("abababcc");
    const auto st = pi_gamma_status(w, W("ab"), GammaConfig{}, 3);
    EXPECT_EQ(st.status, PiGamma::undecidable);
    EXPECT_EQ(st.best_count, 2u);
}

TEST(Runs, DomainMask) {
    const auto mask = rpo_dom_mask(scan_of({{7, 10}}, 15, 2));
    for (Pos p = 1; p <= 15; ++p) EXPECT_EQ(mask[p], p < 7 || p > 10) << p;
    const auto all = rpo_dom_mask(scan_of({}, 5, 2));
    for (Pos p = 1; p <= 5; ++p) EXPECT_TRUE(all[p]);
    const auto two = rpo_dom_mask(scan_of({{7, 10}, {20, 23}}, 30, 2));
    for (Pos p = 1; p <= 30; ++p) EXPECT_EQ(two[p], !((p >= 7 && p <= 10) || (p >= 20 && p <= 23))) << p;
}

TEST(Runs, Separation) {
    EXPECT_TRUE(check_run_separation(scan_of({{7, 10}, {20, 23}}, 30, 2), 2));
    EXPECT_FALSE(check_run_separation(scan_of({{7, 10}, {13, 16}}, 30, 2), 2));
    EXPECT_TRUE(check_run_separation(scan_of({{7, 10}}, 30, 2), 2));
}

TEST(Runs, SeparationHoldsOnScans) {
    auto rng = fixtures::case_rng(33, 0);
    for (int t = 0; t < 300; ++t) {
        const auto fx = fixtures::mixed_fixture(rng);
        ASSERT_TRUE(check_run_separation(find_runs(fx.word, fx.u), fx.u.size())) << fx.word.text();
    }
}

TEST(Runs, CountInside) {
    const auto s = scan_of({{7, 10}, {20, 23}}, 30, 2);
    EXPECT_EQ(count_runs_inside(s, 1, 30), 2u);
    EXPECT_EQ(count_runs_inside(s, 7, 22), 1u);
    EXPECT_EQ(count_runs_inside(s, 8, 22), 0u);
}

TEST(Runs, MirrorRun) {
    const palred::Run r{Interval(7, 10), W("ab"), QExponent(4, 2)};
    EXPECT_EQ(mirror_run(Interval(1, 30), r, 2), Interval(21, 24));
    const palred::Run c{Interval(14, 17), W("ab"), QExponent(4, 2)};
    EXPECT_EQ(mirror_run(Interval(1, 30), c, 2), Interval(14, 17));
    const palred::Run s{Interval(8, 10), W("ab"), QExponent(3, 2)};
    EXPECT_EQ(mirror_run(Interval(5, 13), s, 2), Interval(8, 10));
    EXPECT_THROW((void)mirror_run(Interval(6, 13), s, 2), std::invalid_argument);
}
