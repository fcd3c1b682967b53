#include <gtest/gtest.h>

#include "palred/generators.hpp"
#include "palred/reducer.hpp"
#include "palred/verify/fixtures.hpp"

using namespace palred;

namespace {

Word W(std::string_view s) { return Word::from_text(s); }

const Word kRunExample = W("ccccababababccc");

}  // namespace

TEST(Reducer, FactorizeRunExample) {
    const auto f = factorize(kRunExample, W("ab"));
    ASSERT_EQ(f.pieces.size(), 1u);
    EXPECT_EQ(f.pieces[0].w, W("ccccab"));
    EXPECT_EQ(f.pieces[0].z, W("ab"));
    EXPECT_EQ(f.pieces[0].d, QExponent(4, 2));
    EXPECT_EQ(f.trailing, W("abccc"));
}

TEST(Reducer, FactorizeNoRuns) {
    const auto f = factorize(W("ccccababcccc"), W("ab"));
    EXPECT_TRUE(f.pieces.empty());
    EXPECT_EQ(f.trailing, W("ccccababcccc"));
}

TEST(Reducer, FactorizeRejectsNonMember) {
    EXPECT_THROW((void)factorize(W("abababcccc"), W("ab")), std::invalid_argument);
}

TEST(Reducer, FactorizeReassembles) {
    auto rng = fixtures::case_rng(41, 0);
    for (int t = 0; t < 300; ++t) {
        const auto fx = fixtures::pumped_fixture(rng, 12, 60, 200);
        const auto f = factorize(fx.word, fx.u);
        Word back;
        for (const auto& pc : f.pieces) {
            ASSERT_GT(pc.w.size(), fx.u.size());
            back += pc.w + q_power(pc.z, pc.d);
        }
        back += f.trailing;
        ASSERT_EQ(back, fx.word);
    }
}

TEST(Reducer, TwoPumpedBlocks) {
    const auto src = pumped_word({W("cccc"), W("dcd")}, W("ab"), constant_exponent(power(6, 2)));
    const Word w = src.prefix(4 + 12 + 3 + 12 + 3);
    const auto f = factorize(w, W("ab"));
    EXPECT_EQ(f.pieces.size(), 2u);
}

TEST(Reducer, PhiCanonical) {
    const auto pol = ReductionPolicy::canonical(3, 3);
    EXPECT_EQ(phi_apply(pol, QExponent(5, 2)), QExponent(3, 2));
    EXPECT_EQ(phi_apply(pol, QExponent(2, 2)), QExponent(1, 1));
    EXPECT_EQ(phi_apply(pol, QExponent(7, 1)), QExponent(1, 1));
}

TEST(Reducer, PhiParity) {
    const auto pol = ReductionPolicy::parity(3, 3);
    EXPECT_EQ(phi_apply(pol, QExponent(7, 1)), QExponent(2, 1));
    EXPECT_EQ(phi_apply(pol, QExponent(8, 1)), QExponent(1, 1));
    // bumped value would exceed q
    EXPECT_EQ(phi_apply(pol, QExponent(3, 2)), QExponent(3, 2));
}

TEST(Reducer, PhiExplicitTable) {
    const auto ok = ReductionPolicy::explicit_map(3, 3, {{QExponent(6, 2), QExponent(4, 2)}});
    EXPECT_EQ(phi_apply(ok, QExponent(6, 2)), QExponent(4, 2));
    EXPECT_EQ(phi_apply(ok, QExponent(5, 2)), QExponent(3, 2));
    const auto bad = ReductionPolicy::explicit_map(3, 3, {{QExponent(6, 2), QExponent(3, 2)}});
    EXPECT_THROW((void)phi_apply(bad, QExponent(6, 2)), std::invalid_argument);
}

TEST(Reducer, PhiStaysInPhiH) {
    for (int h = 3; h <= 5; ++h)
        for (std::int64_t den = 1; den <= 3; ++den)
            for (std::int64_t num = den; num < 40; ++num) {
                const QExponent q(num, den);
                for (const auto& pol : {ReductionPolicy::canonical(3, h), ReductionPolicy::parity(3, h)})
                    ASSERT_TRUE(in_phi_h(q, phi_apply(pol, q), 3, h)) << q.str();
            }
}

TEST(Reducer, ReduceRunExample) {
    const auto f = factorize(kRunExample, W("ab"));
    EXPECT_EQ(reduce(f, ReductionPolicy::canonical()), W("ccccabababccc"));
}

TEST(Reducer, ReduceIdentityWhenAlreadySmall) {
    const Word w = W("ccccabababccc");
    EXPECT_EQ(reduce(factorize(w, W("ab")), ReductionPolicy::canonical()), w);
}

TEST(Reducer, ReduceHighPower) {
    const auto src = pumped_word({W("cccc")}, W("ab"), constant_exponent(power(10, 2)));
    const Word w = src.prefix(30);
    const auto f = factorize(w, W("ab"));
    ASSERT_EQ(f.pieces.size(), 1u);
    EXPECT_EQ(f.pieces[0].d, QExponent(16, 2));
    const auto maps = position_maps(f, ReductionPolicy::canonical());
    EXPECT_EQ(maps.kappa_bar[1], 8u);
    EXPECT_FALSE(power_bound_check(w, W("ab"), 3));
    EXPECT_TRUE(power_bound_check(reduce(f, ReductionPolicy::canonical()), W("ab"), 3));
    EXPECT_TRUE(power_bound_check(reduce(f, ReductionPolicy::parity()), W("ab"), 3));
}

TEST(Reducer, PositionMaps) {
    const auto maps = position_maps(factorize(kRunExample, W("ab")), ReductionPolicy::canonical());
    EXPECT_EQ(maps.kappa[1], 10u);
    EXPECT_EQ(maps.kappa_bar[1], 8u);
    EXPECT_EQ(maps.rpo(11), 9u);
    for (Pos p = 1; p <= 6; ++p) EXPECT_EQ(maps.rpo(p), p);
    EXPECT_THROW((void)maps.rpo(8), std::invalid_argument);
    EXPECT_THROW((void)maps.rpo(16), std::out_of_range);
    EXPECT_EQ(maps.rpo_inverse(9), Pos{11});
    EXPECT_FALSE(maps.rpo_inverse(7).has_value());
}

TEST(Reducer, RefactorizeCheck) {
    EXPECT_TRUE(refactorize_check(kRunExample, W("ab"), GammaConfig{}, ReductionPolicy::canonical()).ok);
    EXPECT_TRUE(refactorize_check(W("ccccababcccc"), W("ab"), GammaConfig{}, ReductionPolicy::canonical()).ok);
    auto rng = fixtures::case_rng(42, 0);
    for (int t = 0; t < 100; ++t) {
        const auto fx = fixtures::pumped_fixture(rng, 12, 60, 200);
        for (const auto& pol : {ReductionPolicy::canonical(), ReductionPolicy::parity()}) {
            const auto r = refactorize_check(fx.word, fx.u, GammaConfig{}, pol);
            ASSERT_TRUE(r.ok) << fx.word.text() << ": " << r.diagnostic;
        }
    }
}

TEST(Reducer, PowerBoundCheck) {
    EXPECT_TRUE(power_bound_check(W("cccdddcc"), W("ab"), 3));
    EXPECT_FALSE(power_bound_check(W("cabababababc"), W("ab"), 3));
    EXPECT_TRUE(power_bound_check(W("cabababac"), W("ab"), 3));
}

TEST(Reducer, ParitySplitStillPeriodicForPeriodicBlocks) {
    // Pumped exponents 3,4 leave run exponents 1,2 after the margins, which
    // both policies map to themselves; only a table entry 2 -> ... differs.
    const auto src = pumped_word({W("cc")}, W("ab"), parity_exponents(power(3, 2), power(4, 2)));
    const auto f = factorize(src.prefix(2000), W("ab"));
    EXPECT_TRUE(looks_ultimately_periodic(reduce(f, ReductionPolicy::canonical()), 2000));
    EXPECT_TRUE(looks_ultimately_periodic(reduce(f, ReductionPolicy::parity()), 2000));
}

TEST(Reducer, ChooseAperiodicWithThueMorseDriver) {
    const auto src = pumped_word({W("cccc"), W("dc")}, W("ab"), morphic_exponents(thue_morse(), 5));
    const auto f = factorize(src.prefix(4000), W("ab"));
    const auto choice = choose_aperiodic_policy(f, 3, 4000);
    EXPECT_TRUE(choice.certified);
    EXPECT_EQ(choice.policy.strategy, ReductionPolicy::Strategy::parity_split);
}

TEST(Reducer, ChooseAperiodicFallsBackToTable) {
    const auto src = pumped_word({W("cccc"), W("dc")}, W("ab"), morphic_exponents(thue_morse(), 3));
    const auto f = factorize(src.prefix(4000), W("ab"));
    const auto choice = choose_aperiodic_policy(f, 3, 4000);
    EXPECT_TRUE(choice.certified);
    EXPECT_EQ(choice.policy.strategy, ReductionPolicy::Strategy::explicit_table);
}

TEST(Reducer, ConstantExponentsCannotBeRescued) {
    const auto src = pumped_word({W("cccc")}, W("ab"), constant_exponent(power(7, 2)));
    const auto f = factorize(src.prefix(2000), W("ab"));
    EXPECT_FALSE(choose_aperiodic_policy(f, 3, 2000).certified);
}
