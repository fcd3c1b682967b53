#pragma once

// Property suites behind `palred verify <id>`. A suite is a per-case
// property; cases are independent and seeded from (seed, case id), so any
// failing case replays alone with --case.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "palred/pal_length.hpp"
#include "palred/pipeline.hpp"
#include "palred/reducer.hpp"
#include "palred/runs.hpp"
#include "palred/std_pal.hpp"
#include "palred/verify/fixtures.hpp"
#include "palred/verify/reference.hpp"
#include "palred/word.hpp"

namespace palred::verify {

using json = nlohmann::json;
using fixtures::Rng;
using fixtures::uniform;

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::size_t cases = 0;  // 0: the suite's default
    unsigned workers = 0;   // 0: PALRED_WORKERS or the hardware count
    std::optional<std::uint64_t> only_case;
};

struct SuiteResult {
    std::string id;
    std::string anchor;
    std::string status;  // pass or fail
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::optional<std::uint64_t> failing_case;  // smallest failing id
    std::optional<json> counterexample;
    std::optional<double> max_ratio;
    double seconds = 0;

    [[nodiscard]] bool passed() const { return status == "pass"; }
};

struct CaseOutcome {
    std::optional<json> failure;
    std::optional<double> ratio;

    static CaseOutcome fail(json why) { return {std::move(why), std::nullopt}; }
};

using CaseFn = std::function<CaseOutcome(Rng&)>;

struct Suite {
    std::string id;
    std::string anchor;
    std::size_t default_cases;
    CaseFn run;
};

[[nodiscard]] inline unsigned default_workers() {
    if (const char* env = std::getenv("PALRED_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs ids [0, cases) over a pool; results merge by case id, so the
/// report does not depend on scheduling.
[[nodiscard]] inline SuiteResult run_suite(const Suite& suite, const SuiteOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult res;
    res.id = suite.id;
    res.anchor = suite.anchor;
    const std::size_t cases = opt.cases ? opt.cases : suite.default_cases;

    std::mutex mu;
    std::atomic<std::uint64_t> next{0};
    auto one = [&](std::uint64_t id) {
        Rng rng = fixtures::case_rng(opt.seed, id);
        CaseOutcome out;
        try {
            out = suite.run(rng);
        } catch (const std::exception& e) {
            out = CaseOutcome::fail({{"exception", e.what()}});
        }
        std::lock_guard lock(mu);
        if (out.ratio) res.max_ratio = std::max(res.max_ratio.value_or(0.0), *out.ratio);
        if (!out.failure) return;
        ++res.failures;
        if (!res.failing_case || id < *res.failing_case) {
            res.failing_case = id;
            json cx = *out.failure;
            cx["seed"] = opt.seed;
            cx["case"] = id;
            res.counterexample = std::move(cx);
        }
    };
    if (opt.only_case) {
        one(*opt.only_case);
        res.cases = 1;
    } else {
        const unsigned workers = opt.workers ? opt.workers : default_workers();
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < std::min<std::size_t>(workers, std::max<std::size_t>(cases, 1)); ++w)
            pool.emplace_back([&] {
                for (std::uint64_t id; (id = next.fetch_add(1)) < cases;) one(id);
            });
        for (auto& t : pool) t.join();
        res.cases = cases;
    }
    res.status = res.failures == 0 ? "pass" : "fail";
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

[[nodiscard]] inline json to_json(const SuiteResult& r) {
    json j{{"id", r.id}, {"anchor", r.anchor}, {"status", r.status}, {"cases", r.cases}};
    if (r.failures) j["failures"] = r.failures;
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    if (r.max_ratio) j["max_ratio"] = *r.max_ratio;
    return j;
}

namespace detail {

inline const GammaConfig kGamma{3};

inline json intervals(const std::vector<Interval>& v) {
    json out = json::array();
    for (const auto& iv : v) out.push_back(json::array({iv.i, iv.j}));
    return out;
}

/// Random letters interleaved with fractional powers of rotations of u and u^R.
inline Word power_rich_word(Rng& rng, const Word& u, std::size_t len, std::string_view alphabet) {
    Word w;
    const Word ur = reverse(u);
    const auto p = u.size();
    while (w.size() < len) {
        if (uniform(rng, 0, 2) == 0) {
            w += fixtures::random_word(rng, uniform(rng, 1, 3), alphabet);
        } else {
            const Word& base = uniform(rng, 0, 1) ? u : ur;
            const std::size_t r = uniform(rng, 0, p - 1);
            const Word rot = base.factor(r + 1, p) + base.factor(1, r);
            w += q_power(rot, fixtures::random_exponent(rng, p, 1, 5));
        }
    }
    return w.prefix(len);
}

/// canonical_min, parity_split or a random explicit map over f's exponents.
inline ReductionPolicy random_policy(Rng& rng, const Factorization& f, int h = 3) {
    switch (uniform(rng, 0, 2)) {
        case 0: return ReductionPolicy::canonical(3, h);
        case 1: return ReductionPolicy::parity(3, h);
        default: break;
    }
    std::vector<std::pair<QExponent, QExponent>> table;
    for (const auto& pc : f.pieces) {
        const QExponent least = phi_apply(ReductionPolicy::canonical(3, h), pc.d);
        std::vector<QExponent> options;
        for (auto num = least.num; num < h * pc.d.den && num <= pc.d.num; num += pc.d.den)
            options.emplace_back(num, pc.d.den);
        table.emplace_back(pc.d, options[uniform(rng, 0, options.size() - 1)]);
    }
    return ReductionPolicy::explicit_map(3, h, std::move(table));
}

/// Random segment with both ends in rpoDom and ending at or before `last`.
inline std::optional<Interval> random_segment(Rng& rng, const StdPalContext& ctx, Pos last, std::size_t max_len) {
    if (last < 1) return std::nullopt;
    for (int tries = 0; tries < 64; ++tries) {
        const Pos a = uniform(rng, 1, last);
        const Pos b = std::min<Pos>(last, a + uniform(rng, 0, max_len - 1));
        if (ctx.in_domain(a) && ctx.in_domain(b)) return Interval(a, b);
    }
    return std::nullopt;
}

inline json fixture_json(const fixtures::Fixture& fx) {
    json j{{"word", fx.word.text()}, {"u", fx.u.text()}, {"kind", fx.label}};
    if (fx.pal) j["pal"] = json::array({fx.pal->i, fx.pal->j});
    return j;
}

// ---- suites -------------------------------------------------------------

inline CaseOutcome run_separation(Rng& rng) {
    Word w, u;
    if (uniform(rng, 0, 7) == 7) {
        auto fx = fixtures::pumped_fixture(rng, 6, 30, 60);
        w = fx.word;
        u = fx.u;
    } else {
        u = fixtures::random_primitive(rng, 3, "abc");
        w = uniform(rng, 0, 3) == 0 ? fixtures::random_word(rng, uniform(rng, 1, 24), "abc")
                                    : power_rich_word(rng, u, uniform(rng, 1, 24), "abc");
    }
    const RunScan scan = find_runs(w, u, kGamma);
    std::vector<Interval> got;
    for (const Run& r : scan.runs) {
        got.push_back(r.interval);
        if (r.base != w.factor(r.i(), r.i() + u.size() - 1) || r.exponent.den != static_cast<std::int64_t>(u.size()) ||
            r.exponent.num != static_cast<std::int64_t>(r.interval.length()) || r.exponent.num < r.exponent.den)
            return CaseOutcome::fail({{"word", w.text()}, {"u", u.text()}, {"bad_run", json::array({r.i(), r.j()})}});
    }
    const auto expected = ref::run_border(w, u, 3);
    if (got != expected)
        return CaseOutcome::fail({{"word", w.text()}, {"u", u.text()}, {"expected", intervals(expected)}, {"got", intervals(got)}});
    if (!check_run_separation(scan, u.size()))
        return CaseOutcome::fail({{"word", w.text()}, {"u", u.text()}, {"runs", intervals(got)}, {"what", "separation"}});
    return {};
}

inline CaseOutcome mirror_transfer(Rng& rng) {
    const auto fx = fixtures::palindromic_fixture(rng);
    const RunScan scan = find_runs(fx.word, fx.u, kGamma);
    const Interval pal = *fx.pal;
    const auto p = fx.u.size();
    for (const Run& r : scan.runs) {
        if (!(pal.i + p < r.i() && r.j() + p < pal.j)) continue;
        const Interval m = mirror_run(pal, r, p);
        const bool listed = std::any_of(scan.runs.begin(), scan.runs.end(), [&](const Run& x) { return x.interval == m; });
        if (!listed || !ref::is_run(fx.word, fx.u, 3, m.i, m.j))
            return CaseOutcome::fail({{"fixture", fixture_json(fx)},
                                      {"run", json::array({r.i(), r.j()})},
                                      {"mirror", json::array({m.i, m.j})}});
    }
    return {};
}

inline CaseOutcome reversal_preserved(Rng& rng) {
    const Word t = fixtures::random_word(rng, uniform(rng, 1, 4), "abc");
    const auto p = static_cast<std::int64_t>(t.size());
    const QExponent q(static_cast<std::int64_t>(uniform(rng, static_cast<std::size_t>(p), static_cast<std::size_t>(12 * p))), p);
    const Word tq = q_power(t, q);
    const Word v = reverse(tq).prefix(t.size());
    if (q_power(v, q) != reverse(tq)) return CaseOutcome::fail({{"t", t.text()}, {"q", q.str()}, {"what", "setup"}});
    const int h = static_cast<int>(uniform(rng, 3, 6));
    const QExponent least = phi_apply(ReductionPolicy::canonical(3, h), q);
    std::vector<QExponent> options;
    for (auto num = least.num; num < h * p && num <= q.num; num += p) options.emplace_back(num, p);
    const ReductionPolicy policies[] = {
        ReductionPolicy::canonical(3, h), ReductionPolicy::parity(3, h),
        ReductionPolicy::explicit_map(3, h, {{q, options[uniform(rng, 0, options.size() - 1)]}})};
    for (const auto& pol : policies) {
        const QExponent phi = phi_apply(pol, q);
        if (q_power(v, phi) != reverse(q_power(t, phi)))
            return CaseOutcome::fail({{"t", t.text()}, {"v", v.text()}, {"q", q.str()}, {"phi", phi.str()}, {"policy", to_string(pol.strategy)}});
    }
    return {};
}

inline CaseOutcome power_bound(Rng& rng) {
    const auto fx = fixtures::pumped_fixture(rng, 12);
    const Factorization f = factorize(fx.word, fx.u, kGamma);
    const ReductionPolicy pol = random_policy(rng, f);
    const Word out = reduce(f, pol).prefix(image_limit(position_maps(f, pol), f.complete_upto));
    const auto p = static_cast<std::int64_t>(fx.u.size());
    const Word u5 = q_power(fx.u, QExponent(5 * p, p));
    if (!power_bound_check(out, fx.u, 3) || contains_factor(out.letters(), u5.letters()) ||
        contains_factor(out.letters(), reverse(u5).letters()))
        return CaseOutcome::fail({{"fixture", fixture_json(fx)}, {"policy", to_string(pol.strategy)}, {"reduced", out.text()}});
    return {};
}

inline CaseOutcome refactorization(Rng& rng) {
    const auto fx = fixtures::pumped_fixture(rng, 12);
    const Factorization f = factorize(fx.word, fx.u, kGamma);
    const ReductionPolicy pol = random_policy(rng, f);
    const auto r = refactorize_check(fx.word, fx.u, kGamma, pol);
    if (!r.ok) return CaseOutcome::fail({{"fixture", fixture_json(fx)}, {"policy", to_string(pol.strategy)}, {"diagnostic", r.diagnostic}});
    return {};
}

inline CaseOutcome rpo_bijection(Rng& rng) {
    const auto fx = fixtures::pumped_fixture(rng, 12);
    const Factorization f = factorize(fx.word, fx.u, kGamma);
    const ReductionPolicy pol = random_policy(rng, f);
    const Word reduced = reduce(f, pol);
    const PositionMaps maps = position_maps(f, pol);
    auto r = rpo_bijection_check(fx.word, reduced, maps, find_runs(reduced, fx.u, kGamma));
    for (const auto& [src, dst] : maps.rpo_pairs)
        if (r.ok && maps.rpo_inverse(dst) != src) r = CheckResult::fail("rpo_inverse(" + std::to_string(dst) + ") != " + std::to_string(src));
    if (!r.ok) return CaseOutcome::fail({{"fixture", fixture_json(fx)}, {"policy", to_string(pol.strategy)}, {"diagnostic", r.diagnostic}});
    return {};
}

inline CaseOutcome subadditivity(Rng& rng) {
    static constexpr std::string_view alphabets[] = {"ab", "abc", "abcd"};
    const auto sigma = alphabets[uniform(rng, 0, 2)];
    const Word t1 = fixtures::random_word(rng, uniform(rng, 1, 40), sigma);
    const Word t2 = fixtures::random_word(rng, uniform(rng, 1, 40), sigma);
    const Word t = t1 + t2;
    const std::size_t a = pl_online(t1.letters()), b = pl_online(t2.letters()), c = pl_online(t.letters());
    if (c > a + b) return CaseOutcome::fail({{"t1", t1.text()}, {"t2", t2.text()}, {"pl", json::array({a, b, c})}});
    if (pl_online(reverse(t).letters()) != c) return CaseOutcome::fail({{"word", t.text()}, {"what", "reversal"}});
    if ((c == 1) != is_palindrome(t)) return CaseOutcome::fail({{"word", t.text()}, {"what", "PL = 1 iff palindrome"}});
    return {};
}

inline CaseOutcome piecewise_bound(Rng& rng) {
    const auto fx = fixtures::mixed_fixture(rng);
    const StdPalContext ctx(fx.word, fx.u, kGamma);
    const Factorization f = factorize(fx.word, fx.u, kGamma);
    const Reduction red(fx.word, fx.u, kGamma, random_policy(rng, f));
    CaseOutcome out;
    for (int s = 0; s < 3; ++s) {
        const auto seg = random_segment(rng, ctx, ctx.limit(), 100);
        if (!seg) continue;
        const auto res = reduced_pl_bound_check(red, ctx.scan(), *seg);
        const double ratio = res.piecewise_bound ? static_cast<double>(res.pl_reduced) / static_cast<double>(res.piecewise_bound) : 0;
        out.ratio = std::max(out.ratio.value_or(0.0), ratio);
        if (res.pl_reduced > res.piecewise_bound)
            return CaseOutcome::fail({{"fixture", fixture_json(fx)},
                                      {"segment", json::array({seg->i, seg->j})},
                                      {"pl_reduced", res.pl_reduced},
                                      {"bound", res.piecewise_bound}});
    }
    return out;
}

inline CaseOutcome image_palindrome(Rng& rng) {
    const auto fx = fixtures::mixed_fixture(rng);
    const StdPalContext ctx(fx.word, fx.u, kGamma);
    if (ctx.scan().runs.empty()) return {};
    const Factorization f = factorize(fx.word, fx.u, kGamma);
    const Reduction reds[] = {Reduction(fx.word, fx.u, kGamma, ReductionPolicy::canonical()),
                              Reduction(fx.word, fx.u, kGamma, ReductionPolicy::parity()),
                              Reduction(fx.word, fx.u, kGamma, random_policy(rng, f))};
    for (Pos j = 2; j + 1 <= ctx.limit(); ++j)
        for (Pos i = 2; i <= j; ++i) {
            if (!ctx.is_palindrome(i - 1, j + 1) || ctx.runs_inside(i, j) == 0 || !is_std_pal(ctx, {i, j})) continue;
            for (const auto& red : reds)
                if (!image_is_palindrome(red, {i, j}))
                    return CaseOutcome::fail({{"fixture", fixture_json(fx)},
                                              {"std_pal", json::array({i, j})},
                                              {"policy", to_string(red.policy.strategy)}});
        }
    return {};
}

inline CaseOutcome centered_construction(Rng& rng) {
    const auto fx = fixtures::palindromic_fixture(rng);
    const StdPalContext ctx(fx.word, fx.u, kGamma);
    const auto p = fx.u.size();
    const Interval pal = *fx.pal;
    for (Pos a = pal.i, b = pal.j; a <= b; ++a, --b) {
        if (b + 1 > ctx.limit()) continue;
        for (const Run& r : ctx.scan().runs) {
            if (!(a + p < r.i() && r.j() + p < b)) continue;
            const Pos m3 = a + b - r.j();
            const Pos k = std::min(r.i(), m3);
            const Interval cand(k - p, a + b - k + p);
            if (cand.i < 2 || cand.j + 1 > ctx.limit()) continue;
            if (!is_std_pal(ctx, cand) || cand.i + cand.j != a + b || cand.i < a)
                return CaseOutcome::fail({{"fixture", fixture_json(fx)},
                                          {"palindrome", json::array({a, b})},
                                          {"run", json::array({r.i(), r.j()})},
                                          {"candidate", json::array({cand.i, cand.j})}});
        }
    }
    return {};
}

// Visits every palindrome (a, b) with b + 1 certified and >= 2 runs inside.
template <typename F>
inline std::optional<json> for_multi_run_palindromes(const StdPalContext& ctx, F&& f) {
    for (Pos b = 1; b + 1 <= ctx.limit(); ++b)
        for (Pos a = 1; a <= b; ++a) {
            if (ctx.runs_inside(a, b) < 2 || !ctx.is_palindrome(a, b)) continue;
            if (auto bad = f(Interval(a, b))) return bad;
        }
    return std::nullopt;
}

inline CaseOutcome hat_cap(Rng& rng) {
    const auto fx = fixtures::mixed_fixture(rng);
    const StdPalContext ctx(fx.word, fx.u, kGamma);
    auto bad = for_multi_run_palindromes(ctx, [&](const Interval& pal) -> std::optional<json> {
        const std::size_t runs = ctx.runs_inside(pal.i, pal.j);
        if (runs > 2 && centered_std_pals(ctx, pal).empty())
            return json{{"palindrome", json::array({pal.i, pal.j})}, {"runs", runs}};
        return std::nullopt;
    });
    if (bad) {
        (*bad)["fixture"] = fixture_json(fx);
        return CaseOutcome::fail(*bad);
    }
    return {};
}

inline CaseOutcome flank_cap(Rng& rng) {
    const auto fx = fixtures::mixed_fixture(rng);
    const StdPalContext ctx(fx.word, fx.u, kGamma);
    auto bad = for_multi_run_palindromes(ctx, [&](const Interval& pal) -> std::optional<json> {
        const auto csp = max_csp(ctx, pal);
        if (!csp) return std::nullopt;
        if (csp->i > pal.i && ctx.runs_inside(pal.i, csp->i - 1) > 1)
            return json{{"palindrome", json::array({pal.i, pal.j})}, {"flank", json::array({pal.i, csp->i - 1})}};
        if (csp->j < pal.j && ctx.runs_inside(csp->j + 1, pal.j) > 1)
            return json{{"palindrome", json::array({pal.i, pal.j})}, {"flank", json::array({csp->j + 1, pal.j})}};
        return std::nullopt;
    });
    // A few intervals through the general classifier.
    for (int s = 0; s < 2 && !bad && ctx.limit() > 30; ++s) {
        const Pos a = uniform(rng, 1, ctx.limit() - 20);
        const Interval cand(a, a + uniform(rng, 0, 15));
        const auto cls = classify_upsilon(ctx, cand, 24);
        if (cls.tag() != UpsilonTag::neither && !run_count_bound_check(ctx, cand, cls.tag()))
            bad = json{{"candidate", json::array({cand.i, cand.j})}, {"tag", to_string(cls.tag())}};
    }
    if (bad) {
        (*bad)["fixture"] = fixture_json(fx);
        return CaseOutcome::fail(*bad);
    }
    return {};
}

inline CaseOutcome std_pal_factorizations(Rng& rng) {
    const auto fx = fixtures::mixed_fixture(rng);
    const StdPalContext ctx(fx.word, fx.u, kGamma);
    if (ctx.limit() < 2) return {};
    for (int s = 0; s < 4; ++s) {
        const auto seg = random_segment(rng, ctx, ctx.limit() - 1, 150);
        if (!seg) continue;
        const std::size_t k = 1 + max_pl(fx.word.factor(seg->i, seg->j));
        try {
            const auto spf = std_pal_factorization(ctx, *seg, k);
            const auto cert = certify_std_pal_factorization(ctx.word(), ctx.scan(), *seg, k, spf.cut_points);
            if (!cert.ok) throw std::runtime_error(cert.diagnostic);
        } catch (const std::runtime_error& e) {
            return CaseOutcome::fail({{"fixture", fixture_json(fx)}, {"segment", json::array({seg->i, seg->j})}, {"k", k}, {"diagnostic", e.what()}});
        }
    }
    return {};
}

inline CaseOutcome reduced_pl(Rng& rng) {
    const auto fx = fixtures::mixed_fixture(rng);
    const StdPalContext ctx(fx.word, fx.u, kGamma);
    const Factorization f = factorize(fx.word, fx.u, kGamma);
    const Reduction red(fx.word, fx.u, kGamma, random_policy(rng, f));
    CaseOutcome out;
    for (int s = 0; s < 3; ++s) {
        const auto seg = random_segment(rng, ctx, ctx.limit(), 150);
        if (!seg) continue;
        const auto res = reduced_pl_bound_check(red, ctx.scan(), *seg);
        out.ratio = std::max(out.ratio.value_or(0.0), static_cast<double>(res.pl_reduced) / static_cast<double>(res.bound));
        if (!res.ok)
            return CaseOutcome::fail({{"fixture", fixture_json(fx)},
                                      {"segment", json::array({seg->i, seg->j})},
                                      {"k", res.k},
                                      {"pl_reduced", res.pl_reduced},
                                      {"bound", res.bound}});
    }
    return out;
}

inline CaseOutcome pipeline_case(Rng& rng) {
    auto [src, u] = fixtures::pumped_source(rng, 12);
    PipelineOptions opt;
    opt.horizon = uniform(rng, 800, 2000);
    opt.maxpl_window = 256;
    opt.spot_checks = 4;
    opt.spot_max_len = 80;
    opt.seed = rng();
    const PipelineReport rep = run_pipeline(src, u, opt);
    if (!rep.passed()) {
        json failed = json::array();
        for (const auto& c : rep.checks)
            if (c.status == "fail") failed.push_back({{"id", c.id}, {"counterexample", c.counterexample.value_or(json())}});
        return CaseOutcome::fail({{"input", rep.input}, {"u", u.text()}, {"horizon", opt.horizon}, {"failed", failed}});
    }
    return {};
}

}  // namespace detail

[[nodiscard]] inline const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = {
        {"L6", "find_runs equals the clause definition; consecutive runs satisfy j1 + |u| + 1 < i2", 2000, detail::run_separation},
        {"P8", "the mirror of an interior run of a palindrome is a run", 1000, detail::mirror_transfer},
        {"L10", "v^q = (t^q)^R implies v^phi(q) = (t^phi(q))^R", 2000, detail::reversal_preserved},
        {"L12", "reduced words with h = 3 contain no t^5, t in PowFactor(u), |t| = |u|", 500, detail::power_bound},
        {"P14", "factrz of the reduced word is w_j z_j^phi(d_j)", 500, detail::refactorization},
        {"C15", "rpo is an increasing bijection onto the reduced rpoDom", 500, detail::rpo_bijection},
        {"L17", "PL(t1 t2) <= PL(t1) + PL(t2)", 2000, detail::subadditivity},
        {"P18", "PL of a reduced segment <= (g + 1) maxPL(segment), g runs inside", 300, detail::piecewise_bound},
        {"P19", "the image of a standard palindrome is a palindrome", 300, detail::image_palindrome},
        {"L20", "(k - |u|, kbar + |u|) is a centered standard palindrome", 500, detail::centered_construction},
        {"L21", "palindromes without a centered standard palindrome hold <= 2 runs", 300, detail::hat_cap},
        {"P22", "flanks outside the maxCSP hold <= 1 run", 300, detail::flank_cap},
        {"P23", "standard palindromic factorizations exist and certify", 300, detail::std_pal_factorizations},
        {"T24", "PL(reduced segment) <= 3k^3 - 3k^2, k = 1 + maxPL(segment)", 200, detail::reduced_pl},
        {"T4", "the full reduction pipeline passes every check", 30, detail::pipeline_case},
    };
    return all;
}

[[nodiscard]] inline const Suite* find_suite(std::string_view id) {
    for (const auto& s : suites())
        if (s.id == id) return &s;
    return nullptr;
}

}  // namespace palred::verify
