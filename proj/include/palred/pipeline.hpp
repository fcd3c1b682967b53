#pragma once

// End-to-end reduction of a generated word: strip a forbidden power prefix,
// test the base, factorize, pick an exponent map, reduce, then check the
// output. Every check is finite-horizon.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "palred/generators.hpp"
#include "palred/pal_length.hpp"
#include "palred/reducer.hpp"
#include "palred/runs.hpp"
#include "palred/serialize.hpp"
#include "palred/std_pal.hpp"
#include "palred/word.hpp"

namespace palred {

/// Input rejected before any check ran (exit code 2 at the CLI).
struct PipelineInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PipelineOptions {
    std::size_t horizon = 10000;
    int gamma = 3;
    int h = 3;
    std::size_t recurrence_threshold = 2;
    std::size_t psi_cap = 64;
    std::size_t maxpl_window = 1024;
    std::size_t spot_checks = 16;
    std::size_t spot_max_len = 200;
    std::uint64_t seed = 1;
    std::optional<ReductionPolicy::Strategy> force;  // skip the aperiodic search
};

struct CheckEntry {
    std::string id;
    std::string anchor;
    std::string status;  // pass, fail, skipped, warn
    std::size_t cases = 0;
    std::optional<nlohmann::json> counterexample;
};

struct PipelineReport {
    nlohmann::json input;
    Word u;
    int gamma = 3;
    int h = 3;
    std::string policy;
    std::size_t horizon = 0;
    std::size_t stripped = 0;        // |t|
    std::size_t certified = 0;       // certified source positions after t
    Word reduced;                    // truncated at the certified image
    std::vector<CheckEntry> checks;
    std::size_t maxpl_source = 0;    // k
    std::size_t maxpl_reduced_observed = 0;
    std::size_t bound_3k3 = 0;

    [[nodiscard]] bool passed() const {
        return std::none_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.status == "fail"; });
    }
};

/// Length of the reduced prefix determined by source positions <= last.
[[nodiscard]] inline std::size_t image_limit(const PositionMaps& maps, Pos last) {
    for (Pos p = last; p >= 1; --p)
        if (maps.in_domain(p)) return maps.rpo(p);
    return 0;
}

/// Shortest t such that w[t + 1, t + gamma|u|] is not in PowFactor(u).
[[nodiscard]] inline std::size_t forbidden_prefix_length(const Word& w, const Word& u, int gamma) {
    const std::size_t need = static_cast<std::size_t>(gamma) * u.size();
    for (std::size_t t = 0; t + need <= w.size(); ++t)
        if (!in_pow_factor(w.letters().subspan(t, need), u.letters())) return t;
    throw PipelineInputError("every window of length gamma*|u| lies in PowFactor(u)");
}

namespace detail {

// Distinct factors of length <= cap, hashed with their length.
class FactorSet {
public:
    FactorSet(std::span<const Letter> w, std::size_t cap) {
        for (std::size_t s = 0; s < w.size(); ++s) {
            std::uint64_t h = kSeed;
            for (std::size_t len = 1; len <= cap && s + len <= w.size(); ++len) {
                h = step(h, w[s + len - 1]);
                set_.insert(mix(h, len));
            }
        }
    }
    [[nodiscard]] bool contains(std::span<const Letter> f) const {
        std::uint64_t h = kSeed;
        for (Letter a : f) h = step(h, a);
        return set_.count(mix(h, f.size())) > 0;
    }

    static constexpr std::uint64_t kSeed = 1469598103934665603ull;
    static std::uint64_t step(std::uint64_t h, Letter a) { return (h ^ (a + 1u)) * 1099511628211ull; }
    static std::uint64_t mix(std::uint64_t h, std::size_t len) { return h ^ (len * 0x9e3779b97f4a7c15ull); }

private:
    std::unordered_set<std::uint64_t> set_;
};

}  // namespace detail

/// Factors of src (length <= cap) containing neither u nor u^R must occur in
/// reduced. Returns the first missing factor.
[[nodiscard]] inline std::optional<Interval> psi_check(const Word& src, const Word& reduced, const Word& u,
                                                       std::size_t cap, std::size_t* checked = nullptr) {
    const std::size_t n = src.size(), p = u.size();
    // avoid[s] = longest factor starting at s (0-based) that avoids u and u^R
    std::vector<std::size_t> avoid(n);
    const Word ur = reverse(u);
    std::size_t next_end = n;  // 0-based end (exclusive) of the earliest occurrence starting at >= s
    for (std::size_t s = n; s-- > 0;) {
        if (s + p <= n) {
            auto win = src.letters().subspan(s, p);
            if (std::equal(win.begin(), win.end(), u.begin()) || std::equal(win.begin(), win.end(), ur.begin()))
                next_end = s + p - 1;
        }
        avoid[s] = next_end - s;
    }
    const detail::FactorSet have(reduced.letters(), cap);
    std::size_t count = 0;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t len = 1; len <= std::min(cap, avoid[s]); ++len) {
            ++count;
            if (!have.contains(src.letters().subspan(s, len))) {
                if (checked) *checked = count;
                return Interval(s + 1, s + len);
            }
        }
    if (checked) *checked = count;
    return std::nullopt;
}

[[nodiscard]] inline PipelineReport run_pipeline(const WordSource& src, const Word& u, const PipelineOptions& opt) {
    using nlohmann::json;
    if (u.empty() || !is_primitive(u)) throw PipelineInputError("u must be a nonempty primitive word");
    PipelineReport rep;
    rep.input = io::to_json(src);
    rep.u = u;
    rep.gamma = opt.gamma;
    rep.h = opt.h;
    rep.horizon = opt.horizon;
    const GammaConfig cfg(opt.gamma);

    const Word raw = src.prefix(opt.horizon);
    rep.stripped = forbidden_prefix_length(raw, u, opt.gamma);
    const Word x = raw.factor(rep.stripped + 1, raw.size());

    const auto pi = pi_gamma_status(x, u, cfg, opt.recurrence_threshold);
    if (pi.status != PiGamma::member)
        throw PipelineInputError(std::string("base test ") + to_string(pi.status) + ": " + pi.reason);

    const Factorization f = factorize(x, u, cfg);
    const std::size_t test_horizon = std::min<std::size_t>(x.size(), 4096);
    AperiodicChoice choice;
    if (opt.force && *opt.force != ReductionPolicy::Strategy::explicit_table) {
        choice.policy = *opt.force == ReductionPolicy::Strategy::parity_split ? ReductionPolicy::parity(opt.gamma, opt.h)
                                                                               : ReductionPolicy::canonical(opt.gamma, opt.h);
        choice.certified = !looks_ultimately_periodic(reduce(f, choice.policy), test_horizon);
    } else {
        choice = choose_aperiodic_policy(f, opt.h, test_horizon);
    }
    const ReductionPolicy& policy = choice.policy;
    rep.policy = to_string(policy.strategy);
    const Word full = reduce(f, policy);
    const PositionMaps maps = position_maps(f, policy);
    rep.certified = f.complete_upto;
    rep.reduced = full.prefix(image_limit(maps, f.complete_upto));

    auto add = [&](std::string id, std::string anchor, bool ok, std::size_t cases, std::optional<json> cx = std::nullopt) {
        CheckEntry e{std::move(id), std::move(anchor), ok ? "pass" : "fail", cases, std::nullopt};
        if (!ok) {
            json payload = cx.value_or(json::object());
            payload["u"] = u.text();
            payload["stripped"] = rep.stripped;
            payload["horizon"] = opt.horizon;
            e.counterexample = payload;
        }
        rep.checks.push_back(std::move(e));
    };

    // Power bound on the certified output.
    {
        const auto bad = pow_factor_stretches(rep.reduced.letters(), u.letters(), static_cast<std::size_t>(opt.h + 2) * u.size());
        const Word u5 = q_power(u, QExponent(5 * static_cast<std::int64_t>(u.size()), static_cast<std::int64_t>(u.size())));
        const bool has_u5 = contains_factor(rep.reduced.letters(), u5.letters()) ||
                            contains_factor(rep.reduced.letters(), reverse(u5).letters());
        std::optional<json> cx;
        if (!bad.empty()) cx = json{{"reduced_stretch", json::array({bad[0].first, bad[0].last})}};
        else if (has_u5) cx = json{{"reduced_factor", u5.text()}};
        add("L12", "no t^(h+2) with t in PowFactor(u), |t| = |u|, in the reduced word", bad.empty() && !has_u5,
            rep.reduced.size(), cx);
    }
    // Avoiding factors survive.
    {
        std::size_t checked = 0;
        const Word certified_src = x.prefix(std::min(x.size(), f.complete_upto));
        const auto miss = psi_check(certified_src, rep.reduced, u, opt.psi_cap, &checked);
        std::optional<json> cx;
        if (miss) cx = json{{"source_factor", json::array({miss->i + rep.stripped, miss->j + rep.stripped})},
                            {"letters", certified_src.factor(miss->i, miss->j).text()}};
        add("PSI", "factors avoiding u and u^R (length <= cap) occur in the reduced word", !miss, checked, cx);
    }
    // Refactorization and the position bijection.
    {
        const auto r = refactorize_check(x, u, cfg, policy);
        add("P14", "factrz of the reduced word is w_j z_j^phi(d_j)", r.ok, f.pieces.size(),
            r.ok ? std::nullopt : std::optional<json>(json{{"diagnostic", r.diagnostic}}));
        const auto b = rpo_bijection_check(x, full, maps, find_runs(full, u, cfg));
        add("C15", "rpo is an increasing bijection onto the reduced rpoDom", b.ok, maps.rpo_pairs.size(),
            b.ok ? std::nullopt : std::optional<json>(json{{"diagnostic", b.diagnostic}}));
    }
    // Reduced-PL spot checks on segments with endpoints in rpoDom.
    {
        const RunScan scan = find_runs(x, u, cfg);
        const Reduction red(x, u, cfg, policy);
        std::mt19937_64 rng(opt.seed);
        std::size_t done = 0;
        std::optional<json> cx;
        const std::size_t limit = f.complete_upto > 1 ? f.complete_upto - 1 : 0;
        for (std::size_t tries = 0; done < opt.spot_checks && tries < 50 * opt.spot_checks && limit >= 1; ++tries) {
            const Pos a = std::uniform_int_distribution<Pos>(1, limit)(rng);
            const Pos b = std::min(limit, a + std::uniform_int_distribution<Pos>(0, opt.spot_max_len - 1)(rng));
            if (!maps.in_domain(a) || !maps.in_domain(b)) continue;
            ++done;
            const auto res = reduced_pl_bound_check(red, scan, {a, b});
            if (!res.ok && !cx)
                cx = json{{"segment", json::array({a + rep.stripped, b + rep.stripped})},
                          {"k", res.k},
                          {"pl_reduced", res.pl_reduced},
                          {"bound", res.bound}};
        }
        if (done == 0)
            rep.checks.push_back({"T24", "PL(reduced segment) <= 3k^3 - 3k^2", "skipped", 0, std::nullopt});
        else
            add("T24", "PL(reduced segment) <= 3k^3 - 3k^2", !cx, done, cx);
    }
    // maxPL of a leading window and of its image.
    {
        const std::size_t win = std::min({opt.maxpl_window, f.complete_upto, x.size()});
        if (win == 0) {
            rep.checks.push_back({"T4", "maxPL(reduced) <= 3k^3", "skipped", 0, std::nullopt});
        } else {
            rep.maxpl_source = max_pl(x.prefix(win));
            const std::size_t k = rep.maxpl_source;
            rep.bound_3k3 = 3 * k * k * k;
            rep.maxpl_reduced_observed = max_pl(full.prefix(std::max<std::size_t>(1, image_limit(maps, win))));
            add("T4", "maxPL(reduced) <= 3k^3", rep.maxpl_reduced_observed <= rep.bound_3k3, 1,
                json{{"window", win}, {"k", k}, {"observed", rep.maxpl_reduced_observed}});
        }
    }
    rep.checks.push_back({"T16", "reduced prefix is not visibly ultimately periodic",
                          choice.certified ? "pass" : "warn", 1, std::nullopt});
    return rep;
}

[[nodiscard]] inline nlohmann::json to_json(const PipelineReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json e{{"id", c.id}, {"anchor", c.anchor}, {"status", c.status}, {"cases", c.cases}};
        if (c.counterexample) e["counterexample"] = *c.counterexample;
        checks.push_back(e);
    }
    return {{"input", r.input},
            {"u", r.u.text()},
            {"gamma", r.gamma},
            {"h", r.h},
            {"policy", r.policy},
            {"horizon", r.horizon},
            {"stripped", r.stripped},
            {"certified", r.certified},
            {"checks", checks},
            {"maxpl_source", r.maxpl_source},
            {"maxpl_reduced_observed", r.maxpl_reduced_observed},
            {"bound_3k3", r.bound_3k3}};
}

}  // namespace palred
