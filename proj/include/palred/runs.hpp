#pragma once

/**
 * @file runs.hpp
 * @brief u-runs of a finite prefix, the recurrence-gated base test, and
 *        coverage masks.
 *
 * A u-run (i, j) is the interior of a maximal PowFactor(u)-stretch
 * [i - |u|, j + |u|] that does not start at position 1 and whose interior
 * has length at least (gamma - 2)|u|. On a finite prefix a stretch that
 * touches the last letter may still grow, so such stretches never yield
 * runs and RunScan::complete_upto marks how far the listing is exact.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "palred/word.hpp"

namespace palred {

struct GammaConfig {
    int gamma = 3;

    constexpr GammaConfig() = default;
    constexpr explicit GammaConfig(int g) : gamma(g) {
        if (g < 3) throw std::invalid_argument("gamma must be >= 3");
    }
};

struct Run {
    Interval interval;
    Word base;           // w[i, i + |u| - 1]
    QExponent exponent;  // w[i, j] = base^exponent

    [[nodiscard]] Pos i() const noexcept { return interval.i; }
    [[nodiscard]] Pos j() const noexcept { return interval.j; }
};

struct RunScan {
    std::vector<Run> runs;  // sorted by i
    std::size_t horizon = 0;
    // Every run (i, j) of the infinite word with i <= complete_upto is listed.
    std::size_t complete_upto = 0;
    std::size_t u_len = 0;
};

namespace detail {

inline void require_base(const Word& u) {
    if (u.empty()) throw std::invalid_argument("base must be nonempty");
    if (!is_primitive(u)) throw std::invalid_argument("base must be primitive");
}

}  // namespace detail

[[nodiscard]] inline RunScan find_runs(const Word& prefix, const Word& u, GammaConfig cfg = {}) {
    detail::require_base(u);
    const std::size_t p = u.size(), n = prefix.size();
    const std::size_t min_len = static_cast<std::size_t>(cfg.gamma - 2) * p;
    RunScan scan;
    scan.horizon = n;
    scan.u_len = p;
    scan.complete_upto = n > p + 1 ? n - p - 1 : 0;
    for (const Stretch& st : pow_factor_stretches(prefix.letters(), u.letters())) {
        if (st.last == n) {
            if (st.first > 1) scan.complete_upto = std::min(scan.complete_upto, st.first + p - 1);
            continue;
        }
        if (st.first < 2 || st.length() < min_len + 2 * p || st.length() < 2 * p + 1) continue;
        const Pos i = st.first + p, j = st.last - p;
        scan.runs.push_back({Interval(i, j), prefix.factor(i, i + p - 1),
                             QExponent(static_cast<std::int64_t>(j - i + 1), static_cast<std::int64_t>(p))});
    }
    return scan;
}

enum class PiGamma { member, non_member, undecidable };

struct PiGammaStatus {
    PiGamma status = PiGamma::undecidable;
    std::string reason;             // the failed clause, empty for member
    std::size_t best_count = 0;     // most occurrences of a single v^gamma
};

[[nodiscard]] inline const char* to_string(PiGamma s) {
    switch (s) {
        case PiGamma::member: return "member";
        case PiGamma::non_member: return "non_member";
        case PiGamma::undecidable: return "undecidable_at_horizon";
    }
    return "?";
}

/**
 * Finite-horizon test of u in Pi_gamma(w): recurrence of some v^gamma is
 * replaced by at least `threshold` occurrences inside the prefix.
 */
[[nodiscard]] inline PiGammaStatus pi_gamma_status(const Word& prefix, const Word& u, GammaConfig cfg,
                                                   std::size_t threshold) {
    if (u.empty()) throw std::invalid_argument("base must be nonempty");
    const std::size_t p = u.size(), g = static_cast<std::size_t>(cfg.gamma);
    if (!is_primitive(u)) return {PiGamma::non_member, "u is not primitive", 0};
    if (prefix.size() < g * p) return {PiGamma::undecidable, "prefix shorter than gamma*|u|", 0};
    if (in_pow_factor(prefix.letters().first(g * p), u.letters()))
        return {PiGamma::non_member, "prefix of length gamma*|u| lies in PowFactor(u)", 0};

    // Occurrences of v^gamma are the length-gamma*p windows of PowFactor stretches.
    std::map<std::vector<Letter>, std::size_t> counts;
    auto w = prefix.letters();
    for (const Stretch& st : pow_factor_stretches(w, u.letters(), g * p)) {
        const std::size_t windows = st.length() - g * p + 1;
        for (std::size_t r = 0; r < std::min(p, windows); ++r) {
            auto block = w.subspan(st.first - 1 + r, p);
            counts[std::vector<Letter>(block.begin(), block.end())] += (windows - r + p - 1) / p;
        }
    }
    std::size_t best = 0;
    for (const auto& [v, c] : counts) best = std::max(best, c);
    if (!contains_factor(w, u.letters())) return {PiGamma::undecidable, "u does not occur in the prefix", best};
    if (best < threshold) return {PiGamma::undecidable, "no v^gamma reaches the occurrence threshold", best};
    return {PiGamma::member, "", best};
}

/// mask[p] is true iff p is covered by no run; index 0 is unused.
[[nodiscard]] inline std::vector<bool> rpo_dom_mask(const RunScan& scan) {
    std::vector<bool> mask(scan.horizon + 1, true);
    if (!mask.empty()) mask[0] = false;
    for (const Run& r : scan.runs)
        for (Pos p = r.i(); p <= r.j() && p <= scan.horizon; ++p) mask[p] = false;
    return mask;
}

[[nodiscard]] inline bool check_run_separation(const RunScan& scan, std::size_t u_len) {
    for (std::size_t k = 1; k < scan.runs.size(); ++k)
        if (!(scan.runs[k - 1].j() + u_len + 1 < scan.runs[k].i())) return false;
    return true;
}

/// Number of runs (i, j) with first <= i and j <= last.
[[nodiscard]] inline std::size_t count_runs_inside(const RunScan& scan, Pos first, Pos last) {
    auto lo = std::lower_bound(scan.runs.begin(), scan.runs.end(), first,
                               [](const Run& r, Pos v) { return r.i() < v; });
    auto hi = std::upper_bound(scan.runs.begin(), scan.runs.end(), last,
                               [](Pos v, const Run& r) { return v < r.j(); });
    return hi > lo ? static_cast<std::size_t>(hi - lo) : 0;
}

/// Image of an interior run under the mirror of the palindrome pal.
[[nodiscard]] inline Interval mirror_run(const Interval& pal, const Run& run, std::size_t u_len) {
    if (!(pal.i + u_len < run.i() && run.j() + u_len < pal.j))
        throw std::invalid_argument("margin too small for mirror transfer");
    return mirror_interval(pal.i, run.i(), run.j(), pal.j);
}

}  // namespace palred
