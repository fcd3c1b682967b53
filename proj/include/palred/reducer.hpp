#pragma once

/**
 * @file reducer.hpp
 * @brief factrz(w, u), exponent reduction policies, the reduced word and
 *        the position maps between a word and its reduction.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "palred/runs.hpp"
#include "palred/word.hpp"

namespace palred {

struct Piece {
    Word w;       // letters between the previous run and this one
    Word z;       // run base
    QExponent d;  // run exponent
    Interval run; // position of z^d in the source
};

struct Factorization {
    std::vector<Piece> pieces;
    Word trailing;  // copied verbatim past the last certified run
    std::size_t source_len = 0;
    std::size_t complete_upto = 0;
    Word u;
    GammaConfig cfg;

    /// w_1 z_1^{d_1} ... trailing; equals the scanned prefix.
    [[nodiscard]] Word concat() const {
        Word out;
        for (const auto& pc : pieces) {
            out += pc.w;
            out += q_power(pc.z, pc.d);
        }
        out += trailing;
        return out;
    }
};

/// factrz over a finite prefix. Rejects prefixes that fail a decidable
/// clause of the base test; an undecided recurrence clause is accepted.
[[nodiscard]] inline Factorization factorize(const Word& prefix, const Word& u, GammaConfig cfg = {}) {
    detail::require_base(u);
    const auto pi = pi_gamma_status(prefix, u, cfg, 1);
    if (pi.status == PiGamma::non_member) throw std::invalid_argument("base test failed: " + pi.reason);
    const RunScan scan = find_runs(prefix, u, cfg);
    Factorization f;
    f.source_len = prefix.size();
    f.complete_upto = scan.complete_upto;
    f.u = u;
    f.cfg = cfg;
    Pos prev_end = 0;
    for (const Run& r : scan.runs) {
        f.pieces.push_back({prefix.factor(prev_end + 1, r.i() - 1), r.base, r.exponent, r.interval});
        prev_end = r.j();
    }
    f.trailing = prefix.factor(prev_end + 1, prefix.size());
    return f;
}

struct ReductionPolicy {
    enum class Strategy { canonical_min, parity_split, explicit_table };

    int gamma = 3;
    int h = 3;
    Strategy strategy = Strategy::canonical_min;
    std::vector<std::pair<QExponent, QExponent>> table;  // explicit_table entries q -> phi(q)

    static ReductionPolicy canonical(int gamma = 3, int h = 3) { return make(gamma, h, Strategy::canonical_min); }
    static ReductionPolicy parity(int gamma = 3, int h = 3) { return make(gamma, h, Strategy::parity_split); }
    static ReductionPolicy explicit_map(int gamma, int h, std::vector<std::pair<QExponent, QExponent>> entries) {
        auto p = make(gamma, h, Strategy::explicit_table);
        p.table = std::move(entries);
        return p;
    }

private:
    static ReductionPolicy make(int gamma, int h, Strategy s) {
        if (gamma < 3) throw std::invalid_argument("gamma must be >= 3");
        if (h < gamma) throw std::invalid_argument("h must be >= gamma");
        ReductionPolicy p;
        p.gamma = gamma;
        p.h = h;
        p.strategy = s;
        return p;
    }
};

[[nodiscard]] inline const char* to_string(ReductionPolicy::Strategy s) {
    switch (s) {
        case ReductionPolicy::Strategy::canonical_min: return "canonical_min";
        case ReductionPolicy::Strategy::parity_split: return "parity_split";
        case ReductionPolicy::Strategy::explicit_table: return "explicit_table";
    }
    return "?";
}

/// gamma - 2 <= phi < h and q - phi a nonnegative integer.
[[nodiscard]] inline bool in_phi_h(const QExponent& q, const QExponent& phi, int gamma, int h) {
    if (phi.den != q.den) return false;
    const std::int64_t den = q.den;
    if (phi.num < (gamma - 2) * den || phi.num >= h * den) return false;
    const std::int64_t diff = q.num - phi.num;
    return diff >= 0 && diff % den == 0;
}

[[nodiscard]] inline QExponent phi_apply(const ReductionPolicy& policy, const QExponent& q) {
    const std::int64_t den = q.den;
    const std::int64_t floor_num = (policy.gamma - 2) * den;
    if (q.num < floor_num) throw std::invalid_argument("exponent below gamma - 2");
    const QExponent least(q.num - (q.num - floor_num) / den * den, den);
    switch (policy.strategy) {
        case ReductionPolicy::Strategy::canonical_min: return least;
        case ReductionPolicy::Strategy::parity_split: {
            const QExponent bumped(least.num + den, den);
            if (q.whole() % 2 == 1 && bumped.num < policy.h * den && bumped.num <= q.num) return bumped;
            return least;
        }
        case ReductionPolicy::Strategy::explicit_table:
            for (const auto& [from, to] : policy.table) {
                if (!(from == q) || from.den != den) continue;
                if (!in_phi_h(q, to, policy.gamma, policy.h)) throw std::invalid_argument("not a member of Phi_h");
                return to;
            }
            return least;
    }
    return least;
}

[[nodiscard]] inline Word reduce(const Factorization& f, const ReductionPolicy& policy) {
    Word out;
    for (const auto& pc : f.pieces) {
        out += pc.w;
        out += q_power(pc.z, phi_apply(policy, pc.d));
    }
    out += f.trailing;
    return out;
}

struct PositionMaps {
    std::vector<std::size_t> kappa;      // kappa[j], j = 0..K
    std::vector<std::size_t> kappa_bar;  // kappa_bar[j]
    std::vector<std::size_t> w_len;      // |w_j|, j = 1..K at index j - 1
    std::size_t source_len = 0;
    std::size_t reduced_len = 0;
    std::vector<std::pair<Pos, Pos>> rpo_pairs;

    [[nodiscard]] std::size_t pieces() const noexcept { return w_len.size(); }

    /// Covered by no run of the factorization.
    [[nodiscard]] bool in_domain(Pos i) const {
        if (i == 0 || i > source_len) return false;
        const std::size_t j = segment(kappa, i);
        return j == pieces() || i - kappa[j] <= w_len[j];
    }

    [[nodiscard]] Pos rpo(Pos i) const {
        if (i == 0 || i > source_len) throw std::out_of_range("position outside horizon");
        if (!in_domain(i)) throw std::invalid_argument("position not in rpoDom");
        const std::size_t j = segment(kappa, i);
        return kappa_bar[j] + (i - kappa[j]);
    }

    /// Inverse of rpo on the reduced word's domain.
    [[nodiscard]] std::optional<Pos> rpo_inverse(Pos r) const {
        if (r == 0 || r > reduced_len) return std::nullopt;
        const std::size_t j = segment(kappa_bar, r);
        if (j < pieces() && r - kappa_bar[j] > w_len[j]) return std::nullopt;
        return kappa[j] + (r - kappa_bar[j]);
    }

private:
    // The j with k[j] < i <= k[j + 1]; pieces() for the trailing part.
    [[nodiscard]] std::size_t segment(const std::vector<std::size_t>& k, Pos i) const {
        auto it = std::lower_bound(k.begin(), k.end(), i);
        return static_cast<std::size_t>(it - k.begin()) - 1;
    }
};

[[nodiscard]] inline PositionMaps position_maps(const Factorization& f, const ReductionPolicy& policy) {
    PositionMaps m;
    m.kappa.push_back(0);
    m.kappa_bar.push_back(0);
    for (const auto& pc : f.pieces) {
        const auto phi = phi_apply(policy, pc.d);
        m.w_len.push_back(pc.w.size());
        m.kappa.push_back(m.kappa.back() + pc.w.size() + static_cast<std::size_t>(pc.d.num));
        m.kappa_bar.push_back(m.kappa_bar.back() + pc.w.size() + static_cast<std::size_t>(phi.num));
    }
    m.source_len = f.source_len;
    m.reduced_len = m.kappa_bar.back() + f.trailing.size();
    for (Pos i = 1; i <= f.source_len; ++i)
        if (m.in_domain(i)) m.rpo_pairs.emplace_back(i, m.rpo(i));
    return m;
}

struct CheckResult {
    bool ok = true;
    std::string diagnostic;

    static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

/// rpo is strictly increasing, letter preserving and onto the positions of
/// the reduced word covered by no run of rscan.
[[nodiscard]] inline CheckResult rpo_bijection_check(const Word& prefix, const Word& reduced, const PositionMaps& maps,
                                                     const RunScan& rscan) {
    const auto rmask = rpo_dom_mask(rscan);
    std::size_t domain_count = 0;
    for (Pos r = 1; r <= reduced.size(); ++r) domain_count += rmask[r] ? 1 : 0;
    if (domain_count != maps.rpo_pairs.size())
        return CheckResult::fail("rpo image size " + std::to_string(maps.rpo_pairs.size()) + " differs from reduced domain " +
                                 std::to_string(domain_count));
    Pos last = 0;
    for (const auto& [src, dst] : maps.rpo_pairs) {
        if (dst <= last) return CheckResult::fail("rpo not increasing at " + std::to_string(src));
        if (dst > reduced.size() || !rmask[dst])
            return CheckResult::fail("rpo(" + std::to_string(src) + ") lands outside the reduced domain");
        if (reduced.at(dst) != prefix.at(src)) return CheckResult::fail("rpo changes the letter at " + std::to_string(src));
        last = dst;
    }
    return {};
}

/// Re-derives runs of the reduced word and compares them with the
/// transported runs of the source; also checks rpo is an increasing
/// bijection between the two coverage complements.
[[nodiscard]] inline CheckResult refactorize_check(const Word& prefix, const Word& u, GammaConfig cfg,
                                                   const ReductionPolicy& policy) {
    const Factorization f = factorize(prefix, u, cfg);
    const Word reduced = reduce(f, policy);
    const PositionMaps maps = position_maps(f, policy);
    const RunScan rscan = find_runs(reduced, u, cfg);

    if (rscan.runs.size() != f.pieces.size())
        return CheckResult::fail("reduced word has " + std::to_string(rscan.runs.size()) + " runs, expected " +
                                 std::to_string(f.pieces.size()));
    Pos prev_end = 0;
    for (std::size_t k = 0; k < f.pieces.size(); ++k) {
        const Run& r = rscan.runs[k];
        const Piece& pc = f.pieces[k];
        const auto phi = phi_apply(policy, pc.d);
        const std::string at = "piece " + std::to_string(k + 1) + ": ";
        if (reduced.factor(prev_end + 1, r.i() - 1) != pc.w) return CheckResult::fail(at + "w differs");
        if (r.base != pc.z) return CheckResult::fail(at + "z differs");
        if (!(r.exponent == phi) || r.exponent.den != phi.den)
            return CheckResult::fail(at + "exponent " + r.exponent.str() + ", expected " + phi.str());
        if (r.j() != maps.kappa_bar[k + 1]) return CheckResult::fail(at + "run end does not match kappa_bar");
        prev_end = r.j();
    }
    if (reduced.factor(prev_end + 1, reduced.size()) != f.trailing) return CheckResult::fail("trailing differs");

    return rpo_bijection_check(prefix, reduced, maps, rscan);
}

/// A period P <= T/3 holds after a preperiod of at most T/3, T = min(|w|, horizon).
[[nodiscard]] inline bool looks_ultimately_periodic(const Word& w, std::size_t test_horizon) {
    const std::size_t t = std::min(w.size(), test_horizon);
    auto a = w.letters().first(t);
    for (std::size_t per = 1; per <= t / 3; ++per) {
        std::size_t last_bad = 0;  // 1-based position of the last mismatch w[k] != w[k + per]
        for (std::size_t k = t - per; k >= 1; --k)
            if (a[k - 1] != a[k - 1 + per]) {
                last_bad = k;
                break;
            }
        if (last_bad <= t / 3) return true;
    }
    return false;
}

struct AperiodicChoice {
    ReductionPolicy policy;
    bool certified = false;  // false: every candidate looked periodic
};

/// Picks a policy whose reduced prefix passes the finite aperiodicity scan.
[[nodiscard]] inline AperiodicChoice choose_aperiodic_policy(const Factorization& f, int h, std::size_t test_horizon) {
    const int gamma = f.cfg.gamma;
    std::vector<ReductionPolicy> candidates{ReductionPolicy::canonical(gamma, h), ReductionPolicy::parity(gamma, h)};
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const auto& pc : f.pieces) {
        if (!seen.insert({pc.d.num, pc.d.den}).second) continue;
        const auto least = phi_apply(ReductionPolicy::canonical(gamma, h), pc.d);
        const QExponent alt(least.num + pc.d.den, pc.d.den);
        if (in_phi_h(pc.d, alt, gamma, h))
            candidates.push_back(ReductionPolicy::explicit_map(gamma, h, {{pc.d, alt}}));
    }
    // The trailing piece is the same under every policy and may end inside an
    // open stretch, so only the reduced pieces are scanned.
    for (const auto& pol : candidates) {
        const Word out = reduce(f, pol);
        const std::size_t end = f.pieces.empty() ? out.size() : position_maps(f, pol).kappa_bar.back();
        if (!looks_ultimately_periodic(out.prefix(end), test_horizon)) return {pol, true};
    }
    return {candidates.front(), false};
}

/// No t^{h+2} with t in PowFactor(u) of length |u| occurs in w.
[[nodiscard]] inline bool power_bound_check(const Word& w, const Word& u, int h) {
    if (u.empty()) throw std::invalid_argument("base must be nonempty");
    return pow_factor_stretches(w.letters(), u.letters(), static_cast<std::size_t>(h + 2) * u.size()).empty();
}

}  // namespace palred
