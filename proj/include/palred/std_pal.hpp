#pragma once

/**
 * @file std_pal.hpp
 * @brief Standard palindromes, centered standard palindromes, the flank
 *        classification, palindromic and standard palindromic
 *        factorizations, and the reduced-PL bound.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "palred/pal_length.hpp"
#include "palred/reducer.hpp"
#include "palred/runs.hpp"
#include "palred/word.hpp"

namespace palred {

/// A word, its u-runs and the derived lookup tables. Queries must stay
/// inside the certified horizon (RunScan::complete_upto).
class StdPalContext {
public:
    StdPalContext(Word w, const Word& u, GammaConfig cfg = {})
        : w_(std::move(w)), scan_(find_runs(w_, u, cfg)), pal_(w_.letters()) {
        build();
    }
    StdPalContext(Word w, RunScan scan) : w_(std::move(w)), scan_(std::move(scan)), pal_(w_.letters()) { build(); }

    [[nodiscard]] const Word& word() const noexcept { return w_; }
    [[nodiscard]] const RunScan& scan() const noexcept { return scan_; }
    [[nodiscard]] const std::vector<bool>& mask() const noexcept { return mask_; }
    [[nodiscard]] std::size_t u_len() const noexcept { return scan_.u_len; }
    [[nodiscard]] std::size_t limit() const noexcept { return scan_.complete_upto; }

    [[nodiscard]] bool in_domain(Pos p) const { return p >= 1 && p < mask_.size() && mask_[p]; }
    /// Every position of [a, b] is in rpoDom (true for an empty range).
    [[nodiscard]] bool all_in_domain(Pos a, Pos b) const {
        if (a > b) return true;
        if (a == 0 || b >= mask_.size()) return false;
        return covered_[b] == covered_[a - 1];
    }
    [[nodiscard]] bool is_palindrome(Pos i, Pos j) const { return pal_.is_palindrome(i, j); }
    [[nodiscard]] std::size_t runs_inside(Pos i, Pos j) const { return count_runs_inside(scan_, i, j); }

    void require_certified(Pos last) const {
        if (last > limit()) throw std::out_of_range("interval beyond certified horizon");
    }

private:
    void build() {
        mask_ = rpo_dom_mask(scan_);
        covered_.assign(mask_.size(), 0);
        for (std::size_t p = 1; p < mask_.size(); ++p) covered_[p] = covered_[p - 1] + (mask_[p] ? 0 : 1);
    }

    Word w_;
    RunScan scan_;
    PalindromeTable pal_;
    std::vector<bool> mask_;
    std::vector<std::size_t> covered_;
};

/// (i, j) is a standard palindrome. Requires i >= 2 and j + 1 certified.
[[nodiscard]] inline bool is_std_pal(const StdPalContext& ctx, const Interval& cand) {
    const Pos i = cand.i, j = cand.j;
    if (i < 2) throw std::invalid_argument("standard palindrome needs i >= 2");
    ctx.require_certified(j + 1);
    const std::size_t p = ctx.u_len();
    if (!ctx.in_domain(i) || !ctx.in_domain(j)) return false;
    if (!ctx.is_palindrome(i - 1, j + 1)) return false;
    if (!ctx.all_in_domain(i - 1, std::min(i + p - 1, j))) return false;
    if (!ctx.all_in_domain(j + 1 >= i + p ? j + 1 - p : i, j + 1)) return false;
    // Endpoints are uncovered, so every run meeting [i, j] lies inside it and
    // symmetric coverage means the runs pair up under the mirror.
    const auto& runs = ctx.scan().runs;
    auto lo = std::lower_bound(runs.begin(), runs.end(), i, [](const Run& r, Pos v) { return r.i() < v; });
    auto hi = std::upper_bound(runs.begin(), runs.end(), j, [](Pos v, const Run& r) { return v < r.j(); });
    for (; lo < hi; ++lo, --hi) {
        const Run& a = *lo;
        const Run& b = *(hi - 1);
        if (a.i() + b.j() != i + j || a.j() + b.i() != i + j) return false;
    }
    return true;
}

/// Centered standard palindromes of the palindrome w[outer], shortest first.
[[nodiscard]] inline std::vector<Interval> centered_std_pals(const StdPalContext& ctx, const Interval& outer) {
    if (!ctx.is_palindrome(outer.i, outer.j)) throw std::invalid_argument("outer interval is not a palindrome");
    ctx.require_certified(outer.j + 1);
    std::vector<Interval> out;
    const Pos mid = outer.i + (outer.j - outer.i) / 2;
    for (Pos m1 = mid; m1 >= outer.i; --m1) {
        if (m1 >= 2 && is_std_pal(ctx, {m1, outer.i + outer.j - m1})) out.push_back({m1, outer.i + outer.j - m1});
        if (m1 == 1) break;
    }
    return out;
}

[[nodiscard]] inline std::optional<Interval> max_csp(const StdPalContext& ctx, const Interval& outer) {
    auto all = centered_std_pals(ctx, outer);
    if (all.empty()) return std::nullopt;
    return all.back();
}

/// 0 if the intervals intersect, 1 if they are disjoint.
[[nodiscard]] constexpr int overlap(const Interval& a, const Interval& b) noexcept {
    if (a.i <= b.i && b.i <= a.j) return 0;
    if (b.i <= a.i && a.i <= b.j) return 0;
    return 1;
}

enum class UpsilonTag { hat, bar, neither };

[[nodiscard]] inline const char* to_string(UpsilonTag t) {
    switch (t) {
        case UpsilonTag::hat: return "hat";
        case UpsilonTag::bar: return "bar";
        case UpsilonTag::neither: return "neither";
    }
    return "?";
}

struct UpsilonClass {
    bool hat = false;
    bool bar = false;
    std::optional<Interval> enclosing;  // witness palindrome for bar
    std::optional<Interval> enclosing_csp;

    [[nodiscard]] UpsilonTag tag() const noexcept {
        return hat ? UpsilonTag::hat : bar ? UpsilonTag::bar : UpsilonTag::neither;
    }
};

/**
 * Hat: cand is a palindrome without a centered standard palindrome.
 * Bar: some palindrome [a, b] with cand inside it, a >= cand.i - search_bound
 * and b <= cand.j + search_bound, has a maxCSP disjoint from cand.
 */
[[nodiscard]] inline UpsilonClass classify_upsilon(const StdPalContext& ctx, const Interval& cand,
                                                   std::size_t search_bound) {
    UpsilonClass out;
    ctx.require_certified(cand.j + 1);
    if (ctx.is_palindrome(cand.i, cand.j)) out.hat = centered_std_pals(ctx, cand).empty();
    const Pos a_min = cand.i > search_bound ? cand.i - search_bound : 1;
    const Pos b_max = std::min(cand.j + search_bound, ctx.limit() - 1);
    for (Pos a = cand.i; a >= a_min; --a) {
        for (Pos b = cand.j; b <= b_max; ++b) {
            if (!ctx.is_palindrome(a, b)) continue;
            auto csp = max_csp(ctx, {a, b});
            if (csp && overlap(cand, *csp) == 1) {
                out.bar = true;
                out.enclosing = Interval(a, b);
                out.enclosing_csp = csp;
                return out;
            }
        }
        if (a == 1) break;
    }
    return out;
}

/// At most 2 runs inside a hat interval, at most 1 inside a bar interval.
[[nodiscard]] inline bool run_count_bound_check(const StdPalContext& ctx, const Interval& cand, UpsilonTag tag) {
    const std::size_t n = ctx.runs_inside(cand.i, cand.j);
    switch (tag) {
        case UpsilonTag::hat: return n <= 2;
        case UpsilonTag::bar: return n <= 1;
        case UpsilonTag::neither: break;
    }
    throw std::invalid_argument("run count bound needs a hat or bar interval");
}

/// Cut points m_1 < ... < m_j (j <= k) of a palindromic factorization of
/// w[seg], with m_1 = seg.i and m_j = seg.j + 1; absent when PL(seg) >= k.
[[nodiscard]] inline std::optional<std::vector<Pos>> pal_factorizations(const Word& w, std::size_t k,
                                                                        const Interval& seg) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (seg.j > w.size()) throw std::out_of_range("segment outside word");
    const Word s = w.factor(seg.i, seg.j);
    const PalindromeTable pal(s.letters());
    const std::size_t n = s.size();
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> best(n + 1, inf), from(n + 1, 0);
    best[0] = 0;
    for (std::size_t e = 1; e <= n; ++e)
        for (std::size_t m = 1; m <= e; ++m)
            if (best[m - 1] != inf && best[m - 1] + 1 < best[e] && pal.is_palindrome(m, e)) {
                best[e] = best[m - 1] + 1;
                from[e] = m - 1;
            }
    if (best[n] + 1 > k) return std::nullopt;
    std::vector<Pos> cuts{seg.j + 1};
    for (std::size_t e = n; e > 0; e = from[e]) cuts.push_back(seg.i + from[e]);
    std::reverse(cuts.begin(), cuts.end());
    return cuts;
}

struct StdPalFactorization {
    enum class Kind { std_pal, bounded_runs };
    struct PieceInfo {
        Interval span;
        Kind kind;
        std::size_t runs;
    };

    std::vector<Pos> cut_points;  // delta_1 < ... < delta_g
    std::vector<PieceInfo> pieces;
    std::size_t k = 0;

    [[nodiscard]] std::size_t g() const noexcept { return cut_points.size(); }
};

/// Checks every clause of the standard palindromic factorization
/// definition straight from the word and the run list.
[[nodiscard]] inline CheckResult certify_std_pal_factorization(const Word& w, const RunScan& scan, const Interval& seg,
                                                               std::size_t k, const std::vector<Pos>& delta) {
    auto covered = [&](Pos p) {
        for (const Run& r : scan.runs)
            if (r.i() <= p && p <= r.j()) return true;
        return p == 0 || p > scan.horizon;
    };
    auto hull_is_pal = [&](Pos i, Pos j) {
        if (i < 2 || j + 1 > w.size()) return false;
        for (Pos a = i - 1, b = j + 1; a < b; ++a, --b)
            if (w.at(a) != w.at(b)) return false;
        return true;
    };
    auto std_pal = [&](Pos i, Pos j) {
        const std::size_t p = scan.u_len;
        if (covered(i) || covered(j) || !hull_is_pal(i, j)) return false;
        for (Pos m = i - 1; m <= std::min(i + p - 1, j); ++m)
            if (covered(m)) return false;
        for (Pos m = j + 1 >= i + p ? j + 1 - p : i; m <= j + 1; ++m)
            if (covered(m)) return false;
        for (Pos m = i; m <= j; ++m)
            if (covered(m) != covered(i + j - m)) return false;
        return true;
    };
    auto runs_in = [&](Pos i, Pos j) {
        std::size_t c = 0;
        for (const Run& r : scan.runs) c += (i <= r.i() && r.j() <= j) ? 1 : 0;
        return c;
    };

    if (delta.size() > k) return CheckResult::fail("g = " + std::to_string(delta.size()) + " exceeds k = " + std::to_string(k));
    if (delta.size() < 2) return CheckResult::fail("fewer than two cut points");
    if (delta.front() != seg.i || delta.back() != seg.j + 1) return CheckResult::fail("cut points do not span the segment");
    for (std::size_t t = 0; t + 1 < delta.size(); ++t) {
        const Pos a = delta[t], b = delta[t + 1] - 1;
        const std::string at = "piece [" + std::to_string(a) + "," + std::to_string(b) + "]: ";
        if (delta[t + 1] <= delta[t]) return CheckResult::fail(at + "empty or decreasing");
        if (covered(a) || covered(b)) return CheckResult::fail(at + "endpoint covered by a run");
        if (!std_pal(a, b) && runs_in(a, b) > 3 * k)
            return CheckResult::fail(at + std::to_string(runs_in(a, b)) + " runs in a non-standard piece");
    }
    return {};
}

/// Builds a standard palindromic factorization of w[seg] from a palindromic
/// one: each palindrome is split around its maxCSP, consecutive
/// non-standard pieces are merged, and when more than k - 1 pieces remain
/// the fewest adjacent pieces are fused that keep every piece valid.
/// Throws with the violating piece if the result does not certify.
[[nodiscard]] inline StdPalFactorization std_pal_factorization(const StdPalContext& ctx, const Interval& seg,
                                                               std::size_t k) {
    ctx.require_certified(seg.j + 1);
    if (!ctx.in_domain(seg.i) || !ctx.in_domain(seg.j)) throw std::invalid_argument("segment endpoints must lie in rpoDom");
    auto cuts = pal_factorizations(ctx.word(), k, seg);
    if (!cuts) throw std::invalid_argument("k is below 1 + PL(segment)");

    struct Part {
        Interval span;
        bool std;
    };
    std::vector<Part> parts;
    auto push = [&](Interval s, bool is_std) {
        if (!is_std && !parts.empty() && !parts.back().std)
            parts.back().span.j = s.j;
        else
            parts.push_back({s, is_std});
    };
    for (std::size_t t = 0; t + 1 < cuts->size(); ++t) {
        const Interval piece((*cuts)[t], (*cuts)[t + 1] - 1);
        auto csp = max_csp(ctx, piece);
        if (!csp) {
            push(piece, false);
        } else if (csp->i == piece.i) {
            push(piece, true);
        } else {
            push({piece.i, csp->i - 1}, false);
            push(*csp, true);
            push({csp->j + 1, piece.j}, false);
        }
    }

    auto valid = [&](Pos a, Pos b) {
        if (!ctx.in_domain(a) || !ctx.in_domain(b)) return false;
        return (a >= 2 && is_std_pal(ctx, {a, b})) || ctx.runs_inside(a, b) <= 3 * k;
    };
    if (parts.size() + 1 > k) {
        // Fewest pieces over the construction's own boundaries.
        const std::size_t n = parts.size();
        constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
        std::vector<std::size_t> best(n + 1, inf), from(n + 1, 0);
        best[0] = 0;
        for (std::size_t e = 1; e <= n; ++e)
            for (std::size_t s = 0; s < e; ++s)
                if (best[s] != inf && best[s] + 1 < best[e] && valid(parts[s].span.i, parts[e - 1].span.j)) {
                    best[e] = best[s] + 1;
                    from[e] = s;
                }
        if (best[n] != inf) {
            std::vector<Part> fused;
            for (std::size_t e = n; e > 0; e = from[e]) fused.push_back({{parts[from[e]].span.i, parts[e - 1].span.j}, false});
            std::reverse(fused.begin(), fused.end());
            parts = std::move(fused);
        }
    }

    StdPalFactorization out;
    out.k = k;
    for (const auto& pt : parts) {
        out.cut_points.push_back(pt.span.i);
        const bool is_std = pt.span.i >= 2 && ctx.in_domain(pt.span.i) && ctx.in_domain(pt.span.j) &&
                            is_std_pal(ctx, pt.span);
        out.pieces.push_back({pt.span, is_std ? StdPalFactorization::Kind::std_pal : StdPalFactorization::Kind::bounded_runs,
                              ctx.runs_inside(pt.span.i, pt.span.j)});
    }
    out.cut_points.push_back(seg.j + 1);

    auto cert = certify_std_pal_factorization(ctx.word(), ctx.scan(), seg, k, out.cut_points);
    if (!cert.ok) throw std::runtime_error("standard palindromic factorization failed: " + cert.diagnostic);
    return out;
}

/// A source word together with its reduction under one policy.
struct Reduction {
    Word source;
    Factorization f;
    ReductionPolicy policy;
    Word reduced;
    PositionMaps maps;

    Reduction(Word src, const Word& u, GammaConfig cfg, ReductionPolicy pol)
        : source(std::move(src)), f(factorize(source, u, cfg)), policy(std::move(pol)), reduced(reduce(f, policy)),
          maps(position_maps(f, policy)) {}
};

/// The reduced image of a standard palindrome is a palindrome.
[[nodiscard]] inline bool image_is_palindrome(const Reduction& red, const Interval& sp) {
    const Pos a = red.maps.rpo(sp.i), b = red.maps.rpo(sp.j);
    if (b < a) return false;
    return is_palindrome(red.reduced.letters().subspan(a - 1, b - a + 1));
}

[[nodiscard]] inline bool image_is_palindrome(const Word& prefix, const Word& u, GammaConfig cfg,
                                              const ReductionPolicy& policy, const Interval& sp) {
    return image_is_palindrome(Reduction(prefix, u, cfg, policy), sp);
}

struct ReducedPlBound {
    std::size_t k = 0;
    std::size_t pl_reduced = 0;
    std::size_t bound = 0;            // 3k^3 - 3k^2
    std::size_t piecewise_bound = 0;  // (g + 1) maxPL(seg), g = runs inside seg
    Interval image;
    bool ok = false;
};

[[nodiscard]] inline ReducedPlBound reduced_pl_bound_check(const Reduction& red, const RunScan& scan,
                                                           const Interval& seg) {
    ReducedPlBound out;
    const Word piece = red.source.factor(seg.i, seg.j);
    const std::size_t mpl = max_pl(piece);
    out.k = 1 + mpl;
    out.bound = 3 * out.k * out.k * out.k - 3 * out.k * out.k;
    out.piecewise_bound = (count_runs_inside(scan, seg.i, seg.j) + 1) * mpl;
    out.image = Interval(red.maps.rpo(seg.i), red.maps.rpo(seg.j));
    out.pl_reduced = pl_online(red.reduced.letters().subspan(out.image.i - 1, out.image.length()));
    out.ok = out.pl_reduced <= out.bound;
    return out;
}

[[nodiscard]] inline ReducedPlBound reduced_pl_bound_check(const Word& prefix, const Word& u, GammaConfig cfg,
                                                           const ReductionPolicy& policy, const Interval& seg) {
    const Reduction red(prefix, u, cfg, policy);
    return reduced_pl_bound_check(red, find_runs(prefix, u, cfg), seg);
}

}  // namespace palred
