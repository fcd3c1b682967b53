#pragma once

// Slow reference implementations written straight from the definitions.
// Nothing here shares code with the production scanners.

#include <cstddef>
#include <optional>
#include <vector>

#include "palred/runs.hpp"
#include "palred/word.hpp"

namespace palred::ref {

/// Factor of u^inf or (u^R)^inf, tested against explicitly built periodic streams.
inline bool in_pow_factor(const Word& t, const Word& u) {
    if (t.empty()) return true;
    const std::size_t reps = t.size() / u.size() + 2;
    Word stream, rstream;
    const Word ur = reverse(u);
    for (std::size_t k = 0; k < reps; ++k) {
        stream += u;
        rstream += ur;
    }
    return contains_factor(stream.letters(), t.letters()) || contains_factor(rstream.letters(), t.letters());
}

/// (i, j) satisfies the five run clauses and j + |u| + 1 <= |w|.
inline bool is_run(const Word& w, const Word& u, int gamma, Pos i, Pos j) {
    const std::size_t p = u.size(), n = w.size();
    if (i < p + 2 || j < i || j + p + 1 > n) return false;
    if (j - i + 1 < static_cast<std::size_t>(gamma - 2) * p) return false;
    return ref::in_pow_factor(w.factor(i - p, j + p), u) && !ref::in_pow_factor(w.factor(i - p, j + p + 1), u) &&
           !ref::in_pow_factor(w.factor(i - p - 1, j + p), u);
}

/// All certifiable pairs (i, j) satisfying the five run clauses, i <= j.
inline std::vector<Interval> run_border(const Word& w, const Word& u, int gamma) {
    const std::size_t p = u.size(), n = w.size();
    std::vector<Interval> out;
    for (Pos i = p + 2; i <= n; ++i)
        for (Pos j = i; j + p + 1 <= n; ++j) {
            if (j - i + 1 < static_cast<std::size_t>(gamma - 2) * p) continue;
            // PowFactor(u) is factor-closed, so no longer j can qualify
            if (!ref::in_pow_factor(w.factor(i - p, j + p), u)) break;
            if (ref::in_pow_factor(w.factor(i - p, j + p + 1), u)) continue;
            if (ref::in_pow_factor(w.factor(i - p - 1, j + p), u)) continue;
            out.emplace_back(i, j);
        }
    return out;
}

/// Coverage mask from an explicit run list; index 0 unused.
inline std::vector<bool> domain_mask(std::size_t n, const std::vector<Interval>& runs) {
    std::vector<bool> m(n + 1, true);
    m[0] = false;
    for (const auto& r : runs)
        for (Pos p = r.i; p <= r.j; ++p) m[p] = false;
    return m;
}

/// Standard palindrome test from the four clauses; positions must be <= n.
inline bool is_std_pal(const Word& w, const std::vector<bool>& dom, std::size_t u_len, Pos i, Pos j) {
    if (i < 2 || i > j || j + 1 > w.size()) return false;
    if (!dom[i] || !dom[j]) return false;
    if (!palred::is_palindrome(w.factor(i - 1, j + 1))) return false;
    for (Pos m = i - 1; m <= std::min(i + u_len - 1, j); ++m)
        if (!dom[m]) return false;
    for (Pos m = j + 1 >= i + u_len ? j + 1 - u_len : i; m <= j + 1; ++m)
        if (!dom[m]) return false;
    for (Pos m = i; m <= j; ++m)
        if (dom[m] != dom[i + j - m]) return false;
    return true;
}

/// Primitive root by trying every divisor of |w|.
inline std::pair<Word, std::size_t> primitive_root(const Word& w) {
    for (std::size_t d = 1; d <= w.size(); ++d) {
        if (w.size() % d != 0) continue;
        bool ok = true;
        for (std::size_t k = d; k < w.size() && ok; ++k) ok = w.letters()[k] == w.letters()[k - d];
        if (ok) return {w.prefix(d), w.size() / d};
    }
    return {w, 1};
}

/// PL by exhaustive search over all factorizations (tiny words only).
inline std::size_t pl_exhaustive(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0) return 0;
    std::size_t best = n;
    // Each bit of `cuts` marks a cut after that letter.
    for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
        std::size_t pieces = 0, start = 1;
        bool ok = true;
        for (std::size_t e = 1; e <= n && ok; ++e) {
            if (e == n || (cuts >> (e - 1) & 1)) {
                ok = palred::is_palindrome(w.factor(start, e));
                ++pieces;
                start = e + 1;
            }
        }
        if (ok) best = std::min(best, pieces);
    }
    return best;
}

}  // namespace palred::ref
