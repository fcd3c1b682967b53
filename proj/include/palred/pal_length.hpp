#pragma once

/**
 * @file pal_length.hpp
 * @brief Palindromic length: a quadratic dynamic-programming oracle, an
 *        online eertree engine with series links, maxPL over all factors,
 *        and PPL ratio series over generated words.
 *
 * PL(v) is the least number of nonempty palindromes whose concatenation
 * is v; PL of the empty word is 0.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <ranges>
#include <span>
#include <stdexcept>
#include <vector>

#include "palred/generators.hpp"
#include "palred/word.hpp"

namespace palred {

/// PL of every prefix by DP over palindromic suffixes. values[0] = 0.
/// O(n^2) time, O(n) space; this is the ground truth the online engine must match.
template <std::ranges::random_access_range R>
[[nodiscard]] std::vector<std::size_t> pl_oracle_profile(const R& word) {
    const std::size_t n = std::ranges::size(word);
    auto w = std::ranges::begin(word);
    std::vector<std::size_t> pl(n + 1, 0);
    // pal_prev[m] == w[m, e-1] is a palindrome (0-based, inclusive), for the previous end e-1.
    std::vector<char> pal_prev(n + 1, 0), pal_cur(n + 1, 0);
    for (std::size_t e = 0; e < n; ++e) {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t m = 0; m <= e; ++m) {
            bool pal = w[m] == w[e] && (m + 1 >= e || pal_prev[m + 1]);
            pal_cur[m] = pal;
            if (pal) best = std::min(best, pl[m] + 1);
        }
        pl[e + 1] = best;
        std::swap(pal_prev, pal_cur);
    }
    return pl;
}

template <std::ranges::random_access_range R>
[[nodiscard]] std::size_t pl_oracle(const R& word) {
    return pl_oracle_profile(word).back();
}

/**
 * Palindromic tree (eertree) with series links, fed one letter at a time.
 *
 * After each push, palindromic_length() is PL of the prefix read so far.
 * Palindromic suffixes are grouped into O(log n) arithmetic series by
 * their difference; each series keeps the minimum of the DP over its
 * starting positions, giving O(n log n) total.
 */
template <typename T>
class Eertree {
public:
    Eertree() {
        // Node 0: imaginary root of length -1. Node 1: empty palindrome.
        nodes_.push_back({-1, 0, 0, 0, -1});
        nodes_.push_back({0, 0, 0, 0, -1});
        series_.assign(2, 0);
        pl_.push_back(0);
    }

    void reserve(std::size_t n) {
        text_.reserve(n);
        nodes_.reserve(n + 2);
        edges_.reserve(n);
        series_.reserve(n + 2);
        pl_.reserve(n + 1);
    }

    void push(T letter) {
        text_.push_back(letter);
        const std::int64_t i = static_cast<std::int64_t>(text_.size()) - 1;

        int cur = last_;
        while (!extends(cur, i)) cur = nodes_[static_cast<std::size_t>(cur)].link;
        int node = child(cur, letter);
        if (node < 0) {
            Node fresh{nodes_[static_cast<std::size_t>(cur)].len + 2, 1, 0, 0, -1};
            if (fresh.len > 1) {
                int x = nodes_[static_cast<std::size_t>(cur)].link;
                while (!extends(x, i)) x = nodes_[static_cast<std::size_t>(x)].link;
                fresh.link = child(x, letter);
            }
            const Node& lk = nodes_[static_cast<std::size_t>(fresh.link)];
            fresh.diff = fresh.len - lk.len;
            fresh.series_link = fresh.diff == lk.diff ? lk.series_link : fresh.link;
            node = static_cast<int>(nodes_.size());
            nodes_.push_back(fresh);
            series_.push_back(0);
            edges_.push_back({letter, node, nodes_[static_cast<std::size_t>(cur)].first_edge});
            nodes_[static_cast<std::size_t>(cur)].first_edge = static_cast<int>(edges_.size()) - 1;
        }
        last_ = node;

        const std::size_t n = text_.size();
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (int v = last_; nodes_[static_cast<std::size_t>(v)].len > 0;
             v = nodes_[static_cast<std::size_t>(v)].series_link) {
            const Node& nv = nodes_[static_cast<std::size_t>(v)];
            const Node& ns = nodes_[static_cast<std::size_t>(nv.series_link)];
            auto sv = static_cast<std::size_t>(v);
            series_[sv] = pl_[n - static_cast<std::size_t>(ns.len + nv.diff)];
            if (nv.diff == nodes_[static_cast<std::size_t>(nv.link)].diff)
                series_[sv] = std::min(series_[sv], series_[static_cast<std::size_t>(nv.link)]);
            best = std::min(best, series_[sv] + 1);
        }
        pl_.push_back(best);
    }

    [[nodiscard]] std::size_t palindromic_length() const noexcept { return pl_.back(); }
    [[nodiscard]] const std::vector<std::size_t>& profile() const noexcept { return pl_; }
    /// Distinct nonempty palindromic factors seen so far.
    [[nodiscard]] std::size_t distinct_palindromes() const noexcept { return nodes_.size() - 2; }
    /// Length of the longest palindromic suffix of the current text.
    [[nodiscard]] std::size_t longest_suffix_palindrome() const noexcept {
        return static_cast<std::size_t>(std::max(0, nodes_[static_cast<std::size_t>(last_)].len));
    }

private:
    struct Node {
        int len;
        int link;
        int diff;
        int series_link;
        int first_edge;
    };
    struct Edge {
        T letter;
        int to;
        int next;
    };

    bool extends(int v, std::int64_t i) const {
        const std::int64_t j = i - 1 - nodes_[static_cast<std::size_t>(v)].len;
        return j >= 0 && text_[static_cast<std::size_t>(j)] == text_[static_cast<std::size_t>(i)];
    }
    int child(int v, T letter) const {
        for (int e = nodes_[static_cast<std::size_t>(v)].first_edge; e >= 0; e = edges_[static_cast<std::size_t>(e)].next)
            if (edges_[static_cast<std::size_t>(e)].letter == letter) return edges_[static_cast<std::size_t>(e)].to;
        return -1;
    }

    std::vector<T> text_;
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> series_;
    std::vector<std::size_t> pl_;
    int last_ = 1;
};

/// PL of every prefix (values[0] = 0) with the online engine.
template <std::ranges::random_access_range R>
[[nodiscard]] std::vector<std::size_t> pl_profile_online(const R& word) {
    using T = std::ranges::range_value_t<R>;
    Eertree<T> tree;
    tree.reserve(std::ranges::size(word));
    for (const auto& a : word) tree.push(a);
    return tree.profile();
}

template <std::ranges::random_access_range R>
[[nodiscard]] std::size_t pl_online(const R& word) {
    return pl_profile_online(word).back();
}

enum class MaxPlMode { online_per_suffix, oracle_per_suffix };

/// maxPL(w) = max PL(t) over all factors t; 0 for the empty word.
template <std::ranges::random_access_range R>
[[nodiscard]] std::size_t max_pl(const R& word, MaxPlMode mode = MaxPlMode::online_per_suffix) {
    const std::size_t n = std::ranges::size(word);
    if (mode == MaxPlMode::oracle_per_suffix && n > 64)
        throw std::invalid_argument("oracle maxPL mode is limited to words of length <= 64");
    std::size_t best = 0;
    auto first = std::ranges::begin(word);
    for (std::size_t s = 0; s < n; ++s) {
        // A suffix of length L has maxPL <= L; skip when it cannot improve.
        if (n - s <= best) break;
        auto suffix = std::ranges::subrange(first + static_cast<std::ptrdiff_t>(s), std::ranges::end(word));
        auto prof = mode == MaxPlMode::online_per_suffix ? pl_profile_online(suffix) : pl_oracle_profile(suffix);
        best = std::max(best, *std::max_element(prof.begin(), prof.end()));
    }
    return best;
}

[[nodiscard]] inline std::size_t max_pl(const Word& w, MaxPlMode mode = MaxPlMode::online_per_suffix) {
    return max_pl(w.letters(), mode);
}

/// Constant-time palindrome queries on a fixed word (Manacher radii).
class PalindromeTable {
public:
    PalindromeTable() = default;
    explicit PalindromeTable(std::span<const Letter> w) : odd_(w.size()), even_(w.size()) {
        const auto n = static_cast<std::ptrdiff_t>(w.size());
        auto s = [&](std::ptrdiff_t k) { return w[static_cast<std::size_t>(k)]; };
        for (std::ptrdiff_t i = 0, l = 0, r = -1; i < n; ++i) {
            std::ptrdiff_t k = i > r ? 1 : std::min(odd_[static_cast<std::size_t>(l + r - i)], r - i + 1);
            while (i - k >= 0 && i + k < n && s(i - k) == s(i + k)) ++k;
            odd_[static_cast<std::size_t>(i)] = k--;
            if (i + k > r) {
                l = i - k;
                r = i + k;
            }
        }
        for (std::ptrdiff_t i = 0, l = 0, r = -1; i < n; ++i) {
            std::ptrdiff_t k = i > r ? 0 : std::min(even_[static_cast<std::size_t>(l + r - i + 1)], r - i + 1);
            while (i - k - 1 >= 0 && i + k < n && s(i - k - 1) == s(i + k)) ++k;
            even_[static_cast<std::size_t>(i)] = k--;
            if (i + k > r) {
                l = i - k - 1;
                r = i + k;
            }
        }
    }

    /// w[i, j] is a palindrome (1-based inclusive).
    [[nodiscard]] bool is_palindrome(Pos i, Pos j) const {
        if (i == 0 || i > j || j > odd_.size()) return false;
        const auto a = static_cast<std::ptrdiff_t>(i - 1), b = static_cast<std::ptrdiff_t>(j - 1);
        const std::ptrdiff_t len = b - a + 1;
        if (len % 2 == 1) return odd_[static_cast<std::size_t>((a + b) / 2)] >= (len + 1) / 2;
        return even_[static_cast<std::size_t>((a + b + 1) / 2)] >= len / 2;
    }

    [[nodiscard]] std::size_t size() const noexcept { return odd_.size(); }

private:
    std::vector<std::ptrdiff_t> odd_;
    std::vector<std::ptrdiff_t> even_;
};

enum class Normalizer { ln, sqrt, table };

struct RatioRow {
    std::size_t n = 0;
    std::size_t ppl = 0;
    std::optional<double> ratio;
};

/// PPL_w(n) / normalizer(n) for n = 1..n_max over a generated word.
/// A table normalizer supplies normalizer(n) = table[n - 1].
[[nodiscard]] inline std::vector<RatioRow> ppl_ratio_series(const WordSource& src, std::size_t n_max, Normalizer norm,
                                                            std::span<const double> table = {}) {
    if (n_max < 2) throw std::invalid_argument("ratio series needs n_max >= 2");
    if (norm == Normalizer::table && table.size() < n_max)
        throw std::invalid_argument("normalizer table shorter than n_max");
    const Word w = src.prefix(n_max);
    const auto prof = pl_profile_online(w.letters());
    std::vector<RatioRow> rows;
    rows.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        double d = 0;
        switch (norm) {
            case Normalizer::ln: d = std::log(static_cast<double>(n)); break;
            case Normalizer::sqrt: d = std::sqrt(static_cast<double>(n)); break;
            case Normalizer::table: d = table[n - 1]; break;
        }
        RatioRow row{n, prof[n], std::nullopt};
        if (d != 0.0) row.ratio = static_cast<double>(prof[n]) / d;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace palred
