#pragma once

// Exhaustive walk over all binary words up to length 28 for u in {a, ab}
// (letter exchange covers b and ba; PowFactor(ab) = PowFactor(ba)).
//
// The walk is a depth-first traversal of the prefix tree. Every node keeps
// bitmask state (letters, palindromic suffix starts, run coverage), so the
// work per node is a handful of word operations. An interval is examined at
// the unique node where its right neighbour first becomes certified, which
// visits each (prefix, interval) pair exactly once.
//
// Checked per certified interval:
//   - standard palindrome (i, j) containing a run: its image under the
//     canonical and parity reductions is a palindrome;
//   - palindrome with >= 2 runs: no centered standard palindrome implies
//     <= 2 runs; otherwise each flank outside its maxCSP holds <= 1 run.
// Palindromes with fewer runs satisfy both caps trivially.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "palred/reducer.hpp"
#include "palred/std_pal.hpp"
#include "palred/word.hpp"

namespace palred::exhaustive {

struct Stats {
    std::uint64_t nodes = 0;
    std::uint64_t pruned = 0;             // subtrees cut by the forbidden-prefix clause
    std::uint64_t std_pals_with_runs = 0;
    std::uint64_t images_checked = 0;
    std::uint64_t multi_run_palindromes = 0;
    std::uint64_t hat_cases = 0;          // no centered standard palindrome
    std::uint64_t flanks_checked = 0;
    std::uint64_t image_violations = 0;
    std::uint64_t hat_violations = 0;
    std::uint64_t flank_violations = 0;
    std::optional<std::string> counterexample;

    Stats& operator+=(const Stats& o) {
        nodes += o.nodes;
        pruned += o.pruned;
        std_pals_with_runs += o.std_pals_with_runs;
        images_checked += o.images_checked;
        multi_run_palindromes += o.multi_run_palindromes;
        hat_cases += o.hat_cases;
        flanks_checked += o.flanks_checked;
        image_violations += o.image_violations;
        hat_violations += o.hat_violations;
        flank_violations += o.flank_violations;
        if (!counterexample) counterexample = o.counterexample;
        return *this;
    }
};

class Engine {
public:
    static constexpr int kMaxLen = 28;

    /// p = 1 for u = a, p = 2 for u = ab.
    Engine(int p, int max_len) : p_(p), max_len_(max_len) {
        if (p != 1 && p != 2) throw std::invalid_argument("engine supports |u| in {1, 2}");
        if (max_len < 1 || max_len > kMaxLen) throw std::invalid_argument("engine supports lengths 1..28");
        reset();
    }

    /// Every word of length <= max_len.
    Stats run() {
        reset();
        dfs(0);
        return stats_;
    }

    /// Only the path spelling w (letters a/b); used to cross-check the library.
    Stats run_word(const Word& w) {
        if (w.size() > static_cast<std::size_t>(max_len_)) throw std::invalid_argument("word longer than engine bound");
        reset();
        const Letter a = Word::from_text("a").at(1);
        for (std::size_t n = 1; n <= w.size(); ++n)
            if (!push(static_cast<int>(n), w.at(n) == a ? 0 : 1)) break;
        return stats_;
    }

    /// run() split into 2^split subtrees spread over `workers` threads.
    Stats run_parallel(unsigned workers, int split = 10) {
        split = std::min(split, max_len_);
        Stats total = Engine(p_, split).run();
        const std::uint32_t subtrees = std::uint32_t{1} << split;
        std::vector<Stats> parts(subtrees);
        std::atomic<std::uint32_t> next{0};
        auto work = [&] {
            Engine e(p_, max_len_);
            for (std::uint32_t t; (t = next.fetch_add(1)) < subtrees;) parts[t] = e.run_subtree(t, split);
        };
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < std::max(1u, workers); ++k) pool.emplace_back(work);
        for (auto& th : pool) th.join();
        for (const auto& s : parts) total += s;
        return total;
    }

    [[nodiscard]] int certified(int depth) const { return c_[static_cast<std::size_t>(depth)]; }

private:
    using Mask = std::uint32_t;

    static Mask bit(int k) { return k >= 0 && k < 32 ? Mask{1} << k : 0; }
    static Mask range(int a, int b) {  // bits a..b inclusive
        if (a > b) return 0;
        const Mask hi = b >= 31 ? ~Mask{0} : (Mask{1} << (b + 1)) - 1;
        return hi & ~((Mask{1} << a) - 1);
    }
    static Mask rev32(Mask x) {
        x = ((x >> 1) & 0x55555555u) | ((x & 0x55555555u) << 1);
        x = ((x >> 2) & 0x33333333u) | ((x & 0x33333333u) << 2);
        x = ((x >> 4) & 0x0F0F0F0Fu) | ((x & 0x0F0F0F0Fu) << 4);
        x = ((x >> 8) & 0x00FF00FFu) | ((x & 0x00FF00FFu) << 8);
        return (x >> 16) | (x << 16);
    }
    // Bit m moves to s - m.
    static Mask mirror(Mask x, int s) {
        const std::uint64_t r = rev32(x);
        return static_cast<Mask>(s >= 31 ? r << (s - 31) : r >> (31 - s));
    }

    struct Span {
        int i, j;
    };

    void reset() {
        stats_ = {};
        letters_ = 0;
        depth_ = 0;
        ps_.fill(0);
        st_.fill(1);
        c_.fill(0);
        cov_.fill(0);
        rs_.fill(0);
        nr_.fill(0);
    }

    [[nodiscard]] int letter(int k) const { return static_cast<int>((letters_ >> k) & 1u); }
    [[nodiscard]] bool pf_start(int s) const { return p_ == 1 ? letter(s) == 0 : letter(s) != letter(s + 1); }

    // Nodes below the prefix spelled by the low `split` bits of `path`; the
    // prefix nodes themselves belong to the shallow pass.
    Stats run_subtree(std::uint32_t path, int split) {
        reset();
        replay_ = true;
        bool alive = true;
        for (int n = 1; n <= split && alive; ++n) alive = push(n, static_cast<int>((path >> (n - 1)) & 1u));
        replay_ = false;
        stats_ = {};
        if (alive) dfs(split);
        return stats_;
    }

    void dfs(int n) {
        if (n == max_len_) return;
        for (int a = 0; a < 2; ++a)
            if (push(n + 1, a)) dfs(n + 1);
    }

    // Extends the prefix of length n - 1 by `a`; false when the subtree is cut.
    bool push(int n, int a) {
        const auto un = static_cast<std::size_t>(n);
        ++stats_.nodes;
        depth_ = n;
        letters_ = a ? (letters_ | bit(n)) : (letters_ & ~bit(n));
        const Mask same = (a ? letters_ : ~letters_) & range(1, n);
        ps_[un] = ((ps_[un - 1] >> 1) | bit(n - 1) | bit(n)) & same;

        cov_[un] = cov_[un - 1];
        rs_[un] = rs_[un - 1];
        nr_[un] = nr_[un - 1];
        if (n > p_ && letter(n) == letter(n - p_)) {
            st_[un] = st_[un - 1];
        } else {
            if (n > p_) close(st_[un - 1], n - 1, un);
            st_[un] = std::max(1, n - p_ + 1);
        }
        int c = n - p_ - 1;
        const int s = st_[un];
        if (n - s + 1 >= p_ + 1 && s >= 2 && pf_start(s)) c = std::min(c, s + p_ - 1);
        c = std::max(c, 0);
        c_[un] = std::max(c, c_[un - 1]);

        if (n == 3 * p_ && st_[un] == 1 && pf_start(1)) {
            ++stats_.pruned;
            return false;
        }
        if (!replay_)
            for (int J = c_[un - 1] + 1; J <= c_[un]; ++J) certify(J, un);
        return true;
    }

    void close(int s, int e, std::size_t un) {
        const int len = e - s + 1;
        if (s < 2 || len < std::max(3 * p_, 2 * p_ + 1) || !pf_start(s)) return;
        const int i = s + p_, j = e - p_;
        cov_[un] |= range(i, j);
        rs_[un] |= bit(i);
        runs_[static_cast<std::size_t>(nr_[un]++)] = {i, j};
    }

    [[nodiscard]] int runs_inside(int a, int b, std::size_t un) const {
        int count = 0;
        for (int k = 0; k < nr_[un]; ++k) {
            const Span& r = runs_[static_cast<std::size_t>(k)];
            count += (a <= r.i && r.j <= b) ? 1 : 0;
        }
        return count;
    }

    [[nodiscard]] bool std_pal(int i, int j, std::size_t un) const {
        if (i < 2 || i > j) return false;
        if (!((ps_[static_cast<std::size_t>(j + 1)] >> (i - 1)) & 1u)) return false;
        const Mask cov = cov_[un];
        if (cov & (bit(i) | bit(j))) return false;
        if (cov & range(i - 1, std::min(i + p_ - 1, j))) return false;
        if (cov & range(std::max(j - p_ + 1, i), j + 1)) return false;
        const Mask seg = cov & range(i, j);
        return mirror(seg, i + j) == seg;
    }

    // Letters of the reduced image of [i, j]; runs inside keep phi(d)|u| letters.
    [[nodiscard]] bool image_palindrome(int i, int j, std::size_t un, bool parity) const {
        std::array<int, 64> buf{};
        std::size_t len = 0;
        int pos = i;
        for (int k = 0; k < nr_[un]; ++k) {
            const Span& r = runs_[static_cast<std::size_t>(k)];
            if (r.i < i || r.j > j) continue;
            while (pos < r.i) buf[len++] = letter(pos++);
            const int total = r.j - r.i + 1;  // d = total / p
            int keep = total - (total - p_) / p_ * p_;  // least admissible, gamma = 3
            if (parity && (total / p_) % 2 == 1 && keep + p_ < 3 * p_ && keep + p_ <= total) keep += p_;
            for (int t = 0; t < keep; ++t) buf[len++] = letter(r.i + t);
            pos = r.j + 1;
        }
        while (pos <= j) buf[len++] = letter(pos++);
        for (std::size_t a = 0, b = len - 1; a < b; ++a, --b)
            if (buf[a] != buf[b]) return false;
        return true;
    }

    void certify(int J, std::size_t un) {
        if (nr_[un] == 0) return;
        // Standard palindromes (i, J - 1) whose hull [i - 1, J] is a palindrome.
        const int j = J - 1;
        for (Mask hull = ps_[static_cast<std::size_t>(J)]; hull; hull &= hull - 1) {
            const int i = std::countr_zero(hull) + 1;
            if (i > j) break;
            if (!(rs_[un] & range(i, j)) || !std_pal(i, j, un)) continue;
            if (runs_inside(i, j, un) == 0) continue;
            ++stats_.std_pals_with_runs;
            for (bool parity : {false, true}) {
                ++stats_.images_checked;
                if (!image_palindrome(i, j, un, parity)) {
                    ++stats_.image_violations;
                    note("image of standard palindrome (" + std::to_string(i) + "," + std::to_string(j) + ") under " +
                         (parity ? "parity_split" : "canonical_min") + " is not a palindrome");
                }
            }
        }
        // Palindromes (a, J - 1).
        const int b = J - 1;
        if (b < 1) return;
        for (Mask pals = ps_[static_cast<std::size_t>(b)]; pals; pals &= pals - 1) {
            const int a = std::countr_zero(pals);
            const int runs = runs_inside(a, b, un);
            if (runs < 2) continue;
            ++stats_.multi_run_palindromes;
            std::optional<Span> csp;
            for (int m1 = std::max(a, 2); m1 <= a + b - m1; ++m1)
                if (std_pal(m1, a + b - m1, un)) {
                    csp = Span{m1, a + b - m1};
                    break;
                }
            if (!csp) {
                ++stats_.hat_cases;
                if (runs > 2) {
                    ++stats_.hat_violations;
                    note("palindrome (" + std::to_string(a) + "," + std::to_string(b) + ") without centered standard palindrome has " +
                         std::to_string(runs) + " runs");
                }
                continue;
            }
            for (const Span fl : {Span{a, csp->i - 1}, Span{csp->j + 1, b}}) {
                if (fl.i > fl.j) continue;
                ++stats_.flanks_checked;
                const int fr = runs_inside(fl.i, fl.j, un);
                if (fr > 1) {
                    ++stats_.flank_violations;
                    note("flank (" + std::to_string(fl.i) + "," + std::to_string(fl.j) + ") of palindrome (" +
                         std::to_string(a) + "," + std::to_string(b) + ") has " + std::to_string(fr) + " runs");
                }
            }
        }
    }

    void note(const std::string& what) {
        if (stats_.counterexample) return;
        std::string w;
        for (int k = 1; k <= depth_; ++k) w.push_back(letter(k) ? 'b' : 'a');
        stats_.counterexample = "w=" + w + " u=" + (p_ == 1 ? "a" : "ab") + ": " + what;
    }

    int p_;
    int max_len_;
    int depth_ = 0;
    bool replay_ = false;
    Mask letters_ = 0;
    std::array<Mask, kMaxLen + 2> ps_{};
    std::array<int, kMaxLen + 2> st_{};
    std::array<int, kMaxLen + 2> c_{};
    std::array<Mask, kMaxLen + 2> cov_{};
    std::array<Mask, kMaxLen + 2> rs_{};
    std::array<int, kMaxLen + 2> nr_{};
    std::array<Span, kMaxLen> runs_{};
    Stats stats_;
};

/// Same counters computed with the library on one word, interval by
/// interval. Words whose first 3|u| letters lie in PowFactor(u) are skipped
/// by the engine and must not be passed here.
inline Stats library_stats(const Word& w, const Word& u) {
    Stats out;
    const GammaConfig cfg{3};
    const StdPalContext ctx(w, u, cfg);
    const Reduction canon(w, u, cfg, ReductionPolicy::canonical(3, 3));
    const Reduction parity(w, u, cfg, ReductionPolicy::parity(3, 3));
    const Pos c = ctx.limit();
    for (Pos j = 1; j + 1 <= c; ++j)
        for (Pos i = 2; i <= j; ++i) {
            if (!is_std_pal(ctx, {i, j}) || ctx.runs_inside(i, j) == 0) continue;
            ++out.std_pals_with_runs;
            for (const Reduction* red : {&canon, &parity}) {
                ++out.images_checked;
                if (!image_is_palindrome(*red, {i, j})) ++out.image_violations;
            }
        }
    for (Pos b = 1; b + 1 <= c; ++b)
        for (Pos a = 1; a <= b; ++a) {
            if (!ctx.is_palindrome(a, b)) continue;
            const std::size_t runs = ctx.runs_inside(a, b);
            if (runs < 2) continue;
            ++out.multi_run_palindromes;
            const auto csp = max_csp(ctx, {a, b});
            if (!csp) {
                ++out.hat_cases;
                if (runs > 2) ++out.hat_violations;
                continue;
            }
            for (const auto& [x, y] : {std::pair{a, csp->i - 1}, std::pair{csp->j + 1, b}}) {
                if (x > y) continue;
                ++out.flanks_checked;
                if (ctx.runs_inside(x, y) > 1) ++out.flank_violations;
            }
        }
    return out;
}

}  // namespace palred::exhaustive
