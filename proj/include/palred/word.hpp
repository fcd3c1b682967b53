#pragma once

/**
 * @file word.hpp
 * @brief Finite words over small integer alphabets and the exact
 *        period / power arithmetic every other module builds on.
 *
 * Positions in the public API are 1-based and intervals are inclusive,
 * so w.factor(i, j) is the factor a_i a_{i+1} ... a_j. The 0-based
 * storage is only reachable through letters().
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace palred {

using Letter = std::uint8_t;
using Pos = std::size_t;

/// Display symbols; letter code k prints as kSymbols[k].
inline constexpr std::string_view kSymbols =
    "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

class Word {
public:
    using value_type = Letter;
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    Word(const_iterator first, const_iterator last) : letters_(first, last) {}

    /// Parses a letter string through kSymbols ("ab" -> codes 10, 11).
    static Word from_text(std::string_view text) {
        std::vector<Letter> out;
        out.reserve(text.size());
        for (char c : text) {
            auto k = kSymbols.find(c);
            if (k == std::string_view::npos)
                throw std::invalid_argument(std::string("unknown letter '") + c + "'");
            out.push_back(static_cast<Letter>(k));
        }
        return Word(std::move(out));
    }

    [[nodiscard]] std::string text() const {
        std::string s;
        s.reserve(letters_.size());
        for (Letter a : letters_) s.push_back(a < kSymbols.size() ? kSymbols[a] : '?');
        return s;
    }

    [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
    [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
    [[nodiscard]] std::span<const Letter> letters() const noexcept { return letters_; }
    [[nodiscard]] const_iterator begin() const noexcept { return letters_.begin(); }
    [[nodiscard]] const_iterator end() const noexcept { return letters_.end(); }

    /// w[p], 1-based.
    [[nodiscard]] Letter at(Pos p) const {
        if (p == 0 || p > letters_.size()) throw std::out_of_range("position outside word");
        return letters_[p - 1];
    }

    /// w[i, j], 1-based inclusive. j = i - 1 yields the empty word.
    [[nodiscard]] Word factor(Pos i, Pos j) const {
        if (i == 0 || j + 1 < i || j > letters_.size())
            throw std::out_of_range("factor bounds outside word");
        return Word(letters_.begin() + static_cast<std::ptrdiff_t>(i - 1),
                    letters_.begin() + static_cast<std::ptrdiff_t>(j));
    }

    [[nodiscard]] Word prefix(std::size_t n) const { return factor(1, n); }

    Word& operator+=(const Word& other) {
        letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
        return *this;
    }
    void push_back(Letter a) { letters_.push_back(a); }

    friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// Rational exponent num/den >= 1; den is the length of the base word.
struct QExponent {
    std::int64_t num = 1;
    std::int64_t den = 1;

    constexpr QExponent() = default;
    constexpr QExponent(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (d <= 0 || n < d) throw std::invalid_argument("exponent must satisfy num >= den > 0");
    }

    [[nodiscard]] constexpr std::int64_t whole() const noexcept { return num / den; }
    [[nodiscard]] constexpr std::int64_t remainder() const noexcept { return num % den; }
    [[nodiscard]] double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    [[nodiscard]] std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    // Compared by value, so 2/1 == 4/2.
    friend constexpr bool operator==(const QExponent& a, const QExponent& b) noexcept {
        return a.num * b.den == b.num * a.den;
    }
    friend constexpr std::strong_ordering operator<=>(const QExponent& a, const QExponent& b) noexcept {
        return a.num * b.den <=> b.num * a.den;
    }
};

/// Inclusive 1-based interval [i, j].
struct Interval {
    Pos i = 1;
    Pos j = 1;

    constexpr Interval() = default;
    constexpr Interval(Pos first, Pos last) : i(first), j(last) {
        if (first == 0 || first > last) throw std::invalid_argument("interval requires 1 <= i <= j");
    }
    [[nodiscard]] constexpr std::size_t length() const noexcept { return j - i + 1; }
    [[nodiscard]] constexpr bool contains(Pos p) const noexcept { return i <= p && p <= j; }
    [[nodiscard]] constexpr bool contains(const Interval& o) const noexcept { return i <= o.i && o.j <= j; }

    friend constexpr bool operator==(const Interval&, const Interval&) = default;
    friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

[[nodiscard]] inline Word reverse(const Word& w) {
    std::vector<Letter> out(w.begin(), w.end());
    std::reverse(out.begin(), out.end());
    return Word(std::move(out));
}

/// Palindromes are nonempty, so the empty word is not one.
[[nodiscard]] inline bool is_palindrome(std::span<const Letter> w) noexcept {
    if (w.empty()) return false;
    return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2), w.rbegin());
}
[[nodiscard]] inline bool is_palindrome(const Word& w) noexcept { return is_palindrome(w.letters()); }

/// KMP border array: border[k] is the longest proper border of w[0, k).
[[nodiscard]] inline std::vector<std::size_t> border_array(std::span<const Letter> w) {
    std::vector<std::size_t> border(w.size() + 1, 0);
    std::size_t b = 0;
    for (std::size_t k = 1; k < w.size(); ++k) {
        while (b > 0 && w[k] != w[b]) b = border[b];
        if (w[k] == w[b]) ++b;
        border[k + 1] = b;
    }
    return border;
}

/// Smallest period of a nonempty word.
[[nodiscard]] inline std::size_t smallest_period(std::span<const Letter> w) {
    if (w.empty()) throw std::invalid_argument("empty word has no period");
    return w.size() - border_array(w).back();
}

struct PrimitiveRoot {
    Word root;
    std::size_t exponent = 1;
};

[[nodiscard]] inline PrimitiveRoot primitive_root(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word has no root");
    const std::size_t per = smallest_period(w.letters());
    if (w.size() % per != 0) return {w, 1};
    return {w.prefix(per), w.size() / per};
}

[[nodiscard]] inline bool is_primitive(const Word& w) { return primitive_root(w).exponent == 1; }

/// u^q: floor(q) copies of u followed by the proper prefix of length num mod |u|.
[[nodiscard]] inline Word q_power(const Word& u, const QExponent& q) {
    if (u.empty()) throw std::invalid_argument("q-power of the empty word");
    if (static_cast<std::size_t>(q.den) != u.size()) throw std::invalid_argument("exponent denominator mismatch");
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(q.num));
    auto base = u.letters();
    for (std::int64_t k = 0; k < q.num; ++k) out.push_back(base[static_cast<std::size_t>(k) % base.size()]);
    return Word(std::move(out));
}

/// Inverse of q_power: the q with u^q = v, if v is such a power with q >= 1.
[[nodiscard]] inline std::optional<QExponent> exponent_of(const Word& v, const Word& u) {
    if (u.empty()) throw std::invalid_argument("exponent against the empty word");
    if (v.size() < u.size()) return std::nullopt;
    auto a = v.letters();
    auto b = u.letters();
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k % b.size()]) return std::nullopt;
    return QExponent(static_cast<std::int64_t>(v.size()), static_cast<std::int64_t>(u.size()));
}

/// t is a factor of u^inf or of (u^R)^inf. Scans every rotation of both streams.
[[nodiscard]] inline bool in_pow_factor(std::span<const Letter> t, std::span<const Letter> u) {
    if (u.empty()) throw std::invalid_argument("PowFactor of the empty word");
    if (t.empty()) return true;
    const std::size_t p = u.size();
    for (int mirrored = 0; mirrored < 2; ++mirrored) {
        for (std::size_t r = 0; r < p; ++r) {
            bool ok = true;
            for (std::size_t k = 0; k < t.size() && ok; ++k) {
                std::size_t idx = (r + k) % p;
                ok = t[k] == (mirrored ? u[p - 1 - idx] : u[idx]);
            }
            if (ok) return true;
        }
    }
    return false;
}
[[nodiscard]] inline bool in_pow_factor(const Word& t, const Word& u) { return in_pow_factor(t.letters(), u.letters()); }

/// The position symmetric to j inside [i1, i2].
[[nodiscard]] inline Pos mirror(Pos i1, Pos j, Pos i2) {
    if (i1 > j || j > i2) throw std::invalid_argument("mirror requires i1 <= j <= i2");
    return i1 + i2 - j;
}

/// Mirror image of [j1, j2] inside [i1, i2]; the endpoints swap roles.
[[nodiscard]] inline Interval mirror_interval(Pos i1, Pos j1, Pos j2, Pos i2) {
    if (!(i1 <= j1 && j1 <= j2 && j2 <= i2)) throw std::invalid_argument("mirror requires i1 <= j1 <= j2 <= i2");
    return {mirror(i1, j2, i2), mirror(i1, j1, i2)};
}

/// Index of the lexicographically least rotation (two-pointer minimum expression).
[[nodiscard]] inline std::size_t least_rotation(std::span<const Letter> s) {
    const std::size_t n = s.size();
    if (n == 0) return 0;
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        Letter a = s[(i + k) % n], b = s[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b) i += k + 1;
        else j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

/// Rotation of s starting at the least-rotation index.
[[nodiscard]] inline std::vector<Letter> canonical_rotation(std::span<const Letter> s) {
    std::vector<Letter> out(s.size());
    const std::size_t r = least_rotation(s);
    for (std::size_t k = 0; k < s.size(); ++k) out[k] = s[(r + k) % s.size()];
    return out;
}

/// Maximal factor [first, last] (1-based) of w lying in PowFactor(u).
struct Stretch {
    Pos first = 1;
    Pos last = 0;
    [[nodiscard]] std::size_t length() const noexcept { return last + 1 - first; }
    friend bool operator==(const Stretch&, const Stretch&) = default;
};

/**
 * All maximal PowFactor(u)-stretches of w with length >= max(min_len, |u|+1),
 * left to right. For length > |u| a factor is in PowFactor(u) iff it has
 * period |u| and its first |u| letters are a rotation of u or of u^R, so
 * a single pass over the period-|u| match array suffices.
 */
[[nodiscard]] inline std::vector<Stretch> pow_factor_stretches(std::span<const Letter> w, std::span<const Letter> u,
                                                               std::size_t min_len = 0) {
    if (u.empty()) throw std::invalid_argument("PowFactor of the empty word");
    const std::size_t p = u.size(), n = w.size();
    min_len = std::max(min_len, p + 1);
    const auto key = canonical_rotation(u);
    std::vector<Letter> ur(u.rbegin(), u.rend());
    const auto key_r = canonical_rotation(ur);
    std::vector<Stretch> out;
    std::size_t k = 0;
    while (k + p < n) {
        if (w[k] != w[k + p]) {
            ++k;
            continue;
        }
        std::size_t e = k;
        while (e + p < n && w[e] == w[e + p]) ++e;
        // 0-based stretch [k, e + p - 1]
        const std::size_t len = e + p - k;
        if (len >= min_len) {
            auto c = canonical_rotation(w.subspan(k, p));
            if (c == key || c == key_r) out.push_back({k + 1, e + p});
        }
        k = e + 1;
    }
    return out;
}

/// Naive occurrence test of needle in hay.
[[nodiscard]] inline bool contains_factor(std::span<const Letter> hay, std::span<const Letter> needle) {
    if (needle.empty()) return true;
    return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

}  // namespace palred
