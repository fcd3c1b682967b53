#pragma once

/**
 * @file generators.hpp
 * @brief Deterministic, indexable sources of infinite words.
 *
 * A WordSource is an immutable description; prefix(n) materializes the
 * first n letters and get(n) reads one letter (1-based). Kinds:
 *   - morphic: fixed point of a prolongable morphism on a seed letter
 *   - sturmian: lower mechanical word with rational slope and intercept
 *   - slow_pl: 0^{b_1} 1 0^{b_2} 1 ... with b_k = ceil(f^{-1}(2k))
 *   - ultimately_periodic: x1 x2 x2 x2 ...
 *   - literal: a finite word (the only source with a last position)
 *   - pumped: B_1 u^{e_1} B_2 u^{e_2} ..., blocks and exponents cycled
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "palred/word.hpp"

namespace palred {

class WordSource;

struct MorphicSpec {
    std::vector<Word> images;  // images[a] = image of letter a
    Letter seed = 0;
};

struct SturmianSpec {
    // slope a/b in (0, 1), intercept c/d in [0, 1)
    std::int64_t slope_num = 1, slope_den = 2;
    std::int64_t intercept_num = 0, intercept_den = 1;
};

/// Block lengths b_k = ceil(f^{-1}(2k)) for the slow-growth word.
struct SlowPlSpec {
    enum class Inverse { ln, sqrt, identity, table };
    Inverse inverse = Inverse::ln;
    std::vector<std::uint64_t> table;  // used when inverse == table
};

struct UltimatelyPeriodicSpec {
    Word preperiod;
    Word period;
};

struct LiteralSpec {
    Word word;
};

/// How the k-th pumped exponent is chosen. Exponents are u-relative powers
/// (den = |u|); an integer e means u^e.
struct ExponentSpec {
    enum class Mode { constant, list, parity, morphic };
    Mode mode = Mode::constant;
    std::vector<QExponent> values;  // constant: {e}; list: cycled; parity: {odd k, even k}
    std::shared_ptr<const WordSource> driver;  // morphic: e_k = offset + driver.get(k)
    std::int64_t offset = 3;
};

struct PumpedSpec {
    std::vector<Word> blocks;  // cycled
    Word u;
    ExponentSpec exponents;
};

class WordSource {
public:
    using Kind = std::variant<MorphicSpec, SturmianSpec, SlowPlSpec, UltimatelyPeriodicSpec, LiteralSpec, PumpedSpec>;

    WordSource(Kind kind, std::size_t alphabet_size) : kind_(std::move(kind)), alphabet_size_(alphabet_size) {
        validate();
    }

    [[nodiscard]] const Kind& kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t alphabet_size() const noexcept { return alphabet_size_; }
    [[nodiscard]] std::string kind_name() const {
        static constexpr const char* names[] = {"morphic", "sturmian", "slow_pl", "ultimately_periodic", "literal",
                                                "pumped"};
        return names[kind_.index()];
    }

    /// First n letters; prefix(n) is a prefix of prefix(n + 1).
    [[nodiscard]] Word prefix(std::size_t n) const {
        return std::visit([&](const auto& spec) { return materialize(spec, n); }, kind_);
    }

    /// Letter at position n >= 1.
    [[nodiscard]] Letter get(Pos n) const {
        if (n == 0) throw std::out_of_range("positions start at 1");
        if (const auto* s = std::get_if<SturmianSpec>(&kind_)) return sturmian_letter(*s, n);
        if (const auto* s = std::get_if<UltimatelyPeriodicSpec>(&kind_)) {
            if (n <= s->preperiod.size()) return s->preperiod.at(n);
            return s->period.at((n - s->preperiod.size() - 1) % s->period.size() + 1);
        }
        if (const auto* s = std::get_if<LiteralSpec>(&kind_)) {
            if (n > s->word.size()) throw std::out_of_range("literal source exhausted");
            return s->word.at(n);
        }
        if (const auto* s = std::get_if<SlowPlSpec>(&kind_)) return slow_pl_letter(*s, n);
        return prefix(n).at(n);
    }

    /// k-th exponent (1-based) of a pumped source.
    [[nodiscard]] QExponent pumped_exponent(std::size_t k) const {
        const auto* s = std::get_if<PumpedSpec>(&kind_);
        if (!s) throw std::logic_error("not a pumped source");
        return exponent_at(*s, k);
    }

    /// Block lengths of a slow_pl source; stops before overflow of 63 bits.
    [[nodiscard]] static std::vector<std::uint64_t> slow_pl_blocks(const SlowPlSpec& s, std::size_t count) {
        std::vector<std::uint64_t> out;
        for (std::size_t k = 1; k <= count; ++k) {
            auto b = slow_pl_block(s, k);
            if (!b) break;
            out.push_back(*b);
        }
        return out;
    }

private:
    static constexpr std::uint64_t kMaxBlock = std::uint64_t{1} << 62;

    void validate() const {
        if (alphabet_size_ == 0 || alphabet_size_ > kSymbols.size())
            throw std::invalid_argument("alphabet size must be in 1..62");
        std::visit([&](const auto& spec) { check(spec); }, kind_);
    }

    void check_letters(const Word& w) const {
        for (Letter a : w)
            if (a >= alphabet_size_) throw std::invalid_argument("letter outside declared alphabet");
    }

    void check(const MorphicSpec& s) const {
        if (s.images.size() != alphabet_size_) throw std::invalid_argument("morphism needs one image per letter");
        for (const auto& img : s.images) {
            if (img.empty()) throw std::invalid_argument("morphism image must be nonempty");
            check_letters(img);
        }
        if (s.seed >= alphabet_size_) throw std::invalid_argument("seed outside alphabet");
        const Word& img = s.images[s.seed];
        if (img.size() < 2 || img.at(1) != s.seed) throw std::invalid_argument("morphism is not prolongable on the seed");
    }
    void check(const SturmianSpec& s) const {
        if (s.slope_den <= 0 || s.slope_num <= 0 || s.slope_num >= s.slope_den)
            throw std::invalid_argument("sturmian slope must lie in (0, 1)");
        if (s.intercept_den <= 0 || s.intercept_num < 0 || s.intercept_num >= s.intercept_den)
            throw std::invalid_argument("sturmian intercept must lie in [0, 1)");
        if (alphabet_size_ < 2) throw std::invalid_argument("sturmian words are binary");
    }
    void check(const SlowPlSpec& s) const {
        if (alphabet_size_ < 2) throw std::invalid_argument("slow_pl words are binary");
        if (s.inverse == SlowPlSpec::Inverse::table) {
            if (s.table.empty()) throw std::invalid_argument("empty inverse table");
            for (std::size_t k = 0; k < s.table.size(); ++k) {
                if (s.table[k] == 0) throw std::invalid_argument("inverse table entries must be positive");
                if (k > 0 && s.table[k] <= s.table[k - 1])
                    throw std::invalid_argument("inverse table must be strictly increasing");
            }
        }
    }
    void check(const UltimatelyPeriodicSpec& s) const {
        if (s.period.empty()) throw std::invalid_argument("period must be nonempty");
        check_letters(s.preperiod);
        check_letters(s.period);
    }
    void check(const LiteralSpec& s) const { check_letters(s.word); }
    void check(const PumpedSpec& s) const {
        if (s.blocks.empty()) throw std::invalid_argument("pumped word needs at least one block");
        if (s.u.empty() || !is_primitive(s.u)) throw std::invalid_argument("pumped base must be primitive");
        check_letters(s.u);
        for (const auto& b : s.blocks) {
            if (b.empty()) throw std::invalid_argument("pumped blocks must be nonempty");
            check_letters(b);
        }
        const auto& e = s.exponents;
        const auto p = static_cast<std::int64_t>(s.u.size());
        auto check_value = [&](const QExponent& q) {
            if (q.den != p) throw std::invalid_argument("pumped exponent denominator must equal |u|");
            if (q.whole() < 3) throw std::invalid_argument("pumped exponents must be >= 3");
        };
        switch (e.mode) {
            case ExponentSpec::Mode::constant:
                if (e.values.size() != 1) throw std::invalid_argument("constant exponent needs one value");
                break;
            case ExponentSpec::Mode::list:
                if (e.values.empty()) throw std::invalid_argument("exponent list is empty");
                break;
            case ExponentSpec::Mode::parity:
                if (e.values.size() != 2) throw std::invalid_argument("parity exponent needs {odd, even}");
                break;
            case ExponentSpec::Mode::morphic:
                if (!e.driver) throw std::invalid_argument("morphic exponent needs a driver source");
                if (e.offset < 3) throw std::invalid_argument("pumped exponents must be >= 3");
                break;
        }
        for (const auto& q : e.values) check_value(q);
        check_separation(s);
    }

    /// Every block, placed between pumped powers with every possible
    /// fractional tail, must leave those powers as exact maximal stretches
    /// and create no other stretch of length >= 3|u|.
    static void check_separation(const PumpedSpec& s) {
        const std::size_t p = s.u.size();
        std::set<std::int64_t> tails;
        if (s.exponents.mode == ExponentSpec::Mode::morphic) tails.insert(0);
        for (const auto& q : s.exponents.values) tails.insert(q.remainder());
        const Word u3 = q_power(s.u, QExponent(static_cast<std::int64_t>(3 * p), static_cast<std::int64_t>(p)));
        for (std::size_t k = 0; k < s.blocks.size(); ++k) {
            const Word& b = s.blocks[k];
            if (k == 0 && !separates(b + u3, 0, b.size(), s.u))
                throw std::invalid_argument("block merges with pumped power");
            for (auto tail : tails) {
                Word left = q_power(s.u, QExponent(static_cast<std::int64_t>(3 * p) + tail, static_cast<std::int64_t>(p)));
                if (!separates(left + b + u3, left.size(), b.size(), s.u))
                    throw std::invalid_argument("block merges with pumped power");
            }
        }
    }

    static bool separates(const Word& t, std::size_t left_len, std::size_t block_len, const Word& u) {
        const std::size_t right_first = left_len + block_len + 1;
        bool saw_right = false;
        for (const auto& st : pow_factor_stretches(t.letters(), u.letters(), 3 * u.size())) {
            if (left_len > 0 && st.first == 1 && st.last == left_len) continue;
            if (st.first == right_first && st.last == t.size()) {
                saw_right = true;
                continue;
            }
            return false;
        }
        return saw_right;
    }

    static QExponent exponent_at(const PumpedSpec& s, std::size_t k) {
        const auto& e = s.exponents;
        switch (e.mode) {
            case ExponentSpec::Mode::constant: return e.values[0];
            case ExponentSpec::Mode::list: return e.values[(k - 1) % e.values.size()];
            case ExponentSpec::Mode::parity: return e.values[k % 2 == 1 ? 0 : 1];
            case ExponentSpec::Mode::morphic: {
                const auto p = static_cast<std::int64_t>(s.u.size());
                return QExponent((e.offset + e.driver->get(k)) * p, p);
            }
        }
        return e.values.at(0);
    }

    Word materialize(const MorphicSpec& s, std::size_t n) const {
        Word cur{s.seed};
        while (cur.size() < n) {
            Word next;
            for (Letter a : cur) {
                next += s.images[a];
                if (next.size() >= n) break;
            }
            cur = std::move(next);
        }
        return cur.prefix(n);
    }
    Word materialize(const SturmianSpec& s, std::size_t n) const {
        std::vector<Letter> out(n);
        for (std::size_t k = 1; k <= n; ++k) out[k - 1] = sturmian_letter(s, k);
        return Word(std::move(out));
    }
    Word materialize(const SlowPlSpec& s, std::size_t n) const {
        std::vector<Letter> out;
        out.reserve(n);
        for (std::size_t k = 1; out.size() < n; ++k) {
            auto b = slow_pl_block(s, k);
            if (!b) throw std::out_of_range("slow_pl block table exhausted");
            for (std::uint64_t r = 0; r < *b && out.size() < n; ++r) out.push_back(0);
            if (out.size() < n) out.push_back(1);
        }
        return Word(std::move(out));
    }
    Word materialize(const UltimatelyPeriodicSpec&, std::size_t n) const {
        std::vector<Letter> out(n);
        for (std::size_t k = 1; k <= n; ++k) out[k - 1] = get(k);
        return Word(std::move(out));
    }
    Word materialize(const LiteralSpec& s, std::size_t n) const {
        if (n > s.word.size()) throw std::out_of_range("literal source exhausted");
        return s.word.prefix(n);
    }
    Word materialize(const PumpedSpec& s, std::size_t n) const {
        Word out;
        for (std::size_t k = 1; out.size() < n; ++k) {
            out += s.blocks[(k - 1) % s.blocks.size()];
            out += q_power(s.u, exponent_at(s, k));
        }
        return out.prefix(n);
    }

    static Letter sturmian_letter(const SturmianSpec& s, Pos n) {
        // s_n = floor(n a + r) - floor((n - 1) a + r), exact in integers.
        using I = __int128;
        const I den = static_cast<I>(s.slope_den) * s.intercept_den;
        auto fl = [&](Pos m) {
            I v = static_cast<I>(m) * s.slope_num * s.intercept_den + static_cast<I>(s.intercept_num) * s.slope_den;
            return v / den;
        };
        return static_cast<Letter>(fl(n) - fl(n - 1));
    }

    static std::optional<std::uint64_t> slow_pl_block(const SlowPlSpec& s, std::size_t k) {
        using Inv = SlowPlSpec::Inverse;
        switch (s.inverse) {
            case Inv::identity: return 2 * static_cast<std::uint64_t>(k);
            case Inv::sqrt: return 4 * static_cast<std::uint64_t>(k) * k;
            case Inv::table:
                if (k > s.table.size()) return std::nullopt;
                return s.table[k - 1];
            case Inv::ln: {
                // ceil(e^{2k}) with 100 significant decimal digits; e^{2k} is
                // transcendental, so the ceiling is never at an integer boundary.
                using Big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>>;
                Big v = boost::multiprecision::exp(Big(2 * static_cast<long>(k)));
                if (v >= Big(static_cast<double>(kMaxBlock))) return std::nullopt;
                return static_cast<std::uint64_t>(boost::multiprecision::ceil(v));
            }
        }
        return std::nullopt;
    }

    static Letter slow_pl_letter(const SlowPlSpec& s, Pos n) {
        std::uint64_t start = 1;  // first position of block k
        for (std::size_t k = 1;; ++k) {
            auto b = slow_pl_block(s, k);
            if (!b) throw std::out_of_range("slow_pl block table exhausted");
            if (n < start + *b) return 0;
            if (n == start + *b) return 1;
            start += *b + 1;
        }
    }

    Kind kind_;
    std::size_t alphabet_size_;
};

// Factories for the common sources.

[[nodiscard]] inline WordSource thue_morse() {
    return WordSource(MorphicSpec{{Word{0, 1}, Word{1, 0}}, 0}, 2);
}

[[nodiscard]] inline WordSource fibonacci_word() {
    return WordSource(MorphicSpec{{Word{0, 1}, Word{0}}, 0}, 2);
}

[[nodiscard]] inline WordSource constant_word(Letter a = 0) {
    return WordSource(UltimatelyPeriodicSpec{Word{}, Word{a}}, static_cast<std::size_t>(a) + 1);
}

[[nodiscard]] inline WordSource slow_pl_word(SlowPlSpec spec) { return WordSource(std::move(spec), 2); }

/// Pumped fixture B_1 u^{e_1} B_2 u^{e_2} ...; rejects blocks that would
/// merge with a neighbouring power.
[[nodiscard]] inline WordSource pumped_word(std::vector<Word> blocks, Word u, ExponentSpec exponents) {
    std::size_t sigma = 1;
    for (const auto& b : blocks)
        for (Letter a : b) sigma = std::max<std::size_t>(sigma, a + 1u);
    for (Letter a : u) sigma = std::max<std::size_t>(sigma, a + 1u);
    return WordSource(PumpedSpec{std::move(blocks), std::move(u), std::move(exponents)}, sigma);
}

[[nodiscard]] inline ExponentSpec constant_exponent(QExponent e) {
    return {ExponentSpec::Mode::constant, {e}, nullptr, 0};
}
[[nodiscard]] inline ExponentSpec list_exponents(std::vector<QExponent> values) {
    return {ExponentSpec::Mode::list, std::move(values), nullptr, 0};
}
[[nodiscard]] inline ExponentSpec parity_exponents(QExponent odd, QExponent even) {
    return {ExponentSpec::Mode::parity, {odd, even}, nullptr, 0};
}
[[nodiscard]] inline ExponentSpec morphic_exponents(WordSource driver, std::int64_t offset) {
    return {ExponentSpec::Mode::morphic, {}, std::make_shared<const WordSource>(std::move(driver)), offset};
}

/// Integer power exponent e for base length p.
[[nodiscard]] inline QExponent power(std::int64_t e, std::size_t p) {
    return QExponent(e * static_cast<std::int64_t>(p), static_cast<std::int64_t>(p));
}

}  // namespace palred
