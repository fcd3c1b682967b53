#pragma once

// Seeded random words and fixtures for the property suites.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "palred/generators.hpp"
#include "palred/runs.hpp"
#include "palred/word.hpp"

namespace palred::fixtures {

using Rng = std::mt19937_64;

/// Independent stream for case `id` of a run seeded with `seed`.
inline Rng case_rng(std::uint64_t seed, std::uint64_t id) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(id >> 32)};
    return Rng(seq);
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random word over the letters of `alphabet` (display text, e.g. "abc").
inline Word random_word(Rng& rng, std::size_t len, std::string_view alphabet) {
    const Word sigma = Word::from_text(alphabet);
    std::vector<Letter> out(len);
    for (auto& a : out) a = sigma.letters()[uniform(rng, 0, sigma.size() - 1)];
    return Word(std::move(out));
}

inline Word random_primitive(Rng& rng, std::size_t max_len, std::string_view alphabet) {
    for (;;) {
        Word u = random_word(rng, uniform(rng, 1, max_len), alphabet);
        if (is_primitive(u)) return u;
    }
}

inline QExponent random_exponent(Rng& rng, std::size_t p, std::int64_t lo, std::int64_t hi) {
    const auto whole = static_cast<std::int64_t>(uniform(rng, static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)));
    const auto rest = static_cast<std::int64_t>(uniform(rng, 0, p - 1));
    return QExponent(whole * static_cast<std::int64_t>(p) + rest, static_cast<std::int64_t>(p));
}

struct Fixture {
    Word word;
    Word u;
    std::string label;
    std::optional<Interval> pal;  // planted palindrome, palindromic fixtures only
};

struct PumpedSource {
    WordSource source;
    Word u;
};

/**
 * B_1 u^{e_1} B_2 u^{e_2} ... with u over {a, b}, separator blocks over
 * {a, b, c, d} that contain c or d, and exponents up to max_exp.
 */
inline PumpedSource pumped_source(Rng& rng, std::int64_t max_exp = 12) {
    for (;;) {
        const Word u = random_primitive(rng, 3, "ab");
        std::vector<Word> blocks;
        const std::size_t nb = uniform(rng, 1, 4);
        for (std::size_t k = 0; k < nb; ++k) {
            Word b = random_word(rng, uniform(rng, 1, 6), "abcd");
            b += random_word(rng, 1, "cd");
            b += random_word(rng, uniform(rng, 0, 4), "abcd");
            if (k == 0) b = random_word(rng, 1, "cd") + b;
            blocks.push_back(std::move(b));
        }
        ExponentSpec ex;
        const auto p = u.size();
        switch (uniform(rng, 0, 3)) {
            case 0: ex = constant_exponent(random_exponent(rng, p, 3, max_exp)); break;
            case 1: {
                std::vector<QExponent> vals;
                for (std::size_t k = uniform(rng, 2, 5); k > 0; --k) vals.push_back(random_exponent(rng, p, 3, max_exp));
                ex = list_exponents(std::move(vals));
                break;
            }
            case 2:
                ex = parity_exponents(random_exponent(rng, p, 3, max_exp), random_exponent(rng, p, 3, max_exp));
                break;
            default:
                ex = morphic_exponents(thue_morse(), static_cast<std::int64_t>(uniform(rng, 3, static_cast<std::size_t>(max_exp - 1))));
                break;
        }
        try {
            return {pumped_word(blocks, u, std::move(ex)), u};
        } catch (const std::invalid_argument&) {
            continue;  // block merged with a power; draw again
        }
    }
}

inline Fixture pumped_fixture(Rng& rng, std::int64_t max_exp = 12, std::size_t min_len = 120, std::size_t max_len = 360) {
    auto [src, u] = pumped_source(rng, max_exp);
    return {src.prefix(uniform(rng, min_len, max_len)), u, "pumped", std::nullopt};
}

/**
 * x P y where P = H m H^R is a palindrome and H interleaves short blocks
 * with powers of u and u^R, so P holds mirrored runs around its centre.
 */
inline Fixture palindromic_fixture(Rng& rng, std::size_t max_exp = 6) {
    const Word u = random_primitive(rng, 2, "ab");
    const Word ur = reverse(u);
    const auto p = u.size();
    Word h = random_word(rng, uniform(rng, 0, 3), "abcd");
    const std::size_t powers = uniform(rng, 1, 3);
    for (std::size_t k = 0; k < powers; ++k) {
        h += random_word(rng, 1, "cd");
        const auto q = random_exponent(rng, p, 1, static_cast<std::int64_t>(max_exp));
        h += q_power(uniform(rng, 0, 1) ? u : ur, q);
        h += random_word(rng, 1, "cd");
        h += random_word(rng, uniform(rng, 0, 3), "abcd");
    }
    Word pal = h + random_word(rng, uniform(rng, 0, 1), "abcd") + reverse(h);
    Word x = random_word(rng, 1, "cd") + random_word(rng, uniform(rng, 0, 5), "abcd");
    Word y = random_word(rng, uniform(rng, p + 3, p + 12), "abcd");
    return {x + pal + y, u, "palindromic", Interval(x.size() + 1, x.size() + pal.size())};
}

/// Either kind, chosen by a fair coin.
inline Fixture mixed_fixture(Rng& rng) {
    return uniform(rng, 0, 1) ? pumped_fixture(rng, 12, 60, 200) : palindromic_fixture(rng);
}

}  // namespace palred::fixtures
