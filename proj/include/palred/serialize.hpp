#pragma once

// JSON encodings: generator spec files, factorizations, position maps and
// report fingerprints. Words are written as letter strings over kSymbols.
//
// Spec file:
//   {"kind": "morphic", "alphabet": "01",
//    "parameters": {"images": ["01", "10"], "seed": "0"}}
// Other kinds and their parameters:
//   sturmian             slope "a/b" or "golden", intercept "c/d"
//   slow_pl              inverse "ln" | "sqrt" | "identity" | "table", table [..]
//   ultimately_periodic  preperiod, period
//   literal              word
//   pumped               blocks [..], u, exponents {mode, values, driver, offset}
// Pumped exponent values are "num/den" strings or integers (u^e).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "palred/generators.hpp"
#include "palred/reducer.hpp"
#include "palred/std_pal.hpp"
#include "palred/word.hpp"

namespace palred::io {

using json = nlohmann::json;

/// FNV-1a over the compact dump; keys are sorted so equal objects agree.
[[nodiscard]] inline std::string fingerprint(const json& j) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : j.dump()) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

[[nodiscard]] inline QExponent parse_exponent(const json& j, std::size_t p) {
    const auto den = static_cast<std::int64_t>(p);
    if (j.is_number_integer()) return QExponent(j.get<std::int64_t>() * den, den);
    if (!j.is_string()) throw std::invalid_argument("exponent must be an integer or \"num/den\"");
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return QExponent(std::stoll(s) * den, den);
        return QExponent(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad exponent \"" + s + "\"");
    }
}

namespace detail {

inline std::pair<std::int64_t, std::int64_t> parse_ratio(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("expected \"num/den\", got \"" + s + "\"");
    return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
}

inline Word word_field(const json& params, const char* key) {
    if (!params.contains(key)) throw std::invalid_argument(std::string("missing parameter '") + key + "'");
    return Word::from_text(params.at(key).get<std::string>());
}

inline std::size_t alphabet_size(const std::string& alphabet) {
    if (alphabet.empty()) throw std::invalid_argument("alphabet must be nonempty");
    std::size_t sigma = 0;
    for (Letter a : Word::from_text(alphabet)) sigma = std::max<std::size_t>(sigma, a + 1u);
    return sigma;
}

}  // namespace detail

[[nodiscard]] inline WordSource source_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw std::invalid_argument("spec needs a 'kind'");
    const auto kind = j.at("kind").get<std::string>();
    const json params = j.value("parameters", json::object());
    const std::size_t sigma = detail::alphabet_size(j.value("alphabet", std::string("01")));
    if (kind == "morphic") {
        MorphicSpec s;
        for (const auto& img : params.at("images")) s.images.push_back(Word::from_text(img.get<std::string>()));
        s.seed = detail::word_field(params, "seed").at(1);
        return WordSource(std::move(s), sigma);
    }
    if (kind == "sturmian") {
        const auto slope = params.value("slope", std::string("golden"));
        if (slope == "golden") return fibonacci_word();
        SturmianSpec s;
        std::tie(s.slope_num, s.slope_den) = detail::parse_ratio(slope);
        std::tie(s.intercept_num, s.intercept_den) = detail::parse_ratio(params.value("intercept", std::string("0/1")));
        return WordSource(s, std::max<std::size_t>(sigma, 2));
    }
    if (kind == "slow_pl") {
        SlowPlSpec s;
        const auto inv = params.value("inverse", std::string("ln"));
        if (inv == "ln") s.inverse = SlowPlSpec::Inverse::ln;
        else if (inv == "sqrt") s.inverse = SlowPlSpec::Inverse::sqrt;
        else if (inv == "identity") s.inverse = SlowPlSpec::Inverse::identity;
        else if (inv == "table") {
            s.inverse = SlowPlSpec::Inverse::table;
            s.table = params.at("table").get<std::vector<std::uint64_t>>();
        } else throw std::invalid_argument("unknown slow_pl inverse '" + inv + "'");
        return slow_pl_word(std::move(s));
    }
    if (kind == "ultimately_periodic")
        return WordSource(UltimatelyPeriodicSpec{Word::from_text(params.value("preperiod", std::string())),
                                                 detail::word_field(params, "period")},
                          sigma);
    if (kind == "literal") {
        Word w = detail::word_field(params, "word");
        std::size_t s = sigma;
        for (Letter a : w) s = std::max<std::size_t>(s, a + 1u);
        return WordSource(LiteralSpec{std::move(w)}, s);
    }
    if (kind == "pumped") {
        std::vector<Word> blocks;
        for (const auto& b : params.at("blocks")) blocks.push_back(Word::from_text(b.get<std::string>()));
        Word u = detail::word_field(params, "u");
        const json ex = params.at("exponents");
        const auto mode = ex.value("mode", std::string("constant"));
        ExponentSpec spec;
        std::vector<QExponent> values;
        for (const auto& v : ex.value("values", json::array())) values.push_back(parse_exponent(v, u.size()));
        if (mode == "constant") {
            if (values.size() != 1) throw std::invalid_argument("constant exponent needs one value");
            spec = constant_exponent(values[0]);
        } else if (mode == "list") {
            spec = list_exponents(std::move(values));
        } else if (mode == "parity") {
            if (values.size() != 2) throw std::invalid_argument("parity exponent needs {odd, even}");
            spec = parity_exponents(values[0], values[1]);
        } else if (mode == "morphic") {
            spec = morphic_exponents(source_from_json(ex.at("driver")), ex.value("offset", std::int64_t{3}));
        } else {
            throw std::invalid_argument("unknown exponent mode '" + mode + "'");
        }
        return pumped_word(std::move(blocks), std::move(u), std::move(spec));
    }
    throw std::invalid_argument("unknown source kind '" + kind + "'");
}

[[nodiscard]] inline json to_json(const WordSource& src) {
    json j;
    j["kind"] = src.kind_name();
    j["alphabet"] = std::string(kSymbols.substr(0, src.alphabet_size()));
    json params = json::object();
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, MorphicSpec>) {
                json imgs = json::array();
                for (const auto& w : s.images) imgs.push_back(w.text());
                params["images"] = imgs;
                params["seed"] = Word{s.seed}.text();
            } else if constexpr (std::is_same_v<T, SturmianSpec>) {
                params["slope"] = std::to_string(s.slope_num) + "/" + std::to_string(s.slope_den);
                params["intercept"] = std::to_string(s.intercept_num) + "/" + std::to_string(s.intercept_den);
            } else if constexpr (std::is_same_v<T, SlowPlSpec>) {
                static constexpr const char* names[] = {"ln", "sqrt", "identity", "table"};
                params["inverse"] = names[static_cast<int>(s.inverse)];
                if (s.inverse == SlowPlSpec::Inverse::table) params["table"] = s.table;
            } else if constexpr (std::is_same_v<T, UltimatelyPeriodicSpec>) {
                params["preperiod"] = s.preperiod.text();
                params["period"] = s.period.text();
            } else if constexpr (std::is_same_v<T, LiteralSpec>) {
                params["word"] = s.word.text();
            } else if constexpr (std::is_same_v<T, PumpedSpec>) {
                json blocks = json::array();
                for (const auto& b : s.blocks) blocks.push_back(b.text());
                params["blocks"] = blocks;
                params["u"] = s.u.text();
                json ex;
                static constexpr const char* modes[] = {"constant", "list", "parity", "morphic"};
                ex["mode"] = modes[static_cast<int>(s.exponents.mode)];
                if (s.exponents.mode == ExponentSpec::Mode::morphic) {
                    ex["driver"] = to_json(*s.exponents.driver);
                    ex["offset"] = s.exponents.offset;
                } else {
                    json vals = json::array();
                    for (const auto& q : s.exponents.values) vals.push_back(q.str());
                    ex["values"] = vals;
                }
                params["exponents"] = ex;
            }
        },
        src.kind());
    j["parameters"] = params;
    return j;
}

[[nodiscard]] inline WordSource load_source(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read spec file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("spec file '" + path + "' is not valid JSON: " + e.what());
    }
    return source_from_json(j);
}

[[nodiscard]] inline json to_json(const Interval& iv) { return json::array({iv.i, iv.j}); }

[[nodiscard]] inline json to_json(const Factorization& f) {
    json pieces = json::array();
    for (const auto& pc : f.pieces)
        pieces.push_back({{"w", pc.w.text()},
                          {"z", pc.z.text()},
                          {"d_num", pc.d.num},
                          {"d_den", pc.d.den},
                          {"run", to_json(pc.run)}});
    return {{"pieces", pieces},
            {"trailing", f.trailing.text()},
            {"source_len", f.source_len},
            {"complete_upto", f.complete_upto},
            {"u", f.u.text()}};
}

[[nodiscard]] inline json to_json(const PositionMaps& m) {
    return {{"kappa", m.kappa}, {"kappa_bar", m.kappa_bar}, {"source_len", m.source_len}, {"reduced_len", m.reduced_len}};
}

[[nodiscard]] inline json to_json(const StdPalFactorization& sp) {
    json pieces = json::array();
    for (const auto& pc : sp.pieces)
        pieces.push_back({{"span", to_json(pc.span)},
                          {"kind", pc.kind == StdPalFactorization::Kind::std_pal ? "std_pal" : "bounded_runs"},
                          {"runs", pc.runs}});
    return {{"k", sp.k}, {"cut_points", sp.cut_points}, {"pieces", pieces}};
}

}  // namespace palred::io
