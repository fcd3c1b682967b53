// palred: palindromic length, run reduction and property checks.
//
//   palred pl --word abaab
//   palred pl --spec samples/thue-morse.json --profile -n 64 --format csv
//   palred reduce --spec samples/pumped-ab.json --u ab
//   palred verify T24 --cases 200 --report-max-ratio
//   palred bench --sizes 1000,10000,100000
//   palred gen --spec samples/fibonacci.json -n 40
//
// Exit codes: 0 pass, 1 property failure, 2 usage or input error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "palred/palred.hpp"
#include "palred/verify/suites.hpp"

namespace {

using json = nlohmann::json;
using namespace palred;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::size_t env_horizon() {
    if (const char* v = std::getenv("PALRED_HORIZON")) {
        const long long n = std::strtoll(v, nullptr, 10);
        if (n > 0) return static_cast<std::size_t>(n);
    }
    return 10000;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Input {
    std::string word;  // literal letters, "-" for stdin
    std::string spec;  // path to a generator spec
    std::size_t n = 0;
};

Word load_word(const Input& in, json& fp_input) {
    if (!in.word.empty() && !in.spec.empty()) throw std::invalid_argument("give --word or --spec, not both");
    if (!in.spec.empty()) {
        const WordSource src = io::load_source(in.spec);
        const std::size_t n = in.n ? in.n : env_horizon();
        fp_input = {{"spec", io::to_json(src)}, {"n", n}};
        return src.prefix(n);
    }
    std::string text = in.word;
    if (text.empty() || text == "-") {
        std::getline(std::cin, text);
        if (!std::cin && text.empty()) throw std::invalid_argument("no word on stdin");
    }
    Word w = Word::from_text(text);
    if (in.n && in.n < w.size()) w = w.prefix(in.n);
    fp_input = {{"word", w.text()}};
    return w;
}

// ---- pl -------------------------------------------------------------------

struct PlArgs {
    Input in;
    bool profile = false;
    bool oracle = false;
    bool maxpl = false;
    std::string ratio;
    std::string format = "table";
};

int cmd_pl(const PlArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    json fp_input;
    const Word w = load_word(a.in, fp_input);
    auto letters = w.letters();
    auto profile = [&] { return a.oracle ? pl_oracle_profile(letters) : pl_profile_online(letters); };

    json result;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header;
    if (!a.ratio.empty()) {
        if (a.ratio != "ln" && a.ratio != "sqrt") throw std::invalid_argument("--ratio takes ln or sqrt");
        const auto prof = profile();
        header = {"n", "ppl", "ratio"};
        for (std::size_t n = 1; n < prof.size(); ++n) {
            const double d = a.ratio == "ln" ? std::log(static_cast<double>(n)) : std::sqrt(static_cast<double>(n));
            rows.push_back({std::to_string(n), std::to_string(prof[n]), d > 0 ? std::to_string(prof[n] / d) : ""});
        }
    } else if (a.profile) {
        const auto prof = profile();
        header = {"n", "pl"};
        for (std::size_t n = 1; n < prof.size(); ++n) rows.push_back({std::to_string(n), std::to_string(prof[n])});
    } else if (a.maxpl) {
        const auto v = max_pl(letters, a.oracle ? MaxPlMode::oracle_per_suffix : MaxPlMode::online_per_suffix);
        header = {"maxpl"};
        rows.push_back({std::to_string(v)});
    } else {
        const auto v = a.oracle ? pl_oracle(letters) : pl_online(letters);
        header = {"pl"};
        rows.push_back({std::to_string(v)});
    }

    if (a.format == "json") {
        json out_rows = json::array();
        for (const auto& r : rows) {
            json row;
            for (std::size_t c = 0; c < header.size(); ++c) row[header[c]] = r[c];
            out_rows.push_back(row);
        }
        json out{{"command", "pl"},
                 {"fingerprint", io::fingerprint({{"input", fp_input}, {"oracle", a.oracle}, {"mode", header}})},
                 {"input", fp_input},
                 {"rows", out_rows},
                 {"timings", {{"total_s", seconds_since(t0)}}}};
        std::cout << out.dump(2) << "\n";
    } else if (a.format == "csv") {
        for (std::size_t c = 0; c < header.size(); ++c) std::cout << (c ? "," : "") << header[c];
        std::cout << "\n";
        for (const auto& r : rows) {
            for (std::size_t c = 0; c < r.size(); ++c) std::cout << (c ? "," : "") << r[c];
            std::cout << "\n";
        }
    } else if (rows.size() == 1 && header.size() == 1) {
        std::cout << rows[0][0] << "\n";
    } else {
        for (const auto& r : rows) {
            for (std::size_t c = 0; c < r.size(); ++c) std::cout << (c ? "\t" : "") << r[c];
            std::cout << "\n";
        }
    }
    return kPass;
}

// ---- reduce ---------------------------------------------------------------

struct ReduceArgs {
    std::string spec;
    std::string u;
    std::size_t horizon = 0;
    std::string policy = "auto";
    std::size_t psi_cap = 64;
    std::uint64_t seed = 1;
    std::string format = "text";
};

json checks_json(const std::vector<CheckEntry>& checks) {
    json out = json::array();
    for (const auto& c : checks) {
        json e{{"id", c.id}, {"anchor", c.anchor}, {"status", c.status}, {"cases", c.cases}};
        if (c.counterexample) e["counterexample"] = *c.counterexample;
        out.push_back(e);
    }
    return out;
}

int cmd_reduce(const ReduceArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const WordSource src = io::load_source(a.spec);
    PipelineOptions opt;
    opt.horizon = a.horizon ? a.horizon : env_horizon();
    opt.psi_cap = a.psi_cap;
    opt.seed = a.seed;
    if (a.policy == "canonical") opt.force = ReductionPolicy::Strategy::canonical_min;
    else if (a.policy == "parity") opt.force = ReductionPolicy::Strategy::parity_split;
    else if (a.policy != "auto") throw std::invalid_argument("--policy takes auto, canonical or parity");

    const PipelineReport rep = run_pipeline(src, Word::from_text(a.u), opt);
    const json fp_input{{"spec", rep.input}, {"u", a.u}, {"horizon", opt.horizon}, {"policy", a.policy}, {"seed", a.seed}};
    if (a.format == "json") {
        json out{{"command", "reduce"},
                 {"fingerprint", io::fingerprint(fp_input)},
                 {"input", fp_input},
                 {"policy", rep.policy},
                 {"stripped", rep.stripped},
                 {"certified", rep.certified},
                 {"reduced", rep.reduced.text()},
                 {"maxpl_source", rep.maxpl_source},
                 {"maxpl_reduced_observed", rep.maxpl_reduced_observed},
                 {"bound_3k3", rep.bound_3k3},
                 {"checks", checks_json(rep.checks)},
                 {"timings", {{"total_s", seconds_since(t0)}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << rep.reduced.text() << "\n";
        std::cerr << "policy " << rep.policy << ", stripped " << rep.stripped << ", certified " << rep.certified
                  << ", maxPL " << rep.maxpl_source << " -> " << rep.maxpl_reduced_observed << " (3k^3 = " << rep.bound_3k3
                  << ")\n";
        for (const auto& c : rep.checks) {
            std::cerr << c.id << "\t" << c.status << "\t" << c.cases;
            if (c.counterexample) std::cerr << "\t" << c.counterexample->dump();
            std::cerr << "\n";
        }
    }
    return rep.passed() ? kPass : kFail;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string id;
    std::uint64_t seed = 1;
    std::size_t cases = 0;
    std::optional<std::uint64_t> only_case;
    unsigned workers = 0;
    bool report_max_ratio = false;
    std::string format = "text";
};

std::string suite_ids() {
    std::string out;
    for (const auto& s : verify::suites()) out += (out.empty() ? "" : " ") + s.id;
    return out;
}

int cmd_verify(const VerifyArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<const verify::Suite*> chosen;
    if (a.id == "all") {
        for (const auto& s : verify::suites()) chosen.push_back(&s);
    } else if (const auto* s = verify::find_suite(a.id)) {
        chosen.push_back(s);
    } else {
        std::cerr << "unknown id '" << a.id << "'; available: " << suite_ids() << " all\n";
        return kUsage;
    }
    verify::SuiteOptions opt{a.seed, a.cases, a.workers, a.only_case};
    json checks = json::array();
    json timings = json::object();
    bool ok = true;
    for (const auto* s : chosen) {
        const auto r = verify::run_suite(*s, opt);
        ok = ok && r.passed();
        json c = verify::to_json(r);
        if (!a.report_max_ratio) c.erase("max_ratio");
        checks.push_back(c);
        timings[s->id] = r.seconds;
        if (a.format == "text") {
            std::cout << r.id << "\t" << r.status << "\t" << (r.cases - r.failures) << "/" << r.cases;
            if (a.report_max_ratio && r.max_ratio) std::cout << "\tmax_ratio=" << *r.max_ratio;
            std::cout << "\t" << r.anchor << "\n";
            if (r.counterexample) std::cout << "  counterexample: " << r.counterexample->dump() << "\n";
        }
    }
    timings["total_s"] = seconds_since(t0);
    if (a.format == "json") {
        const json fp_input{{"id", a.id}, {"seed", a.seed}, {"cases", a.cases}};
        json out{{"command", "verify"}, {"fingerprint", io::fingerprint(fp_input)}, {"input", fp_input}, {"checks", checks}, {"timings", timings}};
        std::cout << out.dump(2) << "\n";
    }
    return ok ? kPass : kFail;
}

// ---- bench ----------------------------------------------------------------

struct BenchArgs {
    std::vector<std::size_t> sizes{1000, 10000, 100000, 1000000};
    std::size_t oracle_cap = 20000;
    std::uint64_t seed = 1;
};

int cmd_bench(const BenchArgs& a) {
    std::cout << "size,engine,wall_s,memory_bytes,ratio\n";
    std::mt19937_64 rng(a.seed);
    for (std::size_t n : a.sizes) {
        std::vector<Letter> w(n);
        for (auto& x : w) x = static_cast<Letter>(10 + (rng() & 1u));  // a, b

        auto t0 = std::chrono::steady_clock::now();
        Eertree<Letter> tree;
        tree.reserve(n);
        for (Letter x : w) tree.push(x);
        const auto pl = tree.palindromic_length();
        const double online = seconds_since(t0);
        // letters + per-position PL/series arrays + tree nodes
        const std::size_t online_mem = n * (sizeof(Letter) + 4 * sizeof(std::size_t)) + tree.distinct_palindromes() * 64;
        (void)pl;

        std::optional<double> oracle;
        if (n <= a.oracle_cap) {
            t0 = std::chrono::steady_clock::now();
            (void)pl_oracle(w);
            oracle = seconds_since(t0);
        }
        std::cout << n << ",online," << online << "," << online_mem << "," << (oracle ? std::to_string(*oracle / online) : "") << "\n";
        if (oracle)
            std::cout << n << ",oracle," << *oracle << "," << n * (sizeof(Letter) + sizeof(std::size_t)) << ","
                      << (*oracle / online) << "\n";
    }
    return kPass;
}

// ---- gen ------------------------------------------------------------------

int cmd_gen(const std::string& spec, std::size_t n, bool normalize) {
    const WordSource src = io::load_source(spec);
    if (normalize) {
        std::cout << io::to_json(src).dump(2) << "\n";
        return kPass;
    }
    std::cout << src.prefix(n ? n : env_horizon()).text() << "\n";
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Palindromic length and run reduction toolkit"};
    app.require_subcommand(1);

    PlArgs pl;
    auto* c_pl = app.add_subcommand("pl", "Palindromic length, profile or maxPL");
    c_pl->add_option("--word", pl.in.word, "Letter string ('-' reads stdin)");
    c_pl->add_option("--spec", pl.in.spec, "Generator spec file (JSON)");
    c_pl->add_option("-n", pl.in.n, "Prefix length (spec default: PALRED_HORIZON or 10000)");
    c_pl->add_flag("--profile", pl.profile, "PL of every prefix");
    c_pl->add_flag("--maxpl", pl.maxpl, "Maximum PL over all factors");
    c_pl->add_option("--ratio", pl.ratio, "Profile divided by ln or sqrt");
    c_pl->add_flag("--oracle", pl.oracle, "Use the quadratic DP");
    c_pl->add_option("--format", pl.format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));

    ReduceArgs rd;
    auto* c_rd = app.add_subcommand("reduce", "Reduce a generated word and check the result");
    c_rd->add_option("--spec", rd.spec, "Generator spec file (JSON)")->required();
    c_rd->add_option("--u", rd.u, "Primitive base word")->required();
    c_rd->add_option("--horizon", rd.horizon, "Prefix length (default PALRED_HORIZON or 10000)");
    c_rd->add_option("--policy", rd.policy, "auto, canonical or parity");
    c_rd->add_option("--psi-cap", rd.psi_cap, "Longest factor in the avoiding-factor check");
    c_rd->add_option("--seed", rd.seed, "Seed for spot checks");
    c_rd->add_option("--format", rd.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    VerifyArgs vf;
    auto* c_vf = app.add_subcommand("verify", "Run a property suite (" + suite_ids() + " or all)");
    c_vf->add_option("id", vf.id, "Suite id")->required();
    c_vf->add_option("--seed", vf.seed, "Base seed");
    c_vf->add_option("--cases", vf.cases, "Number of cases (default per suite)");
    c_vf->add_option("--case", vf.only_case, "Replay a single case id");
    c_vf->add_option("--workers", vf.workers, "Worker threads (default PALRED_WORKERS or all cores)");
    c_vf->add_flag("--report-max-ratio", vf.report_max_ratio, "Report the largest observed ratio to the bound");
    c_vf->add_option("--format", vf.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    BenchArgs bn;
    auto* c_bn = app.add_subcommand("bench", "Time the online PL engine against the DP");
    c_bn->add_option("--sizes", bn.sizes, "Word lengths")->delimiter(',');
    c_bn->add_option("--oracle-cap", bn.oracle_cap, "Largest size the DP runs on");
    c_bn->add_option("--seed", bn.seed, "Seed for the random words");

    std::string gen_spec;
    std::size_t gen_n = 0;
    bool gen_normalize = false;
    auto* c_gen = app.add_subcommand("gen", "Print a prefix of a generated word");
    c_gen->add_option("--spec", gen_spec, "Generator spec file (JSON)")->required();
    c_gen->add_option("-n", gen_n, "Prefix length");
    c_gen->add_flag("--normalize", gen_normalize, "Print the spec in canonical form instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (*c_pl) return cmd_pl(pl);
        if (*c_rd) return cmd_reduce(rd);
        if (*c_vf) return cmd_verify(vf);
        if (*c_bn) return cmd_bench(bn);
        if (*c_gen) return cmd_gen(gen_spec, gen_n, gen_normalize);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
