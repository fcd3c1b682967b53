#include <gtest/gtest.h>

#include "palred/palred.hpp"

using namespace palred;

namespace {

io::json spec(const char* text) { return io::json::parse(text); }

const char* kPumped = R"({"kind": "pumped", "alphabet": "abcd",
  "parameters": {"blocks": ["cccc", "dc"], "u": "ab",
    "exponents": {"mode": "morphic", "offset": 3,
      "driver": {"kind": "morphic", "alphabet": "01", "parameters": {"images": ["01", "10"], "seed": "0"}}}}})";

}  // namespace

TEST(Serialize, RoundTrip) {
    for (const char* text :
         {kPumped, R"({"kind": "morphic", "alphabet": "01", "parameters": {"images": ["01", "10"], "seed": "0"}})",
          R"({"kind": "slow_pl", "parameters": {"inverse": "table", "table": [2, 5, 9]}})",
          R"({"kind": "ultimately_periodic", "alphabet": "abc", "parameters": {"preperiod": "ab", "period": "c"}})",
          R"({"kind": "sturmian", "parameters": {"slope": "2/5", "intercept": "1/3"}})",
          R"({"kind": "literal", "parameters": {"word": "abaab"}})"}) {
        const auto src = io::source_from_json(spec(text));
        const auto again = io::source_from_json(io::to_json(src));
        EXPECT_EQ(io::to_json(again), io::to_json(src)) << text;
        const std::size_t n = src.kind_name() == "literal" ? 5 : 12;
        EXPECT_EQ(again.prefix(n), src.prefix(n));
    }
}

TEST(Serialize, Golden) {
    EXPECT_EQ(io::source_from_json(spec(R"({"kind": "sturmian", "parameters": {"slope": "golden"}})")).prefix(8),
              fibonacci_word().prefix(8));
}

TEST(Serialize, Errors) {
    EXPECT_THROW((void)io::source_from_json(spec(R"({"alphabet": "01"})")), std::invalid_argument);
    EXPECT_THROW((void)io::source_from_json(spec(R"({"kind": "nope"})")), std::invalid_argument);
    EXPECT_THROW((void)io::source_from_json(spec(R"({"kind": "literal", "parameters": {}})")), std::invalid_argument);
    EXPECT_THROW((void)io::parse_exponent(io::json("x/2"), 2), std::invalid_argument);
    EXPECT_EQ(io::parse_exponent(io::json(4), 2), QExponent(8, 2));
    EXPECT_EQ(io::parse_exponent(io::json("7/2"), 2), QExponent(7, 2));
    EXPECT_THROW((void)io::load_source("/nonexistent/spec.json"), std::invalid_argument);
}

TEST(Serialize, FingerprintIsStable) {
    const auto a = spec(R"({"b": 1, "a": [1, 2]})");
    const auto b = spec(R"({"a": [1, 2], "b": 1})");
    EXPECT_EQ(io::fingerprint(a), io::fingerprint(b));
    EXPECT_EQ(io::fingerprint(a).size(), 16u);
    EXPECT_NE(io::fingerprint(a), io::fingerprint(spec(R"({"a": [2, 1], "b": 1})")));
}

TEST(Serialize, FactorizationJson) {
    const auto f = factorize(Word::from_text("ccccababababccc"), Word::from_text("ab"));
    const auto j = io::to_json(f);
    EXPECT_EQ(j["pieces"][0]["w"], "ccccab");
    EXPECT_EQ(j["pieces"][0]["run"], io::json::array({7, 10}));
    EXPECT_EQ(j["trailing"], "abccc");
}

TEST(Pipeline, PumpedSourceAllPass) {
    PipelineOptions opt;
    opt.horizon = 3000;
    const auto rep = run_pipeline(io::source_from_json(spec(kPumped)), Word::from_text("ab"), opt);
    for (const auto& c : rep.checks) EXPECT_NE(c.status, "fail") << c.id << ": " << (c.counterexample ? c.counterexample->dump() : "");
    EXPECT_TRUE(rep.passed());
    EXPECT_TRUE(power_bound_check(rep.reduced, Word::from_text("ab"), 3));
    EXPECT_EQ(rep.reduced.text().find("ababababab"), std::string::npos);
    EXPECT_LE(rep.maxpl_reduced_observed, rep.bound_3k3);
}

TEST(Pipeline, ForcedPolicy) {
    PipelineOptions opt;
    opt.horizon = 2000;
    opt.force = ReductionPolicy::Strategy::canonical_min;
    const auto rep = run_pipeline(io::source_from_json(spec(kPumped)), Word::from_text("ab"), opt);
    EXPECT_EQ(rep.policy, to_string(ReductionPolicy::Strategy::canonical_min));
    EXPECT_TRUE(rep.passed());
}

TEST(Pipeline, NotRecurrentIsRejected) {
    const auto src = io::source_from_json(spec(
        R"({"kind": "ultimately_periodic", "alphabet": "abc", "parameters": {"preperiod": "cabababc", "period": "c"}})"));
    EXPECT_THROW((void)run_pipeline(src, Word::from_text("ab"), PipelineOptions{}), PipelineInputError);
}

TEST(Pipeline, ReportJson) {
    PipelineOptions opt;
    opt.horizon = 1500;
    const auto rep = run_pipeline(io::source_from_json(spec(kPumped)), Word::from_text("ab"), opt);
    const auto j = to_json(rep);
    EXPECT_EQ(j["u"], "ab");
    EXPECT_TRUE(j.contains("checks"));
    EXPECT_EQ(j["bound_3k3"], rep.bound_3k3);
}
