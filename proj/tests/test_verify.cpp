#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "json.hpp"
#include "mzeta/error.hpp"
#include "mzeta/verify.hpp"

using namespace mzeta;

TEST(Registry, HasEveryIdentityWithDefaults) {
    const std::vector<std::string> want{"I-C1",   "I-C1-neg", "I-C1b", "I-C2",  "I-C70a", "I-C70b", "I-CB2",
                                        "I-E24",  "I-E27",    "I-E70", "I-L11", "I-L12",  "I-L502", "I-ORTH",
                                        "I-P16",  "I-T1",     "I-T2",  "I-T5",  "I-T510", "I-T6"};
    std::vector<std::string> got;
    for (const auto& info : identity_registry()) {
        got.push_back(info.id);
        EXPECT_FALSE(identity_grid(info.id).empty()) << info.id;
        EXPECT_FALSE(info.variants.empty());
        EXPECT_EQ(info.exact, info.default_tol == 0);
    }
    EXPECT_EQ(got, want);
    EXPECT_THROW(identity_info("NOPE"), Error);
}

TEST(RunIdentity, OrthogonalityExample) {
    const IdentityReport r = run_identity("I-ORTH", Variant::AsPrinted, {{"n", "4"}, {"m", "2"}});
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.lhs, "0");
}

TEST(RunIdentity, T1TrivialAtMZero) {
    const IdentityReport r = run_identity("I-T1", Variant::AsPrinted, {{"m", "0"}, {"s", "5"}, {"x", "1"}});
    EXPECT_TRUE(r.pass);
    EXPECT_LT(r.rel_err, 1e-15);
}

TEST(RunIdentity, E27LeftSideIsB4) {
    const IdentityReport r = run_identity("I-E27", Variant::AsPrinted, {{"m", "2"}, {"n", "2"}});
    EXPECT_EQ(r.lhs, "-1/30");
    const IdentityReport c = run_identity("I-E27", Variant::Corrected, {{"m", "2"}, {"n", "2"}});
    EXPECT_TRUE(c.pass);
}

TEST(RunIdentity, EvaluationErrorsBecomeReports) {
    const IdentityReport r = run_identity("I-T2", Variant::AsPrinted, {{"m", "0"}, {"s", "3.5"}, {"x", "0.5"}});
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.error, "domain");
    EXPECT_EQ(r.lhs, "domain");
    EXPECT_TRUE(std::isnan(r.abs_err));
}

TEST(RunIdentity, BadParametersThrow) {
    EXPECT_THROW(run_identity("I-ORTH", Variant::AsPrinted, {{"n", "4"}}), Error);
    EXPECT_THROW(run_identity("I-ORTH", Variant::AsPrinted, {{"n", "x"}, {"m", "1"}}), Error);
    EXPECT_THROW(run_identity("I-ORTH", Variant::Corrected, {{"n", "1"}, {"m", "1"}}), Error);
    EXPECT_THROW(run_identity("NOPE", Variant::Corrected, {}), Error);
}

TEST(RunIdentity, ExplicitToleranceWins) {
    // the as-printed sign error gives relErr = 2 here
    const ParamList p{{"n", "2"}, {"s", "5"}, {"x", "0.5"}};
    EXPECT_FALSE(run_identity("I-C1", Variant::AsPrinted, p).pass);
    EXPECT_TRUE(run_identity("I-C1", Variant::AsPrinted, p, 3.0).pass);
    EXPECT_EQ(run_identity("I-C1", Variant::AsPrinted, p, 3.0).tol, 3.0);
}

TEST(RunIdentity, EnvironmentToleranceOverridesDefault) {
    const ParamList p{{"n", "2"}, {"s", "5"}, {"x", "0.5"}};
    setenv("MZETA_TOL", "3", 1);
    const IdentityReport env = run_identity("I-C1", Variant::AsPrinted, p);
    const IdentityReport explicit_tol = run_identity("I-C1", Variant::AsPrinted, p, 1e-6);
    unsetenv("MZETA_TOL");
    EXPECT_EQ(env.tol, 3.0);
    EXPECT_TRUE(env.pass);
    EXPECT_EQ(explicit_tol.tol, 1e-6);
    EXPECT_EQ(run_identity("I-C1", Variant::AsPrinted, p).tol, 1e-9);
}

TEST(Suite, EmptyIdListGivesNoReports) { EXPECT_TRUE(run_suite({}).empty()); }

TEST(Suite, OrderIsIdThenVariantThenGrid) {
    SuiteOptions o;
    o.grid.ranges["m"] = {0, 2};
    const auto reports = run_suite({"I-T1", "I-E24", "I-T1"}, o);
    ASSERT_FALSE(reports.empty());
    EXPECT_EQ(reports.front().id, "I-E24");
    EXPECT_EQ(reports.back().id, "I-T1");
    EXPECT_EQ(reports.back().variant, Variant::Corrected);
    const auto grid = identity_grid("I-T1", o.grid);
    std::size_t i = 0;
    while (reports[i].id != "I-T1") ++i;
    for (std::size_t g = 0; g < grid.size(); ++g) {
        EXPECT_EQ(reports[i + g].params, grid[g]);
        EXPECT_EQ(reports[i + g].variant, Variant::AsPrinted);
        EXPECT_EQ(reports[i + g + grid.size()].params, grid[g]);
    }
}

TEST(Suite, DeterministicWithoutTiming) {
    SuiteOptions o;
    o.timing = false;
    o.threads = 3;
    const auto a = reports_to_json(run_suite({"I-C1", "I-T5"}, o));
    o.threads = 1;
    const auto b = reports_to_json(run_suite({"I-C1", "I-T5"}, o));
    EXPECT_EQ(a, b);
}

TEST(Suite, GridOverridesAndPoleFiltering) {
    SuiteOptions o;
    o.grid.ranges["n"] = {2, 2};
    o.grid.s_points = std::vector<Complex>{Complex(2.2L, 0), Complex(5, 0), Complex(2, 3)};
    o.grid.x_points = std::vector<std::string>{"3/4"};
    const auto reports = run_suite({"I-C1"}, o);
    // s = 2.2 is within 0.5 of the pole at 2
    ASSERT_EQ(reports.size(), 4U);
    EXPECT_EQ(reports[0].params, (ParamList{{"n", "2"}, {"s", "5"}, {"x", "3/4"}}));
    EXPECT_EQ(reports[1].params, (ParamList{{"n", "2"}, {"s", "2+3i"}, {"x", "3/4"}}));
}

TEST(Suite, SuiteToleranceApplies) {
    SuiteOptions o;
    o.grid.tol = 3;
    o.grid.ranges["n"] = {2, 2};
    const auto reports = run_suite({"I-C1"}, o);
    ASSERT_FALSE(reports.empty());
    for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.rel_err;
}

TEST(Summary, CountsAndLine) {
    std::vector<IdentityReport> r(3);
    r[0].pass = true;
    const SuiteSummary s = summarize(r);
    EXPECT_EQ(summary_line(s), "PASS 1 / FAIL 2 / TOTAL 3");
}

TEST(Serialization, JsonFieldsAndExactResiduals) {
    const auto reports = std::vector<IdentityReport>{
        run_identity("I-ORTH", Variant::AsPrinted, {{"n", "1"}, {"m", "1"}}),
        run_identity("I-T1", Variant::Corrected, {{"m", "1"}, {"s", "4+2i"}, {"x", "1"}}),
        run_identity("I-T2", Variant::AsPrinted, {{"m", "0"}, {"s", "3.5"}, {"x", "0.5"}})};
    const auto j = nlohmann::json::parse(reports_to_json(reports));
    ASSERT_EQ(j.size(), 3U);
    std::vector<std::string> keys;
    for (auto it = j[0].begin(); it != j[0].end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys.size(), 10U);
    EXPECT_EQ(j[0]["absErr"], "exact");
    EXPECT_EQ(j[0]["tol"], "exact");
    EXPECT_TRUE(j[1]["relErr"].is_number());
    EXPECT_EQ(j[1]["params"]["s"], "4+2i");
    EXPECT_TRUE(j[2]["absErr"].is_null());
    EXPECT_EQ(j[2]["pass"], false);
}

TEST(Serialization, CsvColumns) {
    const auto csv = reports_to_csv({run_identity("I-ORTH", Variant::AsPrinted, {{"n", "2"}, {"m", "2"}})});
    const auto nl = csv.find('\n');
    EXPECT_EQ(csv.substr(0, nl), "id,variant,params,lhs,rhs,absErr,relErr,tol,pass,elapsedMs");
    EXPECT_EQ(csv.substr(nl + 1, 44), "I-ORTH,as-printed,n=2;m=2,1,1,exact,exact,ex");
}

TEST(Manifest, BuiltinParsesAndCoversTypoPairs) {
    const Manifest& m = builtin_manifest();
    for (const char* id : {"I-T2", "I-E24", "I-C70a"}) {
        EXPECT_FALSE(m.expect_pass.at({id, Variant::AsPrinted}));
        EXPECT_TRUE(m.expect_pass.at({id, Variant::Corrected}));
    }
}

TEST(Manifest, Semantics) {
    IdentityReport good, bad;
    good.id = bad.id = "I-X";
    good.variant = bad.variant = Variant::AsPrinted;
    good.pass = true;
    const Manifest expect_fail = parse_manifest(R"({"expectations":[{"id":"I-X","variant":"as-printed","expect":"fail"}]})");
    EXPECT_TRUE(check_manifest({good, bad}, expect_fail).empty());
    EXPECT_EQ(check_manifest({good, good}, expect_fail).size(), 1U);
    // absent pairs must pass
    EXPECT_EQ(check_manifest({good, bad}, Manifest{}).size(), 1U);
    EXPECT_TRUE(check_manifest({good}, Manifest{}).empty());
    EXPECT_THROW(parse_manifest(R"({"expectations":[{"id":"I-X","variant":"typo","expect":"fail"}]})"), Error);
    EXPECT_THROW(parse_manifest("not json"), Error);
}
