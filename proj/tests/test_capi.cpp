// Exercises the shared library through mzeta.h only.
#include <gtest/gtest.h>

#include <memory>
#include <string>
#include <vector>

#include "mzeta.h"

namespace {

struct Freed {
    void operator()(char* p) const { mzeta_string_free(p); }
};
using Text = std::unique_ptr<char, Freed>;

struct ValueFree {
    void operator()(mzeta_value* v) const { mzeta_value_free(v); }
};
using Value = std::unique_ptr<mzeta_value, ValueFree>;

struct SuiteFree {
    void operator()(mzeta_suite* s) const { mzeta_suite_free(s); }
};
using Suite = std::unique_ptr<mzeta_suite, SuiteFree>;

mzeta_status compute(const char* target, const std::vector<std::pair<const char*, const char*>>& kv, Value& out) {
    std::vector<const char*> keys, values;
    for (const auto& [k, v] : kv) {
        keys.push_back(k);
        values.push_back(v);
    }
    mzeta_value* raw = nullptr;
    const mzeta_status st = mzeta_compute(target, keys.data(), values.data(), kv.size(), &raw);
    out.reset(raw);
    return st;
}

Suite make_suite() {
    mzeta_suite* raw = nullptr;
    EXPECT_EQ(mzeta_suite_create(&raw), MZETA_OK);
    return Suite(raw);
}

}  // namespace

TEST(CApi, StatusNamesAndVersion) {
    EXPECT_STREQ(mzeta_status_name(MZETA_OK), "ok");
    EXPECT_STREQ(mzeta_status_name(MZETA_POLE), "pole");
    EXPECT_STREQ(mzeta_status_name(MZETA_DOMAIN), "domain");
    EXPECT_STRNE(mzeta_version(), "");
}

TEST(CApi, ExactValues) {
    Value v;
    ASSERT_EQ(compute("bernoulli", {{"n", "12"}}, v), MZETA_OK);
    EXPECT_STREQ(mzeta_value_text(v.get()), "-691/2730");
    EXPECT_TRUE(mzeta_value_is_exact(v.get()));
    EXPECT_EQ(mzeta_value_tolerance(v.get()), 0.0);
    ASSERT_EQ(compute("stirling2", {{"n", "10"}, {"k", "3"}}, v), MZETA_OK);
    EXPECT_STREQ(mzeta_value_text(v.get()), "9330");
    ASSERT_EQ(compute("norlund", {{"m", "2"}, {"order", "2"}, {"x", "0"}}, v), MZETA_OK);
    EXPECT_STREQ(mzeta_value_text(v.get()), "5/6");
    ASSERT_EQ(compute("bernoulli-poly", {{"n", "2"}}, v), MZETA_OK);
    EXPECT_STREQ(mzeta_value_text(v.get()), R"(["1/6","-1","1"])");
}

TEST(CApi, NumericValue) {
    Value v;
    ASSERT_EQ(compute("hurwitz", {{"s", "2"}, {"x", "1"}}, v), MZETA_OK);
    EXPECT_FALSE(mzeta_value_is_exact(v.get()));
    EXPECT_NEAR(mzeta_value_real(v.get()), 1.6449340668482264, 1e-15);
    EXPECT_EQ(mzeta_value_imag(v.get()), 0.0);
    EXPECT_GT(mzeta_value_tolerance(v.get()), 0.0);
    EXPECT_LT(mzeta_value_tolerance(v.get()), 1e-15);
}

TEST(CApi, ErrorStatuses) {
    Value v;
    EXPECT_EQ(compute("hurwitz", {{"s", "1"}, {"x", "1"}}, v), MZETA_POLE);
    EXPECT_EQ(v, nullptr);
    EXPECT_STRNE(mzeta_last_error(), "");
    EXPECT_EQ(compute("hurwitz", {{"s", "2"}, {"x", "-1"}}, v), MZETA_DOMAIN);
    EXPECT_EQ(compute("hurwitz", {{"s", "2"}}, v), MZETA_INVALID_ARGUMENT);
    EXPECT_EQ(compute("hurwitz", {{"s", "2"}, {"x", "1"}, {"bogus", "1"}}, v), MZETA_INVALID_ARGUMENT);
    EXPECT_EQ(compute("nope", {}, v), MZETA_INVALID_ARGUMENT);
    EXPECT_EQ(mzeta_compute("bernoulli", nullptr, nullptr, 0, nullptr), MZETA_INVALID_ARGUMENT);
}

TEST(CApi, Registry) {
    const size_t n = mzeta_identity_count();
    ASSERT_EQ(n, 20U);
    EXPECT_STREQ(mzeta_identity_id(0), "I-C1");
    EXPECT_STREQ(mzeta_identity_variants(0), "as-printed,corrected");
    EXPECT_STRNE(mzeta_identity_statement(0), "");
    EXPECT_EQ(mzeta_identity_id(n), nullptr);
}

TEST(CApi, RunIdentity) {
    const char* keys[] = {"n", "m"};
    const char* values[] = {"4", "2"};
    char* raw = nullptr;
    ASSERT_EQ(mzeta_run_identity("I-ORTH", "as-printed", keys, values, 2, &raw), MZETA_OK);
    const Text json(raw);
    EXPECT_NE(std::string(json.get()).find(R"("pass": true)"), std::string::npos);
    EXPECT_EQ(mzeta_run_identity("I-NOPE", "as-printed", keys, values, 2, &raw), MZETA_UNKNOWN_IDENTITY);
    EXPECT_EQ(mzeta_run_identity("I-ORTH", "typo", keys, values, 2, &raw), MZETA_INVALID_ARGUMENT);
}

TEST(CApi, SuiteRoundTrip) {
    Suite s = make_suite();
    ASSERT_EQ(mzeta_suite_add_identity(s.get(), "I-T1"), MZETA_OK);
    EXPECT_EQ(mzeta_suite_add_identity(s.get(), "I-NOPE"), MZETA_UNKNOWN_IDENTITY);
    ASSERT_EQ(mzeta_suite_set_range(s.get(), "m", 0, 1), MZETA_OK);
    const char* xs[] = {"1/2", "1"};
    ASSERT_EQ(mzeta_suite_set_x_points(s.get(), xs, 2), MZETA_OK);
    const char* ss[] = {"4", "3.5+1i"};
    ASSERT_EQ(mzeta_suite_set_s_points(s.get(), ss, 2), MZETA_OK);
    const char* bad[] = {"abc"};
    EXPECT_EQ(mzeta_suite_set_s_points(s.get(), bad, 1), MZETA_INVALID_ARGUMENT);
    ASSERT_EQ(mzeta_suite_set_timing(s.get(), 0), MZETA_OK);
    ASSERT_EQ(mzeta_suite_run(s.get()), MZETA_OK);
    // m in {0,1}, 2 s points, 2 x points, 2 variants
    EXPECT_EQ(mzeta_suite_total(s.get()), 16U);
    EXPECT_EQ(mzeta_suite_pass_count(s.get()) + mzeta_suite_fail_count(s.get()), 16U);

    char* raw = nullptr;
    ASSERT_EQ(mzeta_suite_summary(s.get(), &raw), MZETA_OK);
    const Text summary(raw);
    EXPECT_EQ(std::string(summary.get()).rfind("PASS ", 0), 0U);
    ASSERT_EQ(mzeta_suite_to_csv(s.get(), &raw), MZETA_OK);
    const Text csv(raw);
    EXPECT_EQ(std::string(csv.get()).rfind("id,variant,params,", 0), 0U);
    ASSERT_EQ(mzeta_suite_to_json(s.get(), &raw), MZETA_OK);
    const Text json(raw);
    EXPECT_EQ(json.get()[0], '[');

    int ok = 0;
    ASSERT_EQ(mzeta_suite_check_manifest(s.get(), nullptr, &ok, &raw), MZETA_OK);
    const Text violations(raw);
    EXPECT_EQ(ok, 1) << violations.get();
    ASSERT_EQ(mzeta_suite_check_manifest(s.get(), R"({"expectations":[]})", &ok, &raw), MZETA_OK);
    const Text strict(raw);
    EXPECT_EQ(ok, 0);
    EXPECT_NE(std::string(strict.get()).find("I-T1"), std::string::npos);
}

TEST(CApi, SuiteToleranceOverride) {
    Suite s = make_suite();
    mzeta_suite_add_identity(s.get(), "I-C1");
    mzeta_suite_set_range(s.get(), "n", 2, 2);
    mzeta_suite_set_tolerance(s.get(), 3.0);
    ASSERT_EQ(mzeta_suite_run(s.get()), MZETA_OK);
    EXPECT_EQ(mzeta_suite_fail_count(s.get()), 0U);
}

TEST(CApi, NullHandles) {
    EXPECT_EQ(mzeta_suite_run(nullptr), MZETA_INVALID_ARGUMENT);
    EXPECT_EQ(mzeta_suite_total(nullptr), 0U);
    mzeta_suite_free(nullptr);
    mzeta_value_free(nullptr);
    mzeta_string_free(nullptr);
}

TEST(CApi, Tables) {
    char* raw = nullptr;
    ASSERT_EQ(mzeta_table_csv("stirling2", 4, 0, &raw), MZETA_OK);
    const Text t(raw);
    const std::string s(t.get());
    EXPECT_NE(s.find("4,0,1,7,6,1\n"), std::string::npos);
    ASSERT_EQ(mzeta_table_csv("bernoulli", 2, 0, &raw), MZETA_OK);
    const Text b(raw);
    EXPECT_EQ(std::string(b.get()), "n,B_n\n0,1\n1,-1/2\n2,1/6\n");
    EXPECT_EQ(mzeta_table_csv("cubes", 2, 0, &raw), MZETA_INVALID_ARGUMENT);
    EXPECT_EQ(mzeta_table_csv("bernoulli", 5000, 0, &raw), MZETA_INVALID_ARGUMENT);
}
