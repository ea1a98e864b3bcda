// Copyright 2026 The semiring-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semiring_lab/c_api.h"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <thread>

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    slab_string_free(s);
    return out;
}

slab_semiring* catalog(const char* expr) {
    slab_semiring* s = nullptr;
    EXPECT_EQ(slab_semiring_from_catalog(expr, nullptr, nullptr, 0, &s), SLAB_OK) << slab_last_error();
    return s;
}

constexpr const char* kBooleanTables = R"({
  "elements": ["0", "1"],
  "add": [[0, 1], [1, 1]],
  "mul": [[0, 0], [0, 1]],
  "zero": 0, "one": 1
})";

} // namespace

TEST(CApi, VersionAndStatusNames) {
    EXPECT_STREQ(slab_version(), "1.0.0");
    EXPECT_STREQ(slab_status_name(SLAB_OK), "ok");
    EXPECT_STREQ(slab_status_name(SLAB_ERR_PARSE), "parse");
    EXPECT_STREQ(slab_status_name(SLAB_ERR_AXIOM), "axiom_violation");
    EXPECT_STREQ(slab_status_name(SLAB_ERR_NULL), "null_argument");
}

TEST(CApi, NullArguments) {
    slab_semiring* s = nullptr;
    char* out = nullptr;
    EXPECT_EQ(slab_semiring_from_json(nullptr, &s), SLAB_ERR_NULL);
    EXPECT_NE(std::string(slab_last_error()).find("json"), std::string::npos);
    EXPECT_EQ(slab_semiring_from_json(kBooleanTables, nullptr), SLAB_ERR_NULL);
    EXPECT_EQ(slab_classify(nullptr, nullptr, SLAB_FORMAT_JSON, &out), SLAB_ERR_NULL);
    EXPECT_EQ(slab_report_render(nullptr, SLAB_FORMAT_JSON, &out), SLAB_ERR_NULL);
    EXPECT_EQ(slab_golden_suite(nullptr, 0, nullptr, nullptr), SLAB_ERR_NULL);
    EXPECT_EQ(slab_semiring_size(nullptr), 0u);
    slab_semiring_free(nullptr);
    slab_classify_options_init(nullptr);
}

TEST(CApi, ErrorStatuses) {
    slab_semiring* s = nullptr;
    EXPECT_EQ(slab_semiring_from_json("{not json", &s), SLAB_ERR_PARSE);
    EXPECT_FALSE(std::string(slab_last_error()).empty());
    const char* bad = R"({"elements": ["0","1"], "add": [[0,1],[1,0]], "mul": [[0,0],[0,0]], "zero": 0, "one": 1})";
    EXPECT_EQ(slab_semiring_from_json(bad, &s), SLAB_ERR_AXIOM);
    EXPECT_EQ(slab_semiring_from_catalog("b_n_i(3,5)", nullptr, nullptr, 0, &s), SLAB_ERR_BAD_PARAMS);
    EXPECT_EQ(slab_semiring_from_catalog("no_such_family", nullptr, nullptr, 0, &s), SLAB_ERR_PARSE);
    EXPECT_EQ(slab_semiring_from_file("/nonexistent/semiring.json", &s), SLAB_ERR_IO);
    EXPECT_EQ(s, nullptr);
}

TEST(CApi, ConstructorsAgree) {
    slab_semiring* a = nullptr;
    ASSERT_EQ(slab_semiring_from_json(kBooleanTables, &a), SLAB_OK);
    EXPECT_EQ(slab_semiring_size(a), 2u);
    EXPECT_STREQ(slab_last_error(), "");
    const char* keys[] = {"n"};
    const char* values[] = {"4"};
    slab_semiring* b = nullptr;
    ASSERT_EQ(slab_semiring_from_catalog("nil_chain", keys, values, 1, &b), SLAB_OK) << slab_last_error();
    EXPECT_EQ(slab_semiring_size(b), 4u);
    char* json = nullptr;
    ASSERT_EQ(slab_semiring_to_json(b, &json), SLAB_OK);
    const std::string text = take(json);
    slab_semiring* c = nullptr;
    ASSERT_EQ(slab_semiring_from_json(text.c_str(), &c), SLAB_OK);
    EXPECT_EQ(slab_semiring_size(c), 4u);

    const std::string path = testing::TempDir() + "slab_c_api_boolean.json";
    std::ofstream(path) << kBooleanTables;
    slab_semiring* d = nullptr;
    ASSERT_EQ(slab_semiring_from_file(path.c_str(), &d), SLAB_OK) << slab_last_error();
    EXPECT_EQ(slab_semiring_size(d), 2u);
    std::remove(path.c_str());
    for (auto* s : {a, b, c, d}) slab_semiring_free(s);
}

TEST(CApi, ClassifyJsonAndText) {
    slab_semiring* s = catalog("b_n_i(4,2)");
    char* out = nullptr;
    ASSERT_EQ(slab_classify(s, nullptr, SLAB_FORMAT_JSON, &out), SLAB_OK) << slab_last_error();
    const std::string json = take(out);
    EXPECT_NE(json.find("\"weak_gaussian\": false"), std::string::npos);
    const auto j = nlohmann::json::parse(json);
    EXPECT_EQ(j["schema"], "semiring-lab/report/v1");
    EXPECT_EQ(j["input"]["name"], "b_n_i(4,2)");

    slab_classify_options o;
    slab_classify_options_init(&o);
    EXPECT_EQ(o.degree_bound, 3u);
    o.degree_bound = 2;
    o.timing = 1;
    ASSERT_EQ(slab_classify(s, &o, SLAB_FORMAT_TEXT, &out), SLAB_OK);
    const std::string text = take(out);
    EXPECT_NE(text.find("weak_gaussian: false"), std::string::npos);
    slab_semiring_free(s);
}

TEST(CApi, RenderSavedReport) {
    slab_semiring* s = catalog("lagrassa");
    char* out = nullptr;
    ASSERT_EQ(slab_classify(s, nullptr, SLAB_FORMAT_JSON, &out), SLAB_OK);
    const std::string saved = take(out);
    ASSERT_EQ(slab_report_render(saved.c_str(), SLAB_FORMAT_JSON, &out), SLAB_OK) << slab_last_error();
    EXPECT_EQ(take(out), saved);
    ASSERT_EQ(slab_report_render(saved.c_str(), SLAB_FORMAT_TEXT, &out), SLAB_OK);
    EXPECT_NE(take(out).find("subtractive: false"), std::string::npos);
    EXPECT_EQ(slab_report_render(R"({"schema": "other"})", SLAB_FORMAT_JSON, &out), SLAB_ERR_PARSE);
    slab_semiring_free(s);
}

TEST(CApi, GoldenSuiteFilter) {
    char* out = nullptr;
    int all_pass = 0;
    ASSERT_EQ(slab_golden_suite("tables.,catalog.chain_C", 0, &out, &all_pass), SLAB_OK) << slab_last_error();
    const auto rows = nlohmann::json::parse(take(out));
    ASSERT_GE(rows.size(), 2u);
    EXPECT_EQ(all_pass, 1);
    for (const auto& r : rows) {
        const std::string id = r["id"];
        EXPECT_TRUE(id.rfind("tables.", 0) == 0 || id.rfind("catalog.chain_C", 0) == 0) << id;
    }
    EXPECT_EQ(slab_golden_suite("zzz", 0, &out, &all_pass), SLAB_ERR_BAD_PARAMS);
    ASSERT_EQ(slab_golden_row_ids(&out), SLAB_OK);
    const auto ids = nlohmann::json::parse(take(out));
    EXPECT_GE(ids.size(), 12u);
}

TEST(CApi, LastErrorIsPerThread) {
    slab_semiring* s = nullptr;
    EXPECT_EQ(slab_semiring_from_json("{", &s), SLAB_ERR_PARSE);
    std::string other;
    std::thread t([&] { other = slab_last_error(); });
    t.join();
    EXPECT_TRUE(other.empty());
    EXPECT_FALSE(std::string(slab_last_error()).empty());
}
