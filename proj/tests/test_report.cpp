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

#include "semiring_lab/catalog.hpp"
#include "semiring_lab/golden.hpp"
#include "semiring_lab/report.hpp"
#include "semiring_lab/zero_divisors.hpp"

#include <gtest/gtest.h>

using namespace slab;

namespace {

ClassificationReport run(const CatalogSpec& spec, ClassifyOptions o = {}) {
    return classify(build_catalog(spec), {"catalog", describe(spec)}, o);
}

} // namespace

TEST(Classify, VerdictOrder) {
    const auto r = run(CatalogSpec::chain_c());
    std::vector<std::string> names;
    for (const auto& v : r.verdicts) names.push_back(v.name);
    EXPECT_EQ(names, (std::vector<std::string>{"subtractive", "weak_gaussian", "gaussian", "content_semialgebra",
                                               "property_A", "primal", "very_few", "zd_degree"}));
    EXPECT_THROW(r.verdict("no_such_verdict"), std::exception);
}

TEST(Classify, LaGrassa) {
    const auto r = run(CatalogSpec::lagrassa());
    EXPECT_EQ(r.verdict("subtractive").value, false);
    EXPECT_EQ(r.verdict("weak_gaussian").value, false);
    EXPECT_EQ(r.verdict("weak_gaussian").mode, "exact");
    EXPECT_EQ(r.verdict("gaussian").value, false);
    EXPECT_EQ(r.verdict("zd_degree").mode, "skipped");
    EXPECT_TRUE(r.verdict("zd_degree").value.is_null());
    EXPECT_TRUE(r.verdict("subtractive").witness.contains("x"));
}

TEST(Classify, NilChainFour) {
    const auto r = run(CatalogSpec::nil_chain(4));
    EXPECT_EQ(r.verdict("subtractive").value, false);
    EXPECT_EQ(r.verdict("weak_gaussian").value, true);
    EXPECT_EQ(r.verdict("gaussian").value, false);
    EXPECT_EQ(r.verdict("content_semialgebra").value, false);
    EXPECT_EQ(r.verdict("content_semialgebra").mode, "bounded");
    EXPECT_EQ(r.verdict("primal").value, true);
    EXPECT_EQ(r.verdict("zd_degree").value, 1);
}

TEST(Classify, ChainCGaussianByCertificateOrSweep) {
    const auto r = run(CatalogSpec::chain_c());
    EXPECT_EQ(r.verdict("gaussian").value, true);
    EXPECT_EQ(r.verdict("subtractive").value, true);
    EXPECT_EQ(r.verdict("content_semialgebra").value, true);
}

TEST(Classify, AgreesWithLibraryAcrossCatalog) {
    for (const auto& m : small_catalog(5)) {
        const auto r = classify(m.semiring, {"catalog", m.name});
        EXPECT_EQ(r.verdict("subtractive").value, is_subtractive_semiring(m.semiring).holds) << m.name;
        EXPECT_EQ(r.verdict("weak_gaussian").value, is_weak_gaussian(m.semiring).holds) << m.name;
        EXPECT_EQ(r.verdict("primal").value, is_primal(m.semiring)) << m.name;
        EXPECT_EQ(r.verdict("very_few").value, very_few_zero_divisors(m.semiring)) << m.name;
        EXPECT_EQ(r.zset, zero_divisors(m.semiring)) << m.name;
        if (r.verdict("gaussian").value == true) EXPECT_EQ(r.verdict("weak_gaussian").value, true) << m.name;
    }
}

TEST(Classify, LatticeCapSkipsExactVerdicts) {
    ClassifyOptions o;
    o.lattice_cap = 2;
    const auto r = run(CatalogSpec::nil_chain(4), o);
    EXPECT_FALSE(r.lattice.error.empty());
    EXPECT_FALSE(r.lattice.ideal_count.has_value());
    EXPECT_EQ(r.verdict("weak_gaussian").mode, "bounded");
}

TEST(ReportJson, KeyOrderAndSchema) {
    const Json j = to_json(run(CatalogSpec::b_n_i(4, 2)));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"schema", "input", "options", "semiring", "structure", "lattice", "nil",
                                              "zero_divisors", "units", "summary", "verdicts"}));
    EXPECT_EQ(j["schema"], kReportSchema);
    EXPECT_EQ(j["summary"]["weak_gaussian"], false);
    EXPECT_NE(j.dump(2).find("\"weak_gaussian\": false"), std::string::npos);
}

TEST(ReportJson, TimingOnlyWhenRequested) {
    ClassifyOptions o;
    o.timing = true;
    EXPECT_TRUE(to_json(run(CatalogSpec::boolean(), o)).contains("timing"));
    EXPECT_FALSE(to_json(run(CatalogSpec::boolean())).contains("timing"));
}

TEST(ReportJson, Deterministic) {
    const auto a = to_json(run(CatalogSpec::truncation(2))).dump();
    const auto b = to_json(run(CatalogSpec::truncation(2))).dump();
    EXPECT_EQ(a, b);
    ClassifyOptions par;
    par.parallel = true;
    par.threads = 3;
    Json c = to_json(run(CatalogSpec::truncation(2), par));
    Json d = Json::parse(a);
    c["options"].erase("parallel");
    d["options"].erase("parallel");
    EXPECT_EQ(c, d);
}

TEST(ReportJson, RoundTripsThroughText) {
    for (const auto& m : small_catalog(4)) {
        const std::string text = to_json(classify(m.semiring, {"catalog", m.name})).dump(2);
        const Json j = parse_json(text);
        EXPECT_EQ(j.dump(2), text) << m.name;
    }
}

TEST(ReportJson, ReplayReproducesReport) {
    const Json saved = to_json(run(CatalogSpec::idempotent_monoid_ext()));
    EXPECT_EQ(to_json(replay_report(saved)), saved);
    Json foreign = saved;
    foreign["schema"] = "other/v9";
    EXPECT_THROW(replay_report(foreign), ParseError);
}

TEST(ReportText, ListsVerdictsAndWitnesses) {
    const std::string text = to_text(run(CatalogSpec::lagrassa()));
    for (const char* needle : {"subtractive", "weak_gaussian", "gaussian", "zd_degree", "lagrassa"})
        EXPECT_NE(text.find(needle), std::string::npos) << needle;
    EXPECT_NE(text.find("x = u"), std::string::npos);
    EXPECT_NE(text.find("f = 1 + u*X"), std::string::npos);
    EXPECT_NE(text.find("g = u + X"), std::string::npos);
}

TEST(Golden, AllRowsPass) {
    const auto rows = run_golden_suite();
    EXPECT_EQ(rows.size(), golden_row_ids().size());
    for (const auto& r : rows) EXPECT_TRUE(r.pass) << r.id << ": " << r.detail;
}

TEST(Golden, FilterByPrefix) {
    const auto rows = run_golden_suite({"dm."});
    ASSERT_FALSE(rows.empty());
    for (const auto& r : rows) EXPECT_EQ(r.id.rfind("dm.", 0), 0u);
    EXPECT_THROW(run_golden_suite({"nothing.matches"}), BadParams);
    int criteria = 0;
    for (const auto& id : golden_row_ids()) criteria += id.rfind("criterion.", 0) == 0 ? 1 : 0;
    EXPECT_EQ(criteria, 12);
}
