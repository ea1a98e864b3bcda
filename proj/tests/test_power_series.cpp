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

#include "oracles.hpp"

#include "semiring_lab/catalog.hpp"
#include "semiring_lab/json_io.hpp"
#include "semiring_lab/power_series.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace slab;
using oracle::Mask;
using oracle::Tab;

namespace {

FiniteSemiring S(const CatalogSpec& spec) { return build_catalog(spec); }

TruncatedSeries series(const FiniteSemiring& s, const oracle::Poly& p, unsigned order) {
    TruncatedSeries out(s, order);
    for (std::size_t k = 0; k < p.size(); ++k) out.add_term(Monomial::var("X", static_cast<int>(k)), static_cast<Elem>(p[k]));
    return out;
}

oracle::Poly truncate(oracle::Poly p, unsigned order) {
    if (p.size() > order) p.resize(order);
    return p;
}

TruncatedSeries labelled(const FiniteSemiring& s, std::initializer_list<const char*> labels, unsigned order) {
    oracle::Poly p;
    for (const char* l : labels) p.push_back(s.at(l));
    return series(s, p, order);
}

} // namespace

TEST(TruncatedSeries, TermsPastOrderDropped) {
    const auto b = S(CatalogSpec::boolean());
    TruncatedSeries f(b, 3);
    f.add_term(Monomial::var("X", 3), b.one());
    EXPECT_TRUE(f.is_zero());
    f.add_term(Monomial::var("X", 2), b.one());
    EXPECT_FALSE(f.is_zero());
    EXPECT_NE(f.to_string().find("O(3)"), std::string::npos);
    Polynomial p(b, {"X"});
    p.add_term(Monomial::var("X", -1), b.one());
    EXPECT_THROW(TruncatedSeries::from_polynomial(p, 4), LaurentViolation);
}

TEST(TruncatedSeries, ProductMatchesOracle) {
    std::mt19937 rng(7301);
    for (const auto& m : small_catalog(6)) {
        const Tab t = Tab::of(m.semiring);
        for (int trial = 0; trial < 30; ++trial) {
            const unsigned order = 1 + rng() % 5;
            const auto f = oracle::random_poly(t, static_cast<int>(rng() % 5), rng);
            const auto g = oracle::random_poly(t, static_cast<int>(rng() % 5), rng);
            const auto got = ps_mul(series(m.semiring, f, order), series(m.semiring, g, order));
            EXPECT_EQ(got, series(m.semiring, truncate(oracle::poly_mul(t, f, g), order), order)) << m.name;
            EXPECT_EQ(series_content(got).members().bits(),
                      oracle::content(t, truncate(oracle::poly_mul(t, f, g), order)))
                << m.name;
        }
    }
}

TEST(TruncatedSeries, ReferenceProducts) {
    const auto t = S(CatalogSpec::nil_chain(4));
    EXPECT_TRUE(ps_pow(labelled(t, {"a", "1"}, 3), 3).to_polynomial().coeff(Monomial()) == t.zero());
    EXPECT_TRUE(ps_mul(labelled(t, {"a"}, 3), labelled(t, {"b"}, 3)).is_zero());
    const auto c = S(CatalogSpec::chain_c());
    const auto sq = ps_mul(labelled(c, {"1", "u"}, 2), labelled(c, {"1", "u"}, 2));
    EXPECT_EQ(sq, labelled(c, {"1", "u"}, 2));
}

TEST(TruncatedSeries, RejectsMixedInputs) {
    const auto b = S(CatalogSpec::boolean());
    EXPECT_THROW(ps_mul(TruncatedSeries(b, 2), TruncatedSeries(b, 3)), MixedOrders);
    EXPECT_THROW(ps_add(TruncatedSeries(b, 2), TruncatedSeries(S(CatalogSpec::chain_c()), 2)), MixedSemirings);
}

TEST(SeriesContent, SweepReferenceVerdicts) {
    const auto c = series_content_check(S(CatalogSpec::chain_c()), 4, 2);
    EXPECT_TRUE(c.containment && c.radical && c.agrees);
    const auto l = series_content_check(S(CatalogSpec::lagrassa()), 6, 2);
    EXPECT_FALSE(l.radical);
    EXPECT_TRUE(l.agrees);
    ASSERT_TRUE(l.f && l.g && l.fg);
    IdealArithmetic ar(S(CatalogSpec::lagrassa()));
    const ElementSet cfcg = ar.product(series_content(*l.f).members(), series_content(*l.g).members());
    EXPECT_FALSE(cfcg.subset_of(ar.radical(series_content(*l.fg).members())));
    const auto t = series_content_check(S(CatalogSpec::nil_chain(4)), 6, 2);
    EXPECT_TRUE(t.radical && t.agrees);
    EXPECT_THROW(series_content_check(S(CatalogSpec::boolean()), 3, 2), BadParams);
}

TEST(SeriesContent, AgreesWithWeakGaussianAcrossCatalog) {
    for (const auto& m : small_catalog(4)) {
        const auto r = series_content_check(m.semiring, 4, 2);
        EXPECT_TRUE(r.containment) << m.name;
        EXPECT_TRUE(r.agrees) << m.name;
        EXPECT_EQ(r.weak_gaussian, is_weak_gaussian(m.semiring).holds) << m.name;
    }
}

TEST(SeriesContent, LaGrassaExamplePair) {
    const auto l = S(CatalogSpec::lagrassa());
    const auto f = labelled(l, {"1", "u"}, 6);
    const auto g = labelled(l, {"u", "1"}, 6);
    IdealArithmetic ar(l);
    const ElementSet cfcg = ar.product(series_content(f).members(), series_content(g).members());
    EXPECT_FALSE(cfcg.subset_of(ar.radical(series_content(ps_mul(f, g)).members())));
}

TEST(SeriesPrime, ExtensionMatchesSubtractivity) {
    for (const auto& m : small_catalog(4)) {
        IdealArithmetic ar(m.semiring);
        for (ElementSet p : prime_ideals(enumerate_ideals(m.semiring))) {
            const auto r = ps_prime_extension_check(m.semiring, p, 4, 2);
            EXPECT_TRUE(r.prime) << m.name;
            EXPECT_TRUE(r.agrees) << m.name;
            EXPECT_EQ(r.extension_prime_bounded, ar.is_subtractive(p)) << m.name;
            if (!r.extension_prime_bounded) {
                ASSERT_TRUE(r.f && r.g) << m.name;
                EXPECT_FALSE(r.f->support().subset_of(p));
                EXPECT_FALSE(r.g->support().subset_of(p));
                EXPECT_TRUE(ps_mul(*r.f, *r.g).support().subset_of(p));
            }
        }
    }
    const auto c = S(CatalogSpec::chain_c());
    EXPECT_FALSE(ps_prime_extension_check(c, c.all(), 4, 2).proper);
}

TEST(SeriesNil, NilpotentSeriesVanish) {
    for (const char* name : {"nil_chain(4)", "nil_chain(3)", "chain_C", "b_n_i(4,2)"}) {
        const auto r = series_nil_check(S(parse_catalog(name, {})), 4, 2);
        EXPECT_TRUE(r.holds) << name;
        EXPECT_GT(r.checked, 0u) << name;
    }
    const auto t = S(CatalogSpec::nil_chain(4));
    EXPECT_TRUE(ps_pow(labelled(t, {"a", "b", "a"}, 4), 3).is_zero());
}
