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
#include "semiring_lab/ideals.hpp"
#include "semiring_lab/json_io.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace slab;
using oracle::Mask;
using oracle::Tab;

namespace {

FiniteSemiring S(const CatalogSpec& spec) { return build_catalog(spec); }

ElementSet set_of(const FiniteSemiring& s, std::initializer_list<const char*> labels) {
    ElementSet out;
    for (const char* l : labels) out.insert(s.at(l));
    return out;
}

std::vector<Mask> sorted_masks(const std::vector<ElementSet>& sets) {
    std::vector<Mask> out;
    for (auto e : sets) out.push_back(e.bits());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(IdealGenerated, MatchesClosureOracleOnPairs) {
    for (const auto& m : small_catalog(8)) {
        const Tab t = Tab::of(m.semiring);
        for (Elem a = 0; a < m.semiring.size(); ++a)
            for (Elem b = a; b < m.semiring.size(); ++b) {
                const ElementSet g = ElementSet::single(a) | ElementSet::single(b);
                EXPECT_EQ(ideal_generated(m.semiring, g).members().bits(), oracle::closure(t, g.bits()))
                    << m.name << " gens " << a << "," << b;
            }
    }
}

TEST(IdealGenerated, ReferenceValues) {
    const auto l = S(CatalogSpec::lagrassa());
    EXPECT_EQ(ideal_generated(l, set_of(l, {"u"})).members(), set_of(l, {"0", "u"}));
    EXPECT_EQ(ideal_generated(l, ElementSet{}).members(), ElementSet::single(l.zero()));
    const auto t = S(CatalogSpec::nil_chain(4));
    const auto i = ideal_generated(t, set_of(t, {"a", "b"}));
    EXPECT_EQ(i.members(), set_of(t, {"0", "a", "b"}));
    ASSERT_TRUE(i.generators().has_value());
    EXPECT_EQ(i.generators()->size(), 2u);
}

TEST(IdealArithmetic, ReferenceProducts) {
    const auto t = S(CatalogSpec::nil_chain(4));
    const Ideal m(t, set_of(t, {"0", "a", "b"}));
    const Ideal zero(t, ElementSet::single(t.zero()));
    EXPECT_EQ(ideal_product(m, zero), zero);
    EXPECT_EQ(ideal_product(m, m), zero);
    const auto l = S(CatalogSpec::lagrassa());
    const Ideal u(l, set_of(l, {"0", "u"}));
    EXPECT_EQ(ideal_product(u, Ideal(l, l.all())).members(), u.members());
    EXPECT_EQ(ideal_sum(u, Ideal(l, ElementSet::single(l.zero()))).members(), u.members());
}

TEST(IdealArithmetic, MixedSemiringsThrow) {
    const auto a = S(CatalogSpec::boolean());
    const auto b = S(CatalogSpec::chain_c());
    EXPECT_THROW(ideal_product(Ideal(a, a.all()), Ideal(b, b.all())), MixedSemirings);
    EXPECT_THROW(ideal_sum(Ideal(a, a.all()), Ideal(b, b.all())), MixedSemirings);
    EXPECT_THROW(ideal_intersect(Ideal(a, a.all()), Ideal(b, b.all())), MixedSemirings);
}

TEST(IdealArithmetic, ProductInsideIntersectionInsideFactors) {
    for (const auto& m : small_catalog(6)) {
        const Tab t = Tab::of(m.semiring);
        const auto lattice = enumerate_ideals(m.semiring);
        for (ElementSet i : lattice.ideals())
            for (ElementSet j : lattice.ideals()) {
                const Ideal I(m.semiring, i), J(m.semiring, j);
                const auto p = ideal_product(I, J).members();
                const auto x = ideal_intersect(I, J).members();
                EXPECT_EQ(p.bits(), oracle::product(t, i.bits(), j.bits())) << m.name;
                EXPECT_TRUE(p.subset_of(x)) << m.name;
                EXPECT_TRUE(x.subset_of(i) && x.subset_of(j)) << m.name;
                EXPECT_TRUE(lattice.contains(ideal_sum(I, J).members())) << m.name;
                EXPECT_TRUE(lattice.contains(x)) << m.name;
            }
    }
}

TEST(Subtractive, ReferenceVerdicts) {
    const auto l = S(CatalogSpec::lagrassa());
    const auto v = is_subtractive(Ideal(l, set_of(l, {"0", "u"})));
    EXPECT_FALSE(v.holds);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(v.witness->first, l.at("u"));
    EXPECT_EQ(v.witness->second, l.at("1"));
    EXPECT_TRUE(is_subtractive(Ideal(l, l.all())).holds);
    const auto b = S(CatalogSpec::b_n_i(4, 2));
    EXPECT_FALSE(is_subtractive(Ideal(b, b.all() - set_of(b, {"1"}))).holds);
}

TEST(Subtractive, SemiringVerdicts) {
    EXPECT_TRUE(is_subtractive_semiring(S(CatalogSpec::chain_c())).holds);
    EXPECT_FALSE(is_subtractive_semiring(S(CatalogSpec::nil_chain(4))).holds);
    EXPECT_TRUE(is_subtractive_semiring(S(CatalogSpec::b_n_i(3, 1))).holds);
}

TEST(Subtractive, TwoGeneratedScanAgreesWithFullLattice) {
    for (const auto& m : small_catalog(8)) {
        const Tab t = Tab::of(m.semiring);
        bool all = true;
        for (Mask i : oracle::all_ideals(t)) all = all && oracle::is_subtractive(t, i);
        const auto v = is_subtractive_semiring(m.semiring);
        EXPECT_EQ(v.holds, all) << m.name;
        if (!v.holds) {
            ASSERT_TRUE(v.witness.has_value());
            const auto [a, b] = *v.witness;
            EXPECT_TRUE(v.ideal.contains(a) && v.ideal.contains(m.semiring.add(a, b)) && !v.ideal.contains(b));
        }
    }
}

TEST(Prime, ReferenceVerdicts) {
    const auto b = S(CatalogSpec::b_n_i(4, 2));
    EXPECT_TRUE(is_prime(Ideal(b, b.all() - set_of(b, {"1"}))));
    EXPECT_FALSE(is_prime(Ideal(b, b.all())));
    const auto pv = prime_verdict(Ideal(b, b.all()));
    EXPECT_FALSE(pv.proper);
}

TEST(Prime, ElementwiseAgreesWithIdealwiseOracle) {
    for (const auto& m : small_catalog(6)) {
        const Tab t = Tab::of(m.semiring);
        const auto ideals = oracle::all_ideals(t);
        for (Mask i : ideals)
            EXPECT_EQ(is_prime(Ideal(m.semiring, ElementSet(i))), oracle::is_prime(t, i, ideals)) << m.name;
    }
}

TEST(Lattice, MatchesSubsetEnumeration) {
    for (const auto& m : small_catalog(10)) {
        const Tab t = Tab::of(m.semiring);
        auto want = oracle::all_ideals(t);
        std::sort(want.begin(), want.end());
        EXPECT_EQ(sorted_masks(enumerate_ideals(m.semiring, 12).ideals()), want) << m.name;
    }
}

TEST(Lattice, ReferenceLattices) {
    const auto c = S(CatalogSpec::chain_c());
    const auto lc = enumerate_ideals(c);
    EXPECT_EQ(lc.size(), 3u);
    EXPECT_TRUE(lc.contains(set_of(c, {"0", "u"})));
    EXPECT_EQ(enumerate_ideals(S(CatalogSpec::boolean())).size(), 2u);
    const auto t = S(CatalogSpec::nil_chain(4));
    const auto lt = enumerate_ideals(t);
    for (auto i : {set_of(t, {"0"}), set_of(t, {"0", "a"}), set_of(t, {"0", "a", "b"}), t.all()})
        EXPECT_TRUE(lt.contains(i));
}

TEST(Lattice, CapIsEnforced) {
    EXPECT_THROW(enumerate_ideals(S(CatalogSpec::power_set_lattice(3)), 4), CapExceeded);
    EXPECT_THROW(spec(S(CatalogSpec::power_set_lattice(3)), 4), CapExceeded);
}

TEST(Spectrum, ReferenceValues) {
    const auto p = S(CatalogSpec::idempotent_monoid_ext());
    EXPECT_EQ(nil_radical(p).members(), p.all() - ElementSet::single(p.one()));
    const auto b = S(CatalogSpec::boolean());
    EXPECT_EQ(nil_radical(b).members(), ElementSet::single(b.zero()));
    const auto l = S(CatalogSpec::lagrassa());
    std::vector<ElementSet> primes;
    for (const auto& i : spec(l)) primes.push_back(i.members());
    EXPECT_EQ(sorted_masks(primes), sorted_masks({ElementSet::single(l.zero()), set_of(l, {"0", "u"})}));
}

TEST(Spectrum, NilIsIntersectionOfMinimalPrimes) {
    for (const auto& m : small_catalog(8)) {
        const auto mins = minimal_primes(enumerate_ideals(m.semiring));
        EXPECT_EQ(nil_radical(m.semiring).members(), intersect_all(mins, m.semiring.all())) << m.name;
        const auto maxs = max_ideals(m.semiring);
        EXPECT_FALSE(maxs.empty()) << m.name;
        for (const auto& x : maxs) EXPECT_TRUE(is_prime(x)) << m.name;
    }
}

TEST(Radical, ReferenceValues) {
    const auto t = S(CatalogSpec::truncation(3));
    const Ideal r = radical(ideal_generated(t, set_of(t, {"1"})));
    EXPECT_EQ(r.members(), t.all() - set_of(t, {"0"}));
    const auto l = S(CatalogSpec::lagrassa());
    EXPECT_EQ(radical(Ideal(l, set_of(l, {"0", "u"}))).members(), set_of(l, {"0", "u"}));
    for (const auto& p : spec(S(CatalogSpec::b_n_i(4, 2)))) EXPECT_EQ(radical(p), p);
}

TEST(Radical, KrullIntersectionAndOracle) {
    for (const auto& m : small_catalog(8)) {
        const Tab t = Tab::of(m.semiring);
        const auto lattice = enumerate_ideals(m.semiring);
        const auto primes = prime_ideals(lattice);
        for (ElementSet i : lattice.ideals()) {
            const ElementSet r = radical(Ideal(m.semiring, i)).members();
            EXPECT_EQ(r.bits(), oracle::radical(t, i.bits())) << m.name;
            std::vector<ElementSet> above;
            for (ElementSet p : primes)
                if (i.subset_of(p)) above.push_back(p);
            EXPECT_EQ(r, intersect_all(above, m.semiring.all())) << m.name;
        }
    }
}

TEST(Annihilator, ReferenceValues) {
    const auto t = S(CatalogSpec::nil_chain(4));
    EXPECT_EQ(annihilator(t, ElementSet::single(t.zero())).members(), t.all());
    EXPECT_EQ(annihilator(t, set_of(t, {"a"})).members(), set_of(t, {"0", "a", "b"}));
    const auto b = S(CatalogSpec::boolean());
    EXPECT_EQ(annihilator(b, set_of(b, {"1"})).members(), ElementSet::single(b.zero()));
}

TEST(Annihilator, SingletonAnnihilatorsAreSubtractive) {
    for (const auto& m : small_catalog(8)) {
        const Tab t = Tab::of(m.semiring);
        for (Elem x = 0; x < m.semiring.size(); ++x) {
            const Ideal a = annihilator(m.semiring, ElementSet::single(x));
            EXPECT_EQ(a.members().bits(), oracle::annihilator(t, oracle::bit(x))) << m.name;
            EXPECT_TRUE(is_subtractive(a).holds) << m.name << " Ann(" << m.semiring.label(x) << ")";
        }
    }
}

TEST(PrimeAvoidance, SubtractivePrimeCoversAreAvoided) {
    std::size_t covers = 0;
    for (const auto& m : small_catalog(6)) {
        const auto lattice = enumerate_ideals(m.semiring);
        std::vector<ElementSet> sp;
        for (ElementSet p : prime_ideals(lattice))
            if (is_subtractive(Ideal(m.semiring, p)).holds) sp.push_back(p);
        const std::size_t k = sp.size();
        for (std::uint32_t pick = 1; pick < (1u << k); ++pick) {
            if (std::popcount(pick) > 4) continue;
            ElementSet uni;
            for (std::size_t q = 0; q < k; ++q)
                if ((pick >> q) & 1u) uni |= sp[q];
            for (ElementSet i : lattice.ideals()) {
                if (!i.subset_of(uni)) continue;
                ++covers;
                bool inside = false;
                for (std::size_t q = 0; q < k; ++q)
                    if (((pick >> q) & 1u) && i.subset_of(sp[q])) inside = true;
                EXPECT_TRUE(inside) << m.name;
            }
        }
    }
    EXPECT_GT(covers, 0u);
}

TEST(IdealJson, LabelsRoundTrip) {
    std::mt19937 rng(5);
    for (const auto& m : small_catalog(6)) {
        std::uniform_int_distribution<std::uint64_t> d(0, m.semiring.all().bits());
        const ElementSet e(d(rng));
        EXPECT_EQ(ideal_from_json(m.semiring, ideal_to_json(m.semiring, e)), e) << m.name;
    }
}
