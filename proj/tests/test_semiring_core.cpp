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
#include "semiring_lab/computable.hpp"
#include "semiring_lab/ideals.hpp"
#include "semiring_lab/json_io.hpp"
#include "semiring_lab/structure.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace slab;
using oracle::Tab;

namespace {

RawTables boolean_tables() {
    RawTables t;
    t.elements = {"0", "1"};
    t.add = {{0, 1}, {1, 1}};
    t.mul = {{0, 0}, {0, 1}};
    return t;
}

// Independent axiom scan on plain tables.
bool satisfies_axioms(const Tab& t) {
    if (t.zero == t.one) return false;
    for (int a = 0; a < t.n; ++a) {
        if (t.add[a][t.zero] != a || t.mul[a][t.one] != a || t.mul[a][t.zero] != t.zero) return false;
        for (int b = 0; b < t.n; ++b) {
            if (t.add[a][b] != t.add[b][a] || t.mul[a][b] != t.mul[b][a]) return false;
            for (int c = 0; c < t.n; ++c) {
                if (t.add[t.add[a][b]][c] != t.add[a][t.add[b][c]]) return false;
                if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]]) return false;
                if (t.mul[a][t.add[b][c]] != t.add[t.mul[a][b]][t.mul[a][c]]) return false;
            }
        }
    }
    return true;
}

} // namespace

TEST(Validate, BooleanTablesAreValid) {
    EXPECT_TRUE(validate_semiring(boolean_tables()).empty());
    EXPECT_EQ(FiniteSemiring::create(boolean_tables()).size(), 2u);
}

TEST(Validate, LaGrassaTablesAreValid) {
    RawTables t;
    t.elements = {"0", "1", "u"};
    t.add = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
    t.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
    EXPECT_TRUE(validate_semiring(t).empty());
}

TEST(Validate, BrokenIdentityReportsWitness) {
    RawTables t = boolean_tables();
    t.mul[1][1] = 0;
    const auto v = validate_semiring(t);
    ASSERT_FALSE(v.empty());
    bool identity = false;
    for (const auto& x : v) {
        if (x.axiom == Axiom::MulIdentity) {
            identity = true;
            ASSERT_FALSE(x.witness.empty());
            EXPECT_EQ(x.witness.front(), 1);
        }
    }
    EXPECT_TRUE(identity);
    EXPECT_THROW(FiniteSemiring::create(t), ValidationError);
}

TEST(Validate, ShapeErrorsAreReported) {
    RawTables t = boolean_tables();
    t.add[0].push_back(1);
    EXPECT_FALSE(validate_semiring(t).empty());
    RawTables u = boolean_tables();
    u.mul[1][1] = 7;
    EXPECT_FALSE(validate_semiring(u).empty());
    RawTables w = boolean_tables();
    w.one = 0;
    EXPECT_FALSE(validate_semiring(w).empty());
}

TEST(Validate, NonDistributiveTablesRejected) {
    // Three-element chain with addition max and a multiplication that breaks distributivity.
    RawTables t;
    t.elements = {"0", "1", "x"};
    t.add = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
    t.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
    const auto v = validate_semiring(t);
    EXPECT_FALSE(v.empty());
}

TEST(Catalog, EveryMemberPassesIndependentAxiomScan) {
    for (const auto& m : small_catalog(8)) {
        const Tab t = Tab::of(m.semiring);
        EXPECT_TRUE(satisfies_axioms(t)) << m.name;
        EXPECT_EQ(m.semiring.zero(), 0) << m.name;
        EXPECT_EQ(m.semiring.one(), 1) << m.name;
    }
}

TEST(Catalog, ChainCAddsOnePlusOneToU) {
    const auto s = build_catalog(CatalogSpec::chain_c());
    ASSERT_EQ(s.size(), 3u);
    const Elem one = s.at("1"), u = s.at("u"), z = s.at("0");
    EXPECT_EQ(s.add(one, one), u);
    EXPECT_EQ(s.add(one, u), one);
    EXPECT_EQ(s.add(u, u), u);
    EXPECT_EQ(s.add(z, u), u);
    EXPECT_EQ(s.mul(one, u), u);
    EXPECT_EQ(s.mul(u, u), u);
}

TEST(Catalog, BniWrapsAdditionIntoTail) {
    for (int n = 2; n <= 7; ++n) {
        for (int i = 1; i < n; ++i) {
            const auto s = build_catalog(CatalogSpec::b_n_i(n, i));
            ASSERT_EQ(s.size(), static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    int l = x + y;
                    if (l > n - 1) l = i + (l - i) % (n - i);
                    EXPECT_EQ(s.label(s.add(s.at(std::to_string(x)), s.at(std::to_string(y)))), std::to_string(l))
                        << "B(" << n << "," << i << ") " << x << "+" << y;
                }
        }
    }
}

TEST(Catalog, NilChainProductsVanishBelowOne) {
    for (int n = 2; n <= 6; ++n) {
        const auto s = build_catalog(CatalogSpec::nil_chain(n));
        ASSERT_EQ(s.size(), static_cast<std::size_t>(n));
        for (Elem x = 0; x < s.size(); ++x)
            for (Elem y = 0; y < s.size(); ++y) {
                if (x == s.one() || y == s.one()) continue;
                EXPECT_EQ(s.mul(x, y), s.zero());
            }
    }
    const auto t = build_catalog(CatalogSpec::nil_chain(4));
    EXPECT_EQ(t.add(t.at("a"), t.at("b")), t.at("b"));
    EXPECT_EQ(t.add(t.at("b"), t.at("1")), t.at("1"));
}

TEST(Catalog, BadParametersThrow) {
    EXPECT_THROW(build_catalog(CatalogSpec::b_n_i(4, 0)), BadParams);
    EXPECT_THROW(build_catalog(CatalogSpec::b_n_i(4, 4)), BadParams);
    EXPECT_THROW(build_catalog(CatalogSpec::nil_chain(1)), BadParams);
    EXPECT_THROW(build_catalog(CatalogSpec::product({})), EmptyProduct);
}

TEST(Product, UnaryProductIsIsomorphicCopy) {
    const auto b = build_catalog(CatalogSpec::boolean());
    const auto p = product_semiring({b});
    EXPECT_EQ(p.size(), 2u);
    EXPECT_EQ(p.tables().add, b.tables().add);
    EXPECT_EQ(p.tables().mul, b.tables().mul);
}

TEST(Product, SizesMultiply) {
    const auto t = build_catalog(CatalogSpec::nil_chain(3));
    EXPECT_EQ(product_semiring({t, t}).size(), 9u);
    EXPECT_THROW(product_semiring({}), EmptyProduct);
}

TEST(Product, BooleanSquareHasZeroDivisors) {
    const auto b = build_catalog(CatalogSpec::boolean());
    const auto p = product_semiring({b, b});
    const Tab t = Tab::of(p);
    const oracle::Mask z = oracle::zero_divisors(t);
    EXPECT_EQ(std::popcount(z), 3);
}

TEST(Product, FlagsAreComponentwise) {
    std::mt19937 rng(11);
    const auto members = small_catalog(4);
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        const auto& a = members[pick(rng)];
        const auto& b = members[pick(rng)];
        const auto fa = structural_flags(a.semiring), fb = structural_flags(b.semiring);
        const auto fp = structural_flags(product_semiring({a.semiring, b.semiring}));
        EXPECT_EQ(fp.zerosumfree, fa.zerosumfree && fb.zerosumfree) << a.name << " x " << b.name;
        EXPECT_EQ(fp.additively_idempotent, fa.additively_idempotent && fb.additively_idempotent)
            << a.name << " x " << b.name;
    }
}

TEST(Structure, BooleanIsZerosumfreeLattice) {
    const auto f = structural_flags(build_catalog(CatalogSpec::boolean()));
    EXPECT_TRUE(f.zerosumfree);
    EXPECT_TRUE(f.bounded_distributive_lattice);
}

TEST(Structure, NilChainIsLocalWithSquareZero) {
    const auto s = build_catalog(CatalogSpec::nil_chain(4));
    const auto f = structural_flags(s);
    EXPECT_TRUE(f.is_local);
    ASSERT_TRUE(f.maximal_ideal.has_value());
    EXPECT_EQ(f.maximal_ideal->size(), 3u);
    EXPECT_TRUE(f.maximal_ideal_squared_zero);
}

TEST(Structure, BniIsNotLattice) {
    const auto s = build_catalog(CatalogSpec::b_n_i(4, 2));
    EXPECT_EQ(s.label(s.add(s.at("1"), s.at("1"))), "2");
    const auto f = structural_flags(s);
    EXPECT_FALSE(f.bounded_distributive_lattice);
    EXPECT_FALSE(f.additively_idempotent);
}

TEST(Structure, LatticesAreDetected) {
    EXPECT_TRUE(structural_flags(build_catalog(CatalogSpec::power_set_lattice(3))).bounded_distributive_lattice);
    EXPECT_TRUE(structural_flags(build_catalog(CatalogSpec::chain_lattice(5))).bounded_distributive_lattice);
    EXPECT_FALSE(structural_flags(build_catalog(CatalogSpec::lagrassa())).bounded_distributive_lattice);
}

TEST(Structure, UnitsOfBooleanSquare) {
    const auto b = build_catalog(CatalogSpec::boolean());
    EXPECT_EQ(units(product_semiring({b, b})).size(), 1u);
}

TEST(MonoidExtension, PIsUniquePrimeWithSquareZero) {
    const auto s = build_catalog(CatalogSpec::idempotent_monoid_ext());
    const Tab t = Tab::of(s);
    const oracle::Mask p = t.all() & ~oracle::bit(t.one);
    const auto ideals = oracle::all_ideals(t);
    int primes = 0;
    for (oracle::Mask i : ideals)
        if (oracle::is_prime(t, i, ideals)) {
            ++primes;
            EXPECT_EQ(i, p);
        }
    EXPECT_EQ(primes, 1);
    EXPECT_EQ(oracle::product(t, p, p), oracle::bit(t.zero));
}

TEST(Tropical, IntervalLawMatchesLinearCombinations) {
    using namespace tropical;
    std::mt19937 rng(3);
    for (Value n = 0; n <= 12; ++n) {
        std::uniform_int_distribution<Value> g(0, n);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Value> gens(1 + trial % 3);
            for (auto& x : gens) x = g(rng);
            std::vector<bool> reach(n + 1, false);
            // min over s_i + g_i with s_i in [0, n] or +inf
            std::vector<Value> s(gens.size(), 0);
            while (true) {
                Value v = kInf;
                for (std::size_t k = 0; k < gens.size(); ++k)
                    if (s[k] <= n) v = std::min(v, s[k] + gens[k]);
                if (v <= n) reach[v] = true;
                std::size_t k = 0;
                while (k < s.size() && ++s[k] > n + 1) s[k++] = 0;
                if (k == s.size()) break;
            }
            for (Value x = 0; x <= n; ++x) EXPECT_EQ(ideal_member(x, gens), reach[x]) << "x=" << x;
            EXPECT_TRUE(ideal_member(kInf, gens));
        }
    }
}

TEST(Tropical, ArithmeticIsMinPlus) {
    using namespace tropical;
    EXPECT_EQ(add(3, 5), 3u);
    EXPECT_EQ(mul(3, 5), 8u);
    EXPECT_EQ(mul(3, kInf), kInf);
    EXPECT_EQ(add(kInf, 4), 4u);
}

TEST(Tropical, GaussianCheckExamples) {
    using namespace tropical;
    const Value x1[] = {kInf, 0};
    const auto x = Poly::from_coeffs(x1);
    EXPECT_TRUE(gaussian_check(x, x).holds);
    EXPECT_EQ(gaussian_check(x, x).content_fg, 0u);
    const Value fc[] = {3, 1}, gc[] = {2, 4};
    const auto r = gaussian_check(Poly::from_coeffs(fc), Poly::from_coeffs(gc));
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.content_fg, 3u);
    const Poly zero;
    EXPECT_TRUE(poly_mul(zero, x).is_zero());
    EXPECT_EQ(zero.content_min(), kInf);
}

TEST(Tropical, RandomPairsAreGaussian) {
    using namespace tropical;
    std::mt19937 rng(17);
    std::uniform_int_distribution<Value> c(0, 30);
    std::uniform_int_distribution<int> d(0, 6);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Value> fc(d(rng) + 1), gc(d(rng) + 1);
        for (auto& v : fc) v = c(rng);
        for (auto& v : gc) v = c(rng);
        const auto f = Poly::from_coeffs(fc), g = Poly::from_coeffs(gc);
        // hand convolution
        Value m = kInf;
        for (std::size_t i = 0; i < fc.size(); ++i)
            for (std::size_t j = 0; j < gc.size(); ++j) m = std::min(m, fc[i] + gc[j]);
        EXPECT_EQ(poly_mul(f, g).content_min(), m);
        EXPECT_TRUE(gaussian_check(f, g).holds);
    }
}

TEST(SpotChecks, NaturalAndArcticWitnesses) {
    const auto n = natural::spot_check(2, 12);
    EXPECT_TRUE(n.p_prime_on_window);
    EXPECT_TRUE(n.p_not_subtractive);
    EXPECT_TRUE(n.containment_fails);
    const auto a = arctic::spot_check(1);
    EXPECT_TRUE(a.containment_fails);
    EXPECT_TRUE(a.radical_not_subtractive);
}

TEST(Json, SemiringRoundTrip) {
    for (const auto& m : small_catalog(5)) {
        const Json j = semiring_to_json(m.semiring);
        const auto back = semiring_from_json(parse_json(j.dump()));
        EXPECT_EQ(back.tables().add, m.semiring.tables().add) << m.name;
        EXPECT_EQ(back.labels(), m.semiring.labels()) << m.name;
    }
}

TEST(Json, CatalogSpecRoundTrip) {
    const std::vector<CatalogSpec> specs = {
        CatalogSpec::b_n_i(5, 2), CatalogSpec::truncation(3), CatalogSpec::idempotent_monoid_ext(),
        CatalogSpec::product({CatalogSpec::nil_chain(3), CatalogSpec::boolean()})};
    for (const auto& spec : specs) {
        const CatalogSpec back = catalog_spec_from_json(catalog_spec_to_json(spec));
        EXPECT_EQ(describe(back), describe(spec));
        EXPECT_EQ(load_semiring(catalog_spec_to_json(spec)).size(), build_catalog(spec).size());
    }
}

TEST(Json, ParseCatalogExpressions) {
    EXPECT_EQ(describe(parse_catalog("nil_chain", {{"n", "4"}})), "nil_chain(4)");
    EXPECT_EQ(describe(parse_catalog("b_n_i(4,2)")), "b_n_i(4,2)");
    EXPECT_EQ(describe(parse_catalog("LaGrassa")), "lagrassa");
    EXPECT_EQ(build_catalog(parse_catalog("product(nil_chain(3),boolean)")).size(), 6u);
    EXPECT_THROW(parse_catalog("nil_chain", {{"bogus", "1"}}), BadParams);
    EXPECT_THROW(parse_catalog("no_such_family"), Error);
}

TEST(Json, MalformedInputsThrow) {
    EXPECT_THROW(parse_json("{not json"), ParseError);
    EXPECT_THROW(semiring_from_json(parse_json(R"({"elements": ["0"]})")), ParseError);
    const char* broken = R"({"elements":["0","1"],"add":[[0,1],[1,1]],"mul":[[0,0],[0,0]],"zero":0,"one":1})";
    EXPECT_THROW(semiring_from_json(parse_json(broken)), ValidationError);
    EXPECT_THROW(read_file("/nonexistent/semiring.json"), IoError);
}
