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

#pragma once

#include "semiring_lab/semiring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slab {

enum class Family {
    Boolean,
    ChainLattice,
    PowerSetLattice,
    ChainC,
    LaGrassa,
    BNI,
    Truncation,
    NilChain,
    IdempotentMonoidExt,
    Product,
};

const char* to_string(Family family);
std::optional<Family> family_from_string(const std::string& name);

/// A commutative idempotent monoid, the input to the one-point extension family.
struct MonoidTable {
    std::vector<std::string> elements;
    std::vector<std::vector<long long>> add;
    long long zero = 0;
};

/// Names one member of a built-in family.
///
/// Only the parameters relevant to `family` are read:
///   chain_lattice(n), nil_chain(n): n >= 2 elements in the chain
///   power_set_lattice(n): subsets of an n-element set, 1 <= n <= 6
///   b_n_i(n, i): 0 < i < n
///   truncation(k): carrier {-inf, 0, 1, ..., k}, k >= 1
///   idempotent_monoid_ext: `monoid` (defaults to the free semilattice on two generators)
///   product: `factors`
struct CatalogSpec {
    Family family = Family::Boolean;
    int n = 0;
    int i = 0;
    int k = 0;
    std::optional<MonoidTable> monoid;
    std::vector<CatalogSpec> factors;

    static CatalogSpec make(Family f, int n = 0, int i = 0, int k = 0) {
        CatalogSpec s;
        s.family = f;
        s.n = n;
        s.i = i;
        s.k = k;
        return s;
    }
    static CatalogSpec boolean() { return make(Family::Boolean); }
    static CatalogSpec chain_lattice(int n) { return make(Family::ChainLattice, n); }
    static CatalogSpec power_set_lattice(int n) { return make(Family::PowerSetLattice, n); }
    static CatalogSpec chain_c() { return make(Family::ChainC); }
    static CatalogSpec lagrassa() { return make(Family::LaGrassa); }
    static CatalogSpec b_n_i(int n, int i) { return make(Family::BNI, n, i); }
    static CatalogSpec truncation(int k) { return make(Family::Truncation, 0, 0, k); }
    static CatalogSpec nil_chain(int n) { return make(Family::NilChain, n); }
    static CatalogSpec idempotent_monoid_ext(std::optional<MonoidTable> monoid = std::nullopt);
    static CatalogSpec product(std::vector<CatalogSpec> factors);
};

/// Human-readable name, e.g. "b_n_i(4,2)" or "product(nil_chain(3),nil_chain(3))".
std::string describe(const CatalogSpec& spec);

/// Builds a catalog member. Zero is always index 0 and one index 1.
/// Throws BadParams for out-of-range parameters.
FiniteSemiring build_catalog(const CatalogSpec& spec);

/// Componentwise product. The zero tuple is placed at index 0 and the one
/// tuple at index 1; the rest follow in lexicographic order. A single factor is
/// returned unchanged. Throws EmptyProduct for an empty list.
FiniteSemiring product_semiring(const std::vector<FiniteSemiring>& factors);

/// Free commutative idempotent monoid on two generators: {0, p, q, p+q}.
MonoidTable free_semilattice2();

struct CatalogMember {
    std::string name;
    CatalogSpec spec;
    FiniteSemiring semiring;
};

/// Every catalog member with at most `max_size` elements (max_size <= 8),
/// without isomorphic duplicates between families of the same shape
/// (e.g. chain_lattice(2) and nil_chain(2) are both the Boolean semiring and
/// only "boolean" is listed).
std::vector<CatalogMember> small_catalog(std::size_t max_size);

} // namespace slab
