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

#include <algorithm>
#include <functional>
#include <set>

namespace slab {

const char* to_string(Family family) {
    switch (family) {
    case Family::Boolean: return "boolean";
    case Family::ChainLattice: return "chain_lattice";
    case Family::PowerSetLattice: return "power_set_lattice";
    case Family::ChainC: return "chain_C";
    case Family::LaGrassa: return "lagrassa";
    case Family::BNI: return "b_n_i";
    case Family::Truncation: return "truncation";
    case Family::NilChain: return "nil_chain";
    case Family::IdempotentMonoidExt: return "idempotent_monoid_ext";
    case Family::Product: return "product";
    }
    return "unknown";
}

std::optional<Family> family_from_string(const std::string& name) {
    for (auto f : {Family::Boolean, Family::ChainLattice, Family::PowerSetLattice, Family::ChainC,
                   Family::LaGrassa, Family::BNI, Family::Truncation, Family::NilChain,
                   Family::IdempotentMonoidExt, Family::Product}) {
        if (name == to_string(f)) return f;
    }
    return std::nullopt;
}

CatalogSpec CatalogSpec::idempotent_monoid_ext(std::optional<MonoidTable> monoid) {
    CatalogSpec s = make(Family::IdempotentMonoidExt);
    s.monoid = std::move(monoid);
    return s;
}

CatalogSpec CatalogSpec::product(std::vector<CatalogSpec> factors) {
    CatalogSpec s = make(Family::Product);
    s.factors = std::move(factors);
    return s;
}

MonoidTable free_semilattice2() {
    // bit 0 = p, bit 1 = q; addition is union
    return {{"0", "p", "q", "p+q"}, {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}}, 0};
}

std::string describe(const CatalogSpec& spec) {
    const std::string name = to_string(spec.family);
    switch (spec.family) {
    case Family::ChainLattice:
    case Family::PowerSetLattice:
    case Family::NilChain:
        return name + "(" + std::to_string(spec.n) + ")";
    case Family::BNI:
        return name + "(" + std::to_string(spec.n) + "," + std::to_string(spec.i) + ")";
    case Family::Truncation:
        return name + "(" + std::to_string(spec.k) + ")";
    case Family::IdempotentMonoidExt: {
        const auto m = spec.monoid.value_or(free_semilattice2());
        std::string out = name + "({";
        for (std::size_t j = 0; j < m.elements.size(); ++j) out += (j ? "," : "") + m.elements[j];
        return out + "})";
    }
    case Family::Product: {
        std::string out = name + "(";
        for (std::size_t j = 0; j < spec.factors.size(); ++j)
            out += (j ? "," : "") + describe(spec.factors[j]);
        return out + ")";
    }
    default:
        return name;
    }
}

namespace {

using BinOp = std::function<std::size_t(std::size_t, std::size_t)>;

FiniteSemiring from_ops(std::vector<std::string> labels, const BinOp& add, const BinOp& mul) {
    RawTables t;
    const std::size_t n = labels.size();
    t.elements = std::move(labels);
    t.zero = 0;
    t.one = 1;
    t.add.assign(n, std::vector<long long>(n));
    t.mul.assign(n, std::vector<long long>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            t.add[a][b] = static_cast<long long>(add(a, b));
            t.mul[a][b] = static_cast<long long>(mul(a, b));
        }
    }
    return FiniteSemiring::create(t);
}

std::string interior_label(std::size_t j) {
    if (j < 26) return std::string(1, static_cast<char>('a' + j));
    return "c" + std::to_string(j);
}

// Chains store bottom at index 0, top at index 1, interior ranks after that.
struct ChainIndex {
    std::size_t n;
    std::size_t rank(std::size_t idx) const { return idx == 0 ? 0 : idx == 1 ? n - 1 : idx - 1; }
    std::size_t index(std::size_t rank) const { return rank == 0 ? 0 : rank == n - 1 ? 1 : rank + 1; }
    std::vector<std::string> labels() const {
        std::vector<std::string> out{"0", "1"};
        for (std::size_t j = 2; j < n; ++j) out.push_back(interior_label(j - 2));
        return out;
    }
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw BadParams(msg);
}

FiniteSemiring build_chain_lattice(int n) {
    require(n >= 2 && n <= static_cast<int>(kMaxElements), "chain_lattice requires 2 <= n <= 64");
    ChainIndex c{static_cast<std::size_t>(n)};
    return from_ops(
        c.labels(), [&](auto a, auto b) { return c.index(std::max(c.rank(a), c.rank(b))); },
        [&](auto a, auto b) { return c.index(std::min(c.rank(a), c.rank(b))); });
}

FiniteSemiring build_nil_chain(int n) {
    require(n >= 2 && n <= static_cast<int>(kMaxElements), "nil_chain requires 2 <= n <= 64");
    ChainIndex c{static_cast<std::size_t>(n)};
    return from_ops(
        c.labels(), [&](auto a, auto b) { return c.index(std::max(c.rank(a), c.rank(b))); },
        [&](std::size_t a, std::size_t b) -> std::size_t {
            if (a == 1) return b;
            if (b == 1) return a;
            return 0;
        });
}

FiniteSemiring build_power_set(int n) {
    require(n >= 1 && n <= 6, "power_set_lattice requires 1 <= n <= 6");
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<std::size_t> masks{0, full};
    for (std::size_t m = 1; m < full; ++m) masks.push_back(m);
    std::vector<std::size_t> index_of(full + 1);
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < masks.size(); ++j) {
        index_of[masks[j]] = j;
        std::string l = "{";
        bool first = true;
        for (int b = 0; b < n; ++b) {
            if (masks[j] >> b & 1u) {
                l += (first ? "" : ",") + std::to_string(b + 1);
                first = false;
            }
        }
        labels.push_back(l + "}");
    }
    return from_ops(
        labels, [&](auto a, auto b) { return index_of[masks[a] | masks[b]]; },
        [&](auto a, auto b) { return index_of[masks[a] & masks[b]]; });
}

FiniteSemiring build_chain_c() {
    // 0 < u < 1, stored as indices 0, 2, 1
    ChainIndex c{3};
    return from_ops(
        {"0", "1", "u"},
        [&](std::size_t a, std::size_t b) -> std::size_t {
            if (a == 1 && b == 1) return 2;
            return c.index(std::max(c.rank(a), c.rank(b)));
        },
        [&](auto a, auto b) { return c.index(std::min(c.rank(a), c.rank(b))); });
}

FiniteSemiring build_lagrassa() {
    return from_ops(
        {"0", "1", "u"},
        [](std::size_t a, std::size_t b) -> std::size_t {
            if (a == 0) return b;
            if (b == 0) return a;
            return a == b ? a : 2;  // 1+u = u
        },
        [](std::size_t a, std::size_t b) -> std::size_t {
            if (a == 0 || b == 0) return 0;
            if (a == 1) return b;
            if (b == 1) return a;
            return 2;  // u*u = u
        });
}

FiniteSemiring build_bni(int n, int i) {
    require(i > 0 && i < n, "b_n_i requires 0 < i < n");
    require(n <= static_cast<int>(kMaxElements), "b_n_i requires n <= 64");
    const auto N = static_cast<std::size_t>(n);
    const auto I = static_cast<std::size_t>(i);
    auto reduce = [=](std::size_t x) { return x <= N - 1 ? x : I + (x - I) % (N - I); };
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < N; ++v) labels.push_back(std::to_string(v));
    return from_ops(
        labels, [&](auto a, auto b) { return reduce(a + b); },
        [&](auto a, auto b) { return reduce(a * b); });
}

FiniteSemiring build_truncation(int k) {
    require(k >= 1 && k + 2 <= static_cast<int>(kMaxElements), "truncation requires 1 <= k <= 62");
    // index 0 = -inf, index v+1 = value v
    std::vector<std::string> labels{"-inf"};
    for (int v = 0; v <= k; ++v) labels.push_back(std::to_string(v));
    const auto K = static_cast<std::size_t>(k);
    return from_ops(
        labels, [](auto a, auto b) { return std::max(a, b); },
        [&](std::size_t a, std::size_t b) -> std::size_t {
            if (a == 0 || b == 0) return 0;
            return std::min((a - 1) + (b - 1), K) + 1;
        });
}

void validate_monoid(const MonoidTable& m) {
    const std::size_t n = m.elements.size();
    require(n >= 1 && n + 1 <= kMaxElements, "monoid must have 1..63 elements");
    require(m.add.size() == n, "monoid table has wrong row count");
    for (const auto& row : m.add) {
        require(row.size() == n, "monoid table is not square");
        for (auto v : row) require(v >= 0 && v < static_cast<long long>(n), "monoid entry out of range");
    }
    require(m.zero >= 0 && m.zero < static_cast<long long>(n), "monoid zero out of range");
    auto A = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(m.add[a][b]); };
    const auto z = static_cast<std::size_t>(m.zero);
    for (std::size_t a = 0; a < n; ++a) {
        require(A(a, z) == a, "monoid zero is not an identity");
        require(A(a, a) == a, "monoid is not idempotent at " + m.elements[a]);
        for (std::size_t b = 0; b < n; ++b) {
            require(A(a, b) == A(b, a), "monoid is not commutative");
            for (std::size_t c = 0; c < n; ++c)
                require(A(A(a, b), c) == A(a, A(b, c)), "monoid is not associative");
        }
    }
}

FiniteSemiring build_monoid_ext(const MonoidTable& m) {
    validate_monoid(m);
    const std::size_t n = m.elements.size();
    const auto z = static_cast<std::size_t>(m.zero);
    // semiring index -> monoid index (index 1 is the adjoined one)
    std::vector<std::size_t> to_monoid{z, n};
    for (std::size_t j = 0; j < n; ++j)
        if (j != z) to_monoid.push_back(j);
    std::vector<std::size_t> to_semiring(n);
    for (std::size_t s = 0; s < to_monoid.size(); ++s)
        if (to_monoid[s] < n) to_semiring[to_monoid[s]] = s;

    std::string one_label = "1";
    while (std::find(m.elements.begin(), m.elements.end(), one_label) != m.elements.end()) one_label += "'";
    std::vector<std::string> labels;
    for (auto j : to_monoid) labels.push_back(j == n ? one_label : m.elements[j]);

    return from_ops(
        labels,
        [&](std::size_t a, std::size_t b) -> std::size_t {
            if (a == 1 || b == 1) return 1;
            return to_semiring[static_cast<std::size_t>(m.add[to_monoid[a]][to_monoid[b]])];
        },
        [](std::size_t a, std::size_t b) -> std::size_t {
            if (a == 1) return b;
            if (b == 1) return a;
            return 0;
        });
}

} // namespace

FiniteSemiring product_semiring(const std::vector<FiniteSemiring>& factors) {
    if (factors.empty()) throw EmptyProduct("product of an empty list of semirings");
    if (factors.size() == 1) return factors.front();

    std::size_t total = 1;
    for (const auto& f : factors) {
        total *= f.size();
        if (total > kMaxElements) throw BadParams("product has more than 64 elements");
    }
    // tuples in lexicographic order, first factor most significant
    std::vector<std::vector<Elem>> tuples(total, std::vector<Elem>(factors.size()));
    for (std::size_t t = 0; t < total; ++t) {
        std::size_t rest = t;
        for (std::size_t j = factors.size(); j-- > 0;) {
            tuples[t][j] = static_cast<Elem>(rest % factors[j].size());
            rest /= factors[j].size();
        }
    }
    std::vector<Elem> zero_t, one_t;
    for (const auto& f : factors) {
        zero_t.push_back(f.zero());
        one_t.push_back(f.one());
    }
    std::vector<std::vector<Elem>> ordered{zero_t, one_t};
    for (const auto& t : tuples)
        if (t != zero_t && t != one_t) ordered.push_back(t);

    auto index_of = [&](const std::vector<Elem>& t) {
        for (std::size_t j = 0; j < ordered.size(); ++j)
            if (ordered[j] == t) return j;
        return ordered.size();
    };
    std::vector<std::string> labels;
    for (const auto& t : ordered) {
        std::string l = "(";
        for (std::size_t j = 0; j < t.size(); ++j) l += (j ? "," : "") + factors[j].label(t[j]);
        labels.push_back(l + ")");
    }
    auto op = [&](bool is_add) {
        return [&, is_add](std::size_t a, std::size_t b) {
            std::vector<Elem> r(factors.size());
            for (std::size_t j = 0; j < factors.size(); ++j) {
                r[j] = is_add ? factors[j].add(ordered[a][j], ordered[b][j])
                              : factors[j].mul(ordered[a][j], ordered[b][j]);
            }
            return index_of(r);
        };
    };
    return from_ops(labels, op(true), op(false));
}

FiniteSemiring build_catalog(const CatalogSpec& spec) {
    switch (spec.family) {
    case Family::Boolean: return build_chain_lattice(2);
    case Family::ChainLattice: return build_chain_lattice(spec.n);
    case Family::PowerSetLattice: return build_power_set(spec.n);
    case Family::ChainC: return build_chain_c();
    case Family::LaGrassa: return build_lagrassa();
    case Family::BNI: return build_bni(spec.n, spec.i);
    case Family::Truncation: return build_truncation(spec.k);
    case Family::NilChain: return build_nil_chain(spec.n);
    case Family::IdempotentMonoidExt: return build_monoid_ext(spec.monoid.value_or(free_semilattice2()));
    case Family::Product: {
        if (spec.factors.empty()) throw EmptyProduct("product catalog spec without factors");
        std::vector<FiniteSemiring> built;
        for (const auto& f : spec.factors) built.push_back(build_catalog(f));
        return product_semiring(built);
    }
    }
    throw BadParams("unknown catalog family");
}

std::vector<CatalogMember> small_catalog(std::size_t max_size) {
    std::vector<CatalogSpec> specs{CatalogSpec::boolean(), CatalogSpec::chain_c(), CatalogSpec::lagrassa()};
    const int m = static_cast<int>(std::min<std::size_t>(max_size, 8));
    for (int n = 3; n <= m; ++n) specs.push_back(CatalogSpec::chain_lattice(n));
    for (int n = 3; n <= m; ++n) specs.push_back(CatalogSpec::nil_chain(n));
    for (int n = 2; (1 << n) <= m; ++n) specs.push_back(CatalogSpec::power_set_lattice(n));
    for (int n = 3; n <= m; ++n)
        for (int i = 1; i < n; ++i) specs.push_back(CatalogSpec::b_n_i(n, i));
    for (int k = 1; k + 2 <= m; ++k) specs.push_back(CatalogSpec::truncation(k));
    specs.push_back(CatalogSpec::idempotent_monoid_ext());
    const auto B = CatalogSpec::boolean();
    specs.push_back(CatalogSpec::product({B, B}));
    specs.push_back(CatalogSpec::product({B, CatalogSpec::nil_chain(3)}));
    specs.push_back(CatalogSpec::product({B, CatalogSpec::chain_c()}));
    specs.push_back(CatalogSpec::product({B, CatalogSpec::lagrassa()}));

    std::vector<CatalogMember> out;
    for (const auto& s : specs) {
        auto S = build_catalog(s);
        if (S.size() <= max_size) out.push_back({describe(s), s, std::move(S)});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.semiring.size() < b.semiring.size(); });
    return out;
}

} // namespace slab
