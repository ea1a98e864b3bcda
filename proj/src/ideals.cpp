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

#include "semiring_lab/ideals.hpp"

#include <algorithm>
#include <unordered_set>

namespace slab {

IdealArithmetic::IdealArithmetic(FiniteSemiring semiring) : s_(std::move(semiring)) {
    const std::size_t n = s_.size();
    mul_row_.resize(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            mul_row_[a].insert(s_.mul(static_cast<Elem>(a), static_cast<Elem>(b)));
}

ElementSet IdealArithmetic::closure(ElementSet gens) {
    if (auto it = closure_memo_.find(gens.bits()); it != closure_memo_.end()) return it->second;

    ElementSet result = ElementSet::single(s_.zero());
    for (Elem g : gens) result |= mul_row_[g];
    std::vector<Elem> list = result.to_vector();
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Elem z = s_.add(list[i], list[j]);
            if (!result.contains(z)) {
                result.insert(z);
                list.push_back(z);
            }
        }
    }
    closure_memo_.emplace(gens.bits(), result);
    return result;
}

ElementSet IdealArithmetic::product(ElementSet i, ElementSet j) {
    ElementSet gens;
    for (Elem a : i)
        for (Elem b : j) gens.insert(s_.mul(a, b));
    return closure(gens);
}

ElementSet IdealArithmetic::power(ElementSet i, unsigned k) {
    ElementSet r = s_.all();
    for (unsigned t = 0; t < k; ++t) r = product(r, i);
    return r;
}

ElementSet IdealArithmetic::scale(Elem s, ElementSet i) const {
    ElementSet r;
    for (Elem x : i) r.insert(s_.mul(s, x));
    return r;
}

ElementSet IdealArithmetic::radical(ElementSet i) {
    if (auto it = radical_memo_.find(i.bits()); it != radical_memo_.end()) return it->second;
    // s^k in I for some k iff s^|S| in I: the power sequence repeats within |S| steps
    const auto n = static_cast<unsigned>(s_.size());
    ElementSet r;
    for (std::size_t e = 0; e < s_.size(); ++e)
        if (i.contains(s_.pow(static_cast<Elem>(e), n))) r.insert(static_cast<Elem>(e));
    radical_memo_.emplace(i.bits(), r);
    return r;
}

ElementSet IdealArithmetic::annihilator(ElementSet subset) const {
    ElementSet r;
    for (std::size_t e = 0; e < s_.size(); ++e) {
        bool kills = true;
        for (Elem x : subset) {
            if (s_.mul(static_cast<Elem>(e), x) != s_.zero()) {
                kills = false;
                break;
            }
        }
        if (kills) r.insert(static_cast<Elem>(e));
    }
    return r;
}

std::optional<std::pair<Elem, Elem>> IdealArithmetic::subtractive_witness(ElementSet i) const {
    const ElementSet outside = s_.all() - i;
    for (Elem a : i)
        for (Elem b : outside)
            if (i.contains(s_.add(a, b))) return std::pair{a, b};
    return std::nullopt;
}

std::optional<std::pair<Elem, Elem>> IdealArithmetic::prime_witness(ElementSet i) const {
    const ElementSet outside = s_.all() - i;
    for (Elem a : outside)
        for (Elem b : outside)
            if (a <= b && i.contains(s_.mul(a, b))) return std::pair{a, b};
    return std::nullopt;
}

Ideal ideal_generated(const FiniteSemiring& s, ElementSet gens) {
    IdealArithmetic ar(s);
    return Ideal(s, ar.closure(gens), gens.to_vector());
}

Ideal ideal_generated(const FiniteSemiring& s, std::span<const Elem> gens) {
    for (Elem g : gens)
        if (g >= s.size()) throw BadParams("generator index out of range");
    IdealArithmetic ar(s);
    return Ideal(s, ar.closure(ElementSet::of(gens)), std::vector<Elem>(gens.begin(), gens.end()));
}

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
    require_same(i.semiring(), j.semiring(), "ideal_sum");
    IdealArithmetic ar(i.semiring());
    return Ideal(i.semiring(), ar.sum(i.members(), j.members()));
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
    require_same(i.semiring(), j.semiring(), "ideal_product");
    IdealArithmetic ar(i.semiring());
    return Ideal(i.semiring(), ar.product(i.members(), j.members()));
}

Ideal ideal_intersect(const Ideal& i, const Ideal& j) {
    require_same(i.semiring(), j.semiring(), "ideal_intersect");
    return Ideal(i.semiring(), i.members() & j.members());
}

SubtractiveVerdict is_subtractive(const Ideal& i) {
    IdealArithmetic ar(i.semiring());
    auto w = ar.subtractive_witness(i.members());
    return {!w.has_value(), w};
}

SubtractiveSemiringVerdict is_subtractive_semiring(const FiniteSemiring& s) {
    IdealArithmetic ar(s);
    std::unordered_set<ElementSet> seen;
    for (std::size_t x = 0; x < s.size(); ++x) {
        for (std::size_t y = x; y < s.size(); ++y) {
            ElementSet gens = ElementSet::single(static_cast<Elem>(x));
            gens.insert(static_cast<Elem>(y));
            const ElementSet n = ar.closure(gens);
            if (!seen.insert(n).second) continue;
            if (auto w = ar.subtractive_witness(n)) {
                SubtractiveSemiringVerdict v;
                v.holds = false;
                v.generators = std::pair{static_cast<Elem>(x), static_cast<Elem>(y)};
                v.ideal = n;
                v.witness = w;
                return v;
            }
        }
    }
    return {};
}

PrimeVerdict prime_verdict(const Ideal& i) {
    PrimeVerdict v;
    if (i.is_whole()) {
        v.proper = false;
        return v;
    }
    IdealArithmetic ar(i.semiring());
    v.witness = ar.prime_witness(i.members());
    v.holds = !v.witness;
    return v;
}

bool is_prime(const Ideal& i) { return prime_verdict(i).holds; }

bool IdealLattice::contains(ElementSet i) const {
    return std::find(ideals_.begin(), ideals_.end(), i) != ideals_.end();
}

IdealLattice enumerate_ideals(const FiniteSemiring& s, std::size_t cap) {
    const std::size_t n = s.size();
    if (n > cap) {
        throw CapExceeded("ideal lattice enumeration needs |S| <= " + std::to_string(cap) + ", got " +
                          std::to_string(n));
    }
    IdealArithmetic ar(s);
    const ElementSet full = s.all();
    std::vector<ElementSet> out;
    ElementSet a = ar.closure({});
    out.push_back(a);
    while (a != full) {
        bool advanced = false;
        for (std::size_t k = n; k-- > 0;) {
            const auto i = static_cast<Elem>(k);
            if (a.contains(i)) {
                a.erase(i);
                continue;
            }
            ElementSet with = a;
            with.insert(i);
            const ElementSet b = ar.closure(with);
            const ElementSet lower = ElementSet::full(k);
            if (((b - a) & lower).empty()) {
                a = b;
                out.push_back(a);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return IdealLattice(s, std::move(out));
}

std::vector<ElementSet> prime_ideals(const IdealLattice& lattice) {
    IdealArithmetic ar(lattice.semiring());
    std::vector<ElementSet> out;
    for (auto i : lattice.ideals())
        if (ar.is_prime(i)) out.push_back(i);
    return out;
}

std::vector<ElementSet> minimal_primes(const IdealLattice& lattice) {
    const auto primes = prime_ideals(lattice);
    std::vector<ElementSet> out;
    for (auto p : primes) {
        bool minimal = std::none_of(primes.begin(), primes.end(),
                                    [&](ElementSet q) { return q != p && q.subset_of(p); });
        if (minimal) out.push_back(p);
    }
    return out;
}

std::vector<ElementSet> maximal_ideals(const IdealLattice& lattice) {
    const ElementSet full = lattice.semiring().all();
    std::vector<ElementSet> proper;
    for (auto i : lattice.ideals())
        if (i != full) proper.push_back(i);
    std::vector<ElementSet> out;
    for (auto m : proper) {
        bool maximal = std::none_of(proper.begin(), proper.end(),
                                    [&](ElementSet j) { return j != m && m.subset_of(j); });
        if (maximal) out.push_back(m);
    }
    return out;
}

namespace {
std::vector<Ideal> wrap(const FiniteSemiring& s, const std::vector<ElementSet>& sets) {
    std::vector<Ideal> out;
    for (auto m : sets) out.emplace_back(s, m);
    return out;
}
} // namespace

std::vector<Ideal> spec(const FiniteSemiring& s, std::size_t cap) {
    return wrap(s, prime_ideals(enumerate_ideals(s, cap)));
}

std::vector<Ideal> min_primes(const FiniteSemiring& s, std::size_t cap) {
    return wrap(s, minimal_primes(enumerate_ideals(s, cap)));
}

std::vector<Ideal> max_ideals(const FiniteSemiring& s, std::size_t cap) {
    return wrap(s, maximal_ideals(enumerate_ideals(s, cap)));
}

Ideal nil_radical(const FiniteSemiring& s) {
    IdealArithmetic ar(s);
    return Ideal(s, ar.radical(ElementSet::single(s.zero())));
}

Ideal radical(const Ideal& i) {
    IdealArithmetic ar(i.semiring());
    return Ideal(i.semiring(), ar.radical(i.members()));
}

Ideal annihilator(const FiniteSemiring& s, ElementSet subset) {
    IdealArithmetic ar(s);
    return Ideal(s, ar.annihilator(subset));
}

ElementSet intersect_all(std::span<const ElementSet> sets, ElementSet all) {
    ElementSet r = all;
    for (auto s : sets) r &= s;
    return r;
}

} // namespace slab
