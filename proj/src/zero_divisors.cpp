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

#include "semiring_lab/zero_divisors.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <memory>
#include <unordered_set>

namespace slab {

ElementSet zero_divisors(const FiniteSemiring& s) {
    ElementSet z;
    for (Elem a = 0; a < s.size(); ++a)
        for (Elem b = 0; b < s.size(); ++b)
            if (b != s.zero() && s.mul(a, b) == s.zero()) {
                z.insert(a);
                break;
            }
    return z;
}

std::vector<ElementSet> ass_primes(const FiniteSemiring& s) {
    IdealArithmetic ar(s);
    std::vector<ElementSet> out;
    for (Elem a = 0; a < s.size(); ++a) {
        if (a == s.zero()) continue;
        const ElementSet ann = ar.annihilator(ElementSet::single(a));
        if (ar.is_prime(ann)) out.push_back(ann);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool very_few_zero_divisors(const FiniteSemiring& s) {
    ElementSet cover;
    for (ElementSet p : ass_primes(s)) cover |= p;
    return zero_divisors(s).subset_of(cover);
}

PropertyAVerdict property_A(const FiniteSemiring& s, std::size_t visit_cap) {
    IdealArithmetic ar(s);
    const ElementSet z = zero_divisors(s);
    const ElementSet zero = ElementSet::single(s.zero());
    PropertyAVerdict v;
    std::unordered_set<ElementSet> seen;
    std::deque<ElementSet> queue;
    const ElementSet start = ar.closure({});
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        const ElementSet cur = queue.front();
        queue.pop_front();
        ++v.ideals_checked;
        if (ar.annihilator(cur) == zero) {
            v.holds = false;
            v.witness = cur;
            return v;
        }
        for (Elem g : z - cur) {
            const ElementSet next = ar.closure(cur | ElementSet::single(g));
            if (!next.subset_of(z) || !seen.insert(next).second) continue;
            if (seen.size() > visit_cap)
                throw CapExceeded("property_A visited more than " + std::to_string(visit_cap) + " ideals");
            queue.push_back(next);
        }
    }
    return v;
}

bool is_primal(const FiniteSemiring& s) {
    const ElementSet z = zero_divisors(s);
    for (Elem a : z)
        for (Elem b : z)
            if (!z.contains(s.add(a, b))) return false;
    return true;
}

namespace {

std::vector<ElementSet> primes_inside(const IdealLattice& lattice, ElementSet z) {
    std::vector<ElementSet> out;
    for (ElementSet p : prime_ideals(lattice))
        if (p.subset_of(z)) out.push_back(p);
    return out;
}

std::vector<ElementSet> maximal_members(const std::vector<ElementSet>& sets) {
    std::vector<ElementSet> out;
    for (ElementSet p : sets) {
        bool maximal = true;
        for (ElementSet q : sets)
            if (p != q && p.subset_of(q)) maximal = false;
        if (maximal) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<ElementSet>> covers_from(const std::vector<ElementSet>& primes, ElementSet z) {
    if (primes.size() > 20) throw CapExceeded("more than 20 primes inside Z(S)");
    std::vector<std::vector<ElementSet>> out;
    const std::uint32_t k = static_cast<std::uint32_t>(primes.size());
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        ElementSet uni;
        for (std::uint32_t i = 0; i < k; ++i)
            if (mask >> i & 1u) uni |= primes[i];
        if (uni != z) continue;
        bool irredundant = true;
        for (std::uint32_t i = 0; i < k && irredundant; ++i) {
            if (!(mask >> i & 1u)) continue;
            ElementSet others;
            for (std::uint32_t j = 0; j < k; ++j)
                if (j != i && (mask >> j & 1u)) others |= primes[j];
            if (primes[i].subset_of(others)) irredundant = false;
        }
        if (!irredundant) continue;
        std::vector<ElementSet> cover;
        for (std::uint32_t i = 0; i < k; ++i)
            if (mask >> i & 1u) cover.push_back(primes[i]);
        std::sort(cover.begin(), cover.end());
        out.push_back(std::move(cover));
    }
    return out;
}

} // namespace

std::vector<std::vector<ElementSet>> irredundant_prime_covers(const FiniteSemiring& s,
                                                              std::size_t lattice_cap) {
    const ElementSet z = zero_divisors(s);
    return covers_from(primes_inside(enumerate_ideals(s, lattice_cap), z), z);
}

ZdDegree zd_degree(const FiniteSemiring& s, std::size_t lattice_cap) {
    if (!is_weak_gaussian(s, lattice_cap).holds)
        throw NotWeakGaussian("zd_degree is defined for weak Gaussian semirings only");
    const ElementSet z = zero_divisors(s);
    const auto inside = primes_inside(enumerate_ideals(s, lattice_cap), z);
    ZdDegree r;
    r.maximal_primes = maximal_members(inside);
    ElementSet uni;
    for (ElementSet p : r.maximal_primes) uni |= p;
    if (uni == z) r.degree = static_cast<unsigned>(r.maximal_primes.size());
    const auto covers = covers_from(inside, z);
    r.unique = covers.size() == 1 && covers.front() == r.maximal_primes;
    return r;
}

ZeroDivisorProfile zero_divisor_profile(const FiniteSemiring& s, std::size_t lattice_cap) {
    ZeroDivisorProfile p;
    p.zset = zero_divisors(s);
    p.ass_primes = ass_primes(s);
    p.very_few = very_few_zero_divisors(s);
    p.property_a = property_A(s).holds;
    p.primal = is_primal(s);
    const auto inside = primes_inside(enumerate_ideals(s, lattice_cap), p.zset);
    p.maximal_primes_of_z = maximal_members(inside);
    ElementSet uni;
    for (ElementSet q : inside) uni |= q;
    p.few = uni == p.zset;
    if (is_weak_gaussian(s, lattice_cap).holds) p.zd_degree = zd_degree(s, lattice_cap).degree;
    return p;
}

PolyTransferCheck poly_transfer_check(const FiniteSemiring& s, unsigned degree,
                                      const SweepOptions& options, std::size_t lattice_cap) {
    PolyTransferCheck out;
    out.degree = degree;
    out.subtractive = is_subtractive_semiring(s).holds;
    const ElementSet z = zero_divisors(s);
    const auto maximal = maximal_members(primes_inside(enumerate_ideals(s, lattice_cap), z));
    if (is_weak_gaussian(s, lattice_cap).holds) out.zd_base = zd_degree(s, lattice_cap).degree;
    out.primal_case = is_primal(s) && property_A(s).holds;

    PolySpace space(s, SweepWindow::univariate(degree));
    const std::uint64_t n = space.count();
    out.polynomials = n;
    auto kills = std::make_unique<std::atomic<bool>[]>(n);
    for (std::uint64_t i = 0; i < n; ++i) kills[i].store(false);
    const ElementSet zero_set = ElementSet::single(s.zero());
    sweep_pairs(space, options, [&](IdealArithmetic&, const PairView& v) {
        if (v.cg == zero_set || v.cfg != zero_set) return false;
        kills[v.fi].store(true, std::memory_order_relaxed);
        return false;
    });

    IdealArithmetic ar(s);
    std::vector<ElementSet> contents(n);
    std::vector<bool> zd(n);
    auto in_some_prime = [&](ElementSet c) {
        return std::any_of(maximal.begin(), maximal.end(), [c](ElementSet p) { return c.subset_of(p); });
    };
    auto note = [&](std::uint64_t i) {
        if (!out.witness) out.witness = space.polynomial(i);
    };
    for (std::uint64_t i = 0; i < n; ++i) {
        std::vector<Elem> c(space.slots());
        space.decode(i, c);
        contents[i] = ar.closure(ElementSet::of(c));
        zd[i] = kills[i].load();
        if (zd[i]) ++out.zero_divisors_found;
        const bool predicted = in_some_prime(contents[i]);
        if (zd[i] && !predicted) {
            out.covered = false;
            note(i);
        }
        if (zd[i] != predicted) {
            out.matches = false;
            note(i);
        }
    }

    // Distinct maximal window restrictions of p[X]; distinct primes give distinct
    // restrictions as soon as the window holds constants.
    out.zd_window = static_cast<unsigned>(maximal.size());
    for (ElementSet p : maximal) {
        bool all_zd = true;
        for (std::uint64_t i = 0; i < n; ++i)
            if (contents[i].subset_of(p) && !zd[i]) all_zd = false;
        if (!all_zd) --out.zd_window;
    }

    if (out.primal_case) {
        std::vector<Elem> a(space.slots()), b(space.slots()), c(space.slots());
        auto encode = [&](const std::vector<Elem>& coeffs) {
            std::uint64_t idx = 0;
            for (std::size_t k = coeffs.size(); k-- > 0;) idx = idx * s.size() + coeffs[k];
            return idx;
        };
        for (std::uint64_t i = 0; i < n && out.primal_ideal; ++i) {
            if (!zd[i]) continue;
            if (!contents[i].subset_of(z)) {
                out.primal_ideal = false;
                note(i);
                break;
            }
            space.decode(i, a);
            for (Elem t = 0; t < s.size(); ++t) {
                for (std::size_t k = 0; k < a.size(); ++k) c[k] = s.mul(t, a[k]);
                if (!zd[encode(c)]) {
                    out.primal_ideal = false;
                    note(i);
                    break;
                }
            }
            for (std::uint64_t j = 0; j < n && out.primal_ideal; ++j) {
                if (!zd[j]) continue;
                space.decode(j, b);
                for (std::size_t k = 0; k < a.size(); ++k) c[k] = s.add(a[k], b[k]);
                if (!zd[encode(c)]) {
                    out.primal_ideal = false;
                    note(i);
                }
            }
        }
    }
    return out;
}

} // namespace slab
