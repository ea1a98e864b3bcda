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
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace slab {

inline constexpr std::size_t kDefaultLatticeCap = 12;

/// A subset of a semiring closed under addition and under multiplication by
/// arbitrary elements, optionally remembering the generators it came from.
class Ideal {
public:
    Ideal(FiniteSemiring semiring, ElementSet members,
          std::optional<std::vector<Elem>> generators = std::nullopt)
        : semiring_(std::move(semiring)), members_(members), generators_(std::move(generators)) {}

    const FiniteSemiring& semiring() const { return semiring_; }
    ElementSet members() const { return members_; }
    const std::optional<std::vector<Elem>>& generators() const { return generators_; }
    bool contains(Elem e) const { return members_.contains(e); }
    std::size_t size() const { return members_.size(); }
    bool is_whole() const { return members_ == semiring_.all(); }
    bool subset_of(const Ideal& o) const { return members_.subset_of(o.members_); }
    std::vector<std::string> labels() const { return semiring_.labels_of(members_); }

    bool operator==(const Ideal& o) const { return members_ == o.members_ && semiring_.same_as(o.semiring_); }

private:
    FiniteSemiring semiring_;
    ElementSet members_;
    std::optional<std::vector<Elem>> generators_;
};

/// Memoizing ideal arithmetic over bit masks for one semiring.
///
/// Exhaustive sweeps call closure() on millions of coefficient sets drawn from
/// a small universe, so results are cached. Not thread-safe; give each thread
/// its own instance.
class IdealArithmetic {
public:
    explicit IdealArithmetic(FiniteSemiring semiring);

    const FiniteSemiring& semiring() const { return s_; }

    /// Least ideal containing `gens`: the additive closure of S * gens plus 0.
    ElementSet closure(ElementSet gens);
    ElementSet sum(ElementSet i, ElementSet j) { return closure(i | j); }
    ElementSet product(ElementSet i, ElementSet j);
    ElementSet power(ElementSet i, unsigned k);
    /// {s*x : x in i}; an ideal whenever i is.
    ElementSet scale(Elem s, ElementSet i) const;
    ElementSet radical(ElementSet i);
    ElementSet annihilator(ElementSet subset) const;

    /// (a, b) with a in I, a+b in I, b not in I; nullopt when I is subtractive.
    std::optional<std::pair<Elem, Elem>> subtractive_witness(ElementSet i) const;
    bool is_subtractive(ElementSet i) const { return !subtractive_witness(i).has_value(); }
    /// (a, b) outside I with ab in I; nullopt when the pair condition holds.
    std::optional<std::pair<Elem, Elem>> prime_witness(ElementSet i) const;
    bool is_prime(ElementSet i) const { return i != s_.all() && !prime_witness(i); }

private:
    FiniteSemiring s_;
    std::vector<ElementSet> mul_row_;  // mul_row_[a] = {a*s : s in S}
    std::unordered_map<std::uint64_t, ElementSet> closure_memo_;
    std::unordered_map<std::uint64_t, ElementSet> radical_memo_;
};

Ideal ideal_generated(const FiniteSemiring& s, ElementSet gens);
Ideal ideal_generated(const FiniteSemiring& s, std::span<const Elem> gens);

Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_product(const Ideal& i, const Ideal& j);
Ideal ideal_intersect(const Ideal& i, const Ideal& j);

struct SubtractiveVerdict {
    bool holds = true;
    /// a in I and a+b in I but b not in I.
    std::optional<std::pair<Elem, Elem>> witness;
};
SubtractiveVerdict is_subtractive(const Ideal& i);

struct SubtractiveSemiringVerdict {
    bool holds = true;
    /// The two generators of the offending ideal.
    std::optional<std::pair<Elem, Elem>> generators;
    ElementSet ideal;
    /// a in N and a+b in N with b not in N.
    std::optional<std::pair<Elem, Elem>> witness;
};
/// Scans every ideal generated by at most two elements.
SubtractiveSemiringVerdict is_subtractive_semiring(const FiniteSemiring& s);

struct PrimeVerdict {
    bool holds = false;
    bool proper = true;
    std::optional<std::pair<Elem, Elem>> witness;
};
PrimeVerdict prime_verdict(const Ideal& i);
bool is_prime(const Ideal& i);

/// Every ideal of a finite semiring, listed in next-closure (lectic) order.
class IdealLattice {
public:
    IdealLattice(FiniteSemiring s, std::vector<ElementSet> ideals)
        : s_(std::move(s)), ideals_(std::move(ideals)) {}

    const FiniteSemiring& semiring() const { return s_; }
    const std::vector<ElementSet>& ideals() const { return ideals_; }
    std::size_t size() const { return ideals_.size(); }
    bool contains(ElementSet i) const;
    Ideal at(std::size_t k) const { return Ideal(s_, ideals_[k]); }

private:
    FiniteSemiring s_;
    std::vector<ElementSet> ideals_;
};

/// Enumerates Id(S) with Ganter's next-closure over ideal_generated.
/// Throws CapExceeded when |S| > cap.
IdealLattice enumerate_ideals(const FiniteSemiring& s, std::size_t cap = kDefaultLatticeCap);

std::vector<ElementSet> prime_ideals(const IdealLattice& lattice);
std::vector<ElementSet> minimal_primes(const IdealLattice& lattice);
std::vector<ElementSet> maximal_ideals(const IdealLattice& lattice);

std::vector<Ideal> spec(const FiniteSemiring& s, std::size_t cap = kDefaultLatticeCap);
std::vector<Ideal> min_primes(const FiniteSemiring& s, std::size_t cap = kDefaultLatticeCap);
std::vector<Ideal> max_ideals(const FiniteSemiring& s, std::size_t cap = kDefaultLatticeCap);

/// Nilpotent elements {s : s^n = 0 for some n}.
Ideal nil_radical(const FiniteSemiring& s);
/// {s : s^n in I for some n}.
Ideal radical(const Ideal& i);
/// {s : s*x = 0 for all x in subset}.
Ideal annihilator(const FiniteSemiring& s, ElementSet subset);

/// Intersection of a list of element sets; `all` when the list is empty.
ElementSet intersect_all(std::span<const ElementSet> sets, ElementSet all);

} // namespace slab
