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

#include "semiring_lab/ideals.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>

namespace slab {

/// A product of indeterminates with nonzero integer exponents.
/// The empty monomial is 1.
class Monomial {
public:
    Monomial() = default;
    /// X^e; e == 0 gives the unit monomial.
    static Monomial var(const std::string& name, int e = 1);

    const std::map<std::string, int>& exponents() const { return exps_; }
    int exponent(const std::string& name) const;
    bool is_unit() const { return exps_.empty(); }
    int total_degree() const;

    /// Multiplies in name^e, dropping the entry when the exponent cancels.
    void multiply(const std::string& name, int e);
    Monomial operator*(const Monomial& o) const;

    std::string to_string() const;

    bool operator==(const Monomial& o) const = default;
    /// Graded order: total degree first, then lexicographic on (name, exponent).
    std::strong_ordering operator<=>(const Monomial& o) const;

private:
    std::map<std::string, int> exps_;
};

/// Sparse polynomial (or Laurent polynomial) over a finite semiring.
///
/// Negative exponents are allowed only on indeterminates listed in `laurent`.
/// No zero coefficients are stored.
class Polynomial {
public:
    explicit Polynomial(FiniteSemiring s, std::set<std::string> laurent = {});

    static Polynomial constant(const FiniteSemiring& s, Elem c);
    /// coeffs[k] is the coefficient of var^k.
    static Polynomial univariate(const FiniteSemiring& s, std::span<const Elem> coeffs,
                                 const std::string& var = "X");
    static Polynomial univariate(const FiniteSemiring& s, std::initializer_list<Elem> coeffs,
                                 const std::string& var = "X");

    /// Adds c*m to the polynomial. Throws LaurentViolation for a negative
    /// exponent on a non-Laurent indeterminate.
    void add_term(const Monomial& m, Elem c);

    const FiniteSemiring& semiring() const { return s_; }
    const std::map<Monomial, Elem>& terms() const { return terms_; }
    const std::set<std::string>& laurent() const { return laurent_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    Elem coeff(const Monomial& m) const;
    /// Set of nonzero coefficients.
    ElementSet support() const;
    std::set<std::string> indeterminates() const;

    /// Largest / smallest exponent of `var` over all terms; nullopt for the zero polynomial.
    std::optional<int> degree(const std::string& var) const;
    std::optional<int> min_degree(const std::string& var) const;
    std::optional<int> total_degree() const;

    std::string to_string() const;

    bool operator==(const Polynomial& o) const;

private:
    FiniteSemiring s_;
    std::map<Monomial, Elem> terms_;
    std::set<std::string> laurent_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_scale(Elem s, const Polynomial& f);
Polynomial poly_pow(const Polynomial& f, unsigned k);

/// Ideal generated by the coefficients.
Ideal content(const Polynomial& f);

/// h(..., target, ..., folded) -> h(..., target, ..., target^m).
/// Requires m > deg_target(h); throws FoldTooSmall otherwise. Both indeterminates
/// must carry nonnegative exponents in h.
Polynomial star_map(const Polynomial& h, const std::string& target, const std::string& folded,
                    int m);

/// Shifts each polynomial to nonnegative exponents and folds all indeterminates
/// into one with the star map, choosing m = deg f + deg g + 1 at every step.
/// Contents of f, g and fg are unchanged.
std::pair<Polynomial, Polynomial> fold_pair(const Polynomial& f, const Polynomial& g);

/// For a polynomial in at most one indeterminate: max exponent minus min exponent.
/// For several indeterminates: the degree of g after fold_pair(g, g).
/// 0 for the zero polynomial.
unsigned dm_degree(const Polynomial& g);

struct DMReport {
    /// Least m with c(f)^{m+1} c(g) = c(f)^m c(fg); nullopt if none up to bound_used.
    std::optional<unsigned> exponent;
    unsigned bound_used = 0;
    /// The two sides at the reported exponent, or at bound_used on failure.
    ElementSet lhs;
    ElementSet rhs;
    ElementSet cf, cg, cfg;
};

/// Searches m = 0..bound. For a univariate g the bound must be at least
/// dm_degree(g); throws BadParams otherwise. g = 0 yields exponent 0.
DMReport dm_exponent(const Polynomial& f, const Polynomial& g, unsigned bound);

/// The same search on precomputed contents.
std::optional<unsigned> dm_exponent_sets(IdealArithmetic& ar, ElementSet cf, ElementSet cg,
                                         ElementSet cfg, unsigned bound,
                                         ElementSet* lhs = nullptr, ElementSet* rhs = nullptr);

} // namespace slab
