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

// Formal power series truncated at a fixed total degree.

#include "semiring_lab/gaussian.hpp"

#include <map>
#include <optional>
#include <string>

namespace slab {

/// Terms of total degree < order; exponents are nonnegative.
class TruncatedSeries {
public:
    TruncatedSeries(FiniteSemiring s, unsigned order);
    /// Terms at or past the order are dropped. Throws LaurentViolation on negative exponents.
    static TruncatedSeries from_polynomial(const Polynomial& p, unsigned order);

    /// Adds c to the coefficient of m; ignored when deg m >= order.
    void add_term(const Monomial& m, Elem c);

    const FiniteSemiring& semiring() const { return s_; }
    unsigned order() const { return order_; }
    const std::map<Monomial, Elem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    ElementSet support() const;
    Polynomial to_polynomial() const;
    /// Polynomial notation followed by " + O(order)".
    std::string to_string() const;

    bool operator==(const TruncatedSeries& o) const;

private:
    FiniteSemiring s_;
    unsigned order_;
    std::map<Monomial, Elem> terms_;
};

/// Both throw MixedSemirings or MixedOrders.
TruncatedSeries ps_add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries ps_mul(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries ps_pow(const TruncatedSeries& f, unsigned k);

/// Ideal generated by the stored coefficients.
Ideal series_content(const TruncatedSeries& f);

struct SeriesContentCheck {
    unsigned order = 0, support_degree = 0;
    /// A_fg <= A_f A_g on every pair.
    bool containment = true;
    /// A_f A_g <= sqrt(A_fg) on every pair.
    bool radical = true;
    bool weak_gaussian = true;
    /// radical == weak_gaussian.
    bool agrees = true;
    std::uint64_t space = 0;
    std::optional<TruncatedSeries> f, g, fg;
};

/// Sweeps univariate series with support in degrees < D. Needs 2D <= N so the
/// product is never truncated; throws BadParams otherwise.
SeriesContentCheck series_content_check(const FiniteSemiring& s, unsigned order, unsigned support_degree,
                                        const SweepOptions& options = {});

struct SeriesPrimeCheck {
    bool proper = true;
    bool prime = false, subtractive = false;
    /// No pair with fg in P[[X]] and f, g outside it.
    bool extension_prime_bounded = false;
    bool agrees = false;
    std::optional<TruncatedSeries> f, g;
};

SeriesPrimeCheck ps_prime_extension_check(const FiniteSemiring& s, ElementSet p, unsigned order,
                                          unsigned support_degree, const SweepOptions& options = {});

struct SeriesNilCheck {
    bool holds = true;
    std::uint64_t checked = 0;
    std::optional<TruncatedSeries> witness;
};

/// Every series with coefficients in Nil(S) and support degree < D reaches 0
/// modulo X^N after at most N * |S| multiplications.
SeriesNilCheck series_nil_check(const FiniteSemiring& s, unsigned order, unsigned support_degree,
                                const SweepOptions& options = {});

} // namespace slab
