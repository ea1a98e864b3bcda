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

// Exhaustive enumeration of polynomials whose monomials lie in a fixed window.
//
// A polynomial in the window is a dense coefficient tuple, one slot per
// monomial in graded order, and is identified by the base-|S| number whose
// k-th digit is the coefficient in slot k. Low-degree polynomials therefore
// come first. Pair sweeps visit (i, j) in lexicographic order and report the
// first violation in that order, with or without threads.

#include "semiring_lab/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace slab {

struct Indeterminate {
    std::string name;
    bool laurent = false;
};

/// Monomials of total degree <= D in the given indeterminates. A Laurent
/// indeterminate ranges over the shifted exponents [-floor(D/2), D - floor(D/2)]
/// and contributes its shifted exponent to the total.
struct SweepWindow {
    std::vector<Indeterminate> indets;
    unsigned degree = 0;
    std::vector<Monomial> monomials;

    static SweepWindow univariate(unsigned degree, const std::string& name = "X");
    static SweepWindow make(std::vector<Indeterminate> indets, unsigned degree);
    std::set<std::string> laurent_names() const;
};

inline constexpr std::uint64_t kDefaultSweepBudget = 400'000'000;

struct SweepOptions {
    bool parallel = false;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
    /// Maximum number of pairs (or polynomials) a sweep may visit.
    std::uint64_t budget = kDefaultSweepBudget;
};

/// The dense polynomial space over one window.
class PolySpace {
public:
    PolySpace(FiniteSemiring s, SweepWindow window);

    const FiniteSemiring& semiring() const { return s_; }
    const SweepWindow& window() const { return window_; }
    std::size_t slots() const { return window_.monomials.size(); }
    std::size_t product_slots() const { return product_monomials_.size(); }
    /// |S|^slots, saturating at UINT64_MAX.
    std::uint64_t count() const { return count_; }

    void decode(std::uint64_t index, std::span<Elem> out) const;
    Polynomial polynomial(std::uint64_t index) const;
    /// Builds a polynomial from a dense product-window tuple.
    Polynomial product_polynomial(std::span<const Elem> coeffs) const;
    /// Dense convolution into the product window.
    void multiply(std::span<const Elem> f, std::span<const Elem> g, std::span<Elem> out) const;

private:
    FiniteSemiring s_;
    SweepWindow window_;
    std::uint64_t count_ = 0;
    std::vector<Monomial> product_monomials_;
    std::vector<std::uint32_t> product_index_;  // slots x slots
};

struct PairView {
    std::uint64_t fi = 0, gi = 0;
    std::span<const Elem> f, g, fg;
    ElementSet cf, cg, cfg;
};

struct PolyView {
    std::uint64_t index = 0;
    std::span<const Elem> coeffs;
    ElementSet support;
    ElementSet content;
};

/// Returns true when the pair violates the property under test.
using PairPredicate = std::function<bool(IdealArithmetic&, const PairView&)>;
using PolyPredicate = std::function<bool(IdealArithmetic&, const PolyView&)>;

struct SweepResult {
    bool holds = true;
    /// Size of the enumerated space.
    std::uint64_t space = 0;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> first;
};

enum class PairOrder { All, Unordered };

/// Visits every pair (i, j), or only j <= i for PairOrder::Unordered, and
/// stops at the first violation. In view terms f is polynomial i and g is
/// polynomial j, so unordered sweeps reach all pairs of small polynomials
/// before any pair involving a larger one. Throws BudgetExceeded when the pair count
/// exceeds options.budget.
SweepResult sweep_pairs(const PolySpace& space, const SweepOptions& options,
                        const PairPredicate& violates, PairOrder order = PairOrder::All);

/// Visits every polynomial; `first` holds (index, 0) of the first violation.
SweepResult sweep_polys(const PolySpace& space, const SweepOptions& options,
                        const PolyPredicate& violates);

} // namespace slab
