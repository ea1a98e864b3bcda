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

#include "semiring_lab/element_set.hpp"
#include "semiring_lab/errors.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slab {

/// Unvalidated operation tables, as read from JSON or produced by a builder.
struct RawTables {
    std::vector<std::string> elements;
    std::vector<std::vector<long long>> add;
    std::vector<std::vector<long long>> mul;
    long long zero = 0;
    long long one = 1;
};

enum class Axiom {
    Shape,
    AddAssociative,
    AddCommutative,
    AddIdentity,
    MulAssociative,
    MulCommutative,
    MulIdentity,
    OneNotZero,
    Distributive,
    ZeroAbsorbing,
    // Semimodule axioms.
    ScalarDistributive,   // s(m + n) = sm + sn
    ScalarSumDistributive,// (s + t)m = sm + tm
    ScalarAssociative,    // (st)m = s(tm)
    ScalarIdentity,       // 1m = m
    ScalarZero,           // 0m = 0 and s0 = 0
};

const char* to_string(Axiom axiom);

/// One violated axiom together with the first element tuple that breaks it.
struct AxiomViolation {
    Axiom axiom;
    std::vector<Elem> witness;
    std::string detail;
};

class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<AxiomViolation> violations);
    const std::vector<AxiomViolation>& violations() const noexcept { return violations_; }

private:
    std::vector<AxiomViolation> violations_;
};

/// Checks the commutative-semiring axioms exhaustively, O(|S|^3).
/// Returns one entry per violated axiom; an empty result means the tables are valid.
std::vector<AxiomViolation> validate_semiring(const RawTables& tables);

/// A validated finite commutative semiring with absorbing zero and 1 != 0.
///
/// Elements are dense indices with string labels. Instances are immutable and
/// cheap to copy (the tables are shared).
class FiniteSemiring {
public:
    /// Validates and builds; throws ValidationError listing every violated axiom.
    static FiniteSemiring create(const RawTables& tables);

    std::size_t size() const { return impl_->n; }
    Elem zero() const { return impl_->zero; }
    Elem one() const { return impl_->one; }
    Elem add(Elem a, Elem b) const { return impl_->add[a * impl_->n + b]; }
    Elem mul(Elem a, Elem b) const { return impl_->mul[a * impl_->n + b]; }
    Elem pow(Elem a, unsigned n) const;

    const std::string& label(Elem e) const { return impl_->labels[e]; }
    const std::vector<std::string>& labels() const { return impl_->labels; }
    std::optional<Elem> find(std::string_view label) const;
    /// Like find, but throws BadParams for unknown labels.
    Elem at(std::string_view label) const;

    ElementSet all() const { return ElementSet::full(size()); }
    std::vector<std::string> labels_of(ElementSet s) const;

    RawTables tables() const;

    /// True when both values share tables or have identical tables and labels.
    bool same_as(const FiniteSemiring& other) const;

private:
    struct Impl {
        std::size_t n = 0;
        Elem zero = 0;
        Elem one = 1;
        std::vector<Elem> add;
        std::vector<Elem> mul;
        std::vector<std::string> labels;
    };
    explicit FiniteSemiring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const Impl> impl_;
};

/// Throws MixedSemirings unless a and b denote the same semiring.
void require_same(const FiniteSemiring& a, const FiniteSemiring& b, const char* op);

} // namespace slab
