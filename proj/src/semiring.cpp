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

#include "semiring_lab/semiring.hpp"

#include <set>
#include <sstream>

namespace slab {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::EmptyProduct: return "EmptyProduct";
    case ErrorCode::MixedSemirings: return "MixedSemirings";
    case ErrorCode::MixedOrders: return "MixedOrders";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::FoldTooSmall: return "FoldTooSmall";
    case ErrorCode::LaurentViolation: return "LaurentViolation";
    case ErrorCode::NotWeakGaussian: return "NotWeakGaussian";
    case ErrorCode::Io: return "IoError";
    }
    return "Unknown";
}

const char* to_string(Axiom axiom) {
    switch (axiom) {
    case Axiom::Shape: return "shape";
    case Axiom::AddAssociative: return "add_associative";
    case Axiom::AddCommutative: return "add_commutative";
    case Axiom::AddIdentity: return "add_identity";
    case Axiom::MulAssociative: return "mul_associative";
    case Axiom::MulCommutative: return "mul_commutative";
    case Axiom::MulIdentity: return "identity";
    case Axiom::OneNotZero: return "one_not_zero";
    case Axiom::Distributive: return "distributive";
    case Axiom::ZeroAbsorbing: return "zero_absorbing";
    case Axiom::ScalarDistributive: return "scalar_distributive";
    case Axiom::ScalarSumDistributive: return "scalar_sum_distributive";
    case Axiom::ScalarAssociative: return "scalar_associative";
    case Axiom::ScalarIdentity: return "scalar_identity";
    case Axiom::ScalarZero: return "scalar_zero";
    }
    return "unknown";
}

namespace {

std::string describe(const std::vector<AxiomViolation>& violations) {
    std::ostringstream os;
    os << "axioms violated:";
    for (const auto& v : violations) {
        os << ' ' << to_string(v.axiom);
        if (!v.detail.empty()) os << " (" << v.detail << ')';
    }
    return os.str();
}

std::vector<AxiomViolation> check_shape(const RawTables& t) {
    std::vector<AxiomViolation> out;
    auto fail = [&](std::string detail) {
        out.push_back({Axiom::Shape, {}, std::move(detail)});
    };
    const std::size_t n = t.elements.size();
    if (n == 0) {
        fail("empty element list");
        return out;
    }
    if (n > kMaxElements) {
        fail("more than " + std::to_string(kMaxElements) + " elements");
        return out;
    }
    std::set<std::string> seen(t.elements.begin(), t.elements.end());
    if (seen.size() != n) fail("duplicate element labels");
    auto check_table = [&](const std::vector<std::vector<long long>>& table, const char* name) {
        if (table.size() != n) {
            fail(std::string(name) + " table has wrong row count");
            return;
        }
        for (const auto& row : table) {
            if (row.size() != n) {
                fail(std::string(name) + " table is not square");
                return;
            }
            for (long long v : row) {
                if (v < 0 || v >= static_cast<long long>(n)) {
                    fail(std::string(name) + " table entry out of range");
                    return;
                }
            }
        }
    };
    check_table(t.add, "add");
    check_table(t.mul, "mul");
    if (t.zero < 0 || t.zero >= static_cast<long long>(n)) fail("zero index out of range");
    if (t.one < 0 || t.one >= static_cast<long long>(n)) fail("one index out of range");
    return out;
}

} // namespace

ValidationError::ValidationError(std::vector<AxiomViolation> violations)
    : Error(ErrorCode::AxiomViolation, describe(violations)), violations_(std::move(violations)) {}

std::vector<AxiomViolation> validate_semiring(const RawTables& t) {
    auto shape = check_shape(t);
    if (!shape.empty()) return shape;

    const std::size_t n = t.elements.size();
    auto A = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(t.add[a][b]); };
    auto M = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(t.mul[a][b]); };
    const auto zero = static_cast<std::size_t>(t.zero);
    const auto one = static_cast<std::size_t>(t.one);

    std::vector<AxiomViolation> out;
    auto record = [&](Axiom ax, std::vector<std::size_t> w) {
        for (const auto& v : out)
            if (v.axiom == ax) return;
        std::vector<Elem> witness(w.begin(), w.end());
        std::string detail;
        for (std::size_t i = 0; i < w.size(); ++i) detail += (i ? "," : "") + t.elements[w[i]];
        out.push_back({ax, std::move(witness), std::move(detail)});
    };

    if (zero == one) record(Axiom::OneNotZero, {zero});
    for (std::size_t a = 0; a < n; ++a) {
        if (A(a, zero) != a || A(zero, a) != a) record(Axiom::AddIdentity, {a});
        if (M(a, one) != a || M(one, a) != a) record(Axiom::MulIdentity, {a});
        if (M(a, zero) != zero || M(zero, a) != zero) record(Axiom::ZeroAbsorbing, {a});
        for (std::size_t b = 0; b < n; ++b) {
            if (A(a, b) != A(b, a)) record(Axiom::AddCommutative, {a, b});
            if (M(a, b) != M(b, a)) record(Axiom::MulCommutative, {a, b});
            for (std::size_t c = 0; c < n; ++c) {
                if (A(A(a, b), c) != A(a, A(b, c))) record(Axiom::AddAssociative, {a, b, c});
                if (M(M(a, b), c) != M(a, M(b, c))) record(Axiom::MulAssociative, {a, b, c});
                if (M(a, A(b, c)) != A(M(a, b), M(a, c))) record(Axiom::Distributive, {a, b, c});
            }
        }
    }
    return out;
}

FiniteSemiring FiniteSemiring::create(const RawTables& tables) {
    auto violations = validate_semiring(tables);
    if (!violations.empty()) throw ValidationError(std::move(violations));

    auto impl = std::make_shared<Impl>();
    impl->n = tables.elements.size();
    impl->zero = static_cast<Elem>(tables.zero);
    impl->one = static_cast<Elem>(tables.one);
    impl->labels = tables.elements;
    impl->add.reserve(impl->n * impl->n);
    impl->mul.reserve(impl->n * impl->n);
    for (std::size_t a = 0; a < impl->n; ++a) {
        for (std::size_t b = 0; b < impl->n; ++b) {
            impl->add.push_back(static_cast<Elem>(tables.add[a][b]));
            impl->mul.push_back(static_cast<Elem>(tables.mul[a][b]));
        }
    }
    return FiniteSemiring(std::move(impl));
}

Elem FiniteSemiring::pow(Elem a, unsigned n) const {
    Elem r = one();
    for (unsigned i = 0; i < n; ++i) r = mul(r, a);
    return r;
}

std::optional<Elem> FiniteSemiring::find(std::string_view label) const {
    for (std::size_t i = 0; i < impl_->labels.size(); ++i)
        if (impl_->labels[i] == label) return static_cast<Elem>(i);
    return std::nullopt;
}

Elem FiniteSemiring::at(std::string_view label) const {
    if (auto e = find(label)) return *e;
    throw BadParams("unknown element label '" + std::string(label) + "'");
}

std::vector<std::string> FiniteSemiring::labels_of(ElementSet s) const {
    std::vector<std::string> out;
    for (Elem e : s) out.push_back(label(e));
    return out;
}

RawTables FiniteSemiring::tables() const {
    RawTables t;
    t.elements = impl_->labels;
    t.zero = impl_->zero;
    t.one = impl_->one;
    const std::size_t n = impl_->n;
    t.add.assign(n, std::vector<long long>(n));
    t.mul.assign(n, std::vector<long long>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            t.add[a][b] = impl_->add[a * n + b];
            t.mul[a][b] = impl_->mul[a * n + b];
        }
    }
    return t;
}

bool FiniteSemiring::same_as(const FiniteSemiring& other) const {
    if (impl_ == other.impl_) return true;
    return impl_->n == other.impl_->n && impl_->zero == other.impl_->zero &&
           impl_->one == other.impl_->one && impl_->add == other.impl_->add &&
           impl_->mul == other.impl_->mul && impl_->labels == other.impl_->labels;
}

void require_same(const FiniteSemiring& a, const FiniteSemiring& b, const char* op) {
    if (!a.same_as(b)) throw MixedSemirings(std::string(op) + ": operands belong to different semirings");
}

} // namespace slab
