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

#include "semiring_lab/power_series.hpp"

#include <atomic>

namespace slab {

TruncatedSeries::TruncatedSeries(FiniteSemiring s, unsigned order) : s_(std::move(s)), order_(order) {}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, unsigned order) {
    TruncatedSeries r(p.semiring(), order);
    for (const auto& [m, c] : p.terms()) r.add_term(m, c);
    return r;
}

void TruncatedSeries::add_term(const Monomial& m, Elem c) {
    if (c >= s_.size()) throw BadParams("coefficient index out of range");
    for (const auto& [n, e] : m.exponents())
        if (e < 0) throw LaurentViolation("power series exponents must be nonnegative");
    if (c == s_.zero() || m.total_degree() >= static_cast<int>(order_)) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (fresh) return;
    it->second = s_.add(it->second, c);
    if (it->second == s_.zero()) terms_.erase(it);
}

ElementSet TruncatedSeries::support() const {
    ElementSet r;
    for (const auto& [m, c] : terms_) r.insert(c);
    return r;
}

Polynomial TruncatedSeries::to_polynomial() const {
    Polynomial p(s_);
    for (const auto& [m, c] : terms_) p.add_term(m, c);
    return p;
}

std::string TruncatedSeries::to_string() const {
    return to_polynomial().to_string() + " + O(" + std::to_string(order_) + ")";
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return order_ == o.order_ && terms_ == o.terms_ && s_.same_as(o.s_);
}

namespace {
void require_compatible(const TruncatedSeries& f, const TruncatedSeries& g, const char* op) {
    require_same(f.semiring(), g.semiring(), op);
    if (f.order() != g.order()) {
        throw MixedOrders(std::string(op) + ": orders " + std::to_string(f.order()) + " and " +
                          std::to_string(g.order()) + " differ");
    }
}
} // namespace

TruncatedSeries ps_add(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_compatible(f, g, "ps_add");
    TruncatedSeries r = f;
    for (const auto& [m, c] : g.terms()) r.add_term(m, c);
    return r;
}

TruncatedSeries ps_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_compatible(f, g, "ps_mul");
    const FiniteSemiring& s = f.semiring();
    TruncatedSeries r(s, f.order());
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms()) r.add_term(mf * mg, s.mul(cf, cg));
    return r;
}

TruncatedSeries ps_pow(const TruncatedSeries& f, unsigned k) {
    TruncatedSeries r(f.semiring(), f.order());
    r.add_term(Monomial{}, f.semiring().one());
    for (unsigned i = 0; i < k; ++i) r = ps_mul(r, f);
    return r;
}

Ideal series_content(const TruncatedSeries& f) {
    return ideal_generated(f.semiring(), f.support());
}

namespace {

void require_window(unsigned order, unsigned support_degree) {
    if (support_degree == 0) throw BadParams("support degree must be at least 1");
    if (2 * support_degree > order) {
        throw BadParams("support degree " + std::to_string(support_degree) +
                        " needs order >= " + std::to_string(2 * support_degree));
    }
}

TruncatedSeries series_at(const PolySpace& space, std::uint64_t index, unsigned order) {
    return TruncatedSeries::from_polynomial(space.polynomial(index), order);
}

} // namespace

SeriesContentCheck series_content_check(const FiniteSemiring& s, unsigned order,
                                        unsigned support_degree, const SweepOptions& options) {
    require_window(order, support_degree);
    SeriesContentCheck out;
    out.order = order;
    out.support_degree = support_degree;
    out.weak_gaussian = is_weak_gaussian(s).holds;

    // Products of degree < 2D never reach the truncation, so the dense
    // polynomial convolution equals the truncated Cauchy product.
    PolySpace space(s, SweepWindow::univariate(support_degree - 1));
    std::atomic<bool> containment{true};
    auto r = sweep_pairs(
        space, options,
        [&](IdealArithmetic& ar, const PairView& v) {
            const ElementSet prod = ar.product(v.cf, v.cg);
            if (!v.cfg.subset_of(prod)) containment.store(false, std::memory_order_relaxed);
            return !prod.subset_of(ar.radical(v.cfg));
        },
        PairOrder::Unordered);
    out.space = r.space;
    out.containment = containment.load();
    out.radical = r.holds;
    if (r.first) {
        out.f = series_at(space, r.first->first, order);
        out.g = series_at(space, r.first->second, order);
        out.fg = ps_mul(*out.f, *out.g);
    }
    out.agrees = out.radical == out.weak_gaussian;
    return out;
}

SeriesPrimeCheck ps_prime_extension_check(const FiniteSemiring& s, ElementSet p, unsigned order,
                                          unsigned support_degree, const SweepOptions& options) {
    require_window(order, support_degree);
    SeriesPrimeCheck out;
    IdealArithmetic ar(s);
    out.proper = p != s.all();
    out.prime = ar.is_prime(p);
    out.subtractive = ar.is_subtractive(p);
    if (!out.proper) {
        out.agrees = !(out.prime && out.subtractive);
        return out;
    }
    PolySpace space(s, SweepWindow::univariate(support_degree - 1));
    auto r = sweep_pairs(
        space, options,
        [p](IdealArithmetic&, const PairView& v) {
            return !v.cf.subset_of(p) && !v.cg.subset_of(p) && v.cfg.subset_of(p);
        },
        PairOrder::Unordered);
    out.extension_prime_bounded = r.holds;
    if (r.first) {
        out.f = series_at(space, r.first->first, order);
        out.g = series_at(space, r.first->second, order);
    }
    out.agrees = out.extension_prime_bounded == (out.prime && out.subtractive);
    return out;
}

SeriesNilCheck series_nil_check(const FiniteSemiring& s, unsigned order, unsigned support_degree,
                                const SweepOptions& options) {
    if (support_degree == 0 || support_degree > order)
        throw BadParams("support degree must lie in [1, order]");
    const ElementSet nil = nil_radical(s).members();
    PolySpace space(s, SweepWindow::univariate(support_degree - 1));
    const unsigned limit = order * static_cast<unsigned>(s.size());
    std::atomic<std::uint64_t> checked{0};
    auto r = sweep_polys(space, options, [&](IdealArithmetic&, const PolyView& v) {
        if (!v.support.subset_of(nil)) return false;
        checked.fetch_add(1, std::memory_order_relaxed);
        const TruncatedSeries f = series_at(space, v.index, order);
        TruncatedSeries power = f;
        for (unsigned k = 1; k < limit && !power.is_zero(); ++k) power = ps_mul(power, f);
        return !power.is_zero();
    });
    SeriesNilCheck out;
    out.holds = r.holds;
    out.checked = checked.load();
    if (r.first) out.witness = series_at(space, r.first->first, order);
    return out;
}

} // namespace slab
