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

#include "semiring_lab/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace slab {

// ---- Monomial -------------------------------------------------------------

Monomial Monomial::var(const std::string& name, int e) {
    Monomial m;
    m.multiply(name, e);
    return m;
}

int Monomial::exponent(const std::string& name) const {
    auto it = exps_.find(name);
    return it == exps_.end() ? 0 : it->second;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [n, e] : exps_) d += e;
    return d;
}

void Monomial::multiply(const std::string& name, int e) {
    if (e == 0) return;
    int& slot = exps_[name];
    slot += e;
    if (slot == 0) exps_.erase(name);
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (const auto& [n, e] : o.exps_) r.multiply(n, e);
    return r;
}

std::string Monomial::to_string() const {
    std::string out;
    for (const auto& [n, e] : exps_) {
        if (!out.empty()) out += '*';
        out += n;
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    if (auto c = total_degree() <=> o.total_degree(); c != 0) return c;
    return std::lexicographical_compare_three_way(exps_.begin(), exps_.end(), o.exps_.begin(),
                                                  o.exps_.end());
}

// ---- Polynomial -----------------------------------------------------------

Polynomial::Polynomial(FiniteSemiring s, std::set<std::string> laurent)
    : s_(std::move(s)), laurent_(std::move(laurent)) {}

Polynomial Polynomial::constant(const FiniteSemiring& s, Elem c) {
    Polynomial p(s);
    p.add_term(Monomial{}, c);
    return p;
}

Polynomial Polynomial::univariate(const FiniteSemiring& s, std::span<const Elem> coeffs,
                                  const std::string& var) {
    Polynomial p(s);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        p.add_term(Monomial::var(var, static_cast<int>(k)), coeffs[k]);
    return p;
}

Polynomial Polynomial::univariate(const FiniteSemiring& s, std::initializer_list<Elem> coeffs,
                                  const std::string& var) {
    return univariate(s, std::span<const Elem>(coeffs.begin(), coeffs.size()), var);
}

void Polynomial::add_term(const Monomial& m, Elem c) {
    if (c >= s_.size()) throw BadParams("coefficient index out of range");
    for (const auto& [n, e] : m.exponents()) {
        if (e < 0 && !laurent_.contains(n))
            throw LaurentViolation("negative exponent on non-Laurent indeterminate " + n);
    }
    if (c == s_.zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (fresh) return;
    it->second = s_.add(it->second, c);
    if (it->second == s_.zero()) terms_.erase(it);
}

Elem Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? s_.zero() : it->second;
}

ElementSet Polynomial::support() const {
    ElementSet r;
    for (const auto& [m, c] : terms_) r.insert(c);
    return r;
}

std::set<std::string> Polynomial::indeterminates() const {
    std::set<std::string> r;
    for (const auto& [m, c] : terms_)
        for (const auto& [n, e] : m.exponents()) r.insert(n);
    return r;
}

std::optional<int> Polynomial::degree(const std::string& var) const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) d = std::max(d.value_or(m.exponent(var)), m.exponent(var));
    return d;
}

std::optional<int> Polynomial::min_degree(const std::string& var) const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) d = std::min(d.value_or(m.exponent(var)), m.exponent(var));
    return d;
}

std::optional<int> Polynomial::total_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) d = std::max(d.value_or(m.total_degree()), m.total_degree());
    return d;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return s_.label(s_.zero());
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        if (m.is_unit()) out += s_.label(c);
        else if (c == s_.one()) out += m.to_string();
        else out += s_.label(c) + "*" + m.to_string();
    }
    return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return terms_ == o.terms_ && s_.same_as(o.s_);
}

// ---- arithmetic -----------------------------------------------------------

namespace {
std::set<std::string> merged_laurent(const Polynomial& f, const Polynomial& g) {
    std::set<std::string> r = f.laurent();
    r.insert(g.laurent().begin(), g.laurent().end());
    return r;
}
} // namespace

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
    require_same(f.semiring(), g.semiring(), "poly_add");
    Polynomial r(f.semiring(), merged_laurent(f, g));
    for (const auto& [m, c] : f.terms()) r.add_term(m, c);
    for (const auto& [m, c] : g.terms()) r.add_term(m, c);
    return r;
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
    require_same(f.semiring(), g.semiring(), "poly_mul");
    const FiniteSemiring& s = f.semiring();
    Polynomial r(s, merged_laurent(f, g));
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms()) r.add_term(mf * mg, s.mul(cf, cg));
    return r;
}

Polynomial poly_scale(Elem s, const Polynomial& f) {
    Polynomial r(f.semiring(), f.laurent());
    for (const auto& [m, c] : f.terms()) r.add_term(m, f.semiring().mul(s, c));
    return r;
}

Polynomial poly_pow(const Polynomial& f, unsigned k) {
    Polynomial r = Polynomial::constant(f.semiring(), f.semiring().one());
    for (unsigned i = 0; i < k; ++i) r = poly_mul(r, f);
    return r;
}

Ideal content(const Polynomial& f) {
    return ideal_generated(f.semiring(), f.support());
}

// ---- star map -------------------------------------------------------------

Polynomial star_map(const Polynomial& h, const std::string& target, const std::string& folded,
                    int m) {
    if (target == folded) throw BadParams("star_map: target and folded indeterminate coincide");
    const int deg_t = std::max(0, h.degree(target).value_or(0));
    if (m <= deg_t) {
        throw FoldTooSmall("star_map: m = " + std::to_string(m) + " must exceed deg_" + target +
                           " = " + std::to_string(deg_t));
    }
    std::set<std::string> laurent = h.laurent();
    laurent.erase(folded);
    Polynomial r(h.semiring(), laurent);
    for (const auto& [mono, c] : h.terms()) {
        const int et = mono.exponent(target);
        const int ef = mono.exponent(folded);
        if (et < 0 || ef < 0) throw LaurentViolation("star_map needs nonnegative exponents");
        Monomial out = mono;
        out.multiply(folded, -ef);
        out.multiply(target, m * ef);
        r.add_term(out, c);
    }
    if (r.terms().size() != h.terms().size()) throw FoldTooSmall("star_map: monomials collided");
    return r;
}

namespace {

Polynomial shift_nonnegative(const Polynomial& p) {
    Monomial shift;
    for (const auto& v : p.indeterminates()) shift.multiply(v, -p.min_degree(v).value_or(0));
    Polynomial r(p.semiring());
    for (const auto& [m, c] : p.terms()) r.add_term(m * shift, c);
    return r;
}

} // namespace

std::pair<Polynomial, Polynomial> fold_pair(const Polynomial& f, const Polynomial& g) {
    require_same(f.semiring(), g.semiring(), "fold_pair");
    Polynomial a = shift_nonnegative(f);
    Polynomial b = shift_nonnegative(g);
    std::set<std::string> names = a.indeterminates();
    for (const auto& n : b.indeterminates()) names.insert(n);
    std::vector<std::string> vars(names.begin(), names.end());
    while (vars.size() > 1) {
        const std::string folded = vars.back();
        const std::string target = vars[vars.size() - 2];
        const int m = a.degree(target).value_or(0) + b.degree(target).value_or(0) + 1;
        a = star_map(a, target, folded, m);
        b = star_map(b, target, folded, m);
        vars.pop_back();
    }
    return {std::move(a), std::move(b)};
}

unsigned dm_degree(const Polynomial& g) {
    if (g.is_zero()) return 0;
    const auto vars = g.indeterminates();
    if (vars.empty()) return 0;
    if (vars.size() == 1) {
        const auto& v = *vars.begin();
        return static_cast<unsigned>(*g.degree(v) - *g.min_degree(v));
    }
    const auto folded = fold_pair(g, g).second;
    const auto& v = *folded.indeterminates().begin();
    return static_cast<unsigned>(*folded.degree(v));
}

// ---- Dedekind-Mertens -----------------------------------------------------

std::optional<unsigned> dm_exponent_sets(IdealArithmetic& ar, ElementSet cf, ElementSet cg,
                                         ElementSet cfg, unsigned bound, ElementSet* lhs,
                                         ElementSet* rhs) {
    ElementSet power = ar.semiring().all();
    ElementSet l, r;
    for (unsigned m = 0; m <= bound; ++m) {
        const ElementSet next = ar.product(power, cf);
        l = ar.product(next, cg);
        r = ar.product(power, cfg);
        if (l == r) {
            if (lhs) *lhs = l;
            if (rhs) *rhs = r;
            return m;
        }
        power = next;
    }
    if (lhs) *lhs = l;
    if (rhs) *rhs = r;
    return std::nullopt;
}

DMReport dm_exponent(const Polynomial& f, const Polynomial& g, unsigned bound) {
    require_same(f.semiring(), g.semiring(), "dm_exponent");
    DMReport rep;
    rep.bound_used = bound;
    IdealArithmetic ar(f.semiring());
    rep.cf = ar.closure(f.support());
    rep.cg = ar.closure(g.support());
    if (g.is_zero()) {
        rep.exponent = 0;
        rep.cfg = rep.lhs = rep.rhs = ar.closure({});
        return rep;
    }
    if (g.indeterminates().size() <= 1 && bound < dm_degree(g)) {
        throw BadParams("dm_exponent: bound " + std::to_string(bound) + " is below deg g = " +
                        std::to_string(dm_degree(g)));
    }
    rep.cfg = ar.closure(poly_mul(f, g).support());
    rep.exponent = dm_exponent_sets(ar, rep.cf, rep.cg, rep.cfg, bound, &rep.lhs, &rep.rhs);
    return rep;
}

} // namespace slab
