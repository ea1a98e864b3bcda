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

#include "semiring_lab/semimodule.hpp"

#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace slab {

// ---- validation -----------------------------------------------------------

std::vector<AxiomViolation> validate_semimodule(const FiniteSemiring& s, const RawSemimodule& t) {
    std::vector<AxiomViolation> out;
    auto fail = [&](std::string detail) { out.push_back({Axiom::Shape, {}, std::move(detail)}); };
    const std::size_t n = t.elements.size();
    const std::size_t ns = s.size();
    if (n == 0) fail("empty element list");
    if (n > kMaxElements) fail("more than " + std::to_string(kMaxElements) + " elements");
    if (!out.empty()) return out;
    if (std::set<std::string>(t.elements.begin(), t.elements.end()).size() != n)
        fail("duplicate element labels");
    auto in_range = [&](long long v) { return v >= 0 && v < static_cast<long long>(n); };
    if (t.add.size() != n) fail("add table has wrong row count");
    for (const auto& row : t.add) {
        if (row.size() != n) { fail("add table is not square"); break; }
        for (long long v : row)
            if (!in_range(v)) { fail("add table entry out of range"); break; }
    }
    if (t.scalar.size() != ns) fail("scalar table must have one row per semiring element");
    for (const auto& row : t.scalar) {
        if (row.size() != n) { fail("scalar table row has wrong length"); break; }
        for (long long v : row)
            if (!in_range(v)) { fail("scalar table entry out of range"); break; }
    }
    if (!in_range(t.zero)) fail("zero index out of range");
    if (!out.empty()) return out;

    auto A = [&](std::size_t x, std::size_t y) { return static_cast<std::size_t>(t.add[x][y]); };
    auto L = [&](std::size_t a, std::size_t x) { return static_cast<std::size_t>(t.scalar[a][x]); };
    const auto z = static_cast<std::size_t>(t.zero);
    std::vector<bool> seen(static_cast<std::size_t>(Axiom::ScalarZero) + 1, false);
    auto record = [&](Axiom ax, std::vector<std::size_t> w) {
        auto flag = seen[static_cast<std::size_t>(ax)];
        if (flag) return;
        flag = true;
        AxiomViolation v{ax, {}, {}};
        for (auto e : w) v.witness.push_back(static_cast<Elem>(e));
        out.push_back(std::move(v));
    };
    for (std::size_t x = 0; x < n; ++x) {
        if (A(x, z) != x) record(Axiom::AddIdentity, {x});
        if (L(s.one(), x) != x) record(Axiom::ScalarIdentity, {x});
        if (L(s.zero(), x) != z) record(Axiom::ScalarZero, {x});
        for (std::size_t y = 0; y < n; ++y) {
            if (A(x, y) != A(y, x)) record(Axiom::AddCommutative, {x, y});
            for (std::size_t w = 0; w < n; ++w)
                if (A(A(x, y), w) != A(x, A(y, w))) record(Axiom::AddAssociative, {x, y, w});
        }
    }
    for (std::size_t a = 0; a < ns; ++a) {
        if (L(a, z) != z) record(Axiom::ScalarZero, {a});
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y)
                if (L(a, A(x, y)) != A(L(a, x), L(a, y))) record(Axiom::ScalarDistributive, {a, x, y});
            for (std::size_t b = 0; b < ns; ++b) {
                const auto ab = static_cast<Elem>(a);
                const auto bb = static_cast<Elem>(b);
                if (L(s.add(ab, bb), x) != A(L(a, x), L(b, x)))
                    record(Axiom::ScalarSumDistributive, {a, b, x});
                if (L(s.mul(ab, bb), x) != L(a, L(b, x))) record(Axiom::ScalarAssociative, {a, b, x});
            }
        }
    }
    return out;
}

FiniteSemimodule FiniteSemimodule::create(const FiniteSemiring& s, const RawSemimodule& raw) {
    auto violations = validate_semimodule(s, raw);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    auto impl = std::make_shared<Impl>(Impl{s, raw.elements.size(), static_cast<Elem>(raw.zero),
                                            {}, {}, raw.elements});
    const std::size_t n = impl->n;
    impl->add.resize(n * n);
    impl->scalar.resize(s.size() * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) impl->add[x * n + y] = static_cast<Elem>(raw.add[x][y]);
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t x = 0; x < n; ++x)
            impl->scalar[a * n + x] = static_cast<Elem>(raw.scalar[a][x]);
    return FiniteSemimodule(std::move(impl));
}

FiniteSemimodule FiniteSemimodule::regular(const FiniteSemiring& s) {
    const RawTables t = s.tables();
    RawSemimodule r{t.elements, t.add, t.mul, t.zero};
    return create(s, r);
}

FiniteSemimodule FiniteSemimodule::direct_sum(const FiniteSemimodule& a, const FiniteSemimodule& b) {
    require_same(a.semiring(), b.semiring(), "direct_sum");
    const std::size_t na = a.size(), nb = b.size();
    if (na * nb > kMaxElements)
        throw BadParams("direct sum exceeds " + std::to_string(kMaxElements) + " elements");
    auto idx = [nb](std::size_t x, std::size_t y) { return static_cast<long long>(x * nb + y); };
    RawSemimodule r;
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < nb; ++y)
            r.elements.push_back("(" + a.label(static_cast<Elem>(x)) + "," +
                                 b.label(static_cast<Elem>(y)) + ")");
    const std::size_t n = na * nb;
    r.add.assign(n, std::vector<long long>(n));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            r.add[p][q] = idx(a.add(static_cast<Elem>(p / nb), static_cast<Elem>(q / nb)),
                              b.add(static_cast<Elem>(p % nb), static_cast<Elem>(q % nb)));
    const std::size_t ns = a.semiring().size();
    r.scalar.assign(ns, std::vector<long long>(n));
    for (std::size_t s = 0; s < ns; ++s)
        for (std::size_t p = 0; p < n; ++p)
            r.scalar[s][p] = idx(a.act(static_cast<Elem>(s), static_cast<Elem>(p / nb)),
                                 b.act(static_cast<Elem>(s), static_cast<Elem>(p % nb)));
    r.zero = idx(a.zero(), b.zero());
    return create(a.semiring(), r);
}

std::vector<std::string> FiniteSemimodule::labels_of(ElementSet set) const {
    std::vector<std::string> out;
    for (Elem e : set) out.push_back(label(e));
    return out;
}

RawSemimodule FiniteSemimodule::tables() const {
    const std::size_t n = size();
    RawSemimodule r;
    r.elements = labels();
    r.zero = zero();
    r.add.assign(n, std::vector<long long>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            r.add[x][y] = add(static_cast<Elem>(x), static_cast<Elem>(y));
    r.scalar.assign(semiring().size(), std::vector<long long>(n));
    for (std::size_t a = 0; a < semiring().size(); ++a)
        for (std::size_t x = 0; x < n; ++x)
            r.scalar[a][x] = act(static_cast<Elem>(a), static_cast<Elem>(x));
    return r;
}

// ---- subsemimodules -------------------------------------------------------

namespace {

ElementSet additive_closure(const FiniteSemimodule& m, ElementSet seed) {
    seed.insert(m.zero());
    std::vector<Elem> queue = seed.to_vector();
    for (std::size_t k = 0; k < queue.size(); ++k) {
        const Elem x = queue[k];
        for (Elem y : ElementSet(seed)) {
            const Elem z = m.add(x, y);
            if (!seed.contains(z)) {
                seed.insert(z);
                queue.push_back(z);
            }
        }
    }
    return seed;
}

} // namespace

ElementSet ideal_times(const FiniteSemimodule& m, ElementSet ideal, ElementSet sub) {
    ElementSet seed;
    for (Elem a : ideal)
        for (Elem x : sub) seed.insert(m.act(a, x));
    return additive_closure(m, seed);
}

Subsemimodule subsemimodule_generated(const FiniteSemimodule& m, ElementSet gens) {
    return {ideal_times(m, m.semiring().all(), gens), gens.to_vector()};
}

std::vector<ElementSet> all_subsemimodules(const FiniteSemimodule& m, std::size_t cap) {
    const ElementSet all_s = m.semiring().all();
    const ElementSet bottom = ElementSet::single(m.zero());
    std::set<ElementSet> seen{bottom};
    std::deque<ElementSet> queue{bottom};
    while (!queue.empty()) {
        const ElementSet cur = queue.front();
        queue.pop_front();
        for (Elem x : m.all() - cur) {
            const ElementSet next = ideal_times(m, all_s, cur | ElementSet::single(x));
            if (seen.insert(next).second) {
                if (seen.size() > cap)
                    throw CapExceeded("more than " + std::to_string(cap) + " subsemimodules");
                queue.push_back(next);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

SubtractiveSemimoduleVerdict is_subtractive_semimodule(const FiniteSemimodule& m) {
    SubtractiveSemimoduleVerdict v;
    std::unordered_set<ElementSet> checked;
    const ElementSet all_s = m.semiring().all();
    for (Elem x = 0; x < m.size(); ++x) {
        for (Elem y = x; y < m.size(); ++y) {
            ElementSet gens = ElementSet::single(x);
            gens.insert(y);
            const ElementSet n = ideal_times(m, all_s, gens);
            if (!checked.insert(n).second) continue;
            for (Elem a : n) {
                for (Elem b : m.all() - n) {
                    if (n.contains(m.add(a, b))) {
                        v.holds = false;
                        v.generators = std::pair{x, y};
                        v.members = n;
                        v.witness = std::pair{a, b};
                        return v;
                    }
                }
            }
        }
    }
    return v;
}

// ---- content --------------------------------------------------------------

ElementSet content_in(const FiniteSemimodule& m, const IdealLattice& lattice, ElementSet sub, Elem x) {
    ElementSet meet = m.semiring().all();
    for (ElementSet i : lattice.ideals())
        if (ideal_times(m, i, sub).contains(x)) meet &= i;
    return meet;
}

Ideal content_cM(const FiniteSemimodule& m, Elem x, std::size_t lattice_cap) {
    if (x >= m.size()) throw BadParams("element index out of range");
    const IdealLattice lattice = enumerate_ideals(m.semiring(), lattice_cap);
    return Ideal(m.semiring(), content_in(m, lattice, m.all(), x));
}

ContentVerdict is_content_semimodule(const FiniteSemimodule& m, std::size_t lattice_cap) {
    const IdealLattice lattice = enumerate_ideals(m.semiring(), lattice_cap);
    ContentVerdict v;
    for (Elem x = 0; x < m.size(); ++x) {
        const ElementSet c = content_in(m, lattice, m.all(), x);
        if (!ideal_times(m, c, m.all()).contains(x)) {
            v.holds = false;
            v.witness = x;
            break;
        }
    }
    return v;
}

namespace {

// Shortest x = sum of a_i y_i with a_i in `coeffs`.
std::optional<std::vector<std::pair<Elem, Elem>>> represent(const FiniteSemimodule& m,
                                                            ElementSet coeffs, Elem x) {
    const std::size_t n = m.size();
    std::vector<int> parent(n, -1);
    std::vector<std::pair<Elem, Elem>> step(n);
    std::vector<bool> seen(n, false);
    std::deque<Elem> queue{m.zero()};
    seen[m.zero()] = true;
    while (!queue.empty()) {
        const Elem cur = queue.front();
        queue.pop_front();
        if (cur == x) break;
        for (Elem a : coeffs) {
            for (Elem y = 0; y < n; ++y) {
                const Elem next = m.add(cur, m.act(a, y));
                if (seen[next]) continue;
                seen[next] = true;
                parent[next] = cur;
                step[next] = {a, y};
                queue.push_back(next);
            }
        }
    }
    if (!seen[x]) return std::nullopt;
    std::vector<std::pair<Elem, Elem>> terms;
    for (Elem cur = x; parent[cur] >= 0; cur = static_cast<Elem>(parent[cur])) terms.push_back(step[cur]);
    return std::vector<std::pair<Elem, Elem>>(terms.rbegin(), terms.rend());
}

} // namespace

ContentEquivalences content_equivalences(const FiniteSemimodule& m, std::size_t lattice_cap) {
    const IdealLattice lattice = enumerate_ideals(m.semiring(), lattice_cap);
    IdealArithmetic ar(m.semiring());
    ContentEquivalences r;

    std::vector<ElementSet> im;
    for (ElementSet i : lattice.ideals()) im.push_back(ideal_times(m, i, m.all()));
    for (std::size_t p = 0; p < lattice.size() && r.intersection; ++p) {
        for (std::size_t q = p + 1; q < lattice.size(); ++q) {
            const ElementSet meet = lattice.ideals()[p] & lattice.ideals()[q];
            if (ideal_times(m, meet, m.all()) != (im[p] & im[q])) {
                r.intersection = false;
                r.intersection_witness = std::pair{lattice.ideals()[p], lattice.ideals()[q]};
                break;
            }
        }
    }

    for (Elem x = 0; x < m.size(); ++x) {
        const ElementSet c = content_in(m, lattice, m.all(), x);
        auto terms = represent(m, c, x);
        if (!terms) {
            r.content = false;
            continue;
        }
        ContentRepresentation rep{x, std::move(*terms), {}};
        ElementSet coeffs;
        for (const auto& [a, y] : rep.terms) coeffs.insert(a);
        rep.generated = ar.closure(coeffs);
        if (rep.generated != c) r.finitely_generated = false;
        r.representations.push_back(std::move(rep));
    }
    if (!r.content) r.finitely_generated = false;
    r.agrees = r.content == r.intersection;
    return r;
}

SubmoduleCriteria submodule_criteria(const FiniteSemimodule& m, const IdealLattice& lattice,
                                     ElementSet sub) {
    SubmoduleCriteria c;
    c.sub = sub;
    c.c1 = true;
    for (ElementSet i : lattice.ideals()) {
        if ((ideal_times(m, i, m.all()) & sub) != ideal_times(m, i, sub)) {
            c.c1 = false;
            break;
        }
    }
    c.c2 = c.c3 = true;
    for (Elem x : sub) {
        const ElementSet cm = content_in(m, lattice, m.all(), x);
        if (!ideal_times(m, cm, sub).contains(x)) c.c2 = false;
        const ElementSet cn = content_in(m, lattice, sub, x);
        if (!ideal_times(m, cn, sub).contains(x) || cn != cm) c.c3 = false;
    }
    return c;
}

// ---- Dedekind-Mertens -----------------------------------------------------

namespace {

std::vector<Elem> dense_coeffs(const Polynomial& f) {
    for (const auto& v : f.indeterminates())
        if (v != "X") throw BadParams("dm_semimodule: f must be a polynomial in X");
    if (f.is_zero()) return {};
    if (*f.min_degree("X") < 0) throw LaurentViolation("dm_semimodule: negative exponent in f");
    std::vector<Elem> c(static_cast<std::size_t>(*f.degree("X")) + 1, f.semiring().zero());
    for (const auto& [mono, e] : f.terms()) c[static_cast<std::size_t>(mono.exponent("X"))] = e;
    return c;
}

ElementSet module_support(const FiniteSemimodule& m, const ModulePolynomial& g) {
    ElementSet s;
    for (Elem e : g)
        if (e != m.zero()) s.insert(e);
    return s;
}

std::pair<int, int> spread(const FiniteSemimodule& m, const ModulePolynomial& g) {
    int lo = -1, hi = -1;
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k] == m.zero()) continue;
        if (lo < 0) lo = static_cast<int>(k);
        hi = static_cast<int>(k);
    }
    return {lo, hi};
}

ModulePolynomial mul_dense(const FiniteSemimodule& m, std::span<const Elem> f,
                           const ModulePolynomial& g) {
    if (f.empty() || g.empty()) return {};
    ModulePolynomial out(f.size() + g.size() - 1, m.zero());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            out[i + j] = m.add(out[i + j], m.act(f[i], g[j]));
    return out;
}

// Memoised ideal power / I*N products for repeated DM evaluations.
class ModuleDM {
public:
    explicit ModuleDM(const FiniteSemimodule& m) : m_(m), ar_(m.semiring()) {}

    IdealArithmetic& ar() { return ar_; }

    ElementSet times(ElementSet i, ElementSet n) {
        const auto key = std::pair{i.bits(), n.bits()};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const ElementSet r = ideal_times(m_, i, n);
        memo_.emplace(key, r);
        return r;
    }

    std::optional<unsigned> exponent(ElementSet cf, ElementSet cg, ElementSet cfg, unsigned bound,
                                     ElementSet* lhs, ElementSet* rhs) {
        ElementSet power = m_.semiring().all();
        ElementSet l, r;
        for (unsigned k = 0; k <= bound; ++k) {
            const ElementSet next = ar_.product(power, cf);
            l = times(next, cg);
            r = times(power, cfg);
            if (l == r) {
                if (lhs) *lhs = l;
                if (rhs) *rhs = r;
                return k;
            }
            power = next;
        }
        if (lhs) *lhs = l;
        if (rhs) *rhs = r;
        return std::nullopt;
    }

private:
    const FiniteSemimodule& m_;
    IdealArithmetic ar_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, ElementSet> memo_;
};

} // namespace

ModulePolynomial module_poly_mul(const FiniteSemimodule& m, const Polynomial& f,
                                 const ModulePolynomial& g) {
    require_same(f.semiring(), m.semiring(), "module_poly_mul");
    for (Elem e : g)
        if (e >= m.size()) throw BadParams("module coefficient out of range");
    const auto fc = dense_coeffs(f);
    return mul_dense(m, fc, g);
}

ModuleDMReport dm_semimodule(const FiniteSemimodule& m, const Polynomial& f,
                             const ModulePolynomial& g, unsigned bound) {
    ModuleDMReport rep;
    rep.bound_used = bound;
    rep.fg = module_poly_mul(m, f, g);
    ModuleDM dm(m);
    rep.cf = dm.ar().closure(f.support());
    rep.cg = ideal_times(m, m.semiring().all(), module_support(m, g));
    rep.cfg = ideal_times(m, m.semiring().all(), module_support(m, rep.fg));
    const auto [lo, hi] = spread(m, g);
    if (lo < 0) {
        rep.exponent = 0;
        rep.lhs = rep.rhs = rep.cg;
        return rep;
    }
    if (bound < static_cast<unsigned>(hi - lo))
        throw BadParams("dm_semimodule: bound is below deg g");
    rep.exponent = dm.exponent(rep.cf, rep.cg, rep.cfg, bound, &rep.lhs, &rep.rhs);
    return rep;
}

ModuleDMEquivalence dm_semimodule_equivalence(const FiniteSemimodule& m, unsigned degree,
                                              const SweepOptions& options) {
    const FiniteSemiring& s = m.semiring();
    const std::size_t slots = degree + 1;
    long double nf = 1, ng = 1;
    for (std::size_t k = 0; k < slots; ++k) {
        nf *= static_cast<long double>(s.size());
        ng *= static_cast<long double>(m.size());
    }
    if (nf * ng > static_cast<long double>(options.budget))
        throw BudgetExceeded("semimodule DM sweep exceeds budget " + std::to_string(options.budget));

    ModuleDMEquivalence r;
    r.subtractive = is_subtractive_semimodule(m).holds;
    r.space = static_cast<std::uint64_t>(nf * ng);
    ModuleDM dm(m);

    auto decode = [](std::uint64_t index, std::size_t base, std::size_t len) {
        std::vector<Elem> c(len);
        for (auto& e : c) {
            e = static_cast<Elem>(index % base);
            index /= base;
        }
        return c;
    };

    const auto count_f = static_cast<std::uint64_t>(nf);
    const auto count_g = static_cast<std::uint64_t>(ng);
    std::vector<ElementSet> cgs(count_g);
    std::vector<ModulePolynomial> gs(count_g);
    for (std::uint64_t j = 0; j < count_g; ++j) {
        gs[j] = decode(j, m.size(), slots);
        cgs[j] = ideal_times(m, s.all(), module_support(m, gs[j]));
    }
    for (std::uint64_t i = 0; i < count_f && r.dm_holds; ++i) {
        const auto fc = decode(i, s.size(), slots);
        ElementSet fs;
        for (Elem e : fc)
            if (e != s.zero()) fs.insert(e);
        const ElementSet cf = dm.ar().closure(fs);
        for (std::uint64_t j = 0; j < count_g; ++j) {
            const auto [lo, hi] = spread(m, gs[j]);
            if (lo < 0) continue;
            const ModulePolynomial fg = mul_dense(m, fc, gs[j]);
            const ElementSet cfg = dm.times(s.all(), module_support(m, fg));
            if (!dm.exponent(cf, cgs[j], cfg, static_cast<unsigned>(hi - lo), nullptr, nullptr)) {
                r.dm_holds = false;
                r.witness = std::pair{Polynomial::univariate(s, fc), gs[j]};
                break;
            }
        }
    }

    std::unordered_set<ElementSet> probed;
    const Polynomial f = Polynomial::univariate(s, {s.one(), s.one()});
    for (Elem x = 0; x < m.size(); ++x) {
        for (Elem y = x; y < m.size(); ++y) {
            ElementSet gens = ElementSet::single(x);
            gens.insert(y);
            const ElementSet n = ideal_times(m, s.all(), gens);
            if (!probed.insert(n).second) continue;
            std::optional<std::pair<Elem, Elem>> w;
            for (Elem a : n) {
                for (Elem b : m.all() - n)
                    if (n.contains(m.add(a, b))) { w = std::pair{a, b}; break; }
                if (w) break;
            }
            if (!w) continue;
            ModuleDMProbe p;
            p.sub = n;
            p.a = w->first;
            p.b = w->second;
            p.g = {p.a, p.b, p.a};
            p.report = dm_semimodule(m, f, p.g, 2);
            r.probes.push_back(std::move(p));
        }
    }

    bool probes_refute = true;
    for (const auto& p : r.probes)
        if (p.report.exponent) probes_refute = false;
    r.agrees = r.subtractive == r.dm_holds && probes_refute && (r.subtractive || !r.probes.empty());
    return r;
}

std::string module_poly_to_string(const FiniteSemimodule& m, const ModulePolynomial& g) {
    std::string out;
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k] == m.zero()) continue;
        if (!out.empty()) out += " + ";
        out += m.label(g[k]);
        if (k == 1) out += "*X";
        else if (k > 1) out += "*X^" + std::to_string(k);
    }
    return out.empty() ? m.label(m.zero()) : out;
}

} // namespace slab
