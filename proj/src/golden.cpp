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

#include "semiring_lab/golden.hpp"

#include "semiring_lab/catalog.hpp"
#include "semiring_lab/computable.hpp"
#include "semiring_lab/gaussian.hpp"
#include "semiring_lab/power_series.hpp"
#include "semiring_lab/report.hpp"
#include "semiring_lab/semialgebra.hpp"
#include "semiring_lab/semimodule.hpp"
#include "semiring_lab/structure.hpp"
#include "semiring_lab/zero_divisors.hpp"

#include <chrono>
#include <functional>
#include <random>

namespace slab {
namespace {

class Check {
public:
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok_ = false;
            failures_ += (failures_.empty() ? "" : "; ") + what;
        }
    }
    void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
    bool ok() const { return ok_; }
    std::string detail() const { return ok_ ? notes_ : "mismatch: " + failures_; }

private:
    bool ok_ = true;
    std::string notes_, failures_;
};

struct RowDef {
    std::string id;
    std::string description;
    std::function<void(Check&, const SweepOptions&)> body;
};

FiniteSemiring cat(const CatalogSpec& spec) { return build_catalog(spec); }

ElementSet set_of(const FiniteSemiring& s, std::initializer_list<const char*> labels) {
    ElementSet out;
    for (const char* l : labels) out.insert(s.at(l));
    return out;
}

std::string show(const FiniteSemiring& s, ElementSet set) {
    std::string out = "{";
    bool first = true;
    for (Elem e : set) {
        out += (first ? "" : ",") + s.label(e);
        first = false;
    }
    return out + "}";
}

Polynomial uni(const FiniteSemiring& s, std::initializer_list<const char*> labels) {
    std::vector<Elem> coeffs;
    for (const char* l : labels) coeffs.push_back(s.at(l));
    return Polynomial::univariate(s, coeffs);
}

ElementSet cf_times_cg(const PairWitness& w) {
    IdealArithmetic ar(w.f.semiring());
    return ar.product(w.cf, w.cg);
}

// Catalog members with at most four elements.
const std::vector<CatalogMember>& small4() {
    static const std::vector<CatalogMember> members = small_catalog(4);
    return members;
}

FiniteSemiring nil3_power(unsigned n) {
    std::vector<CatalogSpec> factors(n, CatalogSpec::nil_chain(3));
    return n == 1 ? cat(CatalogSpec::nil_chain(3)) : cat(CatalogSpec::product(factors));
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<RowDef> example_rows() {
    std::vector<RowDef> rows;

    rows.push_back({"tables.lagrassa", "LaGrassa tables {0,1,u} with 1+u=u, u*u=u validate",
                    [](Check& c, const SweepOptions&) {
        RawTables t;
        t.elements = {"0", "1", "u"};
        t.add = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
        t.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
        c.expect(validate_semiring(t).empty(), "hand tables rejected");
        const RawTables cat_t = cat(CatalogSpec::lagrassa()).tables();
        c.expect(cat_t.add == t.add && cat_t.mul == t.mul, "catalog lagrassa differs from hand tables");
        c.note("valid, 3 elements");
    }});

    rows.push_back({"catalog.chain_C", "chain_C adds 1+1=u and takes max otherwise",
                    [](Check& c, const SweepOptions&) {
        const auto s = cat(CatalogSpec::chain_c());
        c.expect(s.size() == 3, "size");
        const Elem z = s.at("0"), u = s.at("u"), one = s.at("1");
        const int rank[3] = {0, 2, 1};  // order ranks for labels 0, 1, u
        c.expect(s.add(one, one) == u, "1+1 != u");
        for (Elem a : {z, u, one})
            for (Elem b : {z, u, one}) {
                if (a == one && b == one) continue;
                const Elem mx = rank[a] >= rank[b] ? a : b;
                c.expect(s.add(a, b) == mx, s.label(a) + "+" + s.label(b) + " is not the max");
                const Elem mn = rank[a] <= rank[b] ? a : b;
                c.expect(s.mul(a, b) == mn, s.label(a) + "*" + s.label(b) + " is not the min");
            }
        c.note("1+1=u, max elsewhere");
    }});

    rows.push_back({"catalog.b_n_i", "b_n_i(4,2) wraps sums into [2,3] modulo n-i",
                    [](Check& c, const SweepOptions&) {
        const auto s = cat(CatalogSpec::b_n_i(4, 2));
        c.expect(s.size() == 4, "size");
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) {
                int l = x + y;
                if (l > 3) l = 2 + (l - 2) % 2;
                c.expect(s.label(s.add(s.at(std::to_string(x)), s.at(std::to_string(y)))) == std::to_string(l),
                         std::to_string(x) + "+" + std::to_string(y));
            }
        c.note("4 elements, wraparound into {2,3}");
    }});

    rows.push_back({"catalog.nil_chain", "nil_chain(4) is the chain 0<a<b<1 with x*y=0 below 1",
                    [](Check& c, const SweepOptions&) {
        const auto s = cat(CatalogSpec::nil_chain(4));
        const char* order[] = {"0", "a", "b", "1"};
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) {
                const Elem ex = s.at(order[x]), ey = s.at(order[y]);
                c.expect(s.add(ex, ey) == s.at(order[std::max(x, y)]), "addition is not max");
                const Elem prod = x == 3 ? ey : y == 3 ? ex : s.zero();
                c.expect(s.mul(ex, ey) == prod, "product below 1 is not 0");
            }
        c.note("chain with zero products below 1");
    }});

    rows.push_back({"catalog.product", "product of two nil_chain(3) has 9 elements",
                    [](Check& c, const SweepOptions&) {
        const auto s = nil3_power(2);
        c.expect(s.size() == 9, "size " + std::to_string(s.size()));
        c.note("9 elements");
    }});

    rows.push_back({"structure.nil_chain", "nil_chain(4) is local with m^2 = (0)",
                    [](Check& c, const SweepOptions&) {
        const auto s = cat(CatalogSpec::nil_chain(4));
        const auto f = structural_flags(s);
        c.expect(f.is_local, "not local");
        c.expect(f.maximal_ideal == set_of(s, {"0", "a", "b"}), "maximal ideal");
        c.expect(f.maximal_ideal_squared_zero, "m^2 != 0");
        c.note("m = {0,a,b}, m^2 = (0)");
    }});

    rows.push_back({"ideal.closure", "closures: lagrassa (u) = {0,u}; nil_chain(4) (a,b) = {0,a,b}",
                    [](Check& c, const SweepOptions&) {
        const auto l = cat(CatalogSpec::lagrassa());
        c.expect(ideal_generated(l, set_of(l, {"u"})).members() == set_of(l, {"0", "u"}), "lagrassa (u)");
        const auto t = cat(CatalogSpec::nil_chain(4));
        const auto m = ideal_generated(t, set_of(t, {"a", "b"}));
        c.expect(m.members() == set_of(t, {"0", "a", "b"}), "nil_chain (a,b)");
        c.expect(ideal_product(m, m).members() == ElementSet::single(t.zero()), "m*m != (0)");
        c.note("(u) = {0,u}; (a,b) = {0,a,b}; (a,b)^2 = (0)");
    }});

    rows.push_back({"ideal.b_n_i_prime", "b_n_i(4,2): S-{1} is prime and not subtractive",
                    [](Check& c, const SweepOptions&) {
        const auto s = cat(CatalogSpec::b_n_i(4, 2));
        const Ideal p(s, s.all() - ElementSet::single(s.at("1")));
        c.expect(enumerate_ideals(s).contains(p.members()), "S-{1} is not an ideal");
        c.expect(is_prime(p), "S-{1} is not prime");
        const auto sv = is_subtractive(p);
        c.expect(!sv.holds, "S-{1} is subtractive");
        if (sv.witness)
            c.note("(x, y) = (" + s.label(sv.witness->first) + ", " + s.label(sv.witness->second) + ")");
    }});

    rows.push_back({"ideal.subtractive_semirings", "subtractive: chain_C yes, nil_chain(4) no, b_n_i(3,1) yes",
                    [](Check& c, const SweepOptions&) {
        c.expect(is_subtractive_semiring(cat(CatalogSpec::chain_c())).holds, "chain_C");
        const auto t = cat(CatalogSpec::nil_chain(4));
        const auto v = is_subtractive_semiring(t);
        c.expect(!v.holds && v.witness.has_value(), "nil_chain(4)");
        c.expect(is_subtractive_semiring(cat(CatalogSpec::b_n_i(3, 1))).holds, "b_n_i(3,1)");
        if (v.witness) {
            c.note("nil_chain(4) ideal " + show(t, v.ideal) + " contains x and x+y but not y for (x, y) = (" +
                   t.label(v.witness->first) + ", " + t.label(v.witness->second) + ")");
        }
    }});

    rows.push_back({"ideal.monoid_ext_prime", "idempotent_monoid_ext: P is the only prime ideal",
                    [](Check& c, const SweepOptions&) {
        const auto s = cat(CatalogSpec::idempotent_monoid_ext());
        const ElementSet p = s.all() - ElementSet::single(s.one());
        const auto primes = prime_ideals(enumerate_ideals(s));
        c.expect(primes.size() == 1 && primes.front() == p, "prime spectrum is not {P}");
        c.note("Spec = {" + show(s, p) + "}");
    }});

    rows.push_back({"ideal.lattice_chain_C", "ideals of chain_C are (0), {0,u}, C",
                    [](Check& c, const SweepOptions&) {
        const auto s = cat(CatalogSpec::chain_c());
        auto ideals = enumerate_ideals(s).ideals();
        std::sort(ideals.begin(), ideals.end());
        std::vector<ElementSet> want{ElementSet::single(s.zero()), set_of(s, {"0", "u"}), s.all()};
        std::sort(want.begin(), want.end());
        c.expect(ideals == want, "lattice differs");
        c.note("3 ideals");
    }});

    rows.push_back({"ideal.radicals", "radicals: truncation(3) of (1) is T-{0}; lagrassa of {0,u} is {0,u}",
                    [](Check& c, const SweepOptions&) {
        const auto t = cat(CatalogSpec::truncation(3));
        const Ideal i = ideal_generated(t, set_of(t, {"1"}));
        const Ideal r = radical(i);
        c.expect(r.members() == t.all() - set_of(t, {"0"}), "truncation radical " + show(t, r.members()));
        c.expect(!is_subtractive(r).holds, "truncation radical is subtractive");
        const auto l = cat(CatalogSpec::lagrassa());
        c.expect(radical(Ideal(l, set_of(l, {"0", "u"}))).members() == set_of(l, {"0", "u"}), "lagrassa");
        c.note("sqrt(1) = " + show(t, r.members()));
    }});

    rows.push_back({"poly.products", "(1+uX)(u+X) = u+uX+uX^2 and (1+X)(b+aX+bX^2) = b+bX+bX^2+bX^3",
                    [](Check& c, const SweepOptions&) {
        const auto l = cat(CatalogSpec::lagrassa());
        const auto p1 = poly_mul(uni(l, {"1", "u"}), uni(l, {"u", "1"}));
        c.expect(p1 == uni(l, {"u", "u", "u"}), "lagrassa product " + p1.to_string());
        const auto t = cat(CatalogSpec::nil_chain(4));
        const auto p2 = poly_mul(uni(t, {"1", "1"}), uni(t, {"b", "a", "b"}));
        c.expect(p2 == uni(t, {"b", "b", "b", "b"}), "nil_chain product " + p2.to_string());
        c.note(p1.to_string() + "; " + p2.to_string());
    }});

    rows.push_back({"poly.contents", "c(1+uX) = S and c(f)c(g) = S over lagrassa; c(b+aX+bX^2) = {0,a,b}",
                    [](Check& c, const SweepOptions&) {
        const auto l = cat(CatalogSpec::lagrassa());
        c.expect(content(uni(l, {"1", "u"})).is_whole(), "c(1+uX)");
        const auto w = make_pair_witness(uni(l, {"1", "u"}), uni(l, {"u", "1"}));
        c.expect(cf_times_cg(w) == l.all(), "c(f)c(g)");
        const auto t = cat(CatalogSpec::nil_chain(4));
        c.expect(content(uni(t, {"b", "a", "b"})).members() == set_of(t, {"0", "a", "b"}), "nil_chain content");
        c.note("c(f)c(g) = S; c(g) = {0,a,b}");
    }});

    rows.push_back({"poly.star_map", "(fg)* = f*g* for random f, g over chain_C in X, Y",
                    [](Check& c, const SweepOptions&) {
        const auto s = cat(CatalogSpec::chain_c());
        std::mt19937 rng(20260101);
        std::uniform_int_distribution<int> coef(0, 2), deg(0, 2);
        auto rand_poly = [&] {
            Polynomial p(s);
            const int dx = deg(rng), dy = deg(rng);
            for (int i = 0; i <= dx; ++i)
                for (int j = 0; j <= dy; ++j) {
                    Monomial m = Monomial::var("X", i) * Monomial::var("Y", j);
                    p.add_term(m, static_cast<Elem>(coef(rng)));
                }
            return p;
        };
        int trials = 0;
        for (; trials < 200; ++trials) {
            const auto f = rand_poly(), g = rand_poly();
            const int m = f.degree("X").value_or(0) + g.degree("X").value_or(0) + 1;
            const auto lhs = star_map(poly_mul(f, g), "X", "Y", m);
            const auto rhs = poly_mul(star_map(f, "X", "Y", m), star_map(g, "X", "Y", m));
            if (!(lhs == rhs)) {
                c.expect(false, "f=" + f.to_string() + ", g=" + g.to_string());
                break;
            }
        }
        c.note(std::to_string(trials) + " random pairs");
    }});

    rows.push_back({"dm.exponents", "DM exponent 0 for a monomial f; NONE for (1+X, b+aX+bX^2) over nil_chain(4)",
                    [](Check& c, const SweepOptions&) {
        const auto t = cat(CatalogSpec::nil_chain(4));
        Polynomial mono(t);
        mono.add_term(Monomial::var("X", 2), t.at("a"));
        const auto r0 = dm_exponent(mono, uni(t, {"b", "a", "b"}), 4);
        c.expect(r0.exponent == 0u, "monomial exponent");
        const auto r = dm_exponent(uni(t, {"1", "1"}), uni(t, {"b", "a", "b"}), 10);
        c.expect(!r.exponent.has_value(), "exponent found");
        c.expect(r.lhs == set_of(t, {"0", "a", "b"}), "lhs " + show(t, r.lhs));
        c.expect(r.rhs == set_of(t, {"0", "b"}), "rhs " + show(t, r.rhs));
        c.note("lhs " + show(t, r.lhs) + " vs rhs " + show(t, r.rhs));
    }});

    rows.push_back({"dm.equivalence", "DM equivalence: chain_C both true; nil_chain(4) both false with probe",
                    [](Check& c, const SweepOptions& o) {
        const auto e1 = dm_semiring_equivalence(cat(CatalogSpec::chain_c()), 3, o);
        c.expect(e1.agrees && e1.subtractive && e1.dm_holds, "chain_C");
        const auto t = cat(CatalogSpec::nil_chain(4));
        const auto e2 = dm_semiring_equivalence(t, 3, o);
        c.expect(e2.agrees && !e2.subtractive && !e2.dm_holds, "nil_chain(4)");
        bool probe = false;
        for (const auto& p : e2.probes)
            probe = probe || (p.f == uni(t, {"1", "1"}) && p.g == uni(t, {"b", "a", "b"}) && !p.report.exponent);
        c.expect(probe, "probe f=1+X, g=b+aX+bX^2 missing");
        c.note("probe f=1+X, g=b+aX+bX^2 has no exponent");
    }});

    rows.push_back({"gaussian.sweeps", "power_set_lattice(3) D=3 and nil_chain(3) D=3 Gaussian; lagrassa D=2 not",
                    [](Check& c, const SweepOptions& o) {
        c.expect(is_gaussian_up_to(cat(CatalogSpec::power_set_lattice(3)), 3, o).holds, "power_set_lattice(3)");
        c.expect(is_gaussian_up_to(cat(CatalogSpec::nil_chain(3)), 3, o).holds, "nil_chain(3)");
        const auto l = cat(CatalogSpec::lagrassa());
        const auto g = is_gaussian_up_to(l, 2, o);
        c.expect(!g.holds && g.witness, "lagrassa sweep");
        const auto w = make_pair_witness(uni(l, {"1", "u"}), uni(l, {"u", "1"}));
        c.expect(w.cfg == set_of(l, {"0", "u"}) && cf_times_cg(w) == l.all(), "lagrassa example pair");
        if (g.witness) c.note("lagrassa sweep witness f=" + g.witness->f.to_string() + ", g=" + g.witness->g.to_string());
    }});

    rows.push_back({"gaussian.certificates", "certificates: chain_lattice(4) SumGeneration, nil_chain(3) LocalNilMax",
                    [](Check& c, const SweepOptions&) {
        const auto a = gaussian_sufficient(cat(CatalogSpec::chain_lattice(4)));
        const auto b = gaussian_sufficient(cat(CatalogSpec::nil_chain(3)));
        c.expect(a == GaussianCertificate::SumGeneration, std::string("chain_lattice(4) ") + to_string(a));
        c.expect(b == GaussianCertificate::LocalNilMax, std::string("nil_chain(3) ") + to_string(b));
        c.note(std::string(to_string(a)) + ", " + to_string(b));
    }});

    rows.push_back({"weak.verdicts", "weak Gaussian: lagrassa no, nil_chain(4) yes, truncation(3) no",
                    [](Check& c, const SweepOptions&) {
        const auto l = cat(CatalogSpec::lagrassa());
        const auto v = is_weak_gaussian(l);
        c.expect(!v.holds, "lagrassa");
        c.expect(v.witness && v.witness->f == uni(l, {"1", "u"}) && v.witness->g == uni(l, {"u", "1"}),
                 "lagrassa witness is not (1+uX, u+X)");
        c.expect(!v.cfcg.subset_of(v.radical_cfg), "containment holds on witness");
        c.expect(is_weak_gaussian(cat(CatalogSpec::nil_chain(4))).holds, "nil_chain(4)");
        c.expect(!is_weak_gaussian(cat(CatalogSpec::truncation(3))).holds, "truncation(3)");
        c.note("lagrassa witness f=1+uX, g=u+X");
    }});

    rows.push_back({"weak.sweeps", "containment sweep: chain_C D=3 holds with c(fg)=c(f)c(g); lagrassa D=2 fails",
                    [](Check& c, const SweepOptions& o) {
        const auto a = weak_gaussian_sweep(cat(CatalogSpec::chain_c()), SweepWindow::univariate(3), o);
        c.expect(a.holds && a.gaussian_on_window, "chain_C");
        const auto b = weak_gaussian_sweep(cat(CatalogSpec::lagrassa()), SweepWindow::univariate(2), o);
        c.expect(!b.holds, "lagrassa");
        c.note("chain_C search space " + std::to_string(a.space));
    }});

    rows.push_back({"weak.prime_extension", "lagrassa P={0,u}: prime, not subtractive, P[X] not prime",
                    [](Check& c, const SweepOptions& o) {
        const auto l = cat(CatalogSpec::lagrassa());
        const auto r = prime_extension_check(l, set_of(l, {"0", "u"}), SweepWindow::univariate(1), o);
        c.expect(r.prime && !r.subtractive && !r.extension_prime_bounded && r.agrees, "verdicts");
        c.expect(r.witness.has_value(), "no witness");
        if (r.witness) c.note("f=" + r.witness->f.to_string() + ", g=" + r.witness->g.to_string());
    }});

    rows.push_back({"semimodule.subtractive", "nil_chain(4) over itself is not a subtractive semimodule",
                    [](Check& c, const SweepOptions&) {
        const auto m = FiniteSemimodule::regular(cat(CatalogSpec::nil_chain(4)));
        c.expect(!is_subtractive_semimodule(m).holds, "subtractive");
        c.note("witness found");
    }});

    rows.push_back({"semimodule.direct_sum_content", "M1 + M2 is content iff both summands are",
                    [](Check& c, const SweepOptions&) {
        int pairs = 0;
        std::vector<FiniteSemimodule> mods;
        for (const auto& spec : {CatalogSpec::boolean(), CatalogSpec::chain_c(), CatalogSpec::lagrassa(),
                                 CatalogSpec::nil_chain(3)})
            mods.push_back(FiniteSemimodule::regular(cat(spec)));
        for (const auto& a : mods)
            for (const auto& b : mods) {
                if (!a.semiring().same_as(b.semiring())) continue;
                const auto sum = FiniteSemimodule::direct_sum(a, b);
                const bool lhs = is_content_semimodule(sum).holds;
                const bool rhs = is_content_semimodule(a).holds && is_content_semimodule(b).holds;
                c.expect(lhs == rhs, "direct sum over " + std::to_string(a.size()) + " elements");
                ++pairs;
            }
        c.note(std::to_string(pairs) + " direct sums");
    }});

    rows.push_back({"semimodule.dm", "semimodule DM: monomial g gives 0; probe over nil_chain(4) gives NONE",
                    [](Check& c, const SweepOptions&) {
        const auto t = cat(CatalogSpec::nil_chain(4));
        const auto m = FiniteSemimodule::regular(t);
        const ModulePolynomial mono{t.zero(), t.at("a")};
        c.expect(dm_semimodule(m, uni(t, {"1", "b", "1"}), mono, 2).exponent == 0u, "monomial");
        const auto v = is_subtractive_semimodule(m);
        c.expect(v.witness.has_value(), "no subtractive witness");
        if (!v.witness) return;
        const auto [a, b] = *v.witness;
        const ModulePolynomial g{a, b, a};
        const auto r = dm_semimodule(m, uni(t, {"1", "1"}), g, 10);
        const ElementSet cg = subsemimodule_generated(m, ElementSet::single(a) | ElementSet::single(b)).members;
        const ElementSet cfg = subsemimodule_generated(m, ElementSet::single(a) | ElementSet::single(t.add(a, b))).members;
        c.expect(r.cg == cg && r.cfg == cfg && cg != cfg, "c(g), c(fg)");
        c.expect(!r.exponent.has_value(), "exponent found");
        c.note("c(g) = " + show(t, r.cg) + ", c(fg) = " + show(t, r.cfg));
    }});

    rows.push_back({"semimodule.dm_equivalence", "regular modules: nil_chain(4) both false, chain_C both true",
                    [](Check& c, const SweepOptions& o) {
        const auto a = dm_semimodule_equivalence(FiniteSemimodule::regular(cat(CatalogSpec::nil_chain(4))), 2, o);
        c.expect(!a.subtractive && !a.dm_holds && a.agrees, "nil_chain(4)");
        const auto b = dm_semimodule_equivalence(FiniteSemimodule::regular(cat(CatalogSpec::chain_c())), 2, o);
        c.expect(b.subtractive && b.dm_holds && b.agrees, "chain_C");
        c.note("both verdicts match");
    }});

    rows.push_back({"series.content", "series N=6, D=2: lagrassa fails with (1+uX, u+X); nil_chain(4) holds",
                    [](Check& c, const SweepOptions& o) {
        const auto l = cat(CatalogSpec::lagrassa());
        const auto a = series_content_check(l, 6, 2, o);
        c.expect(!a.radical && a.agrees, "lagrassa sweep");
        const auto f = TruncatedSeries::from_polynomial(uni(l, {"1", "u"}), 6);
        const auto g = TruncatedSeries::from_polynomial(uni(l, {"u", "1"}), 6);
        IdealArithmetic ar(l);
        const ElementSet cfcg = ar.product(series_content(f).members(), series_content(g).members());
        c.expect(!cfcg.subset_of(ar.radical(series_content(ps_mul(f, g)).members())), "example pair");
        const auto b = series_content_check(cat(CatalogSpec::nil_chain(4)), 6, 2, o);
        c.expect(b.radical && b.agrees, "nil_chain(4)");
        c.note("example pair violates radical containment");
    }});

    rows.push_back({"zd.very_few", "every catalog member up to 8 elements has very few zero-divisors",
                    [](Check& c, const SweepOptions&) {
        const auto members = small_catalog(8);
        for (const auto& m : members) c.expect(very_few_zero_divisors(m.semiring), m.name);
        c.note(std::to_string(members.size()) + " members");
    }});

    rows.push_back({"zd.degree", "zd = 1 for primal weak Gaussian members; zd(nil_chain(3)^n) = n",
                    [](Check& c, const SweepOptions&) {
        int primal = 0;
        for (const auto& m : small4()) {
            if (!is_primal(m.semiring) || !is_weak_gaussian(m.semiring).holds) continue;
            c.expect(zd_degree(m.semiring).degree == 1u, m.name);
            ++primal;
        }
        for (unsigned n = 1; n <= 3; ++n)
            c.expect(zd_degree(nil3_power(n), 32).degree == n, "power " + std::to_string(n));
        c.note(std::to_string(primal) + " primal members; n = 1, 2, 3");
    }});

    rows.push_back({"zd.transfer", "polynomial transfer: nil_chain(3) D=2 primal case; product of two D=2 gives 2",
                    [](Check& c, const SweepOptions& o) {
        const auto a = poly_transfer_check(cat(CatalogSpec::nil_chain(3)), 2, o);
        c.expect(a.holds() && a.primal_case && a.primal_ideal, "nil_chain(3)");
        const auto b = poly_transfer_check(nil3_power(2), 2, o);
        c.expect(b.holds() && b.zd_base == 2u && b.zd_window == 2, "product");
        c.note(std::to_string(b.zero_divisors_found) + " zero-divisors in the product window");
    }});

    rows.push_back({"semialgebra.axiom3", "nil_chain(4): the Dedekind-Mertens axiom fails with the chain witness",
                    [](Check& c, const SweepOptions& o) {
        const auto t = cat(CatalogSpec::nil_chain(4));
        const auto v = verify_content_semialgebra(t, 3, o);
        c.expect(!v.axiom3.holds && !v.overall && v.agrees, "verdicts");
        c.expect(v.axiom3.pair && v.axiom3.pair->f == uni(t, {"1", "1"}) && v.axiom3.pair->g == uni(t, {"b", "a", "b"}),
                 "witness");
        c.note("f=1+X, g=b+aX+bX^2");
    }});

    rows.push_back({"cli.classify", "classify lagrassa and nil_chain(4) reports",
                    [](Check& c, const SweepOptions&) {
        const auto l = cat(CatalogSpec::lagrassa());
        const auto r = classify(l, {"catalog", "lagrassa"});
        const auto& w = r.verdict("weak_gaussian");
        c.expect(w.value == false, "lagrassa weak_gaussian");
        c.expect(w.witness.contains("f") && w.witness["f"]["text"] == uni(l, {"1", "u"}).to_string() &&
                     w.witness["g"]["text"] == uni(l, {"u", "1"}).to_string(),
                 "lagrassa witness");
        const auto r2 = classify(cat(CatalogSpec::nil_chain(4)), {"catalog", "nil_chain(4)"});
        c.expect(r2.verdict("subtractive").value == false, "nil_chain subtractive");
        c.expect(r2.verdict("weak_gaussian").value == true, "nil_chain weak_gaussian");
        c.note("witness " + w.witness["f"]["text"].get<std::string>() + ", " + w.witness["g"]["text"].get<std::string>());
    }});

    rows.push_back({"cli.report_b_n_i", "JSON report for b_n_i(4,2) contains \"weak_gaussian\": false",
                    [](Check& c, const SweepOptions&) {
        const auto r = classify(cat(CatalogSpec::b_n_i(4, 2)), {"catalog", "b_n_i(4,2)"});
        const std::string text = to_json(r).dump(2);
        c.expect(text.find("\"weak_gaussian\": false") != std::string::npos, "literal missing");
        c.note("literal present");
    }});

    rows.push_back({"computable.tropical", "tropical polynomials satisfy c(fg) = c(f)c(g) on spot checks",
                    [](Check& c, const SweepOptions&) {
        using namespace tropical;
        const std::vector<std::pair<std::vector<Value>, std::vector<Value>>> cases = {
            {{3, 1}, {2, 4}}, {{0}, {5, 7, 9}}, {{4, kInf, 2}, {kInf, 6, 1}}, {{7, 7, 7}, {0, 3}}};
        for (const auto& [fc, gc] : cases) {
            const auto f = Poly::from_coeffs(fc), g = Poly::from_coeffs(gc);
            const auto r = gaussian_check(f, g);
            c.expect(r.holds && r.content_fg == f.content_min() + g.content_min(), f.to_string() + " * " + g.to_string());
        }
        const auto r = gaussian_check(Poly::from_coeffs(std::vector<Value>{3, 1}), Poly::from_coeffs(std::vector<Value>{2, 4}));
        c.expect(r.content_fg == 3, "min coefficient of (3+1X)(2+4X)");
        c.note(std::to_string(cases.size()) + " pairs");
    }});

    rows.push_back({"computable.spot_checks", "N0 and arctic non-weak-Gaussian witnesses",
                    [](Check& c, const SweepOptions&) {
        const auto n = natural::spot_check(2, 12);
        c.expect(n.p_prime_on_window && n.p_not_subtractive && n.containment_fails, "N0");
        const auto a = arctic::spot_check(1);
        c.expect(a.containment_fails && a.radical_not_subtractive, "arctic");
        c.note("both witnesses reproduce");
    }});

    return rows;
}

// Acceptance gate.
std::vector<RowDef> criterion_rows() {
    std::vector<RowDef> rows;

    rows.push_back({"criterion.1", "LaGrassa content values, weak Gaussian false, under 1 s",
                    [](Check& c, const SweepOptions&) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto s = cat(CatalogSpec::lagrassa());
        const auto w = make_pair_witness(uni(s, {"1", "u"}), uni(s, {"u", "1"}));
        IdealArithmetic ar(s);
        c.expect(w.fg == uni(s, {"u", "u", "u"}), "product");
        c.expect(w.cfg == set_of(s, {"0", "u"}), "c(fg)");
        c.expect(cf_times_cg(w) == s.all(), "c(f)c(g)");
        c.expect(ar.radical(w.cfg) == set_of(s, {"0", "u"}), "sqrt c(fg)");
        c.expect(!is_weak_gaussian(s).holds, "weak Gaussian");
        const double secs = since(t0);
        c.expect(secs < 1.0, "runtime");
        c.note("runtime " + std::to_string(secs) + " s");
    }});

    rows.push_back({"criterion.2", "nil_chain(4) and nil_chain(3) verdicts",
                    [](Check& c, const SweepOptions& o) {
        const auto t = cat(CatalogSpec::nil_chain(4));
        const auto sv = is_subtractive_semiring(t);
        c.expect(!sv.holds && sv.witness, "subtractive");
        c.expect(is_weak_gaussian(t).holds, "weak Gaussian");
        const auto r = dm_exponent(uni(t, {"1", "1"}), uni(t, {"b", "a", "b"}), 10);
        c.expect(!r.exponent && r.lhs == set_of(t, {"0", "a", "b"}) && r.rhs == set_of(t, {"0", "b"}), "DM");
        const auto t3 = cat(CatalogSpec::nil_chain(3));
        c.expect(gaussian_sufficient(t3) == GaussianCertificate::LocalNilMax, "certificate");
        c.expect(is_gaussian_up_to(t3, 3, o).holds, "sweep");
        c.note("all five facts reproduce");
    }});

    rows.push_back({"criterion.3", "weak Gaussian routes agree on all members up to 4 elements, under 30 s",
                    [](Check& c, const SweepOptions& o) {
        const auto t0 = std::chrono::steady_clock::now();
        for (const auto& m : small4()) {
            const bool a = is_weak_gaussian(m.semiring).holds;
            const bool b = weak_gaussian_sweep(m.semiring, SweepWindow::univariate(3), o).holds;
            c.expect(a == b, m.name);
        }
        c.expect(!is_weak_gaussian(cat(CatalogSpec::b_n_i(4, 2))).holds, "b_n_i(4,2)");
        c.expect(is_weak_gaussian(cat(CatalogSpec::b_n_i(3, 1))).holds, "b_n_i(3,1)");
        c.expect(!is_weak_gaussian(cat(CatalogSpec::truncation(3))).holds, "truncation(3)");
        c.expect(is_weak_gaussian(cat(CatalogSpec::chain_c())).holds, "chain_C");
        const double secs = since(t0);
        c.expect(secs < 30.0, "runtime");
        c.note(std::to_string(small4().size()) + " members, " + std::to_string(secs) + " s");
    }});

    rows.push_back({"criterion.4", "DM equivalence D=3 on all members up to 4 elements",
                    [](Check& c, const SweepOptions& o) {
        for (const auto& m : small4()) {
            const auto e = dm_semiring_equivalence(m.semiring, 3, o);
            c.expect(e.agrees, m.name);
            if (e.subtractive) c.expect(e.sweep.holds, m.name + " exponent above deg g");
        }
        c.note(std::to_string(small4().size()) + " members");
    }});

    rows.push_back({"criterion.5", "power_set_lattice(3) Gaussian at D=2 with SumGeneration",
                    [](Check& c, const SweepOptions& o) {
        const auto s = cat(CatalogSpec::power_set_lattice(3));
        const auto g = is_gaussian_up_to(s, 2, o);
        c.expect(g.holds, "sweep");
        c.expect(gaussian_sufficient(s) == GaussianCertificate::SumGeneration, "certificate");
        c.note("search space " + std::to_string(g.space));
    }});

    rows.push_back({"criterion.6", "tropical random pairs and interval ideal law",
                    [](Check& c, const SweepOptions&) {
        using namespace tropical;
        std::mt19937 rng(6);
        std::uniform_int_distribution<Value> coef(0, 20);
        std::uniform_int_distribution<int> deg(0, 5);
        for (int t = 0; t < 1000; ++t) {
            std::vector<Value> fc(deg(rng) + 1), gc(deg(rng) + 1);
            for (auto& x : fc) x = coef(rng);
            for (auto& x : gc) x = coef(rng);
            const auto f = Poly::from_coeffs(fc), g = Poly::from_coeffs(gc);
            if (poly_mul(f, g).content_min() != f.content_min() + g.content_min()) {
                c.expect(false, "pair " + std::to_string(t));
                break;
            }
        }
        int sets = 0;
        for (Value n = 1; n <= 12; ++n) {
            for (Value g1 = 0; g1 <= n; ++g1)
                for (Value g2 = g1; g2 <= n; ++g2) {
                    // Linear combinations s1*g1 + s2*g2 inside [0, n].
                    std::vector<bool> reach(n + 1, false);
                    for (Value s1 = 0; s1 <= n; ++s1)
                        for (Value s2 = 0; s2 <= n; ++s2) {
                            const Value v = std::min(s1 + g1, s2 + g2);
                            if (v <= n) reach[v] = true;
                        }
                    const Value gens[2] = {g1, g2};
                    for (Value x = 0; x <= n; ++x) c.expect(ideal_member(x, gens) == reach[x], "interval law");
                    ++sets;
                }
        }
        c.note("1000 pairs, " + std::to_string(sets) + " generator sets");
    }});

    rows.push_back({"criterion.7", "truncation(3) radical golden value",
                    [](Check& c, const SweepOptions&) {
        const auto t = cat(CatalogSpec::truncation(3));
        const Ideal r = radical(ideal_generated(t, set_of(t, {"1"})));
        c.expect(r.members() == t.all() - set_of(t, {"0"}), "radical");
        c.expect(!is_subtractive(r).holds, "subtractive");
        c.note("sqrt(1) = " + show(t, r.members()));
    }});

    rows.push_back({"criterion.8", "content semialgebra verdict matches subtractivity up to 4 elements",
                    [](Check& c, const SweepOptions& o) {
        for (const auto& m : small4()) {
            const auto v = verify_content_semialgebra(m.semiring, 3, o);
            c.expect(v.overall == is_subtractive_semiring(m.semiring).holds, m.name);
        }
        c.note(std::to_string(small4().size()) + " members");
    }});

    rows.push_back({"criterion.9", "power series checks N=6, D=2",
                    [](Check& c, const SweepOptions& o) {
        int primes = 0;
        for (const auto& m : small4()) {
            const auto r = series_content_check(m.semiring, 6, 2, o);
            c.expect(r.agrees && r.weak_gaussian == is_weak_gaussian(m.semiring).holds, m.name);
            IdealArithmetic ar(m.semiring);
            for (ElementSet p : prime_ideals(enumerate_ideals(m.semiring))) {
                const auto pc = ps_prime_extension_check(m.semiring, p, 6, 2, o);
                c.expect(pc.agrees && pc.extension_prime_bounded == ar.is_subtractive(p),
                         m.name + " prime " + show(m.semiring, p));
                ++primes;
            }
        }
        c.note(std::to_string(primes) + " primes");
    }});

    rows.push_back({"criterion.10", "zero-divisor regressions and zd of nil_chain(3)^n",
                    [](Check& c, const SweepOptions& o) {
        const auto members = small_catalog(8);
        for (const auto& m : members) {
            c.expect(very_few_zero_divisors(m.semiring), m.name + " very few");
            c.expect(property_A(m.semiring).holds, m.name + " property A");
        }
        for (unsigned n = 1; n <= 3; ++n) {
            const auto s = nil3_power(n);
            c.expect(zd_degree(s, 32).degree == n, "zd power " + std::to_string(n));
            const auto t = poly_transfer_check(s, n == 3 ? 1 : 2, o, 32);
            c.expect(t.holds() && t.zd_window == n, "transfer power " + std::to_string(n));
        }
        c.note(std::to_string(members.size()) + " members, n = 1, 2, 3");
    }});

    rows.push_back({"criterion.11", "semimodule DM and content equivalences",
                    [](Check& c, const SweepOptions& o) {
        for (const auto& m : small4()) {
            const auto reg = FiniteSemimodule::regular(m.semiring);
            c.expect(dm_semimodule_equivalence(reg, 2, o).agrees, m.name + " DM");
            c.expect(content_equivalences(reg).agrees, m.name + " S");
            const auto sum = FiniteSemimodule::direct_sum(reg, reg);
            c.expect(content_equivalences(sum).agrees, m.name + " S+S");
        }
        c.note(std::to_string(small4().size()) + " members");
    }});

    rows.push_back({"criterion.12", "McCoy property on subtractive members up to 4 elements",
                    [](Check& c, const SweepOptions& o) {
        int checked = 0;
        for (const auto& m : small4()) {
            if (!is_subtractive_semiring(m.semiring).holds) continue;
            c.expect(mccoy_check(m.semiring, 2, o).holds, m.name);
            ++checked;
        }
        c.note(std::to_string(checked) + " subtractive members");
    }});

    return rows;
}

std::vector<RowDef> all_rows() {
    auto rows = example_rows();
    for (auto& r : criterion_rows()) rows.push_back(std::move(r));
    return rows;
}

} // namespace

std::vector<std::string> golden_row_ids() {
    std::vector<std::string> ids;
    for (const auto& r : all_rows()) ids.push_back(r.id);
    return ids;
}

std::vector<GoldenRow> run_golden_suite(const std::vector<std::string>& only, const GoldenOptions& options) {
    const SweepOptions sweep{options.parallel, options.threads, kDefaultSweepBudget};
    std::vector<GoldenRow> out;
    for (const auto& def : all_rows()) {
        bool selected = only.empty();
        for (const auto& prefix : only) selected = selected || def.id.rfind(prefix, 0) == 0;
        if (!selected) continue;
        GoldenRow row{def.id, def.description, false, "", 0};
        const auto t0 = std::chrono::steady_clock::now();
        try {
            Check c;
            def.body(c, sweep);
            row.pass = c.ok();
            row.detail = c.detail();
        } catch (const std::exception& e) {
            row.detail = std::string("error: ") + e.what();
        }
        row.seconds = since(t0);
        out.push_back(std::move(row));
    }
    if (out.empty()) throw BadParams("no golden row matches the filter");
    return out;
}

} // namespace slab
