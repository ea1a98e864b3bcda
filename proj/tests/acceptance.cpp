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

// Acceptance gate. Each criterion runs the library and, where the search
// space allows, an independent brute-force oracle over the raw tables.
// Prints one line per criterion and exits nonzero if any fails.

#include "oracles.hpp"

#include "semiring_lab/catalog.hpp"
#include "semiring_lab/computable.hpp"
#include "semiring_lab/power_series.hpp"
#include "semiring_lab/semialgebra.hpp"
#include "semiring_lab/semimodule.hpp"
#include "semiring_lab/zero_divisors.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

using namespace slab;
using oracle::Mask;
using oracle::Tab;

namespace {

class Outcome {
public:
    void expect(bool cond, const std::string& what) {
        if (!cond && ok_) failure_ = what;
        ok_ = ok_ && cond;
    }
    void note(std::string s) { note_ = std::move(s); }
    bool ok() const { return ok_; }
    const std::string& text() const { return ok_ ? note_ : failure_; }

private:
    bool ok_ = true;
    std::string note_, failure_;
};

FiniteSemiring S(const CatalogSpec& spec) { return build_catalog(spec); }

ElementSet set_of(const FiniteSemiring& s, std::initializer_list<const char*> labels) {
    ElementSet out;
    for (const char* l : labels) out.insert(s.at(l));
    return out;
}

Mask mask_of(const FiniteSemiring& s, std::initializer_list<const char*> labels) {
    return set_of(s, labels).bits();
}

Polynomial uni(const FiniteSemiring& s, std::initializer_list<const char*> labels) {
    std::vector<Elem> c;
    for (const char* l : labels) c.push_back(s.at(l));
    return Polynomial::univariate(s, c);
}

std::vector<CatalogMember> small4() { return small_catalog(4); }

// Oracle helpers on raw tables.

struct Lattice {
    std::vector<Mask> ideals, primes;
};

Lattice lattice_of(const Tab& t) {
    Lattice l;
    l.ideals = oracle::all_ideals(t);
    for (Mask p : l.ideals)
        if (oracle::is_prime(t, p, l.ideals)) l.primes.push_back(p);
    return l;
}

bool oracle_subtractive_semiring(const Tab& t) {
    for (Mask i : oracle::all_ideals(t))
        if (!oracle::is_subtractive(t, i)) return false;
    return true;
}

bool oracle_primes_subtractive(const Tab& t) {
    for (Mask p : lattice_of(t).primes)
        if (!oracle::is_subtractive(t, p)) return false;
    return true;
}

// Memoized content arithmetic for exhaustive oracle sweeps.
class Contents {
public:
    explicit Contents(const Tab& t) : t_(t) {}
    Mask of(const oracle::Poly& f) {
        Mask g = 0;
        for (int c : f) g |= oracle::bit(c);
        auto [it, fresh] = closure_.try_emplace(g, 0);
        if (fresh) it->second = oracle::closure(t_, g);
        return it->second;
    }
    Mask product(Mask a, Mask b) {
        auto [it, fresh] = product_.try_emplace({a, b}, 0);
        if (fresh) it->second = oracle::product(t_, a, b);
        return it->second;
    }
    Mask power(Mask a, int k) {
        Mask r = t_.all();
        for (int e = 0; e < k; ++e) r = product(r, a);
        return r;
    }
    Mask radical(Mask a) {
        auto [it, fresh] = radical_.try_emplace(a, 0);
        if (fresh) it->second = oracle::radical(t_, a);
        return it->second;
    }

private:
    const Tab& t_;
    std::map<Mask, Mask> closure_, radical_;
    std::map<std::pair<Mask, Mask>, Mask> product_;
};

int spread(const oracle::Poly& g) {
    int lo = -1, hi = -1;
    for (int k = 0; k < static_cast<int>(g.size()); ++k)
        if (g[k] != 0) {
            if (lo < 0) lo = k;
            hi = k;
        }
    return lo < 0 ? 0 : hi - lo;
}

// ---- criteria ---------------------------------------------------------------

void criterion1(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto s = S(CatalogSpec::lagrassa());
    const Tab t = Tab::of(s);
    const auto w = make_pair_witness(uni(s, {"1", "u"}), uni(s, {"u", "1"}));
    IdealArithmetic ar(s);
    o.expect(w.fg == uni(s, {"u", "u", "u"}), "fg");
    o.expect(w.cfg == set_of(s, {"0", "u"}), "c(fg)");
    o.expect(ar.product(w.cf, w.cg) == s.all(), "c(f)c(g)");
    o.expect(ar.radical(w.cfg) == set_of(s, {"0", "u"}), "sqrt c(fg)");
    o.expect(!is_weak_gaussian(s).holds, "is_weak_gaussian");

    const int u = s.at("u");
    const oracle::Poly f{1, u}, g{u, 1};
    const auto fg = oracle::poly_mul(t, f, g);
    o.expect(fg == oracle::Poly{u, u, u}, "oracle fg");
    const Mask cfg = oracle::content(t, fg);
    o.expect(cfg == mask_of(s, {"0", "u"}), "oracle c(fg)");
    o.expect(oracle::product(t, oracle::content(t, f), oracle::content(t, g)) == t.all(), "oracle c(f)c(g)");
    o.expect(oracle::radical(t, cfg) == cfg, "oracle sqrt");
    o.expect(!oracle_primes_subtractive(t), "oracle weak Gaussian");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(secs < 1.0, "runtime");
    o.note("fg = u+uX+uX^2, c(fg) = {0,u}, c(f)c(g) = S");
}

void criterion2(Outcome& o) {
    const auto t4 = S(CatalogSpec::nil_chain(4));
    const Tab t = Tab::of(t4);
    const auto sv = is_subtractive_semiring(t4);
    o.expect(!sv.holds && sv.witness.has_value(), "subtractive");
    o.expect(!oracle_subtractive_semiring(t), "oracle subtractive");
    o.expect(is_weak_gaussian(t4).holds, "weak Gaussian");
    o.expect(oracle_primes_subtractive(t), "oracle weak Gaussian");
    const auto r = dm_exponent(uni(t4, {"1", "1"}), uni(t4, {"b", "a", "b"}), 10);
    o.expect(!r.exponent.has_value(), "DM exponent");
    o.expect(r.lhs == set_of(t4, {"0", "a", "b"}) && r.rhs == set_of(t4, {"0", "b"}), "DM chain");

    const int a = t4.at("a"), b = t4.at("b");
    const oracle::Poly f{1, 1}, g{b, a, b};
    const Mask cf = oracle::content(t, f), cg = oracle::content(t, g);
    const Mask cfg = oracle::content(t, oracle::poly_mul(t, f, g));
    for (int m = 0; m <= 10; ++m)
        o.expect(oracle::product(t, oracle::power(t, cf, m + 1), cg) != oracle::product(t, oracle::power(t, cf, m), cfg),
                 "oracle DM at m=" + std::to_string(m));

    const auto t3 = S(CatalogSpec::nil_chain(3));
    o.expect(gaussian_sufficient(t3) == GaussianCertificate::LocalNilMax, "certificate");
    o.expect(is_gaussian_up_to(t3, 3).holds, "Gaussian D=3");
    const Tab tt = Tab::of(t3);
    Contents c(tt);
    const auto polys = oracle::all_polys(tt, 3);
    bool gauss = true;
    for (const auto& p : polys)
        for (const auto& q : polys)
            gauss = gauss && c.of(oracle::poly_mul(tt, p, q)) == c.product(c.of(p), c.of(q));
    o.expect(gauss, "oracle Gaussian D=3");
    o.note("witness found, DM = NONE, LocalNilMax, Gaussian to D=3");
}

void criterion3(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto members = small4();
    for (const auto& m : members) {
        const bool exact = is_weak_gaussian(m.semiring).holds;
        const bool sweep = weak_gaussian_sweep(m.semiring, SweepWindow::univariate(3)).holds;
        o.expect(exact == sweep, m.name + " routes disagree");
        o.expect(exact == oracle_primes_subtractive(Tab::of(m.semiring)), m.name + " oracle");
    }
    o.expect(!is_weak_gaussian(S(CatalogSpec::b_n_i(4, 2))).holds, "b_n_i(4,2)");
    o.expect(is_weak_gaussian(S(CatalogSpec::b_n_i(3, 1))).holds, "b_n_i(3,1)");
    o.expect(!is_weak_gaussian(S(CatalogSpec::truncation(3))).holds, "truncation(3)");
    o.expect(is_weak_gaussian(S(CatalogSpec::chain_c())).holds, "chain_C");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(secs < 30.0, "runtime");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%zu members, %.2f s", members.size(), secs);
    o.note(buf);
}

void criterion4(Outcome& o) {
    int subtractive = 0;
    for (const auto& m : small4()) {
        const auto e = dm_semiring_equivalence(m.semiring, 3);
        o.expect(e.agrees, m.name + " equivalence");
        const Tab t = Tab::of(m.semiring);
        const bool sub = oracle_subtractive_semiring(t);
        o.expect(e.subtractive == sub, m.name + " oracle subtractive");
        if (!sub) continue;
        ++subtractive;
        o.expect(e.sweep.holds, m.name + " sweep");
        // Every pair of degree <= 3 has an exponent m <= deg g.
        Contents c(t);
        std::map<std::tuple<Mask, Mask, Mask, int>, bool> memo;
        const auto polys = oracle::all_polys(t, 3);
        bool all = true;
        for (const auto& f : polys) {
            const Mask cf = c.of(f);
            for (const auto& g : polys) {
                const Mask cg = c.of(g), cfg = c.of(oracle::poly_mul(t, f, g));
                const int d = spread(g);
                auto [it, fresh] = memo.try_emplace({cf, cg, cfg, d}, false);
                if (fresh)
                    for (int k = 0; k <= d && !it->second; ++k)
                        it->second = c.product(c.power(cf, k + 1), cg) == c.product(c.power(cf, k), cfg);
                all = all && it->second;
            }
        }
        o.expect(all, m.name + " oracle exponent bound");
    }
    o.note(std::to_string(small4().size()) + " members, " + std::to_string(subtractive) + " subtractive");
}

void criterion5(Outcome& o) {
    const auto s = S(CatalogSpec::power_set_lattice(3));
    const auto g = is_gaussian_up_to(s, 2);
    o.expect(g.holds, "Gaussian D=2");
    o.expect(gaussian_sufficient(s) == GaussianCertificate::SumGeneration, "certificate");
    const Tab t = Tab::of(s);
    Contents c(t);
    const auto polys = oracle::all_polys(t, 2);
    bool gauss = true;
    for (const auto& f : polys)
        for (const auto& h : polys)
            gauss = gauss && c.of(oracle::poly_mul(t, f, h)) == c.product(c.of(f), c.of(h));
    o.expect(gauss, "oracle Gaussian D=2");
    o.note(std::to_string(g.space) + " unordered pairs");
}

void criterion6(Outcome& o) {
    using namespace tropical;
    std::mt19937 rng(20260601);
    std::uniform_int_distribution<Value> coef(0, 20);
    std::uniform_int_distribution<int> deg(0, 5);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Value> fc(deg(rng) + 1), gc(deg(rng) + 1);
        for (auto& x : fc) x = coef(rng);
        for (auto& x : gc) x = coef(rng);
        const auto f = Poly::from_coeffs(fc), g = Poly::from_coeffs(gc);
        const auto fg = poly_mul(f, g);
        // Min-plus convolution computed directly.
        std::vector<Value> want(fc.size() + gc.size() - 1, kInf);
        for (std::size_t i = 0; i < fc.size(); ++i)
            for (std::size_t j = 0; j < gc.size(); ++j) want[i + j] = std::min(want[i + j], fc[i] + gc[j]);
        bool same = fg.terms.size() == want.size();
        for (std::size_t k = 0; same && k < want.size(); ++k)
            same = fg.terms.count(static_cast<unsigned>(k)) && fg.terms.at(static_cast<unsigned>(k)) == want[k];
        o.expect(same, "product " + std::to_string(trial));
        const Value minf = *std::min_element(fc.begin(), fc.end());
        const Value ming = *std::min_element(gc.begin(), gc.end());
        o.expect(fg.content_min() == minf + ming, "additivity " + std::to_string(trial));
        o.expect(gaussian_check(f, g).holds, "gaussian_check " + std::to_string(trial));
    }
    int sets = 0;
    for (Value n = 1; n <= 12; ++n)
        for (Value g1 = 0; g1 <= n; ++g1)
            for (Value g2 = g1; g2 <= n; ++g2) {
                std::vector<bool> reach(n + 1, false);
                for (Value s1 = 0; s1 <= n; ++s1)
                    for (Value s2 = 0; s2 <= n; ++s2) {
                        const Value v = std::min(s1 + g1, s2 + g2);
                        if (v <= n) reach[v] = true;
                    }
                const Value gens[2] = {g1, g2};
                for (Value x = 0; x <= n; ++x) o.expect(ideal_member(x, gens) == reach[x], "interval law");
                ++sets;
            }
    o.note("1000 pairs, " + std::to_string(sets) + " generator sets");
}

void criterion7(Outcome& o) {
    const auto s = S(CatalogSpec::truncation(3));
    const Ideal r = radical(ideal_generated(s, set_of(s, {"1"})));
    o.expect(r.members() == s.all() - set_of(s, {"0"}), "radical");
    o.expect(!is_subtractive(r).holds, "subtractive");
    const Tab t = Tab::of(s);
    const Mask want = t.all() & ~oracle::bit(s.at("0"));
    const Mask rad = oracle::radical(t, oracle::closure(t, oracle::bit(s.at("1"))));
    o.expect(rad == want, "oracle radical");
    o.expect(!oracle::is_subtractive(t, rad), "oracle subtractive");
    o.note("sqrt((1)) = {-inf, 1, 2, 3}");
}

void criterion8(Outcome& o) {
    for (const auto& m : small4()) {
        const auto v = verify_content_semialgebra(m.semiring, 3);
        o.expect(v.overall == is_subtractive_semiring(m.semiring).holds, m.name);
        o.expect(v.overall == oracle_subtractive_semiring(Tab::of(m.semiring)), m.name + " oracle");
    }
    o.note(std::to_string(small4().size()) + " members");
}

void criterion9(Outcome& o) {
    int primes = 0;
    for (const auto& m : small4()) {
        const Tab t = Tab::of(m.semiring);
        const auto r = series_content_check(m.semiring, 6, 2);
        o.expect(r.containment && r.agrees, m.name + " series");
        o.expect(r.weak_gaussian == oracle_primes_subtractive(t), m.name + " oracle weak Gaussian");
        for (Mask p : lattice_of(t).primes) {
            const auto pc = ps_prime_extension_check(m.semiring, ElementSet(p), 6, 2);
            o.expect(pc.prime && pc.agrees, m.name + " prime");
            o.expect(pc.extension_prime_bounded == oracle::is_subtractive(t, p), m.name + " prime extension");
            ++primes;
        }
    }
    o.note(std::to_string(primes) + " primes");
}

void criterion10(Outcome& o) {
    const auto members = small_catalog(8);
    for (const auto& m : members) {
        o.expect(very_few_zero_divisors(m.semiring), m.name + " very few");
        o.expect(property_A(m.semiring).holds, m.name + " property A");
        if (m.semiring.size() > 10) continue;
        const Tab t = Tab::of(m.semiring);
        const Mask z = oracle::zero_divisors(t);
        const Lattice l = lattice_of(t);
        Mask cover = 0;
        for (int a = 1; a < t.n; ++a) {
            const Mask ann = oracle::annihilator(t, oracle::bit(a));
            if (std::find(l.primes.begin(), l.primes.end(), ann) != l.primes.end()) cover |= ann;
        }
        o.expect(oracle::subset(z, cover), m.name + " oracle very few");
        for (Mask i : l.ideals)
            if (oracle::subset(i, z)) o.expect(oracle::annihilator(t, i) != oracle::bit(t.zero), m.name + " oracle A");
    }
    for (unsigned n = 1; n <= 3; ++n) {
        const auto s = build_catalog(CatalogSpec::product(std::vector<CatalogSpec>(n, CatalogSpec::nil_chain(3))));
        o.expect(zd_degree(s, 32).degree == n, "zd power " + std::to_string(n));
        const auto tr = poly_transfer_check(s, n == 3 ? 1 : 2, {}, 32);
        o.expect(tr.holds() && tr.zd_window == n, "transfer power " + std::to_string(n));
        if (n <= 2) {
            const Tab t = Tab::of(s);
            const Mask z = oracle::zero_divisors(t);
            std::vector<Mask> inside;
            for (Mask p : lattice_of(t).primes)
                if (oracle::subset(p, z)) inside.push_back(p);
            unsigned maximal = 0;
            for (Mask p : inside) {
                bool top = true;
                for (Mask q : inside) top = top && (q == p || !oracle::subset(p, q));
                maximal += top ? 1 : 0;
            }
            o.expect(maximal == n, "oracle zd power " + std::to_string(n));
        }
    }
    o.note(std::to_string(members.size()) + " members; zd = n for n = 1, 2, 3");
}

void criterion11(Outcome& o) {
    for (const auto& m : small4()) {
        const auto reg = FiniteSemimodule::regular(m.semiring);
        const auto e = dm_semimodule_equivalence(reg, 2);
        o.expect(e.agrees, m.name + " DM");
        o.expect(e.subtractive == oracle_subtractive_semiring(Tab::of(m.semiring)), m.name + " oracle subtractive");
        o.expect(content_equivalences(reg).agrees, m.name + " S");
        o.expect(content_equivalences(FiniteSemimodule::direct_sum(reg, reg)).agrees, m.name + " S+S");
    }
    o.note(std::to_string(small4().size()) + " members over themselves and squared");
}

void criterion12(Outcome& o) {
    int checked = 0;
    for (const auto& m : small4()) {
        const Tab t = Tab::of(m.semiring);
        if (!is_subtractive_semiring(m.semiring).holds) continue;
        o.expect(mccoy_check(m.semiring, 2).holds, m.name);
        const auto polys = oracle::all_polys(t, 2);
        bool holds = true;
        for (const auto& f : polys) {
            bool kills_nonzero = false;
            for (const auto& g : polys) {
                const auto fg = oracle::poly_mul(t, f, g);
                const bool g_zero = std::all_of(g.begin(), g.end(), [&](int c) { return c == t.zero; });
                const bool fg_zero = std::all_of(fg.begin(), fg.end(), [&](int c) { return c == t.zero; });
                kills_nonzero = kills_nonzero || (!g_zero && fg_zero);
            }
            if (!kills_nonzero) continue;
            bool scalar = false;
            for (int s = 0; s < t.n && !scalar; ++s)
                scalar = s != t.zero && std::all_of(f.begin(), f.end(), [&](int c) { return t.mul[s][c] == t.zero; });
            holds = holds && scalar;
        }
        o.expect(holds, m.name + " oracle");
        ++checked;
    }
    o.note(std::to_string(checked) + " subtractive members");
}

struct Criterion {
    int id;
    const char* title;
    std::function<void(Outcome&)> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "LaGrassa contents and weak Gaussian verdict", criterion1},
        {2, "nil_chain(4) and nil_chain(3) verdicts", criterion2},
        {3, "weak Gaussian routes agree up to 4 elements", criterion3},
        {4, "DM equivalence at D=3 up to 4 elements", criterion4},
        {5, "power_set_lattice(3) Gaussian at D=2", criterion5},
        {6, "tropical content additivity and interval law", criterion6},
        {7, "truncation(3) radical golden value", criterion7},
        {8, "content semialgebra iff subtractive", criterion8},
        {9, "power series content and prime extension", criterion9},
        {10, "zero-divisor regressions and zd degree", criterion10},
        {11, "semimodule DM and content equivalences", criterion11},
        {12, "McCoy property on subtractive members", criterion12},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d: %s  %s (%s) [%.3fs]\n", c.id, o.ok() ? "PASS" : "FAIL", c.title,
                    o.text().c_str(), secs);
        std::fflush(stdout);
        failed += o.ok() ? 0 : 1;
    }
    std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
