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

#include "semiring_lab/report.hpp"

#include "semiring_lab/semialgebra.hpp"
#include "semiring_lab/zero_divisors.hpp"

#include <chrono>
#include <sstream>

namespace slab {

const Verdict& ClassificationReport::verdict(const std::string& name) const {
    for (const auto& v : verdicts)
        if (v.name == name) return v;
    throw BadParams("no verdict named " + name);
}

Json polynomial_witness_json(const Polynomial& p) {
    Json j;
    j["text"] = p.to_string();
    j.update(polynomial_to_json(p));
    return j;
}

Json witness_json(const PairWitness& w) {
    const FiniteSemiring& s = w.f.semiring();
    Json j;
    j["f"] = polynomial_witness_json(w.f);
    j["g"] = polynomial_witness_json(w.g);
    j["fg"] = polynomial_witness_json(w.fg);
    j["c(f)"] = ideal_to_json(s, w.cf);
    j["c(g)"] = ideal_to_json(s, w.cg);
    j["c(fg)"] = ideal_to_json(s, w.cfg);
    return j;
}

namespace {

Verdict named(const std::string& name) {
    Verdict v;
    v.name = name;
    return v;
}

Verdict skipped(const std::string& name, const std::exception& e) {
    Verdict v = named(name);
    v.value = nullptr;
    v.mode = "skipped";
    v.detail = e.what();
    return v;
}

template <class F>
Verdict guarded(const std::string& name, F&& body) {
    try {
        return body();
    } catch (const CapExceeded& e) {
        return skipped(name, e);
    } catch (const BudgetExceeded& e) {
        return skipped(name, e);
    }
}

Json labels(const FiniteSemiring& s, ElementSet set) { return ideal_to_json(s, set); }

Json set_list(const FiniteSemiring& s, const std::vector<ElementSet>& sets) {
    Json out = Json::array();
    for (ElementSet e : sets) out.push_back(labels(s, e));
    return out;
}

} // namespace

ClassificationReport classify(const FiniteSemiring& s, const InputDescriptor& input,
                              const ClassifyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    ClassificationReport r{.input = input, .options = options, .semiring = s, .flags = {}, .lattice = {},
                           .nil = {}, .zset = {}, .units = {}, .verdicts = {}, .seconds = {}};
    const unsigned d = options.degree_bound;
    const std::size_t cap = options.lattice_cap;
    const SweepOptions sweep{options.parallel, options.threads, options.budget};

    r.flags = structural_flags(s);
    r.units = units(s);
    IdealArithmetic ar(s);
    r.nil = ar.radical(ElementSet::single(s.zero()));
    r.zset = zero_divisors(s);

    std::optional<IdealLattice> lattice;
    try {
        lattice = enumerate_ideals(s, cap);
        r.lattice.ideal_count = lattice->size();
        r.lattice.ideals = lattice->ideals();
        r.lattice.primes = prime_ideals(*lattice);
        r.lattice.minimal_primes = minimal_primes(*lattice);
        r.lattice.maximal_ideals = maximal_ideals(*lattice);
    } catch (const CapExceeded& e) {
        r.lattice.error = e.what();
    }

    // Subtractivity.
    const SubtractiveSemiringVerdict sub = is_subtractive_semiring(s);
    {
        Verdict v = named("subtractive");
        v.value = sub.holds;
        if (!sub.holds) {
            Json w;
            w["ideal"] = labels(s, sub.ideal);
            w["generators"] = Json::array({s.label(sub.generators->first), s.label(sub.generators->second)});
            w["x"] = s.label(sub.witness->first);
            w["y"] = s.label(sub.witness->second);
            w["x+y"] = s.label(s.add(sub.witness->first, sub.witness->second));
            v.witness = std::move(w);
            v.detail = "x and x+y lie in the ideal, y does not";
        }
        r.verdicts.push_back(std::move(v));
    }

    // Weak Gaussian.
    std::optional<bool> weak;
    std::optional<PairWitness> weak_pair;
    r.verdicts.push_back(guarded("weak_gaussian", [&] {
        Verdict v = named("weak_gaussian");
        if (lattice) {
            const WeakGaussianVerdict wv = is_weak_gaussian(s, cap);
            weak = wv.holds;
            v.value = wv.holds;
            v.detail = "every prime ideal is subtractive";
            if (!wv.holds) {
                weak_pair = wv.witness;
                Json w;
                w["prime"] = labels(s, *wv.prime);
                w["x"] = s.label(wv.prime_witness->first);
                w["y"] = s.label(wv.prime_witness->second);
                w.update(witness_json(*wv.witness));
                w["c(f)c(g)"] = labels(s, wv.cfcg);
                w["sqrt(c(fg))"] = labels(s, wv.radical_cfg);
                v.witness = std::move(w);
                v.detail = "prime ideal is not subtractive";
            }
            return v;
        }
        const WeakGaussianSweep ws = weak_gaussian_sweep(s, SweepWindow::univariate(d), sweep);
        v.value = ws.holds;
        if (ws.holds) {
            v.mode = "bounded";
            v.bound = d;
        } else {
            weak = false;
            weak_pair = ws.witness;
            v.witness = witness_json(*ws.witness);
            v.detail = ws.failed + " fails";
        }
        return v;
    }));

    // Gaussian.
    r.verdicts.push_back(guarded("gaussian", [&] {
        Verdict v = named("gaussian");
        if (!sub.holds) {
            const auto [a, b] = *sub.witness;
            const PairWitness w = make_pair_witness(Polynomial::univariate(s, {s.one(), s.one()}),
                                                    Polynomial::univariate(s, {a, b, a}));
            v.value = false;
            v.detail = "not subtractive: c(fg) differs from c(f)c(g)";
            v.witness = witness_json(w);
            return v;
        }
        if (weak == false && weak_pair) {
            v.value = false;
            v.detail = "not weak Gaussian";
            v.witness = witness_json(*weak_pair);
            return v;
        }
        const GaussianCertificate cert = gaussian_sufficient(s, cap);
        if (cert != GaussianCertificate::None) {
            v.value = true;
            v.detail = std::string("certificate ") + to_string(cert);
            return v;
        }
        const GaussianSweep gs = is_gaussian_up_to(s, d, sweep);
        v.value = gs.holds;
        if (gs.holds) {
            v.mode = "bounded";
            v.bound = d;
            v.detail = "c(fg) = c(f)c(g) for all pairs of degree <= " + std::to_string(d);
        } else {
            v.witness = witness_json(*gs.witness);
            v.detail = "c(fg) differs from c(f)c(g)";
        }
        return v;
    }));

    // Content semialgebra S[X].
    r.verdicts.push_back(guarded("content_semialgebra", [&] {
        Verdict v = named("content_semialgebra");
        v.mode = "bounded";
        v.bound = d;
        const SemialgebraVerdict sa = verify_content_semialgebra(s, d, sweep, cap);
        v.value = sa.overall;
        v.detail = sa.agrees ? "agrees with subtractivity" : "disagrees with subtractivity";
        const std::pair<const char*, const AxiomCheck*> axioms[] = {
            {"membership", &sa.axiom1}, {"scalar", &sa.axiom2}, {"dedekind_mertens", &sa.axiom3}};
        for (const auto& [name, ax] : axioms) {
            if (ax->holds) continue;
            Json w;
            w["axiom"] = name;
            if (ax->pair) w.update(witness_json(*ax->pair));
            if (ax->poly) w["f"] = polynomial_witness_json(*ax->poly);
            if (ax->ideal) w["ideal"] = labels(s, *ax->ideal);
            if (ax->scalar) w["s"] = s.label(*ax->scalar);
            v.witness = std::move(w);
            break;
        }
        return v;
    }));

    // Zero-divisor theory.
    r.verdicts.push_back(guarded("property_A", [&] {
        Verdict v = named("property_A");
        const PropertyAVerdict pa = property_A(s);
        v.value = pa.holds;
        if (!pa.holds) {
            Json w;
            w["ideal"] = labels(s, *pa.witness);
            v.witness = std::move(w);
            v.detail = "ideal inside Z(S) with zero annihilator";
        }
        return v;
    }));
    {
        Verdict v = named("primal");
        v.value = is_primal(s);
        if (!v.value.get<bool>()) {
            for (Elem a : r.zset) {
                for (Elem b : r.zset) {
                    if (!r.zset.contains(s.add(a, b)) && v.witness.is_null()) {
                        Json w;
                        w["x"] = s.label(a);
                        w["y"] = s.label(b);
                        w["x+y"] = s.label(s.add(a, b));
                        v.witness = std::move(w);
                    }
                }
            }
            v.detail = "Z(S) is not closed under addition";
        }
        r.verdicts.push_back(std::move(v));
    }
    {
        Verdict v = named("very_few");
        v.value = very_few_zero_divisors(s);
        if (!v.value.get<bool>()) {
            ElementSet cover;
            for (ElementSet p : ass_primes(s)) cover |= p;
            Json w;
            w["uncovered"] = labels(s, r.zset - cover);
            v.witness = std::move(w);
        }
        r.verdicts.push_back(std::move(v));
    }
    r.verdicts.push_back(guarded("zd_degree", [&] {
        Verdict v = named("zd_degree");
        if (weak != true) {
            v.value = nullptr;
            v.mode = "skipped";
            v.detail = weak == false ? "defined for weak Gaussian semirings only" : "weak Gaussian status unknown";
            return v;
        }
        const ZdDegree z = zd_degree(s, cap);
        if (z.degree) v.value = *z.degree;
        else v.value = nullptr;
        v.detail = z.degree ? (z.unique ? "unique irredundant prime cover" : "prime cover is not unique")
                            : "no prime cover of Z(S)";
        Json w;
        w["maximal_primes"] = set_list(s, z.maximal_primes);
        v.witness = std::move(w);
        return v;
    }));

    if (options.timing) {
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return r;
}

Json to_json(const ClassificationReport& r) {
    const FiniteSemiring& s = r.semiring;
    Json j;
    j["schema"] = kReportSchema;
    j["input"] = {{"kind", r.input.kind}, {"name", r.input.name}};
    j["options"] = {{"degree_bound", r.options.degree_bound},
                    {"lattice_cap", r.options.lattice_cap},
                    {"parallel", r.options.parallel},
                    {"seed", r.options.seed}};
    Json sj = {{"size", s.size()}};
    sj.update(semiring_to_json(s));
    j["semiring"] = std::move(sj);
    Json st;
    st["zerosumfree"] = r.flags.zerosumfree;
    st["additively_idempotent"] = r.flags.additively_idempotent;
    st["multiplicatively_idempotent"] = r.flags.multiplicatively_idempotent;
    st["bounded_distributive_lattice"] = r.flags.bounded_distributive_lattice;
    st["local"] = r.flags.is_local;
    st["maximal_ideal"] = r.flags.maximal_ideal ? labels(s, *r.flags.maximal_ideal) : Json(nullptr);
    st["maximal_ideal_squared_zero"] = r.flags.maximal_ideal_squared_zero;
    j["structure"] = std::move(st);
    Json lat;
    if (r.lattice.ideal_count) {
        lat["ideal_count"] = *r.lattice.ideal_count;
        lat["ideals"] = set_list(s, r.lattice.ideals);
        lat["primes"] = set_list(s, r.lattice.primes);
        lat["minimal_primes"] = set_list(s, r.lattice.minimal_primes);
        lat["maximal_ideals"] = set_list(s, r.lattice.maximal_ideals);
    } else {
        lat["error"] = r.lattice.error;
    }
    j["lattice"] = std::move(lat);
    j["nil"] = labels(s, r.nil);
    j["zero_divisors"] = labels(s, r.zset);
    j["units"] = labels(s, r.units);
    Json summary, verdicts;
    for (const auto& v : r.verdicts) {
        summary[v.name] = v.value;
        Json e;
        e["value"] = v.value;
        e["mode"] = v.mode;
        if (v.bound) e["bound"] = *v.bound;
        if (!v.detail.empty()) e["detail"] = v.detail;
        if (!v.witness.is_null()) e["witness"] = v.witness;
        verdicts[v.name] = std::move(e);
    }
    j["summary"] = std::move(summary);
    j["verdicts"] = std::move(verdicts);
    if (r.seconds) j["timing"] = {{"seconds", *r.seconds}};
    return j;
}

ClassificationReport replay_report(const Json& j) {
    if (!j.is_object() || j.value("schema", std::string()) != kReportSchema)
        throw ParseError(std::string("not a ") + kReportSchema + " document");
    if (!j.contains("semiring")) throw ParseError("report has no semiring section");
    const FiniteSemiring s = semiring_from_json(j["semiring"]);
    InputDescriptor input;
    ClassifyOptions options;
    try {
        const Json& in = j.at("input");
        input.kind = in.at("kind").get<std::string>();
        input.name = in.at("name").get<std::string>();
        const Json& o = j.at("options");
        options.degree_bound = o.at("degree_bound").get<unsigned>();
        options.lattice_cap = o.at("lattice_cap").get<std::size_t>();
        options.parallel = o.at("parallel").get<bool>();
        options.seed = o.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
    options.timing = j.contains("timing");
    return classify(s, input, options);
}

namespace {

std::string set_text(const Json& arr) {
    std::string out = "{";
    for (std::size_t k = 0; k < arr.size(); ++k) out += (k ? ", " : "") + arr[k].get<std::string>();
    return out + "}";
}

std::string value_text(const Json& v) {
    if (v.is_null()) return "n/a";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        bool flat = true;
        for (const auto& e : v) flat = flat && e.is_string();
        if (flat) return set_text(v);
        std::string out = "[";
        for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + value_text(v[k]);
        return out + "]";
    }
    if (v.is_object() && v.contains("text")) return v["text"].get<std::string>();
    return v.dump();
}

} // namespace

std::string to_text(const ClassificationReport& r) {
    const Json j = to_json(r);
    std::ostringstream os;
    os << "schema: " << kReportSchema << '\n';
    os << "input: " << r.input.kind << ' ' << r.input.name << '\n';
    os << "elements (" << r.semiring.size() << "): " << set_text(j["semiring"]["elements"]) << '\n';
    os << "structure:";
    for (const auto& [k, v] : j["structure"].items()) os << ' ' << k << '=' << value_text(v);
    os << '\n';
    if (r.lattice.ideal_count) {
        os << "ideals: " << *r.lattice.ideal_count << ", primes: " << value_text(j["lattice"]["primes"])
           << '\n';
    } else {
        os << "ideals: not enumerated (" << r.lattice.error << ")\n";
    }
    os << "nil: " << value_text(j["nil"]) << ", zero divisors: " << value_text(j["zero_divisors"])
       << ", units: " << value_text(j["units"]) << '\n';
    for (const auto& v : r.verdicts) {
        os << v.name << ": " << value_text(v.value) << " [" << v.mode;
        if (v.bound) os << ", degree <= " << *v.bound;
        os << ']';
        if (!v.detail.empty()) os << " " << v.detail;
        os << '\n';
        if (v.witness.is_object()) {
            for (const auto& [k, w] : v.witness.items()) os << "    " << k << " = " << value_text(w) << '\n';
        }
    }
    if (r.seconds) os << "seconds: " << *r.seconds << '\n';
    return os.str();
}

} // namespace slab
