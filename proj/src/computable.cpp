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

#include "semiring_lab/computable.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace slab {

namespace tropical {

bool ideal_member(Value x, std::span<const Value> gens) {
    if (x == kInf) return true;
    Value m = kInf;
    for (Value g : gens) m = add(m, g);
    return m != kInf && x >= m;
}

Poly Poly::from_coeffs(std::span<const Value> coeffs) {
    Poly p;
    for (unsigned e = 0; e < coeffs.size(); ++e)
        if (coeffs[e] != kInf) p.terms[e] = coeffs[e];
    return p;
}

Value Poly::content_min() const {
    Value m = kInf;
    for (const auto& [e, c] : terms) m = add(m, c);
    return m;
}

std::string Poly::to_string() const {
    if (terms.empty()) return "inf";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " (+) ";
        first = false;
        os << c;
        if (e == 1) os << "X";
        else if (e > 1) os << "X^" << e;
    }
    return os.str();
}

Poly poly_add(const Poly& f, const Poly& g) {
    Poly r = f;
    for (const auto& [e, c] : g.terms) {
        auto [it, fresh] = r.terms.emplace(e, c);
        if (!fresh) it->second = add(it->second, c);
    }
    return r;
}

Poly poly_mul(const Poly& f, const Poly& g) {
    Poly r;
    for (const auto& [ef, cf] : f.terms) {
        for (const auto& [eg, cg] : g.terms) {
            const Value c = mul(cf, cg);
            auto [it, fresh] = r.terms.emplace(ef + eg, c);
            if (!fresh) it->second = add(it->second, c);
        }
    }
    return r;
}

GaussianCheck gaussian_check(const Poly& f, const Poly& g) {
    GaussianCheck out;
    out.content_fg = poly_mul(f, g).content_min();
    out.content_f_times_g = mul(f.content_min(), g.content_min());
    out.holds = out.content_fg == out.content_f_times_g;
    return out;
}

} // namespace tropical

namespace arctic {

namespace {
Value min_finite(std::span<const Value> gens) {
    Value m = kNegInf;
    for (Value g : gens)
        if (g != kNegInf && (m == kNegInf || g < m)) m = g;
    return m;
}
} // namespace

bool ideal_member(Value x, std::span<const Value> gens) {
    if (x == kNegInf) return true;
    const Value m = min_finite(gens);
    return m != kNegInf && x >= m;
}

bool radical_member(Value x, std::span<const Value> gens) {
    if (x == kNegInf) return true;
    const Value m = min_finite(gens);
    if (m == kNegInf) return false;
    // n*x >= m for some n >= 1
    return x >= 1 || m == 0;
}

SpotCheck spot_check(Value k) {
    SpotCheck s;
    s.k = k;
    const Value a = k;
    const Value b = 0;
    const Value f[2] = {a, b};
    const Value g[2] = {b, add(a, b)};
    s.fg[0] = mul(f[0], g[0]);
    s.fg[1] = add(mul(f[0], g[1]), mul(f[1], g[0]));
    s.fg[2] = mul(f[1], g[1]);
    const Value cf_cg = mul(b, b);  // both contents contain 0 = one
    s.containment_fails = !radical_member(cf_cg, std::span<const Value>(s.fg, 3));
    const Value gen[1] = {k};
    s.radical_not_subtractive = radical_member(a, gen) && radical_member(add(a, b), gen) &&
                                !radical_member(b, gen);
    return s;
}

} // namespace arctic

namespace natural {

bool ideal_member(std::uint64_t x, std::span<const std::uint64_t> gens) {
    if (x == 0) return true;
    std::vector<char> reach(x + 1, 0);
    reach[0] = 1;
    for (std::uint64_t v = 1; v <= x; ++v)
        for (std::uint64_t g : gens)
            if (g != 0 && g <= v && reach[v - g]) {
                reach[v] = 1;
                break;
            }
    return reach[x] != 0;
}

SpotCheck spot_check(std::uint64_t a, std::uint64_t window) {
    SpotCheck s;
    s.a = a;
    const std::uint64_t b = 1;
    s.fg[0] = a * b;
    s.fg[1] = a * (a + b) + b * b;
    s.fg[2] = b * (a + b);

    auto in_p = [](std::uint64_t x) { return x != 1; };
    s.p_prime_on_window = true;
    for (std::uint64_t x = 0; x <= window; ++x)
        for (std::uint64_t y = 0; y <= window; ++y)
            if (in_p(x * y) && !in_p(x) && !in_p(y)) s.p_prime_on_window = false;
    s.p_not_subtractive = a != 0 && a != 1 && in_p(a) && in_p(a + b) && !in_p(b);

    // 1^n = 1 for every n, so 1 is in the radical of c(fg) iff 1 is in c(fg).
    const bool one_in_cfcg = ideal_member(1, std::span<const std::uint64_t>(&b, 1));
    const bool one_in_rad = ideal_member(1, std::span<const std::uint64_t>(s.fg, 3));
    s.containment_fails = one_in_cfcg && !one_in_rad;
    return s;
}

} // namespace natural

} // namespace slab
