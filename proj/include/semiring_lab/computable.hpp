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

// Semirings with infinite carriers. Only arithmetic and closed-form ideal
// membership are offered; there is no lattice enumeration here.

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>

namespace slab {

namespace tropical {

/// Carrier N0 with +inf; addition is min, multiplication is integer +.
using Value = std::uint64_t;
inline constexpr Value kInf = std::numeric_limits<Value>::max();
inline constexpr Value kZero = kInf;
inline constexpr Value kOne = 0;

constexpr Value add(Value a, Value b) { return a < b ? a : b; }
constexpr Value mul(Value a, Value b) {
    if (a == kInf || b == kInf) return kInf;
    return (a > kInf - 1 - b) ? kInf - 1 : a + b;
}

/// x lies in the ideal generated by gens iff x >= min(gens); +inf lies in every ideal.
bool ideal_member(Value x, std::span<const Value> gens);

/// Sparse polynomial: exponent -> finite coefficient. The zero polynomial is empty.
struct Poly {
    std::map<unsigned, Value> terms;

    static Poly from_coeffs(std::span<const Value> coeffs);
    bool is_zero() const { return terms.empty(); }
    /// Least coefficient, i.e. the generator of the content ideal; +inf for zero.
    Value content_min() const;
    std::string to_string() const;
};

Poly poly_add(const Poly& f, const Poly& g);
Poly poly_mul(const Poly& f, const Poly& g);

struct GaussianCheck {
    bool holds = true;
    Value content_fg = kInf;
    Value content_f_times_g = kInf;
};

/// c(fg) = c(f)c(g) restated on interval ideals: min(fg) = min f + min g.
GaussianCheck gaussian_check(const Poly& f, const Poly& g);

} // namespace tropical

namespace arctic {

/// Carrier N0 with -inf; addition is max, multiplication is integer +.
using Value = std::int64_t;
inline constexpr Value kNegInf = std::numeric_limits<Value>::min();

constexpr Value add(Value a, Value b) { return a > b ? a : b; }
constexpr Value mul(Value a, Value b) { return (a == kNegInf || b == kNegInf) ? kNegInf : a + b; }

/// The ideal generated by gens is {-inf} together with [min finite gen, inf).
bool ideal_member(Value x, std::span<const Value> gens);
bool radical_member(Value x, std::span<const Value> gens);

/// Non-weak-Gaussian witness built from a = k, b = 0 with f = a + bX and
/// g = b + (a+b)X. Requires k >= 1.
struct SpotCheck {
    Value k = 1;
    Value fg[3] = {0, 0, 0};
    /// 0 lies in c(f)c(g) but not in the radical of c(fg).
    bool containment_fails = false;
    /// a = k and max(a, b) are in the radical of (k) while b = 0 is not.
    bool radical_not_subtractive = false;
};
SpotCheck spot_check(Value k);

} // namespace arctic

namespace natural {

/// (N0, +, *). Membership of x in the ideal generated by gens, decided by a
/// coin-change table up to x.
bool ideal_member(std::uint64_t x, std::span<const std::uint64_t> gens);

/// Witness from the prime P = N0 - {1}: a in P - {0}, b = 1, so a + b and a
/// lie in P while b does not. f = a + bX, g = b + (a+b)X.
struct SpotCheck {
    std::uint64_t a = 2;
    std::uint64_t fg[3] = {0, 0, 0};
    bool p_prime_on_window = false;
    bool p_not_subtractive = false;
    /// 1 lies in c(f)c(g) but 1^n = 1 never lies in c(fg).
    bool containment_fails = false;
};
SpotCheck spot_check(std::uint64_t a, std::uint64_t window);

} // namespace natural

} // namespace slab
