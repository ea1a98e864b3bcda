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

#include "semiring_lab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

namespace slab {

SweepWindow SweepWindow::univariate(unsigned degree, const std::string& name) {
    return make({Indeterminate{name, false}}, degree);
}

SweepWindow SweepWindow::make(std::vector<Indeterminate> indets, unsigned degree) {
    if (indets.empty()) throw BadParams("sweep window needs at least one indeterminate");
    SweepWindow w;
    w.indets = std::move(indets);
    w.degree = degree;
    const int d = static_cast<int>(degree);
    const int lo_laurent = -(d / 2);

    std::vector<int> shifted(w.indets.size(), 0);
    auto emit = [&] {
        Monomial m;
        for (std::size_t k = 0; k < w.indets.size(); ++k)
            m.multiply(w.indets[k].name, shifted[k] + (w.indets[k].laurent ? lo_laurent : 0));
        w.monomials.push_back(m);
    };
    // Enumerate shifted exponent vectors with sum <= D.
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
        if (k == w.indets.size()) {
            emit();
            return;
        }
        for (int e = 0; e <= left; ++e) {
            shifted[k] = e;
            rec(k + 1, left - e);
        }
        shifted[k] = 0;
    };
    rec(0, d);
    std::sort(w.monomials.begin(), w.monomials.end());
    w.monomials.erase(std::unique(w.monomials.begin(), w.monomials.end()), w.monomials.end());
    return w;
}

std::set<std::string> SweepWindow::laurent_names() const {
    std::set<std::string> r;
    for (const auto& i : indets)
        if (i.laurent) r.insert(i.name);
    return r;
}

PolySpace::PolySpace(FiniteSemiring s, SweepWindow window)
    : s_(std::move(s)), window_(std::move(window)) {
    const std::uint64_t n = s_.size();
    count_ = 1;
    for (std::size_t k = 0; k < slots(); ++k) {
        if (count_ > std::numeric_limits<std::uint64_t>::max() / n) {
            count_ = std::numeric_limits<std::uint64_t>::max();
            break;
        }
        count_ *= n;
    }
    const auto& mons = window_.monomials;
    for (const auto& a : mons)
        for (const auto& b : mons) product_monomials_.push_back(a * b);
    std::sort(product_monomials_.begin(), product_monomials_.end());
    product_monomials_.erase(std::unique(product_monomials_.begin(), product_monomials_.end()),
                             product_monomials_.end());
    product_index_.resize(mons.size() * mons.size());
    for (std::size_t i = 0; i < mons.size(); ++i) {
        for (std::size_t j = 0; j < mons.size(); ++j) {
            const Monomial m = mons[i] * mons[j];
            auto it = std::lower_bound(product_monomials_.begin(), product_monomials_.end(), m);
            product_index_[i * mons.size() + j] =
                static_cast<std::uint32_t>(it - product_monomials_.begin());
        }
    }
}

void PolySpace::decode(std::uint64_t index, std::span<Elem> out) const {
    const std::uint64_t n = s_.size();
    for (std::size_t k = 0; k < slots(); ++k) {
        out[k] = static_cast<Elem>(index % n);
        index /= n;
    }
}

Polynomial PolySpace::polynomial(std::uint64_t index) const {
    std::vector<Elem> c(slots());
    decode(index, c);
    Polynomial p(s_, window_.laurent_names());
    for (std::size_t k = 0; k < slots(); ++k) p.add_term(window_.monomials[k], c[k]);
    return p;
}

Polynomial PolySpace::product_polynomial(std::span<const Elem> coeffs) const {
    Polynomial p(s_, window_.laurent_names());
    for (std::size_t k = 0; k < product_slots(); ++k) p.add_term(product_monomials_[k], coeffs[k]);
    return p;
}

void PolySpace::multiply(std::span<const Elem> f, std::span<const Elem> g,
                         std::span<Elem> out) const {
    std::fill(out.begin(), out.end(), s_.zero());
    const std::size_t w = slots();
    for (std::size_t i = 0; i < w; ++i) {
        if (f[i] == s_.zero()) continue;
        for (std::size_t j = 0; j < w; ++j) {
            if (g[j] == s_.zero()) continue;
            Elem& slot = out[product_index_[i * w + j]];
            slot = s_.add(slot, s_.mul(f[i], g[j]));
        }
    }
}

namespace {

struct Precomputed {
    std::vector<Elem> coeffs;
    std::vector<ElementSet> support;
    std::vector<ElementSet> content;
};

Precomputed precompute(const PolySpace& space) {
    const std::size_t w = space.slots();
    const std::uint64_t n = space.count();
    Precomputed p;
    p.coeffs.resize(n * w);
    p.support.resize(n);
    p.content.resize(n);
    IdealArithmetic ar(space.semiring());
    for (std::uint64_t i = 0; i < n; ++i) {
        std::span<Elem> c(p.coeffs.data() + i * w, w);
        space.decode(i, c);
        ElementSet s;
        for (Elem e : c)
            if (e != space.semiring().zero()) s.insert(e);
        p.support[i] = s;
        p.content[i] = ar.closure(s);
    }
    return p;
}

unsigned thread_count(const SweepOptions& o) {
    if (!o.parallel) return 1;
    unsigned t = o.threads ? o.threads : std::thread::hardware_concurrency();
    return std::max(1u, t);
}

// Runs body(i, ar) for i = 0..n-1 until body reports a violation; returns the
// least violating i together with the inner index body produced.
template <class Body>
std::optional<std::pair<std::uint64_t, std::uint64_t>> run_outer(const FiniteSemiring& s,
                                                                 std::uint64_t n, unsigned threads,
                                                                 Body body) {
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best_i{std::numeric_limits<std::uint64_t>::max()};
    std::mutex mu;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> best;

    auto worker = [&] {
        IdealArithmetic ar(s);
        for (;;) {
            const std::uint64_t i = next.fetch_add(1);
            if (i >= n || i > best_i.load()) return;
            if (auto j = body(i, ar)) {
                std::lock_guard lock(mu);
                if (!best || i < best->first) {
                    best = std::pair{i, *j};
                    best_i.store(i);
                }
                return;
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return best;
}

} // namespace

SweepResult sweep_pairs(const PolySpace& space, const SweepOptions& options,
                        const PairPredicate& violates, PairOrder order) {
    const std::uint64_t n = space.count();
    const long double pairs = order == PairOrder::All
                                  ? static_cast<long double>(n) * n
                                  : static_cast<long double>(n) * (n + 1) / 2;
    if (pairs > static_cast<long double>(options.budget)) {
        throw BudgetExceeded("pair sweep over " + std::to_string(n) +
                             " polynomials exceeds budget " + std::to_string(options.budget));
    }
    const Precomputed pre = precompute(space);
    const std::size_t w = space.slots();
    const std::size_t pw = space.product_slots();
    const Elem zero = space.semiring().zero();

    auto body = [&](std::uint64_t i, IdealArithmetic& ar) -> std::optional<std::uint64_t> {
        std::vector<Elem> fg(pw);
        PairView v;
        v.fi = i;
        v.f = std::span<const Elem>(pre.coeffs.data() + i * w, w);
        v.cf = pre.content[i];
        const std::uint64_t last = order == PairOrder::Unordered ? i + 1 : n;
        for (std::uint64_t j = 0; j < last; ++j) {
            v.gi = j;
            v.g = std::span<const Elem>(pre.coeffs.data() + j * w, w);
            v.cg = pre.content[j];
            space.multiply(v.f, v.g, fg);
            ElementSet sup;
            for (Elem e : fg)
                if (e != zero) sup.insert(e);
            v.fg = fg;
            v.cfg = ar.closure(sup);
            if (violates(ar, v)) return j;
        }
        return std::nullopt;
    };

    SweepResult r;
    r.space = static_cast<std::uint64_t>(pairs);
    r.first = run_outer(space.semiring(), n, thread_count(options), body);
    r.holds = !r.first.has_value();
    return r;
}

SweepResult sweep_polys(const PolySpace& space, const SweepOptions& options,
                        const PolyPredicate& violates) {
    const std::uint64_t n = space.count();
    if (n > options.budget) {
        throw BudgetExceeded("polynomial sweep over " + std::to_string(n) +
                             " polynomials exceeds budget " + std::to_string(options.budget));
    }
    const Precomputed pre = precompute(space);
    const std::size_t w = space.slots();
    auto body = [&](std::uint64_t i, IdealArithmetic& ar) -> std::optional<std::uint64_t> {
        PolyView v;
        v.index = i;
        v.coeffs = std::span<const Elem>(pre.coeffs.data() + i * w, w);
        v.support = pre.support[i];
        v.content = pre.content[i];
        if (violates(ar, v)) return 0;
        return std::nullopt;
    };
    SweepResult r;
    r.space = n;
    r.first = run_outer(space.semiring(), n, thread_count(options), body);
    r.holds = !r.first.has_value();
    return r;
}

} // namespace slab
