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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <vector>

namespace slab {

/// Dense index of an element inside a finite semiring or semimodule.
using Elem = std::uint16_t;

/// Largest carrier the library handles; element sets are single machine words.
inline constexpr std::size_t kMaxElements = 64;

/// A subset of a finite carrier, stored as a bit mask over element indices.
class ElementSet {
public:
    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr ElementSet single(Elem e) { return ElementSet(std::uint64_t{1} << e); }
    static constexpr ElementSet full(std::size_t n) {
        return ElementSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    template <class Range>
    static ElementSet of(const Range& elems) {
        ElementSet s;
        for (auto e : elems) s.insert(static_cast<Elem>(e));
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Elem e) const { return (bits_ >> e) & 1u; }
    constexpr void insert(Elem e) { bits_ |= std::uint64_t{1} << e; }
    constexpr void erase(Elem e) { bits_ &= ~(std::uint64_t{1} << e); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }

    /// Smallest member; undefined on the empty set.
    constexpr Elem first() const { return static_cast<Elem>(std::countr_zero(bits_)); }

    constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
    constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
    constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
    constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
    constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
    constexpr bool operator==(const ElementSet&) const = default;
    constexpr auto operator<=>(const ElementSet&) const = default;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Elem;
        using difference_type = std::ptrdiff_t;
        using pointer = const Elem*;
        using reference = Elem;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr Elem operator*() const { return static_cast<Elem>(std::countr_zero(rest_)); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<Elem> to_vector() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

} // namespace slab

template <>
struct std::hash<slab::ElementSet> {
    std::size_t operator()(const slab::ElementSet& s) const noexcept {
        return std::hash<std::uint64_t>{}(s.bits());
    }
};
