// Copyright 2026 The circpair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CIRCPAIR_PACKED_H
#define CIRCPAIR_PACKED_H

// Fixed-width bit-plane words for the enumeration kernels.

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "circpair/gf4.h"

namespace circpair {

template <int W>
struct Packed {
    std::array<uint64_t, W> a{};
    std::array<uint64_t, W> b{};

    Packed &operator^=(const Packed &o) {
        for (int k = 0; k < W; k++) {
            a[k] ^= o.a[k];
            b[k] ^= o.b[k];
        }
        return *this;
    }
    friend Packed operator^(Packed x, const Packed &y) {
        x ^= y;
        return x;
    }
    int weight() const {
        int w = 0;
        for (int k = 0; k < W; k++) {
            w += std::popcount(a[k] | b[k]);
        }
        return w;
    }
    bool odd_weight() const { return weight() & 1; }
};

/// Packs the listed coordinates of v (in list order) into a Packed<W>.
template <int W>
Packed<W> pack_coords(const F4Vector &v, const std::vector<uint32_t> &coords) {
    Packed<W> p;
    for (size_t j = 0; j < coords.size(); j++) {
        F4 x = v.get(coords[j]);
        if (x.plane_a()) {
            p.a[j / 64] |= uint64_t{1} << (j % 64);
        }
        if (x.plane_b()) {
            p.b[j / 64] |= uint64_t{1} << (j % 64);
        }
    }
    return p;
}

template <int W>
Packed<W> pack_all(const F4Vector &v) {
    Packed<W> p;
    auto pa = v.plane_a(), pb = v.plane_b();
    for (size_t k = 0; k < pa.size(); k++) {
        p.a[k] = pa[k];
        p.b[k] = pb[k];
    }
    return p;
}

template <int W>
F4Vector unpack_all(const Packed<W> &p, size_t n) {
    return F4Vector::from_planes(n, std::span<const uint64_t>(p.a.data(), W), std::span<const uint64_t>(p.b.data(), W));
}

/// Calls fn(std::integral_constant<int, W>{}) with the smallest supported W
/// holding `coords` coordinates.
template <class Fn>
decltype(auto) dispatch_words(size_t coords, Fn &&fn) {
    size_t words = (coords + 63) / 64;
    if (words <= 1) {
        return fn(std::integral_constant<int, 1>{});
    }
    if (words <= 2) {
        return fn(std::integral_constant<int, 2>{});
    }
    if (words <= 4) {
        return fn(std::integral_constant<int, 4>{});
    }
    if (words <= 8) {
        return fn(std::integral_constant<int, 8>{});
    }
    throw std::invalid_argument("codes longer than 512 coordinates are not supported");
}

}  // namespace circpair

#endif
