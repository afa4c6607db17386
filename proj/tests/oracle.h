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

#ifndef CIRCPAIR_TESTS_ORACLE_H
#define CIRCPAIR_TESTS_ORACLE_H

// Independent reference computations used by the tests. Nothing here calls
// the library's walks or windowed engine; codewords come from plain subset
// sums of the generators.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "circpair/additive_code.h"
#include "circpair/circulant.h"
#include "circpair/gf4.h"

namespace oracle {

using circpair::CirculantPair;
using circpair::F4;
using circpair::F4Vector;
using circpair::SupportSet;

// Field product from the table of GF(4) = {0, 1, w, w^2 = w + 1}.
inline F4 mul(F4 x, F4 y) {
    // Powers of w: 1 = w^0, w = w^1, W = w^2.
    auto log = [](F4 v) { return v == F4::one ? 0 : v == F4::omega ? 1 : 2; };
    if (x.is_zero() || y.is_zero()) {
        return F4::zero;
    }
    int e = (log(x) + log(y)) % 3;
    return e == 0 ? F4::one : e == 1 ? F4::omega : F4::omega_bar;
}

inline F4 conj(F4 x) { return mul(x, x); }

// Trace of x * conj(y) + conj(x) * y summed over coordinates; 0 or 1.
inline int trace_product(const F4Vector &x, const F4Vector &y) {
    F4 s = F4::zero;
    for (size_t i = 0; i < x.size(); i++) {
        s = s + mul(x.get(i), conj(y.get(i))) + mul(conj(x.get(i)), y.get(i));
    }
    return s == F4::one ? 1 : 0;
}

// All codewords as the distinct subset sums of the generators (small codes only).
inline std::set<F4Vector> all_codewords(const std::vector<F4Vector> &gens) {
    std::set<F4Vector> words{F4Vector(gens.front().size())};
    for (const auto &g : gens) {
        std::vector<F4Vector> add;
        for (const auto &w : words) {
            add.push_back(w + g);
        }
        words.insert(add.begin(), add.end());
    }
    return words;
}

inline std::map<size_t, uint64_t> distribution(const std::vector<F4Vector> &gens) {
    std::map<size_t, uint64_t> d;
    for (const auto &w : all_codewords(gens)) {
        d[w.weight()]++;
    }
    return d;
}

inline int min_weight(const std::vector<F4Vector> &gens) {
    auto d = distribution(gens);
    for (auto [w, c] : d) {
        if (w > 0) {
            return int(w);
        }
    }
    return 0;
}

// Every vector of F4^n orthogonal to all generators (n <= 8).
inline std::vector<F4Vector> dual_by_search(const std::vector<F4Vector> &gens) {
    size_t n = gens.front().size();
    std::vector<F4Vector> out;
    for (uint64_t code = 0; code < (uint64_t{1} << (2 * n)); code++) {
        F4Vector x(n);
        for (size_t i = 0; i < n; i++) {
            x.set(i, F4::from_bits(uint8_t((code >> (2 * i)) & 3)));
        }
        bool ok = true;
        for (const auto &g : gens) {
            if (trace_product(x, g)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.push_back(x);
        }
    }
    return out;
}

// Generators of M(A,B) + wI straight from the definition: entry (r, c) of a
// circulant with first-row support S is 1 iff c - r + 1 (mod n) is in S.
inline std::vector<F4Vector> pair_generators(const CirculantPair &p) {
    size_t n = p.order();
    auto circ = [&](const SupportSet &s, size_t r, size_t c) { return s.contains((c + n - r) % n + 1); };
    std::vector<F4Vector> rows;
    for (size_t r = 0; r < 2 * n; r++) {
        F4Vector v(2 * n);
        for (size_t c = 0; c < 2 * n; c++) {
            bool bit;
            if (r < n && c < n) bit = circ(p.supp_a(), r, c);
            else if (r < n) bit = circ(p.supp_b(), r, c - n);
            else if (c < n) bit = circ(p.supp_b(), c, r - n);  // B transposed
            else bit = circ(p.supp_a(), r - n, c - n);
            v.set(c, F4::from_planes(bit, r == c));
        }
        rows.push_back(v);
    }
    return rows;
}

// Uniform symmetric zero-diagonal support and uniform B support.
inline CirculantPair random_pair(size_t n, std::mt19937_64 &rng) {
    std::vector<size_t> a, b;
    for (size_t j = 2; j <= n; j++) {
        size_t m = (n + 1 - j) % n + 1;
        if (m < j) {
            continue;
        }
        if (rng() & 1) {
            a.push_back(j);
            if (m != j) {
                a.push_back(m);
            }
        }
    }
    for (size_t j = 1; j <= n; j++) {
        if (rng() & 1) {
            b.push_back(j);
        }
    }
    std::sort(a.begin(), a.end());
    return CirculantPair(n, SupportSet(n, a), SupportSet(n, b));
}

inline circpair::BinaryMatrix random_adjacency(size_t n, std::mt19937_64 &rng) {
    circpair::BinaryMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            bool v = rng() & 1;
            m.set(i, j, v);
            m.set(j, i, v);
        }
    }
    return m;
}

}  // namespace oracle

#endif
