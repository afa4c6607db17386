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

#ifndef CIRCPAIR_SRC_KERNEL_H
#define CIRCPAIR_SRC_KERNEL_H

// Pattern enumeration over one window form.
//
// A level-t pass visits every valid projection of weight exactly t on the
// window, each combined with every rest-row sum. Window weight is exactly t,
// so only the outside coordinates are evaluated. Work is split into tasks by
// a fixed prefix of window positions; task order is the visiting order.
//
// In orbit mode the window is a single cycle of an automorphism and only
// patterns that contain position 0 and whose gap ending at position 0 is the
// largest are visited (at least one per orbit).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <vector>

#if defined(__AVX512F__)
#include <immintrin.h>
#endif

#include "circpair/packed.h"
#include "window_form.h"

namespace circpair::detail {

/// Parity of an unused option slot; never equal to a real parity word.
inline constexpr uint64_t kNoOption = uint64_t{1} << 63;

template <int W>
struct PackedForm {
    int items = 0;
    std::vector<Packed<W>> opt;  // items * 3
    std::vector<uint64_t> par;   // items * 3, kNoOption for unused slots
    std::vector<uint8_t> count;  // options per item
    std::vector<Packed<W>> rest;
    // Planes of opt, word-major per slot, for the leaf loop.
    std::vector<uint64_t> opt_a, opt_b;

    explicit PackedForm(const WindowForm &f) : items(int(f.window.size())) {
        size_t slots = size_t(items) * 3;
        opt.resize(slots);
        par.assign(slots, kNoOption);
        count.resize(size_t(items));
        for (int i = 0; i < items; i++) {
            const auto &o = f.options[size_t(i)];
            count[size_t(i)] = uint8_t(o.size());
            for (size_t q = 0; q < o.size(); q++) {
                opt[size_t(i) * 3 + q] = pack_coords<W>(o[q].lift, f.outside);
                par[size_t(i) * 3 + q] = o[q].parity;
            }
        }
        opt_a.resize(slots * W);
        opt_b.resize(slots * W);
        for (size_t k = 0; k < slots; k++) {
            for (int w = 0; w < W; w++) {
                opt_a[k * W + size_t(w)] = opt[k].a[size_t(w)];
                opt_b[k * W + size_t(w)] = opt[k].b[size_t(w)];
            }
        }
        for (const auto &r : f.rest_sums) {
            rest.push_back(pack_coords<W>(r, f.outside));
        }
    }
};

/// Selected (position, option) pairs for the pattern being visited.
struct Selection {
    int depth = 0;
    int pos[128];
    int option[128];
};

/// Task prefix: fixed leading window positions.
using Prefix = std::vector<int>;

inline void generic_prefixes_rec(int items, int level, int len, Prefix &cur, std::vector<Prefix> &out) {
    int depth = int(cur.size());
    if (depth == len) {
        out.push_back(cur);
        return;
    }
    int start = depth == 0 ? 0 : cur.back() + 1;
    for (int j = start; j <= items - (level - depth); j++) {
        cur.push_back(j);
        generic_prefixes_rec(items, level, len, cur, out);
        cur.pop_back();
    }
}

/// Task prefixes in visiting order for a generic level pass.
inline std::vector<Prefix> make_generic_prefixes(int items, int level, int max_len = 2) {
    std::vector<Prefix> out;
    Prefix cur;
    int len = std::max(0, std::min(level - 1, max_len));
    generic_prefixes_rec(items, level, len, cur, out);
    return out;
}

inline void orbit_prefixes_rec(int n, int level, int len, int max_gap, Prefix &cur, std::vector<Prefix> &out) {
    int depth = int(cur.size());
    if (depth == len) {
        out.push_back(cur);
        return;
    }
    int last = cur.back();
    int after = level - 1 - depth;
    for (int s = last + 1;; s++) {
        int mg = std::max(max_gap, s - last);
        if (s + after > n - mg) {
            break;
        }
        cur.push_back(s);
        orbit_prefixes_rec(n, level, len, mg, cur, out);
        cur.pop_back();
    }
}

/// Task prefixes for an orbit pass; element 0 is always position 0.
inline std::vector<Prefix> make_orbit_prefixes(int n, int level, int max_len = 3) {
    std::vector<Prefix> out;
    Prefix cur{0};
    int len = std::max(1, std::min(level - 1, max_len));
    orbit_prefixes_rec(n, level, len, 0, cur, out);
    return out;
}

/// Sink interface (duck-typed):
///   int limit;                       leaf reports weights <= limit
///   bool stopped();                  polled between inner loops
///   void hit(int w, const Selection&, int rest_index);
template <int W, class Sink>
class PatternKernel {
   public:
    PatternKernel(const PackedForm<W> &f, int level, bool orbit, Sink &sink)
        : f_(f), level_(level), orbit_(orbit), n_(f.items), sink_(sink) {}

    uint64_t enumerated() const { return enumerated_; }

    void run(const Prefix &prefix) {
        Packed<W> acc;
        prefix_ = &prefix;
        sel_.depth = 0;
        if (orbit_) {
            orbit_dfs(0, -1, 0, acc, 0);
        } else {
            generic_dfs(0, 0, acc, 0);
        }
    }

    /// Level 0: nonzero rest sums only.
    void run_level_zero() {
        sel_.depth = 0;
        for (size_t r = 1; r < f_.rest.size(); r++) {
            enumerated_++;
            int w = f_.rest[r].weight();
            if (w <= sink_.limit) {
                sink_.hit(w, sel_, int(r));
            }
        }
    }

   private:
    // Every option slot of positions [lo, hi) as the last pattern element.
    // The scan is branch-free: a parity mismatch adds a penalty to the
    // weight, and hits are emitted in a second pass only when the smallest
    // weight is within the sink's limit.
    void leaf_range(int lo, int hi, const Packed<W> &acc, uint64_t parity) {
        constexpr int kPenalty = 1 << 20;
        const size_t k0 = size_t(lo) * 3, k1 = size_t(hi) * 3;
        const size_t nr = f_.rest.size();
        const uint64_t *pa = f_.opt_a.data();
        const uint64_t *pb = f_.opt_b.data();
        const uint64_t *pp = f_.par.data();
        int best = kPenalty;
        uint64_t matched = 0;
#if defined(__AVX512F__) && defined(__AVX512VPOPCNTDQ__)
        if constexpr (W == 1) {
            const __m512i want = _mm512_set1_epi64(int64_t(parity));
            __m512i low = _mm512_set1_epi64(kPenalty);
            for (size_t k = k0; k < k1; k += 8) {
                __mmask8 live = k1 - k >= 8 ? __mmask8(0xff) : __mmask8((1u << (k1 - k)) - 1);
                __m512i par = _mm512_maskz_loadu_epi64(live, pp + k);
                __mmask8 ok = _mm512_mask_cmpeq_epi64_mask(live, par, want);
                matched += uint64_t(std::popcount(unsigned(ok)));
                if (!ok) {
                    continue;
                }
                __m512i oa = _mm512_maskz_loadu_epi64(ok, pa + k);
                __m512i ob = _mm512_maskz_loadu_epi64(ok, pb + k);
                for (size_t r = 0; r < nr; r++) {
                    Packed<W> base = acc ^ f_.rest[r];
                    __m512i va = _mm512_xor_si512(oa, _mm512_set1_epi64(int64_t(base.a[0])));
                    __m512i vb = _mm512_xor_si512(ob, _mm512_set1_epi64(int64_t(base.b[0])));
                    __m512i w = _mm512_popcnt_epi64(_mm512_or_si512(va, vb));
                    low = _mm512_mask_min_epi64(low, ok, low, w);
                }
            }
            best = int(_mm512_reduce_min_epi64(low));
        } else
#endif
        {
            for (size_t k = k0; k < k1; k++) {
                matched += pp[k] == parity;
            }
            for (size_t r = 0; r < nr; r++) {
                Packed<W> base = acc ^ f_.rest[r];
                for (size_t k = k0; k < k1; k++) {
                    int w = pp[k] == parity ? 0 : kPenalty;
                    for (int x = 0; x < W; x++) {
                        w += std::popcount((base.a[size_t(x)] ^ pa[k * W + size_t(x)]) |
                                           (base.b[size_t(x)] ^ pb[k * W + size_t(x)]));
                    }
                    best = std::min(best, w);
                }
            }
        }
        enumerated_ += matched * nr;
        if (level_ + best > sink_.limit) {
            return;
        }
        for (size_t k = k0; k < k1; k++) {
            if (pp[k] != parity) {
                continue;
            }
            Packed<W> v = acc ^ f_.opt[k];
            for (size_t r = 0; r < nr; r++) {
                int w = level_ + (v ^ f_.rest[r]).weight();
                if (w <= sink_.limit) {
                    sel_.pos[sel_.depth] = int(k / 3);
                    sel_.option[sel_.depth] = int(k % 3);
                    sel_.depth++;
                    sink_.hit(w, sel_, int(r));
                    sel_.depth--;
                }
            }
        }
    }

    // Choose position `depth` (0-based) of a level_-item pattern.
    void generic_dfs(int depth, int start, const Packed<W> &acc, uint64_t parity) {
        int remaining = level_ - depth;
        bool forced = depth < int(prefix_->size());
        int lo = forced ? (*prefix_)[size_t(depth)] : start;
        int hi = forced ? lo + 1 : n_ - remaining + 1;
        if (remaining == 1) {
            leaf_range(lo, hi, acc, parity);
            return;
        }
        for (int j = lo; j < hi; j++) {
            if (sink_.stopped()) {
                return;
            }
            int cnt = f_.count[size_t(j)];
            for (int q = 0; q < cnt; q++) {
                size_t idx = size_t(j) * 3 + size_t(q);
                sel_.pos[depth] = j;
                sel_.option[depth] = q;
                sel_.depth = depth + 1;
                generic_dfs(depth + 1, j + 1, acc ^ f_.opt[idx], parity ^ f_.par[idx]);
            }
        }
        sel_.depth = depth;
    }

    // Positions s_0 = 0 < s_1 < ... < s_{t-1}; gaps s_{i+1} - s_i and the
    // closing gap n - s_{t-1}, which must be the largest.
    void orbit_dfs(int depth, int last, int max_gap, const Packed<W> &acc, uint64_t parity) {
        int remaining = level_ - depth;  // positions still to choose, including this one
        if (depth == 0) {
            // s_0 = 0.
            if (level_ == 1) {
                leaf_range(0, 1, acc, parity);
                return;
            }
            int cnt = f_.count[0];
            for (int q = 0; q < cnt; q++) {
                sel_.pos[0] = 0;
                sel_.option[0] = q;
                sel_.depth = 1;
                orbit_dfs(1, 0, 0, acc ^ f_.opt[size_t(q)], parity ^ f_.par[size_t(q)]);
            }
            sel_.depth = 0;
            return;
        }
        bool forced = depth < int(prefix_->size());
        if (remaining == 1) {
            // Closing gap n - s must be >= max(max_gap, s - last).
            int hi = std::min(n_ - max_gap, (n_ + last) / 2);
            int lo = last + 1;
            if (forced) {
                int p = (*prefix_)[size_t(depth)];
                if (p < lo || p > hi) {
                    return;
                }
                lo = p;
                hi = p;
            }
            leaf_range(lo, hi + 1, acc, parity);
            return;
        }
        // After s, remaining - 1 positions follow, each at least one step on,
        // and the closing gap must still be >= the largest gap so far.
        int lo = last + 1;
        int after = remaining - 1;
        if (forced) {
            lo = (*prefix_)[size_t(depth)];
        }
        for (int s = lo;; s++) {
            int g = s - last;
            int mg = std::max(max_gap, g);
            if (s + after > n_ - mg) {
                break;
            }
            if (forced && s != lo) {
                break;
            }
            if (sink_.stopped()) {
                return;
            }
            int cnt = f_.count[size_t(s)];
            for (int q = 0; q < cnt; q++) {
                size_t idx = size_t(s) * 3 + size_t(q);
                sel_.pos[depth] = s;
                sel_.option[depth] = q;
                sel_.depth = depth + 1;
                orbit_dfs(depth + 1, s, mg, acc ^ f_.opt[idx], parity ^ f_.par[idx]);
            }
        }
        sel_.depth = depth;
    }

    const PackedForm<W> &f_;
    int level_;
    bool orbit_;
    int n_;
    Sink &sink_;
    const Prefix *prefix_ = nullptr;
    Selection sel_;
    uint64_t enumerated_ = 0;
};

/// Number of maximal gaps of a sorted cyclic position set on Z_n.
inline int max_gap_multiplicity(const int *pos, int count, int n) {
    int best = 0, mult = 0;
    for (int i = 0; i < count; i++) {
        int g = (i + 1 < count ? pos[i + 1] : pos[0] + n) - pos[i];
        if (g > best) {
            best = g;
            mult = 1;
        } else if (g == best) {
            mult++;
        }
    }
    return mult;
}

}  // namespace circpair::detail

#endif
