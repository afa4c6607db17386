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

#include "window_form.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace circpair::detail {

namespace {

using Bits = std::vector<uint64_t>;

bool test_bit(const Bits &b, size_t i) { return (b[i / 64] >> (i % 64)) & 1; }
void set_bit(Bits &b, size_t i) { b[i / 64] |= uint64_t{1} << (i % 64); }
void xor_into(Bits &dst, const Bits &src) {
    for (size_t k = 0; k < dst.size(); k++) {
        dst[k] ^= src[k];
    }
}
int lowest_bit(const Bits &b) {
    for (size_t k = 0; k < b.size(); k++) {
        if (b[k]) {
            return int(k * 64) + std::countr_zero(b[k]);
        }
    }
    return -1;
}

// Span of GF(2) vectors keyed by lowest set bit.
class XorBasis {
   public:
    bool insert(Bits v) {
        while (true) {
            int p = lowest_bit(v);
            if (p < 0) {
                return false;
            }
            auto it = by_pivot_.find(p);
            if (it == by_pivot_.end()) {
                by_pivot_.emplace(p, std::move(v));
                return true;
            }
            xor_into(v, it->second);
        }
    }
    size_t size() const { return by_pivot_.size(); }

   private:
    std::map<int, Bits> by_pivot_;
};

// Bit column (coord, plane) of the basis as a rank-length vector.
Bits column_of(const AdditiveCode &c, uint32_t coord, int plane) {
    const auto &basis = c.basis();
    Bits col((basis.size() + 63) / 64, 0);
    for (size_t r = 0; r < basis.size(); r++) {
        if (basis[r].bit(coord, plane)) {
            set_bit(col, r);
        }
    }
    return col;
}

int coordinate_rank(const AdditiveCode &c, uint32_t coord, F4 &single_value) {
    F4 seen = F4::zero;
    for (const auto &row : c.basis()) {
        F4 v = row.get(coord);
        if (v.is_zero()) {
            continue;
        }
        if (seen.is_zero()) {
            seen = v;
        } else if (v != seen) {
            return 2;
        }
    }
    single_value = seen;
    return seen.is_zero() ? 0 : 1;
}

}  // namespace

int projection_rank(const AdditiveCode &c, const std::vector<uint32_t> &coords) {
    XorBasis cols;
    for (uint32_t i : coords) {
        cols.insert(column_of(c, i, 0));
        cols.insert(column_of(c, i, 1));
    }
    return int(cols.size());
}

std::vector<std::vector<uint32_t>> greedy_windows(const AdditiveCode &c) {
    std::vector<uint32_t> remaining(c.length());
    for (uint32_t i = 0; i < c.length(); i++) {
        remaining[i] = i;
    }
    std::vector<std::vector<uint32_t>> windows;
    size_t k = c.rank();
    while (!remaining.empty()) {
        XorBasis cols;
        std::vector<uint32_t> window;
        std::vector<bool> used(c.length(), false);
        // Two passes: first only coordinates that raise the rank by two.
        for (int pass = 0; pass < 2 && cols.size() < k; pass++) {
            for (uint32_t i : remaining) {
                if (used[i] || cols.size() >= k) {
                    continue;
                }
                XorBasis trial = cols;
                size_t before = trial.size();
                trial.insert(column_of(c, i, 0));
                trial.insert(column_of(c, i, 1));
                size_t gain = trial.size() - before;
                if (gain == 2 || (pass == 1 && gain == 1)) {
                    cols = std::move(trial);
                    window.push_back(i);
                    used[i] = true;
                }
            }
        }
        if (window.empty()) {
            break;
        }
        std::sort(window.begin(), window.end());
        windows.push_back(window);
        std::erase_if(remaining, [&](uint32_t i) { return used[i]; });
    }
    return windows;
}

WindowForm build_window_form(const AdditiveCode &c, const std::vector<uint32_t> &window, int max_rest_rows,
                             int max_constraints) {
    size_t n = c.length();
    WindowForm form;

    // Units: each kept coordinate has one unit per GF(2) dimension of its projection.
    struct Coord {
        uint32_t index;
        int rank;
        F4 single;
        size_t first_unit;
    };
    std::vector<Coord> coords;
    size_t units = 0;
    std::vector<bool> in_window(n, false);
    for (uint32_t i : window) {
        if (i >= n) {
            throw std::invalid_argument("window coordinate out of range");
        }
        if (in_window[i]) {
            throw std::invalid_argument("window lists a coordinate twice");
        }
        F4 single;
        int r = coordinate_rank(c, i, single);
        if (r == 0) {
            continue;
        }
        in_window[i] = true;
        coords.push_back({i, r, single, units});
        units += size_t(r);
    }
    for (uint32_t i = 0; i < n; i++) {
        if (!in_window[i]) {
            form.outside.push_back(i);
        }
    }

    // Rows: (unit bits, codeword), then Gauss-Jordan on the unit columns.
    size_t k = c.rank();
    size_t unit_words = (units + 63) / 64 + 1;
    std::vector<Bits> unit_rows(k, Bits(unit_words, 0));
    std::vector<F4Vector> words = c.basis();
    for (size_t r = 0; r < k; r++) {
        for (const auto &cd : coords) {
            F4 v = words[r].get(cd.index);
            if (cd.rank == 2) {
                if (v.plane_a()) {
                    set_bit(unit_rows[r], cd.first_unit);
                }
                if (v.plane_b()) {
                    set_bit(unit_rows[r], cd.first_unit + 1);
                }
            } else if (!v.is_zero()) {
                set_bit(unit_rows[r], cd.first_unit);
            }
        }
    }
    std::vector<int> pivot_row_of_unit(units, -1);
    size_t next = 0;
    for (size_t u = 0; u < units && next < k; u++) {
        size_t found = k;
        for (size_t r = next; r < k; r++) {
            if (test_bit(unit_rows[r], u)) {
                found = r;
                break;
            }
        }
        if (found == k) {
            continue;
        }
        std::swap(unit_rows[next], unit_rows[found]);
        std::swap(words[next], words[found]);
        for (size_t r = 0; r < k; r++) {
            if (r != next && test_bit(unit_rows[r], u)) {
                xor_into(unit_rows[r], unit_rows[next]);
                words[r] += words[next];
            }
        }
        pivot_row_of_unit[u] = int(next);
        next++;
    }
    form.rank = int(next);
    form.rest_rows = int(k - next);
    form.constraints = int(units - next);
    if (form.rest_rows > max_rest_rows) {
        throw std::invalid_argument("window leaves " + std::to_string(form.rest_rows) + " rest rows (cap " +
                                    std::to_string(max_rest_rows) + ")");
    }
    if (form.constraints > max_constraints || form.constraints > 63) {
        throw std::invalid_argument("window has " + std::to_string(form.constraints) + " parity constraints (cap " +
                                    std::to_string(max_constraints) + ")");
    }

    // Parity index of each non-pivot unit.
    std::vector<int> parity_index(units, -1);
    int np = 0;
    for (size_t u = 0; u < units; u++) {
        if (pivot_row_of_unit[u] < 0) {
            parity_index[u] = np++;
        }
    }
    struct UnitLift {
        F4Vector lift;
        uint64_t parity = 0;
    };
    std::vector<UnitLift> unit_lift(units, UnitLift{F4Vector(n), 0});
    for (size_t u = 0; u < units; u++) {
        int pr = pivot_row_of_unit[u];
        if (pr < 0) {
            unit_lift[u].parity = uint64_t{1} << parity_index[u];
            continue;
        }
        unit_lift[u].lift = words[size_t(pr)];
        for (size_t v = 0; v < units; v++) {
            if (parity_index[v] >= 0 && test_bit(unit_rows[size_t(pr)], v)) {
                unit_lift[u].parity |= uint64_t{1} << parity_index[v];
            }
        }
    }

    for (const auto &cd : coords) {
        form.window.push_back(cd.index);
        std::vector<WindowOption> opts;
        if (cd.rank == 2) {
            const auto &ua = unit_lift[cd.first_unit];
            const auto &ub = unit_lift[cd.first_unit + 1];
            opts.push_back({F4::one, ua.lift, ua.parity});
            opts.push_back({F4::omega, ub.lift, ub.parity});
            opts.push_back({F4::omega_bar, ua.lift + ub.lift, ua.parity ^ ub.parity});
        } else {
            const auto &u = unit_lift[cd.first_unit];
            opts.push_back({cd.single, u.lift, u.parity});
        }
        form.options.push_back(std::move(opts));
    }

    std::vector<F4Vector> rest(words.begin() + std::ptrdiff_t(next), words.end());
    form.rest_sums.assign(size_t{1} << rest.size(), F4Vector(n));
    for (size_t mask = 1; mask < form.rest_sums.size(); mask++) {
        size_t low = size_t(std::countr_zero(mask));
        form.rest_sums[mask] = form.rest_sums[mask & (mask - 1)] + rest[low];
    }
    return form;
}

}  // namespace circpair::detail
