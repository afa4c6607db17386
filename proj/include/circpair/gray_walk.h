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

#ifndef CIRCPAIR_GRAY_WALK_H
#define CIRCPAIR_GRAY_WALK_H

// Gray-code walk over the GF(2) span of a basis, split into shards.
//
// The message space is split on its top `shard_bits` bits. Shard h starts at
// the sum of the high rows selected by h and then walks the low rows in
// reflected Gray order, one row XOR per step. Shard count is independent of
// the number of workers so the visiting order is fixed.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "circpair/packed.h"

namespace circpair {

inline int default_shard_bits(size_t rank) { return int(std::min<size_t>(rank, 6)); }

/// visit(const Packed<W>& word, uint64_t step) returns false to stop early.
/// Returns false if the walk was stopped.
template <int W, class Visit>
bool gray_walk_shard(std::span<const Packed<W>> rows, int shard_bits, uint64_t shard, Visit &&visit) {
    size_t k = rows.size();
    size_t low = k - size_t(shard_bits);
    Packed<W> acc;
    for (int h = 0; h < shard_bits; h++) {
        if ((shard >> h) & 1) {
            acc ^= rows[low + size_t(h)];
        }
    }
    if (!visit(acc, uint64_t{0})) {
        return false;
    }
    uint64_t steps = uint64_t{1} << low;
    for (uint64_t i = 1; i < steps; i++) {
        acc ^= rows[size_t(std::countr_zero(i))];
        if (!visit(acc, i)) {
            return false;
        }
    }
    return true;
}

}  // namespace circpair

#endif
