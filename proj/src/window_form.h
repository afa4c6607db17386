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

#ifndef CIRCPAIR_SRC_WINDOW_FORM_H
#define CIRCPAIR_SRC_WINDOW_FORM_H

// Information windows for the windowed minimum-weight engine.
//
// A window W is a set of coordinates. Every codeword is determined, up to the
// rows that vanish on W, by its projection onto W. The form lists, for each
// window coordinate, the nonzero values that coordinate can take together with
// a lifted codeword and a parity word. A choice of values is the projection of
// a codeword iff the parities cancel, and then the XOR of the lifts is that
// codeword. Adding every combination of the vanishing ("rest") rows yields all
// codewords with that projection.

#include <cstdint>
#include <vector>

#include "circpair/additive_code.h"

namespace circpair::detail {

struct WindowOption {
    F4 value;
    F4Vector lift;
    uint64_t parity = 0;
};

struct WindowForm {
    std::vector<uint32_t> window;                   // coordinates in enumeration order
    std::vector<std::vector<WindowOption>> options;  // per window coordinate, 1 or 3 entries
    std::vector<uint32_t> outside;                  // complement of the window
    std::vector<F4Vector> rest_sums;                // all 2^r sums of rest rows, [0] = 0
    int rank = 0;                                   // GF(2) rank of the projection onto W
    int rest_rows = 0;                              // code rank - rank
    int constraints = 0;                            // parity bits in use
};

/// Builds the form for `window`. Coordinates on which the code vanishes are
/// dropped. Throws std::invalid_argument if the rest rows or the parity
/// constraints exceed the given caps.
WindowForm build_window_form(const AdditiveCode &c, const std::vector<uint32_t> &window, int max_rest_rows,
                             int max_constraints);

/// GF(2) rank of the projection of c onto the given coordinates.
int projection_rank(const AdditiveCode &c, const std::vector<uint32_t> &coords);

/// Disjoint windows chosen greedily in coordinate order. Coordinates adding two
/// to the rank are preferred; a window closes at full rank.
std::vector<std::vector<uint32_t>> greedy_windows(const AdditiveCode &c);

}  // namespace circpair::detail

#endif
