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

#ifndef CIRCPAIR_SEARCH_H
#define CIRCPAIR_SEARCH_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "circpair/additive_code.h"
#include "circpair/circulant.h"

namespace circpair {

enum class SearchMode { Exhaustive, Random, SingleCirculant };
enum class TypeFilter { Any, TypeI, TypeII };

std::string to_string(SearchMode m);
std::string to_string(TypeFilter f);
SearchMode parse_search_mode(const std::string &s);
TypeFilter parse_type_filter(const std::string &s);

struct SearchRecord;

struct SearchConfig {
    /// Circulant order. Pair codes have length 2n; single-circulant codes length n.
    size_t n = 0;
    SearchMode mode = SearchMode::Exhaustive;
    TypeFilter type_filter = TypeFilter::Any;
    uint64_t seed = 0;
    /// Candidates with minimum weight below this are never recorded.
    int early_reject_threshold = 0;
    /// Candidates to examine in this call; 0 means the whole space (exhaustive
    /// modes only).
    uint64_t budget = 0;
    uint64_t checkpoint_interval = 10000;
    unsigned workers = 0;
    /// Exhaustive modes refuse spaces above 2^max_space_bits.
    int max_space_bits = 36;
    /// Skip pairs that are not minimal under decimation and shifts of B.
    bool decimation_reduction = false;
    /// Random mode: start here instead of a random pair.
    std::optional<CirculantPair> start;
    /// Called after each checkpoint.
    std::function<void(const SearchRecord &)> progress;
};

struct SearchRecord {
    SearchMode mode = SearchMode::Exhaustive;
    size_t n = 0;
    int best_d = 0;
    int best_type_i = 0;   // 0: none seen
    int best_type_ii = 0;  // 0: none seen
    /// Pairs reaching best_d in visiting order, at most kMaxWitnesses. Single
    /// circulant witnesses carry an empty B.
    std::vector<CirculantPair> witnesses;
    uint64_t examined = 0;
    uint64_t cursor = 0;
    bool complete = false;
    /// Random mode state: incumbent, its weight and the generator state.
    std::optional<CirculantPair> incumbent;
    int incumbent_d = 0;
    std::string rng_state;

    static constexpr size_t kMaxWitnesses = 64;
};

/// `examined=<int> best_d=<int> cursor=<hex>`
std::string progress_line(const SearchRecord &r);

std::string serialize_record(const SearchRecord &r);
/// Throws std::invalid_argument on malformed input.
SearchRecord parse_record(const std::string &text);

/// Number of free bits in a symmetric zero-diagonal first row of order n.
size_t symmetric_free_bits(size_t n);
/// Symmetric support from its free bits (mirror pairs in increasing order).
SupportSet symmetric_support(size_t n, uint64_t bits);

/// Minimum weight of the pair's code, or nullopt when below `reject_below`.
std::optional<int> evaluate_pair(const CirculantPair &p, int reject_below, unsigned workers = 1);
/// Same for the code generated by circulant(A) + wI.
std::optional<int> evaluate_single(const SupportSet &a, int reject_below, unsigned workers = 1);

/// Runs the configured search, continuing `resume` when given.
SearchRecord exhaustive_search(const SearchConfig &cfg, const std::optional<SearchRecord> &resume = std::nullopt);
SearchRecord random_search(const SearchConfig &cfg, const std::optional<SearchRecord> &resume = std::nullopt);
SearchRecord single_circulant_search(const SearchConfig &cfg,
                                     const std::optional<SearchRecord> &resume = std::nullopt);
/// Dispatches on cfg.mode.
SearchRecord run_search(const SearchConfig &cfg, const std::optional<SearchRecord> &resume = std::nullopt);

}  // namespace circpair

#endif
