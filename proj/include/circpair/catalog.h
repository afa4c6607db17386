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

#ifndef CIRCPAIR_CATALOG_H
#define CIRCPAIR_CATALOG_H

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circpair/additive_code.h"
#include "circpair/circulant.h"
#include "circpair/minweight.h"

namespace circpair {

enum class Tier { Fast, Full, Long };

std::string to_string(Tier t);
/// "fast", "full" or "long"; throws std::invalid_argument otherwise.
Tier parse_tier(std::string_view s);

struct CatalogEntry {
    std::string name;
    CirculantPair pair;
    int claimed_d = 0;
    std::optional<TypeLabel> claimed_type;  // unset for the new large codes
    std::map<int, uint64_t> claimed_counts;
    std::string source;

    /// Fast up to length 28, full up to 40, long beyond.
    Tier tier() const;
};

const std::vector<CatalogEntry> &catalog();

/// Throws std::out_of_range listing the known names.
const CatalogEntry &catalog_lookup(std::string_view name);

/// Known upper bounds on the best quantum distance at lengths 66, 78, 94.
/// Documentation only; nothing here verifies them.
inline constexpr int kUpperBound66 = 24;
inline constexpr int kUpperBound78 = 28;
inline constexpr int kUpperBound94 = 32;

struct QuantumParams {
    size_t n = 0;
    size_t k = 0;
    int d = 0;

    std::string str() const;  // [[n,k,d]]
};

/// [[n, 0, d]] from a self-dual code and a sound exact certificate. Throws
/// std::invalid_argument otherwise.
QuantumParams quantum_params(const AdditiveCode &c, const WeightCertificate &cert);

/// Graph code of the pair's block matrix.
AdditiveCode code_of(const CirculantPair &p);

}  // namespace circpair

#endif
