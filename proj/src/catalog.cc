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

#include "circpair/catalog.h"

#include <stdexcept>

namespace circpair {

namespace {

CatalogEntry entry(std::string name, size_t n, std::string_view a, std::string_view b, int d,
                   std::optional<TypeLabel> type, std::string source, std::map<int, uint64_t> counts = {}) {
    CatalogEntry e;
    e.name = std::move(name);
    e.pair = CirculantPair(n, SupportSet::parse(n, a), SupportSet::parse(n, b));
    e.claimed_d = d;
    e.claimed_type = type;
    e.claimed_counts = std::move(counts);
    e.source = std::move(source);
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    constexpr auto I = TypeLabel::TypeI;
    constexpr auto II = TypeLabel::TypeII;
    const std::string t2 = "table2";
    return {
        entry("C14II", 7, "2,7", "1,2,5", 6, II, t2),
        entry("C16I", 8, "2,8", "1,2,3,4,5,6", 6, I, t2),
        entry("C16II", 8, "2,8", "1,2,5", 6, II, t2),
        entry("C18I", 9, "2,9", "1,2,4,5", 6, I, t2),
        entry("C18II", 9, "-", "1,2,3,4,7", 6, II, t2),
        entry("C20I", 10, "2,10", "1,2,3,4,5,7,8,9", 8, I, t2),
        entry("C20II", 10, "3,9", "1,2,3,6,7", 8, II, t2),
        entry("C22I", 11, "2,3,10,11", "1,2,5,6,7,9", 8, I, t2),
        entry("C22II", 11, "2,11", "1,2,4,7,9", 8, II, t2),
        entry("C24I", 12, "2,12", "1,2,3,5,6,7,9,10", 8, I, t2),
        entry("C24II", 12, "-", "1,2,4,5,6,7,9", 8, II, t2),
        entry("C26I", 13, "2,13", "1,2,3,4,5,7", 8, I, t2),
        entry("C26II", 13, "2,13", "1,2,4,6,7", 8, II, t2),
        entry("C28I", 14, "2,3,4,5,8,11,12,13,14", "1,2,4,7,8,10,12", 10, I, t2),
        entry("C28II", 14, "2,14", "1,2,4,5,7,10,12", 10, II, t2),
        entry("C30II", 15, "2,3,5,7,10,12,14,15", "1,2,4,5,6,7,9,10,13", 12, II, t2),
        entry("C32I", 16, "2,16", "1,2,4,5,6,7,8,10", 10, I, t2),
        entry("C32II", 16, "2,16", "1,2,3,5,7,8,10", 10, II, t2),
        entry("C34I", 17, "2,17", "1,2,4,6,7,8,9,11", 10, I, t2),
        entry("C34II", 17, "2,17", "1,2,3,4,6,7,9", 10, II, t2),
        entry("C36II", 18, "2,4,5,6,14,15,16,18", "1,2,4,5,7,8,9,10,11,14,15", 12, II, t2),
        entry("C38II", 19, "2,19", "1,2,4,5,6,8,11,13,14", 12, II, t2),
        entry("C40I", 20, "2,3,19,20", "1,2,4,6,8,9,10,15", 12, I, t2),
        entry("C40II", 20, "2,20", "1,2,4,5,6,8,9,10,13", 12, II, t2),
        entry("C66", 33, "2,3,4,5,6,8,12,13,14,16,17,18,19,21,22,23,27,29,30,31,32,33",
              "3,4,5,8,10,11,12,16,20,21,25,26,28,29,30,33", 17, std::nullopt, "new66",
              {{17, 3168}, {18, 36003}, {19, 273174}, {20, 1924626}}),
        entry("C78", 39, "2,4,6,8,9,10,11,13,15,19,22,26,28,30,31,32,33,35,37,39",
              "2,4,6,8,9,15,17,18,19,21,25,26,27,28,29,30,32,33,36,37", 19, std::nullopt, "new78",
              {{19, 2808}, {20, 24336}}),
        entry("C94", 47, "2,6,7,10,11,12,16,18,19,20,29,30,31,33,37,38,39,42,43,47",
              "2,4,9,12,13,14,16,17,21,22,24,25,26,30,31,34,35,37,38,39,40,46", 21, std::nullopt, "new94"),
    };
}

}  // namespace

std::string to_string(Tier t) {
    switch (t) {
        case Tier::Fast:
            return "fast";
        case Tier::Full:
            return "full";
        case Tier::Long:
            return "long";
    }
    return "?";
}

Tier parse_tier(std::string_view s) {
    if (s == "fast") return Tier::Fast;
    if (s == "full") return Tier::Full;
    if (s == "long") return Tier::Long;
    throw std::invalid_argument("unknown tier '" + std::string(s) + "' (expected fast, full or long)");
}

Tier CatalogEntry::tier() const {
    size_t len = pair.length();
    return len <= 28 ? Tier::Fast : len <= 40 ? Tier::Full : Tier::Long;
}

const std::vector<CatalogEntry> &catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry &catalog_lookup(std::string_view name) {
    for (const auto &e : catalog()) {
        if (e.name == name) {
            return e;
        }
    }
    std::string known;
    for (const auto &e : catalog()) {
        known += (known.empty() ? "" : ", ") + e.name;
    }
    throw std::out_of_range("unknown catalog entry '" + std::string(name) + "'; available: " + known);
}

std::string QuantumParams::str() const {
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]]";
}

QuantumParams quantum_params(const AdditiveCode &c, const WeightCertificate &cert) {
    if (!is_self_dual(c)) {
        throw std::invalid_argument("quantum_params: code is not self-dual");
    }
    if (!cert.exact) {
        throw std::invalid_argument("quantum_params: certificate does not establish the minimum weight");
    }
    auto check = check_certificate(c, cert);
    if (!check.sound) {
        throw std::invalid_argument("quantum_params: unsound certificate: " + check.reason);
    }
    return {c.length(), 0, cert.claimed_d};
}

AdditiveCode code_of(const CirculantPair &p) { return graph_code(block_matrix(p)); }

}  // namespace circpair
