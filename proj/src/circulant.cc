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

#include "circpair/circulant.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace circpair {

BinaryMatrix BinaryMatrix::identity(size_t n) {
    BinaryMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

bool BinaryMatrix::is_symmetric() const {
    if (!is_square()) {
        return false;
    }
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = r + 1; c < cols_; c++) {
            if (at(r, c) != at(c, r)) {
                return false;
            }
        }
    }
    return true;
}

bool BinaryMatrix::has_zero_diagonal() const {
    for (size_t i = 0; i < std::min(rows_, cols_); i++) {
        if (at(i, i)) {
            return false;
        }
    }
    return true;
}

size_t BinaryMatrix::row_sum(size_t r) const {
    size_t s = 0;
    for (size_t c = 0; c < cols_; c++) {
        s += at(r, c);
    }
    return s;
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t.set(c, r, at(r, c));
        }
    }
    return t;
}

std::string BinaryMatrix::str() const {
    std::string out;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out.push_back(at(r, c) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

SupportSet::SupportSet(size_t n, std::vector<size_t> positions) : n_(n), positions_(std::move(positions)) {
    std::sort(positions_.begin(), positions_.end());
    for (size_t i = 0; i < positions_.size(); i++) {
        if (positions_[i] < 1 || positions_[i] > n_) {
            throw std::invalid_argument("support position " + std::to_string(positions_[i]) + " outside [1, " +
                                        std::to_string(n_) + "]");
        }
        if (i > 0 && positions_[i] == positions_[i - 1]) {
            throw std::invalid_argument("duplicate support position " + std::to_string(positions_[i]));
        }
    }
}

SupportSet SupportSet::parse(size_t n, std::string_view text) {
    if (text == "-") {
        return SupportSet(n, {});
    }
    std::vector<size_t> positions;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(',', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view item = text.substr(start, end - start);
        size_t value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
            throw std::invalid_argument("bad support entry '" + std::string(item) + "'");
        }
        positions.push_back(value);
        start = end + 1;
    }
    return SupportSet(n, std::move(positions));
}

SupportSet SupportSet::from_mask(size_t n, uint64_t mask) {
    std::vector<size_t> positions;
    for (size_t j = 0; j < n; j++) {
        if ((mask >> j) & 1) {
            positions.push_back(j + 1);
        }
    }
    return SupportSet(n, std::move(positions));
}

bool SupportSet::contains(size_t position) const {
    return std::binary_search(positions_.begin(), positions_.end(), position);
}

uint64_t SupportSet::mask() const {
    if (n_ > 64) {
        throw std::logic_error("SupportSet::mask needs n <= 64");
    }
    uint64_t m = 0;
    for (size_t p : positions_) {
        m |= uint64_t{1} << (p - 1);
    }
    return m;
}

std::string SupportSet::str() const {
    if (positions_.empty()) {
        return "-";
    }
    std::string out;
    for (size_t i = 0; i < positions_.size(); i++) {
        if (i) {
            out.push_back(',');
        }
        out += std::to_string(positions_[i]);
    }
    return out;
}

size_t mirror_position(size_t n, size_t position) { return (n + 1 - position) % n + 1; }

BinaryMatrix circulant_from_support(const SupportSet &s) {
    size_t n = s.order();
    BinaryMatrix m(n, n);
    for (size_t p : s.positions()) {
        for (size_t r = 0; r < n; r++) {
            m.set(r, (r + p - 1) % n, true);
        }
    }
    return m;
}

bool is_symmetric_support(const SupportSet &s) {
    for (size_t p : s.positions()) {
        if (!s.contains(mirror_position(s.order(), p))) {
            return false;
        }
    }
    return true;
}

CirculantPair::CirculantPair(size_t n, SupportSet supp_a, SupportSet supp_b)
    : n_(n), a_(std::move(supp_a)), b_(std::move(supp_b)) {
    if (n_ == 0) {
        throw std::invalid_argument("circulant order must be positive");
    }
    if (a_.order() != n_ || b_.order() != n_) {
        throw std::invalid_argument("support order does not match n");
    }
    if (a_.contains(1)) {
        throw std::invalid_argument("supp(A) contains 1: A must have zero diagonal");
    }
    if (!is_symmetric_support(a_)) {
        throw std::invalid_argument("supp(A) is not symmetric: A must be a symmetric circulant");
    }
}

BinaryMatrix block_matrix(const CirculantPair &p) {
    size_t n = p.order();
    BinaryMatrix a = circulant_from_support(p.supp_a());
    BinaryMatrix b = circulant_from_support(p.supp_b());
    BinaryMatrix m(2 * n, 2 * n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            m.set(r, c, a.at(r, c));
            m.set(n + r, n + c, a.at(r, c));
            m.set(r, n + c, b.at(r, c));
            m.set(n + r, c, b.at(c, r));
        }
    }
    return m;
}

void require_adjacency_matrix(const BinaryMatrix &m, const char *context) {
    if (!m.is_square()) {
        throw std::invalid_argument(std::string(context) + ": matrix is not square");
    }
    if (!m.is_symmetric()) {
        throw std::invalid_argument(std::string(context) + ": matrix is not symmetric");
    }
    if (!m.has_zero_diagonal()) {
        throw std::invalid_argument(std::string(context) + ": matrix has a nonzero diagonal entry");
    }
}

std::vector<F4Vector> generator_matrix(const BinaryMatrix &m) {
    require_adjacency_matrix(m, "generator_matrix");
    size_t n = m.rows();
    std::vector<F4Vector> rows;
    rows.reserve(n);
    for (size_t r = 0; r < n; r++) {
        F4Vector v(n);
        for (size_t c = 0; c < n; c++) {
            if (m.at(r, c)) {
                v.set(c, F4::one);
            }
        }
        v.set(r, F4::omega);
        rows.push_back(std::move(v));
    }
    return rows;
}

CodeSpec parse_code_spec(std::string_view line) {
    std::map<std::string, std::string> fields;
    std::istringstream in{std::string(line)};
    std::string token;
    while (in >> token) {
        size_t eq = token.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw CodeSpecError(token, "expected key=value, got '" + token + "'");
        }
        std::string key = token.substr(0, eq);
        if (key != "name" && key != "n" && key != "A" && key != "B") {
            throw CodeSpecError(key, "unknown field '" + key + "'");
        }
        if (!fields.emplace(key, token.substr(eq + 1)).second) {
            throw CodeSpecError(key, "duplicate field '" + key + "'");
        }
    }
    for (const char *required : {"n", "A", "B"}) {
        if (!fields.count(required)) {
            throw CodeSpecError(required, std::string("missing field '") + required + "'");
        }
    }
    const std::string &n_text = fields["n"];
    size_t n = 0;
    auto [ptr, ec] = std::from_chars(n_text.data(), n_text.data() + n_text.size(), n);
    if (ec != std::errc() || ptr != n_text.data() + n_text.size() || n == 0) {
        throw CodeSpecError("n", "n must be a positive integer, got '" + n_text + "'");
    }
    SupportSet a, b;
    try {
        a = SupportSet::parse(n, fields["A"]);
    } catch (const std::invalid_argument &e) {
        throw CodeSpecError("A", e.what());
    }
    try {
        b = SupportSet::parse(n, fields["B"]);
    } catch (const std::invalid_argument &e) {
        throw CodeSpecError("B", e.what());
    }
    CodeSpec spec;
    spec.name = fields.count("name") ? fields["name"] : "";
    try {
        spec.pair = CirculantPair(n, std::move(a), std::move(b));
    } catch (const std::invalid_argument &e) {
        throw CodeSpecError("A", e.what());
    }
    return spec;
}

std::string format_code_spec(const CodeSpec &spec) {
    std::string out;
    if (!spec.name.empty()) {
        out += "name=" + spec.name + " ";
    }
    out += "n=" + std::to_string(spec.pair.order());
    out += " A=" + spec.pair.supp_a().str();
    out += " B=" + spec.pair.supp_b().str();
    return out;
}

}  // namespace circpair
