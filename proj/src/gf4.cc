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

#include "circpair/gf4.h"

#include <algorithm>
#include <stdexcept>

namespace circpair {

namespace {

// Rows/columns indexed by packed bits: 0, 1, w, W.
constexpr uint8_t kMulTable[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
};

size_t words_for(size_t n) { return (n + 63) / 64; }

}  // namespace

F4 F4::operator*(F4 other) const { return F4(kMulTable[bits_][other.bits_]); }

F4 f4_mul(F4 x, F4 y) { return x * y; }

char F4::symbol() const { return "01wW"[bits_]; }

F4 F4::from_symbol(char c) {
    switch (c) {
        case '0':
            return F4::zero;
        case '1':
            return F4::one;
        case 'w':
            return F4::omega;
        case 'W':
            return F4::omega_bar;
    }
    throw std::invalid_argument(std::string("not a GF(4) symbol: '") + c + "'");
}

F4Vector::F4Vector(size_t n) : n_(n), a_(words_for(n), 0), b_(words_for(n), 0) {}

F4Vector F4Vector::from_string(std::string_view text) {
    F4Vector v(text.size());
    for (size_t i = 0; i < text.size(); i++) {
        v.set(i, F4::from_symbol(text[i]));
    }
    return v;
}

F4Vector F4Vector::from_planes(size_t n, std::span<const uint64_t> a, std::span<const uint64_t> b) {
    F4Vector v(n);
    if (a.size() < v.a_.size() || b.size() < v.b_.size()) {
        throw std::invalid_argument("F4Vector::from_planes: plane too short");
    }
    std::copy_n(a.begin(), v.a_.size(), v.a_.begin());
    std::copy_n(b.begin(), v.b_.size(), v.b_.begin());
    if (n % 64 != 0 && !v.a_.empty()) {
        uint64_t mask = (uint64_t{1} << (n % 64)) - 1;
        v.a_.back() &= mask;
        v.b_.back() &= mask;
    }
    return v;
}

F4 F4Vector::get(size_t i) const {
    bool a = (a_[i / 64] >> (i % 64)) & 1;
    bool b = (b_[i / 64] >> (i % 64)) & 1;
    return F4::from_planes(a, b);
}

void F4Vector::set(size_t i, F4 value) {
    uint64_t m = uint64_t{1} << (i % 64);
    a_[i / 64] = value.plane_a() ? (a_[i / 64] | m) : (a_[i / 64] & ~m);
    b_[i / 64] = value.plane_b() ? (b_[i / 64] | m) : (b_[i / 64] & ~m);
}

bool F4Vector::bit(size_t i, int plane) const {
    const auto &p = plane == 0 ? a_ : b_;
    return (p[i / 64] >> (i % 64)) & 1;
}

void F4Vector::flip_bit(size_t i, int plane) {
    auto &p = plane == 0 ? a_ : b_;
    p[i / 64] ^= uint64_t{1} << (i % 64);
}

size_t F4Vector::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < a_.size(); k++) {
        w += std::popcount(a_[k] | b_[k]);
    }
    return w;
}

bool F4Vector::is_zero() const {
    for (size_t k = 0; k < a_.size(); k++) {
        if (a_[k] | b_[k]) {
            return false;
        }
    }
    return true;
}

F4Vector &F4Vector::operator+=(const F4Vector &other) {
    if (other.n_ != n_) {
        throw std::invalid_argument("F4Vector addition: length mismatch");
    }
    for (size_t k = 0; k < a_.size(); k++) {
        a_[k] ^= other.a_[k];
        b_[k] ^= other.b_[k];
    }
    return *this;
}

F4Vector F4Vector::operator+(const F4Vector &other) const {
    F4Vector r = *this;
    r += other;
    return r;
}

bool F4Vector::operator<(const F4Vector &other) const {
    if (n_ != other.n_) {
        return n_ < other.n_;
    }
    if (a_ != other.a_) {
        return a_ < other.a_;
    }
    return b_ < other.b_;
}

std::string F4Vector::str() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; i++) {
        s[i] = get(i).symbol();
    }
    return s;
}

size_t F4Vector::hash() const {
    uint64_t h = 0x9E3779B97F4A7C15ull ^ n_;
    for (size_t k = 0; k < a_.size(); k++) {
        h = (h ^ a_[k]) * 0xBF58476D1CE4E5B9ull;
        h = (h ^ b_[k]) * 0x94D049BB133111EBull;
        h ^= h >> 31;
    }
    return size_t(h);
}

bool trace_inner_product(const F4Vector &x, const F4Vector &y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("trace_inner_product: length mismatch");
    }
    auto xa = x.plane_a(), xb = x.plane_b(), ya = y.plane_a(), yb = y.plane_b();
    uint64_t acc = 0;
    for (size_t k = 0; k < xa.size(); k++) {
        acc ^= (xa[k] & yb[k]) ^ (xb[k] & ya[k]);
    }
    return std::popcount(acc) & 1;
}

bool trace_inner_product_direct(const F4Vector &x, const F4Vector &y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("trace_inner_product: length mismatch");
    }
    F4 sum = F4::zero;
    for (size_t i = 0; i < x.size(); i++) {
        F4 xi = x.get(i), yi = y.get(i);
        sum += xi * yi * yi + xi * xi * yi;
    }
    if (sum.plane_b()) {
        throw std::logic_error("trace form left the prime field");
    }
    return sum.plane_a();
}

}  // namespace circpair
