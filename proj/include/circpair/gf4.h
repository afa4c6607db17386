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

#ifndef CIRCPAIR_GF4_H
#define CIRCPAIR_GF4_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace circpair {

/// An element of GF(4) = {0, 1, w, W} with W = w^2 = w + 1.
///
/// Stored as the bit pair (a, b) meaning a*1 + b*w, packed as a | (b << 1).
/// Addition is XOR of the packed bits.
class F4 {
   public:
    constexpr F4() = default;
    static constexpr F4 from_bits(uint8_t bits) { return F4(bits & 3); }
    static constexpr F4 from_planes(bool a, bool b) { return F4(uint8_t(a) | uint8_t(b) << 1); }

    static const F4 zero, one, omega, omega_bar;

    constexpr uint8_t bits() const { return bits_; }
    constexpr bool plane_a() const { return bits_ & 1; }
    constexpr bool plane_b() const { return bits_ & 2; }
    constexpr bool is_zero() const { return bits_ == 0; }

    constexpr F4 operator+(F4 other) const { return F4(bits_ ^ other.bits_); }
    constexpr F4 &operator+=(F4 other) {
        bits_ ^= other.bits_;
        return *this;
    }
    F4 operator*(F4 other) const;
    constexpr bool operator==(const F4 &) const = default;

    /// One of '0', '1', 'w', 'W'.
    char symbol() const;
    static F4 from_symbol(char c);

   private:
    constexpr explicit F4(uint8_t bits) : bits_(bits) {}
    uint8_t bits_ = 0;
};

inline constexpr F4 F4::zero = F4::from_bits(0);
inline constexpr F4 F4::one = F4::from_bits(1);
inline constexpr F4 F4::omega = F4::from_bits(2);
inline constexpr F4 F4::omega_bar = F4::from_bits(3);

F4 f4_mul(F4 x, F4 y);

/// A length-n word over GF(4) held as two packed bit-planes.
///
/// Coordinate i (0-based) is plane_a[i] * 1 + plane_b[i] * w. Bits past n in
/// the last word are always zero.
class F4Vector {
   public:
    F4Vector() = default;
    explicit F4Vector(size_t n);

    static F4Vector from_string(std::string_view text);
    static F4Vector from_planes(size_t n, std::span<const uint64_t> a, std::span<const uint64_t> b);

    size_t size() const { return n_; }
    size_t num_words() const { return a_.size(); }

    F4 get(size_t i) const;
    void set(size_t i, F4 value);

    bool bit(size_t i, int plane) const;
    void flip_bit(size_t i, int plane);

    std::span<const uint64_t> plane_a() const { return a_; }
    std::span<const uint64_t> plane_b() const { return b_; }
    std::span<uint64_t> plane_a() { return a_; }
    std::span<uint64_t> plane_b() { return b_; }

    size_t weight() const;
    bool is_zero() const;

    F4Vector &operator+=(const F4Vector &other);
    F4Vector operator+(const F4Vector &other) const;
    bool operator==(const F4Vector &other) const = default;
    bool operator<(const F4Vector &other) const;

    /// Coordinates rendered with the alphabet {0, 1, w, W}, coordinate 1 leftmost.
    std::string str() const;

    size_t hash() const;

   private:
    size_t n_ = 0;
    std::vector<uint64_t> a_;
    std::vector<uint64_t> b_;
};

/// Trace inner product x * y = sum_i (x_i y_i^2 + x_i^2 y_i), a value in GF(2).
///
/// Uses the bit-plane identity: parity of |(a(x) & b(y)) ^ (b(x) & a(y))|.
bool trace_inner_product(const F4Vector &x, const F4Vector &y);

/// The same form evaluated coordinate by coordinate with field arithmetic.
bool trace_inner_product_direct(const F4Vector &x, const F4Vector &y);

inline size_t weight(const F4Vector &x) { return x.weight(); }

struct F4VectorHash {
    size_t operator()(const F4Vector &v) const { return v.hash(); }
};

}  // namespace circpair

#endif
