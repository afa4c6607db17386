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

#include <doctest.h>

#include <random>

#include "circpair/gf4.h"
#include "oracle.h"

using namespace circpair;

namespace {

F4Vector random_vector(size_t n, std::mt19937_64 &rng) {
    F4Vector v(n);
    for (size_t i = 0; i < n; i++) {
        v.set(i, F4::from_bits(uint8_t(rng() & 3)));
    }
    return v;
}

}  // namespace

TEST_CASE("field tables") {
    const F4 all[] = {F4::zero, F4::one, F4::omega, F4::omega_bar};
    for (F4 x : all) {
        for (F4 y : all) {
            CHECK((x * y) == oracle::mul(x, y));
            CHECK((x + y).bits() == (x.bits() ^ y.bits()));
        }
    }
    CHECK((F4::omega * F4::omega) == F4::omega_bar);
    CHECK((F4::omega + F4::one) == F4::omega_bar);
    CHECK(F4::from_symbol('w') == F4::omega);
    CHECK(F4::omega_bar.symbol() == 'W');
    CHECK_THROWS_AS(F4::from_symbol('x'), std::invalid_argument);
}

TEST_CASE("vector text round trip and weight") {
    auto v = F4Vector::from_string("01wW0w");
    CHECK(v.size() == 6);
    CHECK(v.weight() == 4);
    CHECK(v.str() == "01wW0w");
    CHECK(v.get(3) == F4::omega_bar);
    CHECK(v.bit(3, 0));
    CHECK(v.bit(3, 1));
    CHECK_FALSE(v.bit(1, 1));
    CHECK_THROWS_AS(F4Vector::from_string("01x"), std::invalid_argument);
}

TEST_CASE("vectors longer than one word") {
    std::mt19937_64 rng(7);
    for (size_t n : {63, 64, 65, 130}) {
        auto x = random_vector(n, rng);
        auto y = random_vector(n, rng);
        auto s = x + y;
        size_t w = 0;
        for (size_t i = 0; i < n; i++) {
            CHECK(s.get(i) == x.get(i) + y.get(i));
            w += !x.get(i).is_zero();
        }
        CHECK(x.weight() == w);
        CHECK(F4Vector::from_string(x.str()) == x);
    }
}

TEST_CASE("trace inner product properties") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 10000; iter++) {
        size_t n = 1 + rng() % 100;
        auto x = random_vector(n, rng);
        auto y = random_vector(n, rng);
        auto z = random_vector(n, rng);
        bool xy = trace_inner_product(x, y);
        CHECK(xy == trace_inner_product_direct(x, y));
        if (n <= 20) {
            CHECK(int(xy) == oracle::trace_product(x, y));
        }
        // Alternating, symmetric, additive in the first slot.
        CHECK_FALSE(trace_inner_product(x, x));
        CHECK(xy == trace_inner_product(y, x));
        CHECK(trace_inner_product(x + z, y) == (xy != trace_inner_product(z, y)));
        // Weight is a metric.
        CHECK((x + z).weight() <= (x + y).weight() + (y + z).weight());
    }
}

TEST_CASE("length mismatch is rejected") {
    F4Vector a(3), b(4);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(trace_inner_product(a, b), std::invalid_argument);
}
