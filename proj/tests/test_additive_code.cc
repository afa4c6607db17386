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

#include "circpair/additive_code.h"
#include "oracle.h"

using namespace circpair;

TEST_CASE("rank and membership") {
    auto c = code_from_generators({F4Vector::from_string("1w0"), F4Vector::from_string("0w1"),
                                   F4Vector::from_string("101")});
    CHECK(c.rank() == 2);  // third = first + second
    CHECK(c.contains(F4Vector::from_string("101")));
    CHECK_FALSE(c.contains(F4Vector::from_string("100")));
    CHECK_THROWS_AS(code_from_generators({}), std::invalid_argument);
    CHECK_THROWS_AS(code_from_generators({F4Vector(2), F4Vector(3)}), std::invalid_argument);
}

TEST_CASE("self-duality agrees with the dual found by search") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 30; iter++) {
        size_t n = 1 + rng() % 7;
        std::vector<F4Vector> gens;
        size_t k = 1 + rng() % n;
        for (size_t i = 0; i < k; i++) {
            F4Vector v(n);
            for (size_t j = 0; j < n; j++) {
                v.set(j, F4::from_bits(uint8_t(rng() & 3)));
            }
            gens.push_back(v);
        }
        auto c = code_from_generators(gens);
        auto dual = oracle::dual_by_search(gens);
        auto words = oracle::all_codewords(gens);
        bool self_dual = dual.size() == words.size() &&
                         std::all_of(dual.begin(), dual.end(), [&](const F4Vector &x) { return words.count(x); });
        CHECK(is_self_dual(c) == self_dual);
    }
    // Graph codes from adjacency matrices are self-dual.
    for (int iter = 0; iter < 20; iter++) {
        size_t n = 1 + rng() % 8;
        auto m = oracle::random_adjacency(n, rng);
        auto gens = generator_matrix(m);
        CHECK(oracle::dual_by_search(gens).size() == oracle::all_codewords(gens).size());
        CHECK(is_self_dual(graph_code(m)));
    }
}

TEST_CASE("weight distribution sums to 2^rank and matches subset sums") {
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 40; iter++) {
        size_t n = 1 + rng() % 8;
        auto p = oracle::random_pair(n, rng);
        auto c = graph_code(block_matrix(p));
        auto dist = weight_distribution(c);
        uint64_t total = 0;
        for (auto [w, cnt] : dist) {
            total += cnt;
        }
        CHECK(total == (uint64_t{1} << c.rank()));
        CHECK(dist == oracle::distribution(oracle::pair_generators(p)));
    }
    auto c = graph_code(BinaryMatrix(20, 20));
    CHECK_THROWS_AS(weight_distribution(c, 1000), BudgetExceeded);
}

TEST_CASE("zero graph code is {0,w}^n") {
    auto c = graph_code(BinaryMatrix(5, 5));
    CHECK(c.rank() == 5);
    CHECK(c.contains(F4Vector::from_string("w0w00")));
    CHECK(classify_type(c) == TypeLabel::TypeI);
}

TEST_CASE("type rule, degrees and enumeration agree") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 300; iter++) {
        size_t n = 1 + rng() % 8;
        auto p = oracle::random_pair(n, rng);
        auto m = block_matrix(p);
        auto c = graph_code(m);
        auto rule = predict_type_prop1(p);
        CHECK(rule == type_by_degrees(m));
        CHECK(rule == classify_type_enumerative(c));
        auto dist = oracle::distribution(oracle::pair_generators(p));
        bool all_even = std::all_of(dist.begin(), dist.end(), [](auto kv) { return kv.first % 2 == 0; });
        CHECK((rule == TypeLabel::TypeII) == all_even);
    }
}

TEST_CASE("classify_type refuses codes that are not self-dual") {
    auto c = code_from_generators({F4Vector::from_string("10")});
    CHECK_THROWS_AS(classify_type(c), std::invalid_argument);
}

TEST_CASE("budget from the environment") {
    setenv("CIRCPAIR_ENUM_BUDGET", "2^20", 1);
    CHECK(enumeration_budget_from_env() == (uint64_t{1} << 20));
    setenv("CIRCPAIR_ENUM_BUDGET", "12345", 1);
    CHECK(enumeration_budget_from_env() == 12345);
    unsetenv("CIRCPAIR_ENUM_BUDGET");
    CHECK(enumeration_budget_from_env() == kDefaultEnumerationBudget);
}
