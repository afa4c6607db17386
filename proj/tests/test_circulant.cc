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

#include "circpair/circulant.h"
#include "oracle.h"

using namespace circpair;

TEST_CASE("circulant rows from a support") {
    auto a = SupportSet::parse(7, "2,7");
    auto m = circulant_from_support(a);
    auto rows = m.str();
    CHECK(rows.substr(0, 16) == "0100001\n1010000\n");
    CHECK(m.is_symmetric());
    CHECK(m.has_zero_diagonal());
    CHECK(is_symmetric_support(a));
    CHECK_FALSE(is_symmetric_support(SupportSet::parse(7, "2,3")));
}

TEST_CASE("mirror positions") {
    CHECK(mirror_position(7, 2) == 7);
    CHECK(mirror_position(7, 1) == 1);
    CHECK(mirror_position(8, 5) == 5);
    CHECK(mirror_position(8, 3) == 7);
}

TEST_CASE("support parsing") {
    CHECK(SupportSet::parse(5, "-").empty());
    CHECK(SupportSet::parse(5, "3,1").positions() == std::vector<size_t>{1, 3});
    CHECK_THROWS_AS(SupportSet::parse(5, "6"), std::invalid_argument);
    CHECK_THROWS_AS(SupportSet::parse(5, "0"), std::invalid_argument);
    CHECK_THROWS_AS(SupportSet::parse(5, "2,2"), std::invalid_argument);
    CHECK_THROWS_AS(SupportSet::parse(5, "a"), std::invalid_argument);
    CHECK(SupportSet::from_mask(5, 0b10011).str() == "1,2,5");
}

TEST_CASE("pair validation") {
    CHECK_THROWS_AS(CirculantPair(7, SupportSet::parse(7, "2,3"), SupportSet::parse(7, "-")), std::invalid_argument);
    CHECK_THROWS_AS(CirculantPair(7, SupportSet::parse(7, "1"), SupportSet::parse(7, "-")), std::invalid_argument);
    CHECK_THROWS_AS(CirculantPair(7, SupportSet::parse(7, "2,7"), SupportSet::parse(6, "-")), std::invalid_argument);
}

TEST_CASE("block matrix matches the definition") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 200; iter++) {
        size_t n = 1 + rng() % 20;
        auto p = oracle::random_pair(n, rng);
        auto m = block_matrix(p);
        CHECK(m.is_symmetric());
        CHECK(m.has_zero_diagonal());
        CHECK(generator_matrix(m) == oracle::pair_generators(p));
    }
}

TEST_CASE("generator rows of C14II") {
    auto spec = parse_code_spec("name=C14II n=7 A=2,7 B=1,2,5");
    auto g = generator_matrix(block_matrix(spec.pair));
    CHECK(g.size() == 14);
    CHECK(g[0].str() == "w1000011100100");
    CHECK(g[7].str() == "1001001w100001");  // B transposed: ones at columns 0, 3, 6
}

TEST_CASE("generator matrix requires an adjacency matrix") {
    BinaryMatrix m(2, 2);
    m.set(0, 1, true);
    CHECK_THROWS_AS(generator_matrix(m), std::invalid_argument);
    m.set(1, 0, true);
    m.set(0, 0, true);
    CHECK_THROWS_AS(generator_matrix(m), std::invalid_argument);
}

TEST_CASE("code-spec lines") {
    auto s = parse_code_spec("name=C14II n=7 A=2,7 B=1,2,5");
    CHECK(s.name == "C14II");
    CHECK(s.pair.order() == 7);
    CHECK(format_code_spec(s) == "name=C14II n=7 A=2,7 B=1,2,5");
    CHECK(parse_code_spec(format_code_spec(s)).pair == s.pair);
    auto field_of = [](const char *line) {
        try {
            parse_code_spec(line);
        } catch (const CodeSpecError &e) {
            return e.field();
        }
        return std::string("none");
    };
    CHECK(field_of("name=x n=7 A=2,3 B=-") == "A");
    CHECK(field_of("name=x n=seven A=- B=-") == "n");
    CHECK(field_of("name=x n=7 A=- B=9") == "B");
    CHECK(field_of("name=x n=7 A=- B=- C=1") == "C");
    CHECK(field_of("name=x A=- B=-") == "n");
}
