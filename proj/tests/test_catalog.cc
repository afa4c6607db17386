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

#include "circpair/catalog.h"

using namespace circpair;

TEST_CASE("lookup") {
    const auto &e = catalog_lookup("C14II");
    CHECK(e.pair.order() == 7);
    CHECK(e.pair.supp_a().str() == "2,7");
    CHECK(e.pair.supp_b().str() == "1,2,5");
    CHECK(e.claimed_d == 6);
    CHECK(e.claimed_type == TypeLabel::TypeII);
    CHECK(e.tier() == Tier::Fast);

    const auto &c40 = catalog_lookup("C40I");
    CHECK(c40.pair.supp_a().str() == "2,3,19,20");
    CHECK(c40.pair.supp_b().str() == "1,2,4,6,8,9,10,15");
    CHECK(c40.claimed_d == 12);
    CHECK(c40.claimed_type == TypeLabel::TypeI);

    const auto &c66 = catalog_lookup("C66");
    CHECK(c66.pair.length() == 66);
    CHECK(c66.claimed_d == 17);
    CHECK_FALSE(c66.claimed_type);
    CHECK(c66.claimed_counts.at(17) == 3168);
    CHECK(c66.tier() == Tier::Long);
    CHECK(catalog_lookup("C78").claimed_counts.at(20) == 24336);
    CHECK(catalog_lookup("C94").pair.length() == 94);

    CHECK_THROWS_AS(catalog_lookup("C99"), std::out_of_range);
    try {
        catalog_lookup("C99");
    } catch (const std::out_of_range &ex) {
        CHECK(std::string(ex.what()).find("C14II") != std::string::npos);
    }
}

TEST_CASE("catalog integrity") {
    CHECK(catalog().size() == 27);
    for (const auto &e : catalog()) {
        CHECK(is_symmetric_support(e.pair.supp_a()));
        CHECK_FALSE(e.pair.supp_a().contains(1));
        CHECK(is_self_dual(code_of(e.pair)));
        if (e.claimed_type) {
            CHECK(predict_type_prop1(e.pair) == *e.claimed_type);
        }
    }
}

TEST_CASE("quantum parameters") {
    auto c = code_of(catalog_lookup("C14II").pair);
    auto cert = min_weight(c);
    CHECK(quantum_params(c, cert).str() == "[[14,0,6]]");

    auto one = graph_code(BinaryMatrix(1, 1));
    CHECK(quantum_params(one, min_weight(one)).str() == "[[1,0,1]]");

    auto tampered = cert;
    tampered.claimed_d = 7;
    CHECK_THROWS_AS(quantum_params(c, tampered), std::invalid_argument);
    auto bound_only = verify_no_word_below(c, 6).certificate;
    bound_only.exact = false;
    CHECK_THROWS_AS(quantum_params(c, bound_only), std::invalid_argument);
    auto not_self_dual = code_from_generators({F4Vector::from_string("10")});
    CHECK_THROWS_AS(quantum_params(not_self_dual, cert), std::invalid_argument);
}

TEST_CASE("tiers") {
    CHECK(parse_tier("full") == Tier::Full);
    CHECK_THROWS_AS(parse_tier("slow"), std::invalid_argument);
    CHECK(catalog_lookup("C28I").tier() == Tier::Fast);
    CHECK(catalog_lookup("C30II").tier() == Tier::Full);
}
