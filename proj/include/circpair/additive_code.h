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

#ifndef CIRCPAIR_ADDITIVE_CODE_H
#define CIRCPAIR_ADDITIVE_CODE_H

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "circpair/circulant.h"
#include "circpair/gf4.h"

namespace circpair {

/// Default cap on 2^rank for anything that walks every codeword.
inline constexpr uint64_t kDefaultEnumerationBudget = uint64_t{1} << 28;

/// Budget from CIRCPAIR_ENUM_BUDGET (a count or "2^k"), else the default.
uint64_t enumeration_budget_from_env();

class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A GF(2) bit column of the 2n-bit image: coordinate i contributes (i, 0)
/// for plane a and (i, 1) for plane b, in that order.
struct BitColumn {
    uint32_t coord = 0;
    uint8_t plane = 0;
    bool operator==(const BitColumn &) const = default;
};

/// Additive GF(4)-code: the GF(2)-span of its generators.
///
/// Construction computes the reduced row echelon form of the generators over
/// the interleaved 2n-bit columns. The code is immutable afterwards.
class AdditiveCode {
   public:
    /// Throws std::invalid_argument on an empty list or mixed lengths.
    explicit AdditiveCode(std::vector<F4Vector> generators);

    size_t length() const { return n_; }
    size_t rank() const { return basis_.size(); }
    const std::vector<F4Vector> &generators() const { return generators_; }
    /// Reduced basis; row i has a lone one in column pivots()[i].
    const std::vector<F4Vector> &basis() const { return basis_; }
    const std::vector<BitColumn> &pivots() const { return pivots_; }

    /// Set when the code was built from an adjacency matrix (graph code).
    const std::optional<BinaryMatrix> &adjacency() const { return adjacency_; }

    bool contains(const F4Vector &x) const;
    /// Reduces x against the basis; zero iff x is a codeword.
    F4Vector reduce(F4Vector x) const;

   private:
    friend AdditiveCode graph_code(const BinaryMatrix &adj);

    size_t n_ = 0;
    std::vector<F4Vector> generators_;
    std::vector<F4Vector> basis_;
    std::vector<BitColumn> pivots_;
    std::optional<BinaryMatrix> adjacency_;
};

AdditiveCode code_from_generators(std::vector<F4Vector> generators);

/// C(G): the code generated by the rows of adj + wI. Always self-dual.
AdditiveCode graph_code(const BinaryMatrix &adj);

bool contains(const AdditiveCode &c, const F4Vector &x);
bool is_self_orthogonal(const AdditiveCode &c);
bool is_self_dual(const AdditiveCode &c);

/// GF(2) rank of a list of words over the interleaved bit columns.
size_t gf2_rank(std::vector<F4Vector> rows);

/// Weight -> number of codewords, by walking all 2^rank words.
/// Throws BudgetExceeded when 2^rank > cap.
std::map<size_t, uint64_t> weight_distribution(const AdditiveCode &c, uint64_t cap = kDefaultEnumerationBudget);

enum class TypeLabel { TypeI, TypeII };

std::string to_string(TypeLabel t);

/// Type II iff every row of the adjacency matrix has odd sum.
TypeLabel type_by_degrees(const BinaryMatrix &adj);

/// Parity rule for C(A,B): n odd -> Type II iff |supp B| odd; n even -> Type II
/// iff [n/2 + 1 in supp A] + |supp B| is odd.
TypeLabel predict_type_prop1(const CirculantPair &p);

/// Type II iff no codeword has odd weight, decided by walking the code (stops
/// at the first odd word). Throws BudgetExceeded when 2^rank > cap.
TypeLabel classify_type_enumerative(const AdditiveCode &c, uint64_t cap = kDefaultEnumerationBudget);

/// Classification of a self-dual code. Graph codes use the degree criterion;
/// other codes are walked under the budget. Returns nullopt ("unknown") when
/// the budget is too small. Throws std::invalid_argument if not self-dual.
std::optional<TypeLabel> classify_type(const AdditiveCode &c, uint64_t cap = kDefaultEnumerationBudget);

}  // namespace circpair

#endif
