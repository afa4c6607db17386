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

#ifndef CIRCPAIR_CIRCULANT_H
#define CIRCPAIR_CIRCULANT_H

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circpair/gf4.h"

namespace circpair {

/// Dense 0/1 matrix. Sizes here stay in the low hundreds.
class BinaryMatrix {
   public:
    BinaryMatrix() = default;
    BinaryMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

    static BinaryMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    bool at(size_t r, size_t c) const { return bits_[r * cols_ + c]; }
    void set(size_t r, size_t c, bool v) { bits_[r * cols_ + c] = v; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool has_zero_diagonal() const;
    size_t row_sum(size_t r) const;
    BinaryMatrix transpose() const;

    bool operator==(const BinaryMatrix &) const = default;

    /// Rows as strings of '0'/'1', one per line.
    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<uint8_t> bits_;
};

/// 1-based positions of the ones in the first row of an n x n circulant.
/// Position 1 is the diagonal entry.
class SupportSet {
   public:
    SupportSet() = default;
    /// Throws std::invalid_argument on positions outside [1, n] or duplicates.
    SupportSet(size_t n, std::vector<size_t> positions);

    /// Parses "2,7" or "-" (empty).
    static SupportSet parse(size_t n, std::string_view text);
    static SupportSet from_mask(size_t n, uint64_t mask);

    size_t order() const { return n_; }
    const std::vector<size_t> &positions() const { return positions_; }
    size_t size() const { return positions_.size(); }
    bool empty() const { return positions_.empty(); }
    bool contains(size_t position) const;
    /// Bit j - 1 set for each position j (requires n <= 64).
    uint64_t mask() const;

    std::string str() const;

    bool operator==(const SupportSet &) const = default;

   private:
    size_t n_ = 0;
    std::vector<size_t> positions_;
};

/// Mirror of a 1-based first-row position under transposition: j -> n + 2 - j (mod n).
size_t mirror_position(size_t n, size_t position);

BinaryMatrix circulant_from_support(const SupportSet &s);
bool is_symmetric_support(const SupportSet &s);

/// (A, B) with A symmetric circulant with zero diagonal and B circulant.
/// Validated once at construction.
class CirculantPair {
   public:
    CirculantPair() = default;
    /// Throws std::invalid_argument if 1 is in supp_a, supp_a is not symmetric,
    /// or the orders disagree.
    CirculantPair(size_t n, SupportSet supp_a, SupportSet supp_b);

    size_t order() const { return n_; }
    size_t length() const { return 2 * n_; }
    const SupportSet &supp_a() const { return a_; }
    const SupportSet &supp_b() const { return b_; }

    bool operator==(const CirculantPair &) const = default;

   private:
    size_t n_ = 0;
    SupportSet a_;
    SupportSet b_;
};

/// M(A,B) = (A B; B^T A).
BinaryMatrix block_matrix(const CirculantPair &p);

/// Rows of m + wI: plane a is the matrix row, plane b marks the diagonal.
/// Throws std::invalid_argument unless m is square, symmetric, zero-diagonal.
std::vector<F4Vector> generator_matrix(const BinaryMatrix &m);

/// Adjacency-matrix check shared by the graph-code entry points.
void require_adjacency_matrix(const BinaryMatrix &m, const char *context);

/// Error raised for malformed code-spec lines; carries the offending field.
class CodeSpecError : public std::invalid_argument {
   public:
    CodeSpecError(std::string field, const std::string &message)
        : std::invalid_argument(message), field_(std::move(field)) {}
    const std::string &field() const { return field_; }

   private:
    std::string field_;
};

/// One line of the code-spec format:
///   name=<string> n=<int> A=<comma-list|-> B=<comma-list|->
struct CodeSpec {
    std::string name;
    CirculantPair pair;
};

CodeSpec parse_code_spec(std::string_view line);
std::string format_code_spec(const CodeSpec &spec);

}  // namespace circpair

#endif
