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

#ifndef CIRCPAIR_MINWEIGHT_H
#define CIRCPAIR_MINWEIGHT_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "circpair/additive_code.h"
#include "circpair/circulant.h"
#include "circpair/gf4.h"

namespace circpair {

/// Coordinate permutation: coordinate i of x moves to position perm[i].
using Permutation = std::vector<uint32_t>;

F4Vector apply_permutation(const Permutation &perm, const F4Vector &x);
bool is_automorphism(const AdditiveCode &c, const Permutation &perm);

/// Automorphisms that let the windowed engine enumerate one window only.
///
/// `cycle` lists window 0 in rotation order: rotation maps cycle[i] to
/// cycle[i + 1] (cyclically) and has order |cycle| on all coordinates.
/// `swap` maps window 0 onto `partner` and back; together they cover every
/// coordinate.
struct SymmetryPlan {
    std::vector<uint32_t> cycle;
    std::vector<uint32_t> partner;
    Permutation rotation;
    Permutation swap;
};

/// Blocks of C(A,B) as the two windows: the simultaneous cyclic shift and the
/// block swap composed with i -> -i are automorphisms of every C(A,B).
SymmetryPlan circulant_symmetry(const CirculantPair &p);

enum class CertificateMethod { FullEnumeration, WindowedBound };

std::string to_string(CertificateMethod m);

/// One window of the lower-bound trace. Every codeword whose weight on
/// `window` is at most `radius` was enumerated (directly, or as the image of
/// the source pass under an automorphism), so an unseen codeword has weight
/// at least radius + 1 there.
struct BoundPass {
    int form_index = 0;
    std::vector<uint32_t> window;
    int window_rank = 0;
    int radius = -1;
    int contribution = 0;
    /// Index into WeightCertificate::automorphisms, or -1.
    int via_automorphism = -1;
    int source_form = -1;
    /// Patterns enumerated up to this rotation (index into automorphisms), or -1.
    int orbit_automorphism = -1;
};

/// Proof object for a minimum-weight claim.
///
/// exact: claimed_d is the minimum weight and witness has that weight.
/// Otherwise claimed_d is a lower bound (no nonzero codeword is lighter).
struct WeightCertificate {
    int claimed_d = 0;
    bool exact = false;
    std::optional<F4Vector> witness;
    CertificateMethod method = CertificateMethod::WindowedBound;
    uint64_t enumerated = 0;
    std::vector<Permutation> automorphisms;
    std::vector<BoundPass> passes;

    int lower_bound() const;
};

/// Result of the independent certificate checker.
struct CertificateCheck {
    bool sound = false;
    std::string reason;
};

/// Re-derives window ranks, contributions, automorphism claims and the
/// witness from the code alone; trusts only that the stated enumeration ran.
CertificateCheck check_certificate(const AdditiveCode &c, const WeightCertificate &cert);

/// Stable text rendering; fields in a fixed order, coordinates 1-based.
std::string serialize_certificate(const WeightCertificate &cert);
/// Inverse of serialize_certificate; throws std::invalid_argument.
WeightCertificate parse_certificate(const std::string &text, size_t length);

/// Progress of the windowed engine after each completed form/radius.
struct BoundProgress {
    int form_index = 0;
    int radius = 0;
    int lower_bound = 0;
    int best = 0;
    uint64_t enumerated = 0;
};

struct MinWeightOptions {
    unsigned workers = 0;  // 0: default_workers()
    uint64_t enumeration_budget = kDefaultEnumerationBudget;
    /// Codes of rank <= this are walked exhaustively by the windowed entry points.
    int enumerate_rank_at_most = 12;
    /// Largest number of rows vanishing on a window that are still enumerated.
    int max_rest_rows = 8;
    /// Largest number of parity constraints on a window's pattern space (at most 63).
    int max_pattern_constraints = 63;
    std::optional<SymmetryPlan> symmetry;
    std::function<void(const BoundProgress &)> progress;
};

/// Exact minimum weight by a Gray-code walk over every nonzero codeword.
/// Throws BudgetExceeded when 2^rank exceeds the budget.
WeightCertificate min_weight_enumerate(const AdditiveCode &c, const MinWeightOptions &opts = {});

/// Exact minimum weight by windowed enumeration with a lower-bound trace.
WeightCertificate min_weight_windowed(const AdditiveCode &c, const MinWeightOptions &opts = {});

/// min_weight_windowed, or the walk when the rank is small.
WeightCertificate min_weight(const AdditiveCode &c, const MinWeightOptions &opts = {});

struct VerifyResult {
    bool holds = false;
    WeightCertificate certificate;
    /// Set when !holds: a codeword of weight < d.
    std::optional<F4Vector> counterexample;
};

/// Proves that no nonzero codeword has weight < d, or returns one that does.
VerifyResult verify_no_word_below(const AdditiveCode &c, int d, const MinWeightOptions &opts = {});

/// Looks for a codeword of weight <= d by windowed enumeration up to
/// `max_radius` per window. Not finding one proves nothing.
std::optional<F4Vector> find_word_of_weight_at_most(const AdditiveCode &c, int d, int max_radius = 12,
                                                    const MinWeightOptions &opts = {});

/// A_w with provenance. exhaustive == false means `count` is only a lower bound.
struct CountReport {
    int weight = 0;
    uint64_t count = 0;
    bool exhaustive = false;
};

struct CountOptions {
    MinWeightOptions engine;
    /// Distinct codewords kept for deduplication when no symmetry plan is set.
    uint64_t max_stored_words = uint64_t{1} << 24;
    /// Stop raising the window radius past this; the report is then partial.
    int max_radius = 16;
};

/// A_w for each requested weight, sharing one enumeration.
std::vector<CountReport> count_words_of_weights(const AdditiveCode &c, const std::vector<int> &weights,
                                                const CountOptions &opts = {});

CountReport count_words_of_weight(const AdditiveCode &c, int w, const CountOptions &opts = {});

}  // namespace circpair

#endif
