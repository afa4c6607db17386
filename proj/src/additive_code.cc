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

#include "circpair/additive_code.h"

#include <atomic>
#include <cstdlib>
#include <mutex>

#include "circpair/gray_walk.h"
#include "circpair/parallel.h"

namespace circpair {

uint64_t enumeration_budget_from_env() {
    const char *env = std::getenv("CIRCPAIR_ENUM_BUDGET");
    if (!env || !*env) {
        return kDefaultEnumerationBudget;
    }
    std::string text(env);
    try {
        if (text.rfind("2^", 0) == 0) {
            int e = std::stoi(text.substr(2));
            if (e >= 0 && e < 64) {
                return uint64_t{1} << e;
            }
        } else {
            return std::stoull(text);
        }
    } catch (...) {
    }
    throw std::invalid_argument("CIRCPAIR_ENUM_BUDGET must be a count or 2^k, got '" + text + "'");
}

namespace {

// Reduced row echelon form over columns (0,a), (0,b), (1,a), ...
void row_reduce(size_t n, std::vector<F4Vector> &rows, std::vector<BitColumn> &pivots) {
    size_t next = 0;
    pivots.clear();
    for (uint32_t coord = 0; coord < n && next < rows.size(); coord++) {
        for (uint8_t plane = 0; plane < 2 && next < rows.size(); plane++) {
            size_t found = rows.size();
            for (size_t r = next; r < rows.size(); r++) {
                if (rows[r].bit(coord, plane)) {
                    found = r;
                    break;
                }
            }
            if (found == rows.size()) {
                continue;
            }
            std::swap(rows[next], rows[found]);
            for (size_t r = 0; r < rows.size(); r++) {
                if (r != next && rows[r].bit(coord, plane)) {
                    rows[r] += rows[next];
                }
            }
            pivots.push_back({coord, plane});
            next++;
        }
    }
    rows.resize(next);
}

}  // namespace

AdditiveCode::AdditiveCode(std::vector<F4Vector> generators) : generators_(std::move(generators)) {
    if (generators_.empty()) {
        throw std::invalid_argument("additive code needs at least one generator");
    }
    n_ = generators_.front().size();
    for (const auto &g : generators_) {
        if (g.size() != n_) {
            throw std::invalid_argument("generators have mixed lengths");
        }
    }
    basis_ = generators_;
    row_reduce(n_, basis_, pivots_);
}

F4Vector AdditiveCode::reduce(F4Vector x) const {
    if (x.size() != n_) {
        throw std::invalid_argument("vector length does not match code length");
    }
    for (size_t r = 0; r < basis_.size(); r++) {
        if (x.bit(pivots_[r].coord, pivots_[r].plane)) {
            x += basis_[r];
        }
    }
    return x;
}

bool AdditiveCode::contains(const F4Vector &x) const { return reduce(x).is_zero(); }

AdditiveCode code_from_generators(std::vector<F4Vector> generators) { return AdditiveCode(std::move(generators)); }

AdditiveCode graph_code(const BinaryMatrix &adj) {
    AdditiveCode c(generator_matrix(adj));
    c.adjacency_ = adj;
    return c;
}

bool contains(const AdditiveCode &c, const F4Vector &x) { return c.contains(x); }

bool is_self_orthogonal(const AdditiveCode &c) {
    const auto &g = c.basis();
    for (size_t i = 0; i < g.size(); i++) {
        for (size_t j = i + 1; j < g.size(); j++) {
            if (trace_inner_product(g[i], g[j])) {
                return false;
            }
        }
    }
    return true;
}

bool is_self_dual(const AdditiveCode &c) { return c.rank() == c.length() && is_self_orthogonal(c); }

size_t gf2_rank(std::vector<F4Vector> rows) {
    if (rows.empty()) {
        return 0;
    }
    std::vector<BitColumn> pivots;
    row_reduce(rows.front().size(), rows, pivots);
    return rows.size();
}

namespace {

void require_budget(const AdditiveCode &c, uint64_t cap, const char *what) {
    if (c.rank() >= 64 || (uint64_t{1} << c.rank()) > cap) {
        throw BudgetExceeded(std::string(what) + ": 2^" + std::to_string(c.rank()) +
                             " codewords exceed the enumeration budget of " + std::to_string(cap));
    }
}

}  // namespace

std::map<size_t, uint64_t> weight_distribution(const AdditiveCode &c, uint64_t cap) {
    require_budget(c, cap, "weight_distribution");
    return dispatch_words(c.length(), [&](auto wc) {
        constexpr int W = decltype(wc)::value;
        std::vector<Packed<W>> rows;
        for (const auto &b : c.basis()) {
            rows.push_back(pack_all<W>(b));
        }
        int shard_bits = default_shard_bits(rows.size());
        size_t shards = size_t{1} << shard_bits;
        std::vector<std::vector<uint64_t>> partial(shards, std::vector<uint64_t>(c.length() + 1, 0));
        parallel_for(shards, default_workers(), [&](size_t s) {
            auto &counts = partial[s];
            gray_walk_shard<W>(rows, shard_bits, s, [&](const Packed<W> &w, uint64_t) {
                counts[size_t(w.weight())]++;
                return true;
            });
        });
        std::map<size_t, uint64_t> dist;
        for (size_t w = 0; w <= c.length(); w++) {
            uint64_t total = 0;
            for (const auto &p : partial) {
                total += p[w];
            }
            if (total) {
                dist[w] = total;
            }
        }
        return dist;
    });
}

std::string to_string(TypeLabel t) { return t == TypeLabel::TypeII ? "TypeII" : "TypeI"; }

TypeLabel type_by_degrees(const BinaryMatrix &adj) {
    require_adjacency_matrix(adj, "type_by_degrees");
    for (size_t r = 0; r < adj.rows(); r++) {
        if (adj.row_sum(r) % 2 == 0) {
            return TypeLabel::TypeI;
        }
    }
    return TypeLabel::TypeII;
}

TypeLabel predict_type_prop1(const CirculantPair &p) {
    size_t n = p.order();
    size_t parity = p.supp_b().size();
    if (n % 2 == 0) {
        parity += p.supp_a().contains(n / 2 + 1) ? 1 : 0;
    }
    return parity % 2 == 1 ? TypeLabel::TypeII : TypeLabel::TypeI;
}

TypeLabel classify_type_enumerative(const AdditiveCode &c, uint64_t cap) {
    // A generator of odd weight settles it without a walk.
    for (const auto &b : c.basis()) {
        if (b.weight() % 2) {
            return TypeLabel::TypeI;
        }
    }
    require_budget(c, cap, "classify_type");
    return dispatch_words(c.length(), [&](auto wc) {
        constexpr int W = decltype(wc)::value;
        std::vector<Packed<W>> rows;
        for (const auto &b : c.basis()) {
            rows.push_back(pack_all<W>(b));
        }
        int shard_bits = default_shard_bits(rows.size());
        std::atomic<bool> odd{false};
        parallel_for(size_t{1} << shard_bits, default_workers(), [&](size_t s) {
            if (odd.load(std::memory_order_relaxed)) {
                return;
            }
            uint64_t since_check = 0;
            gray_walk_shard<W>(rows, shard_bits, s, [&](const Packed<W> &w, uint64_t) {
                if (w.odd_weight()) {
                    odd = true;
                    return false;
                }
                if (++since_check == 4096) {
                    since_check = 0;
                    return !odd.load(std::memory_order_relaxed);
                }
                return true;
            });
        });
        return odd ? TypeLabel::TypeI : TypeLabel::TypeII;
    });
}

std::optional<TypeLabel> classify_type(const AdditiveCode &c, uint64_t cap) {
    if (!is_self_dual(c)) {
        throw std::invalid_argument("classify_type: code is not self-dual");
    }
    if (c.adjacency()) {
        return type_by_degrees(*c.adjacency());
    }
    try {
        return classify_type_enumerative(c, cap);
    } catch (const BudgetExceeded &) {
        return std::nullopt;
    }
}

}  // namespace circpair
