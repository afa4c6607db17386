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

#include "circpair/minweight.h"

#include <algorithm>
#include <atomic>
#include <climits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "circpair/gray_walk.h"
#include "circpair/parallel.h"
#include "kernel.h"
#include "window_form.h"

namespace circpair {

using detail::Prefix;
using detail::Selection;
using detail::WindowForm;

namespace {

unsigned workers_of(const MinWeightOptions &opts) { return opts.workers ? opts.workers : default_workers(); }

bool walk_allowed(const AdditiveCode &c, uint64_t budget) {
    return c.rank() < 63 && (uint64_t{1} << c.rank()) <= budget;
}

void require_nonzero_code(const AdditiveCode &c) {
    if (c.rank() == 0) {
        throw std::invalid_argument("code has no nonzero codeword");
    }
}

F4Vector reconstruct(const WindowForm &f, const Selection &sel, int rest_index) {
    F4Vector v = f.rest_sums[size_t(rest_index)];
    for (int i = 0; i < sel.depth; i++) {
        v += f.options[size_t(sel.pos[i])][size_t(sel.option[i])].lift;
    }
    return v;
}

// Windows, forms and the automorphisms backing credited passes.
struct Plan {
    std::vector<WindowForm> forms;
    bool orbit = false;
    std::vector<Permutation> automorphisms;
    std::vector<uint32_t> partner;  // credited window (orbit plans only)
};

void validate_symmetry(const AdditiveCode &c, const SymmetryPlan &s) {
    size_t n = c.length();
    std::vector<int> owner(n, -1);
    for (uint32_t i : s.cycle) {
        if (i >= n || owner[i] != -1) {
            throw std::invalid_argument("symmetry plan: bad cycle coordinate");
        }
        owner[i] = 0;
    }
    for (uint32_t i : s.partner) {
        if (i >= n || owner[i] != -1) {
            throw std::invalid_argument("symmetry plan: partner window overlaps or is out of range");
        }
        owner[i] = 1;
    }
    if (std::count(owner.begin(), owner.end(), -1) != 0) {
        throw std::invalid_argument("symmetry plan: windows must cover every coordinate");
    }
    if (s.rotation.size() != n || s.swap.size() != n) {
        throw std::invalid_argument("symmetry plan: permutation length mismatch");
    }
    size_t m = s.cycle.size();
    for (size_t i = 0; i < m; i++) {
        if (s.rotation[s.cycle[i]] != s.cycle[(i + 1) % m]) {
            throw std::invalid_argument("symmetry plan: rotation does not advance the cycle");
        }
    }
    for (uint32_t i : s.cycle) {
        if (s.swap[i] >= n || owner[s.swap[i]] != 1) {
            throw std::invalid_argument("symmetry plan: swap does not map the cycle onto the partner");
        }
    }
    for (uint32_t i : s.partner) {
        if (s.swap[i] >= n || owner[s.swap[i]] != 0) {
            throw std::invalid_argument("symmetry plan: swap does not map the partner onto the cycle");
        }
    }
    if (!is_automorphism(c, s.rotation) || !is_automorphism(c, s.swap)) {
        throw std::invalid_argument("symmetry plan: permutation is not an automorphism of the code");
    }
    // rotation^m must be the identity.
    Permutation p(n);
    for (uint32_t i = 0; i < n; i++) {
        uint32_t x = i;
        for (size_t k = 0; k < m; k++) {
            x = s.rotation[x];
        }
        if (x != i) {
            throw std::invalid_argument("symmetry plan: rotation order differs from the cycle length");
        }
    }
}

Plan make_plan(const AdditiveCode &c, const MinWeightOptions &opts) {
    Plan plan;
    if (opts.symmetry) {
        const auto &s = *opts.symmetry;
        validate_symmetry(c, s);
        // A cycle window that is too degenerate for the caps falls back to
        // greedy windows.
        std::optional<WindowForm> form;
        try {
            form = detail::build_window_form(c, s.cycle, opts.max_rest_rows, opts.max_pattern_constraints);
        } catch (const std::invalid_argument &) {
        }
        if (form && form->window.size() == s.cycle.size()) {
            plan.forms.push_back(std::move(*form));
            plan.orbit = true;
            plan.automorphisms = {s.rotation, s.swap};
            plan.partner = s.partner;
            return plan;
        }
    }
    auto windows = detail::greedy_windows(c);
    for (size_t i = 0; i < windows.size(); i++) {
        try {
            plan.forms.push_back(
                detail::build_window_form(c, windows[i], opts.max_rest_rows, opts.max_pattern_constraints));
        } catch (const std::invalid_argument &) {
            if (i == 0) {
                throw;
            }
        }
    }
    return plan;
}

// Per-form radius bookkeeping shared by the windowed drivers.
struct BoundState {
    std::vector<int> radius;
    const Plan *plan = nullptr;

    explicit BoundState(const Plan &p) : radius(p.forms.size(), -1), plan(&p) {}

    bool exhausted() const {
        for (size_t f = 0; f < radius.size(); f++) {
            if (radius[f] >= int(plan->forms[f].window.size())) {
                return true;
            }
        }
        return false;
    }

    int lower_bound() const {
        if (exhausted()) {
            return INT_MAX;
        }
        int lb = 0;
        for (int r : radius) {
            lb += r + 1;
        }
        if (plan->orbit) {
            lb += radius[0] + 1;
        }
        return lb;
    }

    std::vector<BoundPass> passes() const {
        std::vector<BoundPass> out;
        for (size_t f = 0; f < radius.size(); f++) {
            BoundPass p;
            p.form_index = int(f);
            p.window = plan->forms[f].window;
            p.window_rank = plan->forms[f].rank;
            p.radius = radius[f];
            p.contribution = radius[f] + 1;
            if (plan->orbit && f == 0) {
                p.orbit_automorphism = 0;
            }
            out.push_back(std::move(p));
        }
        if (plan->orbit) {
            BoundPass p;
            p.form_index = int(radius.size());
            p.window = plan->partner;
            p.window_rank = plan->forms[0].rank;
            p.radius = radius[0];
            p.contribution = radius[0] + 1;
            p.via_automorphism = 1;
            p.source_form = 0;
            out.push_back(std::move(p));
        }
        return out;
    }
};

// Runs one level of one form over all tasks. make_sink(task) builds the
// per-task sink; sinks are returned in task (visiting) order.
template <class Sink, class MakeSink>
std::vector<Sink> run_level(const WindowForm &form, int level, bool orbit, unsigned workers, MakeSink &&make_sink,
                            uint64_t &enumerated) {
    if (level >= 128) {
        throw std::invalid_argument("window radius too large");
    }
    return dispatch_words(std::max<size_t>(form.outside.size(), 1), [&](auto wc) {
        constexpr int W = decltype(wc)::value;
        detail::PackedForm<W> packed(form);
        std::vector<Sink> sinks;
        if (level == 0) {
            sinks.push_back(make_sink(size_t{0}));
            detail::PatternKernel<W, Sink> kernel(packed, 0, false, sinks[0]);
            kernel.run_level_zero();
            enumerated += kernel.enumerated();
            return sinks;
        }
        int items = int(form.window.size());
        if (level > items) {
            return sinks;
        }
        std::vector<Prefix> prefixes =
            orbit ? detail::make_orbit_prefixes(items, level) : detail::make_generic_prefixes(items, level);
        sinks.reserve(prefixes.size());
        for (size_t t = 0; t < prefixes.size(); t++) {
            sinks.push_back(make_sink(t));
        }
        std::vector<uint64_t> counts(prefixes.size(), 0);
        parallel_for(prefixes.size(), workers, [&](size_t t) {
            if (sinks[t].stopped()) {
                return;
            }
            detail::PatternKernel<W, Sink> kernel(packed, level, orbit, sinks[t]);
            kernel.run(prefixes[t]);
            counts[t] = kernel.enumerated();
        });
        for (uint64_t c : counts) {
            enumerated += c;
        }
        return sinks;
    });
}

struct MinSink {
    int limit = INT_MAX;
    int best = INT_MAX;
    std::optional<F4Vector> word;
    const WindowForm *form = nullptr;

    bool stopped() const { return false; }
    void hit(int w, const Selection &sel, int rest) {
        if (w < best) {
            best = w;
            limit = w - 1;
            word = reconstruct(*form, sel, rest);
        }
    }
};

// First word with weight <= limit in visiting order. Tasks after the first
// task with a hit stop early.
struct FirstSink {
    int limit = 0;
    size_t task = 0;
    std::atomic<size_t> *first_task = nullptr;
    const WindowForm *form = nullptr;
    std::optional<F4Vector> word;

    FirstSink() = default;
    FirstSink(FirstSink &&) = default;
    FirstSink &operator=(FirstSink &&) = default;

    bool stopped() const { return word.has_value() || first_task->load(std::memory_order_relaxed) < task; }
    void hit(int, const Selection &sel, int rest) {
        if (word) {
            return;
        }
        word = reconstruct(*form, sel, rest);
        limit = -1;
        size_t cur = first_task->load();
        while (task < cur && !first_task->compare_exchange_weak(cur, task)) {
        }
    }
};

struct CountSink {
    int limit = 0;
    const std::vector<bool> *targets = nullptr;
    const WindowForm *form = nullptr;
    int cycle_length = 0;
    bool orbit = false;
    // orbit mode: (weight, max-gap multiplicity) -> count
    std::map<std::pair<int, int>, uint64_t> orbit_counts;
    // store mode
    std::vector<F4Vector> words;
    std::atomic<uint64_t> *stored = nullptr;
    uint64_t max_stored = 0;
    bool overflow = false;

    bool stopped() const { return false; }
    void hit(int w, const Selection &sel, int rest) {
        if (!(*targets)[size_t(w)]) {
            return;
        }
        if (orbit) {
            int m = sel.depth == 0 ? 0 : detail::max_gap_multiplicity(sel.pos, sel.depth, cycle_length);
            orbit_counts[{w, m}]++;
            return;
        }
        if (stored->fetch_add(1) >= max_stored) {
            overflow = true;
            return;
        }
        words.push_back(reconstruct(*form, sel, rest));
    }
};

WeightCertificate finish_windowed(const BoundState &state, const Plan &plan, uint64_t enumerated) {
    WeightCertificate cert;
    cert.method = CertificateMethod::WindowedBound;
    cert.enumerated = enumerated;
    cert.automorphisms = plan.automorphisms;
    cert.passes = state.passes();
    return cert;
}

// Gray walk looking for the first word of weight <= limit (or the lightest
// word when find_min). Returns the word and its weight.
std::optional<F4Vector> walk_for_light_word(const AdditiveCode &c, int limit, bool find_min, unsigned workers) {
    require_nonzero_code(c);
    return dispatch_words(c.length(), [&](auto wc) -> std::optional<F4Vector> {
        constexpr int W = decltype(wc)::value;
        std::vector<Packed<W>> rows;
        for (const auto &b : c.basis()) {
            rows.push_back(pack_all<W>(b));
        }
        int shard_bits = default_shard_bits(rows.size());
        size_t shards = size_t{1} << shard_bits;
        std::vector<int> best(shards, INT_MAX);
        std::vector<Packed<W>> best_word(shards);
        std::atomic<size_t> first_hit{SIZE_MAX};
        parallel_for(shards, workers, [&](size_t s) {
            int local_limit = limit;
            uint64_t since = 0;
            gray_walk_shard<W>(rows, shard_bits, s, [&](const Packed<W> &w, uint64_t) {
                int wt = w.weight();
                if (wt > 0 && wt <= local_limit && wt < best[s]) {
                    best[s] = wt;
                    best_word[s] = w;
                    if (!find_min) {
                        size_t cur = first_hit.load();
                        while (s < cur && !first_hit.compare_exchange_weak(cur, s)) {
                        }
                        return false;
                    }
                    local_limit = wt - 1;
                }
                if (!find_min && ++since == 4096) {
                    since = 0;
                    return first_hit.load(std::memory_order_relaxed) > s;
                }
                return true;
            });
        });
        size_t pick = shards;
        for (size_t s = 0; s < shards; s++) {
            if (best[s] != INT_MAX && (pick == shards || best[s] < best[pick])) {
                pick = s;
                if (!find_min) {
                    break;
                }
            }
        }
        if (pick == shards) {
            return std::nullopt;
        }
        return unpack_all<W>(best_word[pick], c.length());
    });
}

}  // namespace

std::string to_string(CertificateMethod m) {
    return m == CertificateMethod::FullEnumeration ? "full_enumeration" : "windowed_bound";
}

int WeightCertificate::lower_bound() const {
    int lb = 0;
    for (const auto &p : passes) {
        lb += p.contribution;
    }
    return lb;
}

WeightCertificate min_weight_enumerate(const AdditiveCode &c, const MinWeightOptions &opts) {
    require_nonzero_code(c);
    if (!walk_allowed(c, opts.enumeration_budget)) {
        throw BudgetExceeded("min_weight_enumerate: 2^" + std::to_string(c.rank()) +
                             " codewords exceed the enumeration budget of " +
                             std::to_string(opts.enumeration_budget) + "; use the windowed method");
    }
    auto word = walk_for_light_word(c, INT_MAX, true, workers_of(opts));
    WeightCertificate cert;
    cert.method = CertificateMethod::FullEnumeration;
    cert.exact = true;
    cert.witness = *word;
    cert.claimed_d = int(word->weight());
    cert.enumerated = (uint64_t{1} << c.rank()) - 1;
    return cert;
}

WeightCertificate min_weight_windowed(const AdditiveCode &c, const MinWeightOptions &opts) {
    require_nonzero_code(c);
    if (int(c.rank()) <= opts.enumerate_rank_at_most && walk_allowed(c, opts.enumeration_budget)) {
        return min_weight_enumerate(c, opts);
    }
    Plan plan = make_plan(c, opts);
    BoundState state(plan);
    unsigned workers = workers_of(opts);
    int best = INT_MAX;
    std::optional<F4Vector> witness;
    uint64_t enumerated = 0;

    for (int level = 0; state.lower_bound() < best; level++) {
        for (size_t f = 0; f < plan.forms.size() && state.lower_bound() < best; f++) {
            const WindowForm &form = plan.forms[f];
            if (state.radius[f] >= int(form.window.size())) {
                continue;
            }
            bool orbit = plan.orbit && f == 0;
            int start_best = best;
            auto sinks = run_level<MinSink>(
                form, level, orbit, workers,
                [&](size_t) {
                    MinSink s;
                    s.best = start_best;
                    s.limit = start_best == INT_MAX ? INT_MAX : start_best - 1;
                    s.form = &form;
                    return s;
                },
                enumerated);
            for (auto &s : sinks) {
                if (s.word && s.best < best) {
                    best = s.best;
                    witness = std::move(s.word);
                }
            }
            state.radius[f] = level;
            if (opts.progress) {
                opts.progress({int(f), level, state.lower_bound(), best, enumerated});
            }
        }
    }
    WeightCertificate cert = finish_windowed(state, plan, enumerated);
    cert.exact = true;
    cert.claimed_d = best;
    cert.witness = witness;
    return cert;
}

WeightCertificate min_weight(const AdditiveCode &c, const MinWeightOptions &opts) {
    return min_weight_windowed(c, opts);
}

VerifyResult verify_no_word_below(const AdditiveCode &c, int d, const MinWeightOptions &opts) {
    require_nonzero_code(c);
    VerifyResult result;
    if (d <= 1) {
        result.holds = true;
        result.certificate.claimed_d = d;
        result.certificate.method = CertificateMethod::WindowedBound;
        return result;
    }
    if (int(c.rank()) <= opts.enumerate_rank_at_most && walk_allowed(c, opts.enumeration_budget)) {
        WeightCertificate cert = min_weight_enumerate(c, opts);
        if (cert.claimed_d < d) {
            result.counterexample = cert.witness;
        } else {
            result.holds = true;
        }
        result.certificate = cert;
        return result;
    }
    Plan plan = make_plan(c, opts);
    BoundState state(plan);
    unsigned workers = workers_of(opts);
    uint64_t enumerated = 0;
    for (int level = 0; state.lower_bound() < d; level++) {
        for (size_t f = 0; f < plan.forms.size() && state.lower_bound() < d; f++) {
            const WindowForm &form = plan.forms[f];
            if (state.radius[f] >= int(form.window.size())) {
                continue;
            }
            std::atomic<size_t> first{SIZE_MAX};
            const uint64_t completed = enumerated;
            auto sinks = run_level<FirstSink>(
                form, level, plan.orbit && f == 0, workers,
                [&](size_t t) {
                    FirstSink s;
                    s.limit = d - 1;
                    s.task = t;
                    s.first_task = &first;
                    s.form = &form;
                    return s;
                },
                enumerated);
            for (auto &s : sinks) {
                if (s.word) {
                    result.counterexample = std::move(s.word);
                    // Partial levels stop at a timing-dependent point; report completed ones.
                    result.certificate = finish_windowed(state, plan, completed);
                    result.certificate.claimed_d = int(result.counterexample->weight());
                    result.certificate.exact = false;
                    return result;
                }
            }
            state.radius[f] = level;
            if (opts.progress) {
                opts.progress({int(f), level, state.lower_bound(), 0, enumerated});
            }
        }
    }
    result.holds = true;
    result.certificate = finish_windowed(state, plan, enumerated);
    result.certificate.claimed_d = d;
    result.certificate.exact = false;
    return result;
}

std::optional<F4Vector> find_word_of_weight_at_most(const AdditiveCode &c, int d, int max_radius,
                                                    const MinWeightOptions &opts) {
    require_nonzero_code(c);
    if (d <= 0) {
        return std::nullopt;
    }
    if (int(c.rank()) <= opts.enumerate_rank_at_most && walk_allowed(c, opts.enumeration_budget)) {
        return walk_for_light_word(c, d, false, workers_of(opts));
    }
    Plan plan = make_plan(c, opts);
    unsigned workers = workers_of(opts);
    uint64_t enumerated = 0;
    for (int level = 0; level <= max_radius; level++) {
        for (size_t f = 0; f < plan.forms.size(); f++) {
            const WindowForm &form = plan.forms[f];
            if (level > int(form.window.size())) {
                continue;
            }
            std::atomic<size_t> first{SIZE_MAX};
            auto sinks = run_level<FirstSink>(
                form, level, plan.orbit && f == 0, workers,
                [&](size_t t) {
                    FirstSink s;
                    s.limit = d;
                    s.task = t;
                    s.first_task = &first;
                    s.form = &form;
                    return s;
                },
                enumerated);
            for (auto &s : sinks) {
                if (s.word) {
                    return std::move(s.word);
                }
            }
            if (opts.progress) {
                opts.progress({int(f), level, 0, 0, enumerated});
            }
        }
    }
    return std::nullopt;
}

std::vector<CountReport> count_words_of_weights(const AdditiveCode &c, const std::vector<int> &weights,
                                                const CountOptions &opts) {
    std::vector<CountReport> reports;
    int wmax = 0;
    for (int w : weights) {
        if (w < 0 || size_t(w) > c.length()) {
            throw std::invalid_argument("weight " + std::to_string(w) + " outside [0, n]");
        }
        wmax = std::max(wmax, w);
        reports.push_back({w, 0, false});
    }
    if (walk_allowed(c, opts.engine.enumeration_budget)) {
        auto dist = weight_distribution(c, opts.engine.enumeration_budget);
        for (auto &r : reports) {
            r.count = dist.count(size_t(r.weight)) ? dist[size_t(r.weight)] : 0;
            r.exhaustive = true;
        }
        return reports;
    }
    std::vector<bool> targets(c.length() + 1, false);
    bool any_positive = false;
    for (auto &r : reports) {
        if (r.weight == 0) {
            r.count = 1;
            r.exhaustive = true;
        } else {
            targets[size_t(r.weight)] = true;
            any_positive = true;
        }
    }
    if (!any_positive) {
        return reports;
    }
    Plan plan = make_plan(c, opts.engine);
    unsigned workers = workers_of(opts.engine);
    uint64_t enumerated = 0;

    if (plan.orbit) {
        // count(w) = sum over a <= t of |X(w, a)| * (1 + [w - a > t]) where
        // X(w, a) are the weight-w words of weight a on the cycle window and
        // 2(t + 1) > w. |X(w, a)| = n * sum_m E(w, a, m) / m over enumerated
        // orbit representatives with m maximal gaps.
        const WindowForm &form = plan.forms[0];
        int n = int(form.window.size());
        int t = std::min(std::min(opts.max_radius, n), (wmax + 1) / 2);
        // X[w][a]
        std::map<int, std::map<int, uint64_t>> classes;
        for (int level = 0; level <= t; level++) {
            auto sinks = run_level<CountSink>(
                form, level, level > 0, workers,
                [&](size_t) {
                    CountSink s;
                    s.limit = wmax;
                    s.targets = &targets;
                    s.form = &form;
                    s.cycle_length = n;
                    s.orbit = true;
                    return s;
                },
                enumerated);
            std::map<std::pair<int, int>, uint64_t> merged;
            for (auto &s : sinks) {
                for (auto &[key, v] : s.orbit_counts) {
                    merged[key] += v;
                }
            }
            std::map<int, uint64_t> numer;  // weight -> sum of n * E / m, checked per m
            for (auto &[key, v] : merged) {
                auto [w, m] = key;
                if (level == 0) {
                    classes[w][0] += v;
                    continue;
                }
                if ((uint64_t(n) * v) % uint64_t(m) != 0) {
                    throw std::logic_error("orbit count not divisible: the rotation is not acting freely as assumed");
                }
                classes[w][level] += uint64_t(n) * v / uint64_t(m);
            }
            if (opts.engine.progress) {
                opts.engine.progress({0, level, 2 * (level + 1), 0, enumerated});
            }
        }
        for (auto &r : reports) {
            if (r.weight == 0) {
                continue;
            }
            uint64_t total = 0;
            for (auto &[a, x] : classes[r.weight]) {
                total += x * (1 + (r.weight - a > t ? 1 : 0));
            }
            r.count = total;
            r.exhaustive = 2 * (t + 1) > r.weight;
        }
        return reports;
    }

    BoundState state(plan);
    std::atomic<uint64_t> stored{0};
    bool overflow = false;
    std::vector<std::vector<F4Vector>> found(c.length() + 1);
    for (int level = 0; level <= opts.max_radius && state.lower_bound() <= wmax && !overflow; level++) {
        for (size_t f = 0; f < plan.forms.size() && state.lower_bound() <= wmax && !overflow; f++) {
            const WindowForm &form = plan.forms[f];
            if (state.radius[f] >= int(form.window.size())) {
                continue;
            }
            auto sinks = run_level<CountSink>(
                form, level, false, workers,
                [&](size_t) {
                    CountSink s;
                    s.limit = wmax;
                    s.targets = &targets;
                    s.form = &form;
                    s.stored = &stored;
                    s.max_stored = opts.max_stored_words;
                    return s;
                },
                enumerated);
            for (auto &s : sinks) {
                overflow = overflow || s.overflow;
                for (auto &w : s.words) {
                    found[w.weight()].push_back(std::move(w));
                }
            }
            state.radius[f] = level;
            if (opts.engine.progress) {
                opts.engine.progress({int(f), level, state.lower_bound(), 0, enumerated});
            }
        }
    }
    int lb = state.lower_bound();
    for (auto &r : reports) {
        if (r.weight == 0) {
            continue;
        }
        auto &v = found[size_t(r.weight)];
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        r.count = v.size();
        r.exhaustive = !overflow && lb > r.weight;
    }
    return reports;
}

CountReport count_words_of_weight(const AdditiveCode &c, int w, const CountOptions &opts) {
    return count_words_of_weights(c, {w}, opts).front();
}

}  // namespace circpair
