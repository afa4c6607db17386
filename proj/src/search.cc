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

#include "circpair/search.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "circpair/minweight.h"
#include "circpair/parallel.h"

namespace circpair {

namespace {

std::string hex(uint64_t v) {
    std::ostringstream s;
    s << std::hex << v;
    return s.str();
}

uint64_t gray(uint64_t i) { return i ^ (i >> 1); }

bool type_allowed(TypeFilter f, TypeLabel t) {
    return f == TypeFilter::Any || (f == TypeFilter::TypeI) == (t == TypeLabel::TypeI);
}

// Minimal (A mask, B mask) over decimations a (gcd(a, n) = 1) and shifts of B.
bool is_decimation_minimal(size_t n, uint64_t a_mask, uint64_t b_mask) {
    for (size_t a = 1; a < n; a++) {
        if (std::gcd(a, n) != 1) {
            continue;
        }
        uint64_t a2 = 0;
        for (size_t e = 0; e < n; e++) {
            if ((a_mask >> e) & 1) {
                a2 |= uint64_t{1} << (a * e % n);
            }
        }
        for (size_t s = 0; s < n; s++) {
            uint64_t b2 = 0;
            for (size_t e = 0; e < n; e++) {
                if ((b_mask >> e) & 1) {
                    b2 |= uint64_t{1} << ((a * e + s) % n);
                }
            }
            if (std::pair(a2, b2) < std::pair(a_mask, b_mask)) {
                return false;
            }
        }
    }
    return true;
}

struct Outcome {
    std::optional<int> d;
    std::optional<TypeLabel> type;
};

// Folds one evaluated candidate into the record (visiting order).
void absorb(SearchRecord &r, const CirculantPair &p, const Outcome &o) {
    if (!o.d) {
        return;
    }
    int d = *o.d;
    if (o.type) {
        int &tb = *o.type == TypeLabel::TypeI ? r.best_type_i : r.best_type_ii;
        tb = std::max(tb, d);
    }
    if (d > r.best_d) {
        r.best_d = d;
        r.witnesses.clear();
    }
    if (d == r.best_d && r.witnesses.size() < SearchRecord::kMaxWitnesses) {
        r.witnesses.push_back(p);
    }
}

// Rejection threshold: a candidate must reach every best it could improve or tie.
int threshold(const SearchRecord &r, const SearchConfig &cfg) {
    int t = r.best_d;
    if (cfg.type_filter == TypeFilter::Any && cfg.mode != SearchMode::SingleCirculant) {
        t = std::min(r.best_type_i, r.best_type_ii);
    }
    return std::max(t, cfg.early_reject_threshold);
}

SearchRecord start_record(const SearchConfig &cfg, const std::optional<SearchRecord> &resume) {
    if (!resume) {
        SearchRecord r;
        r.mode = cfg.mode;
        r.n = cfg.n;
        return r;
    }
    if (resume->mode != cfg.mode || resume->n != cfg.n) {
        throw std::invalid_argument("resume record does not match the search configuration");
    }
    return *resume;
}

// Shared driver for the two exhaustive spaces. candidate(i) returns the pair
// for index i or nullopt when filtered out; evaluate(pair, thr) scores it.
template <class Candidate, class Evaluate>
SearchRecord exhaustive_driver(const SearchConfig &cfg, const std::optional<SearchRecord> &resume, int bits,
                               Candidate &&candidate, Evaluate &&evaluate) {
    if (bits > cfg.max_space_bits || bits > 62) {
        throw std::invalid_argument("search space of 2^" + std::to_string(bits) + " candidates exceeds the cap 2^" +
                                    std::to_string(cfg.max_space_bits));
    }
    SearchRecord rec = start_record(cfg, resume);
    uint64_t total = uint64_t{1} << bits;
    uint64_t stop = cfg.budget ? std::min(total, rec.cursor + cfg.budget) : total;
    unsigned workers = cfg.workers ? cfg.workers : default_workers();
    uint64_t interval = std::max<uint64_t>(cfg.checkpoint_interval, 1);
    while (rec.cursor < stop) {
        uint64_t lo = rec.cursor, hi = std::min(stop, lo + interval);
        int thr = threshold(rec, cfg);
        size_t count = size_t(hi - lo);
        std::vector<std::optional<CirculantPair>> pairs(count);
        std::vector<Outcome> outcomes(count);
        constexpr size_t kBlock = 64;
        parallel_for((count + kBlock - 1) / kBlock, workers, [&](size_t b) {
            for (size_t j = b * kBlock; j < std::min(count, (b + 1) * kBlock); j++) {
                pairs[j] = candidate(lo + j);
                if (pairs[j]) {
                    outcomes[j] = evaluate(*pairs[j], thr);
                }
            }
        });
        for (size_t j = 0; j < count; j++) {
            if (pairs[j]) {
                absorb(rec, *pairs[j], outcomes[j]);
            }
        }
        rec.examined += count;
        rec.cursor = hi;
        rec.complete = rec.cursor == total;
        if (cfg.progress) {
            cfg.progress(rec);
        }
    }
    rec.complete = rec.cursor == total;
    return rec;
}

SupportSet random_symmetric(size_t n, std::mt19937_64 &rng) {
    size_t free = symmetric_free_bits(n);
    uint64_t bits = free == 0 ? 0 : rng() & ((uint64_t{1} << free) - 1);
    return symmetric_support(n, bits);
}

// Free-bit index of a symmetric support.
uint64_t symmetric_bits(const SupportSet &a) {
    size_t n = a.order();
    uint64_t bits = 0;
    size_t idx = 0;
    for (size_t j = 2; j <= n / 2 + 1; j++) {
        size_t m = mirror_position(n, j);
        if (m < j) {
            break;
        }
        if (a.contains(j)) {
            bits |= uint64_t{1} << idx;
        }
        idx++;
    }
    return bits;
}

}  // namespace

std::string to_string(SearchMode m) {
    switch (m) {
        case SearchMode::Exhaustive:
            return "exhaustive";
        case SearchMode::Random:
            return "random";
        case SearchMode::SingleCirculant:
            return "single";
    }
    return "?";
}

std::string to_string(TypeFilter f) {
    switch (f) {
        case TypeFilter::Any:
            return "any";
        case TypeFilter::TypeI:
            return "TypeI";
        case TypeFilter::TypeII:
            return "TypeII";
    }
    return "?";
}

SearchMode parse_search_mode(const std::string &s) {
    if (s == "exhaustive") return SearchMode::Exhaustive;
    if (s == "random") return SearchMode::Random;
    if (s == "single") return SearchMode::SingleCirculant;
    throw std::invalid_argument("unknown search mode '" + s + "' (exhaustive, random, single)");
}

TypeFilter parse_type_filter(const std::string &s) {
    if (s == "any") return TypeFilter::Any;
    if (s == "TypeI" || s == "I") return TypeFilter::TypeI;
    if (s == "TypeII" || s == "II") return TypeFilter::TypeII;
    throw std::invalid_argument("unknown type filter '" + s + "' (any, TypeI, TypeII)");
}

std::string progress_line(const SearchRecord &r) {
    return "examined=" + std::to_string(r.examined) + " best_d=" + std::to_string(r.best_d) + " cursor=" + hex(r.cursor);
}

std::string serialize_record(const SearchRecord &r) {
    std::ostringstream out;
    out << "mode " << to_string(r.mode) << "\n";
    out << "n " << r.n << "\n";
    out << "best_d " << r.best_d << "\n";
    out << "best_type_i " << r.best_type_i << "\n";
    out << "best_type_ii " << r.best_type_ii << "\n";
    out << "examined " << r.examined << "\n";
    out << "cursor " << hex(r.cursor) << "\n";
    out << "complete " << (r.complete ? 1 : 0) << "\n";
    if (r.incumbent) {
        out << "incumbent_d " << r.incumbent_d << "\n";
        out << "incumbent " << format_code_spec({"incumbent", *r.incumbent}) << "\n";
    }
    if (!r.rng_state.empty()) {
        out << "rng " << r.rng_state << "\n";
    }
    for (size_t i = 0; i < r.witnesses.size(); i++) {
        out << "witness " << format_code_spec({"w" + std::to_string(i + 1), r.witnesses[i]}) << "\n";
    }
    return out.str();
}

SearchRecord parse_record(const std::string &text) {
    SearchRecord r;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto sp = line.find(' ');
        std::string key = line.substr(0, sp);
        std::string value = sp == std::string::npos ? "" : line.substr(sp + 1);
        try {
            if (key == "mode") r.mode = parse_search_mode(value);
            else if (key == "n") r.n = std::stoul(value);
            else if (key == "best_d") r.best_d = std::stoi(value);
            else if (key == "best_type_i") r.best_type_i = std::stoi(value);
            else if (key == "best_type_ii") r.best_type_ii = std::stoi(value);
            else if (key == "examined") r.examined = std::stoull(value);
            else if (key == "cursor") r.cursor = std::stoull(value, nullptr, 16);
            else if (key == "complete") r.complete = value == "1";
            else if (key == "incumbent_d") r.incumbent_d = std::stoi(value);
            else if (key == "incumbent") r.incumbent = parse_code_spec(value).pair;
            else if (key == "rng") r.rng_state = value;
            else if (key == "witness") r.witnesses.push_back(parse_code_spec(value).pair);
            else throw std::invalid_argument("unknown key");
        } catch (const std::exception &e) {
            throw std::invalid_argument("search record line '" + line + "': " + e.what());
        }
    }
    return r;
}

size_t symmetric_free_bits(size_t n) { return n / 2; }

SupportSet symmetric_support(size_t n, uint64_t bits) {
    std::vector<size_t> pos;
    size_t idx = 0;
    for (size_t j = 2; j <= n / 2 + 1; j++) {
        size_t m = mirror_position(n, j);
        if (m < j) {
            break;
        }
        if ((bits >> idx) & 1) {
            pos.push_back(j);
            if (m != j) {
                pos.push_back(m);
            }
        }
        idx++;
    }
    std::sort(pos.begin(), pos.end());
    return SupportSet(n, pos);
}

std::optional<int> evaluate_pair(const CirculantPair &p, int reject_below, unsigned workers) {
    AdditiveCode c = graph_code(block_matrix(p));
    MinWeightOptions opts;
    opts.workers = workers;
    opts.symmetry = circulant_symmetry(p);
    if (reject_below > 1 && !verify_no_word_below(c, reject_below, opts).holds) {
        return std::nullopt;
    }
    return min_weight(c, opts).claimed_d;
}

std::optional<int> evaluate_single(const SupportSet &a, int reject_below, unsigned workers) {
    AdditiveCode c = graph_code(circulant_from_support(a));
    MinWeightOptions opts;
    opts.workers = workers;
    if (reject_below > 1 && !verify_no_word_below(c, reject_below, opts).holds) {
        return std::nullopt;
    }
    return min_weight(c, opts).claimed_d;
}

SearchRecord exhaustive_search(const SearchConfig &cfg, const std::optional<SearchRecord> &resume) {
    if (cfg.mode != SearchMode::Exhaustive) {
        throw std::invalid_argument("exhaustive_search needs mode exhaustive");
    }
    size_t n = cfg.n;
    if (n == 0 || n > 64) {
        throw std::invalid_argument("circulant order must be in [1, 64]");
    }
    int fa = int(symmetric_free_bits(n));
    int bits = fa + int(n);
    uint64_t b_mask = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    auto candidate = [&](uint64_t i) -> std::optional<CirculantPair> {
        SupportSet a = symmetric_support(n, i >> n);
        SupportSet b = SupportSet::from_mask(n, gray(i & b_mask));
        if (cfg.decimation_reduction && !is_decimation_minimal(n, a.mask(), b.mask())) {
            return std::nullopt;
        }
        CirculantPair p(n, a, b);
        if (!type_allowed(cfg.type_filter, predict_type_prop1(p))) {
            return std::nullopt;
        }
        return p;
    };
    auto evaluate = [&](const CirculantPair &p, int thr) {
        return Outcome{evaluate_pair(p, thr), predict_type_prop1(p)};
    };
    return exhaustive_driver(cfg, resume, bits, candidate, evaluate);
}

SearchRecord single_circulant_search(const SearchConfig &cfg, const std::optional<SearchRecord> &resume) {
    if (cfg.mode != SearchMode::SingleCirculant) {
        throw std::invalid_argument("single_circulant_search needs mode single");
    }
    size_t n = cfg.n;
    if (n == 0 || n > 64) {
        throw std::invalid_argument("circulant order must be in [1, 64]");
    }
    int bits = int(symmetric_free_bits(n));
    auto candidate = [&](uint64_t i) -> std::optional<CirculantPair> {
        SupportSet a = symmetric_support(n, gray(i));
        if (!type_allowed(cfg.type_filter, type_by_degrees(circulant_from_support(a)))) {
            return std::nullopt;
        }
        return CirculantPair(n, a, SupportSet(n, {}));
    };
    auto evaluate = [&](const CirculantPair &p, int thr) {
        return Outcome{evaluate_single(p.supp_a(), thr), std::nullopt};
    };
    return exhaustive_driver(cfg, resume, bits, candidate, evaluate);
}

SearchRecord random_search(const SearchConfig &cfg, const std::optional<SearchRecord> &resume) {
    if (cfg.mode != SearchMode::Random) {
        throw std::invalid_argument("random_search needs mode random");
    }
    size_t n = cfg.n;
    if (n == 0 || n > 64) {
        throw std::invalid_argument("circulant order must be in [1, 64]");
    }
    if (cfg.budget == 0) {
        throw std::invalid_argument("random search needs a candidate budget");
    }
    SearchRecord rec = start_record(cfg, resume);
    std::mt19937_64 rng(cfg.seed);
    if (!rec.rng_state.empty()) {
        std::istringstream s(rec.rng_state);
        s >> rng;
        if (!s) {
            throw std::invalid_argument("resume record has a malformed generator state");
        }
    }
    unsigned workers = cfg.workers ? cfg.workers : default_workers();
    size_t fa = symmetric_free_bits(n);
    uint64_t stop = rec.examined + cfg.budget;
    uint64_t interval = std::max<uint64_t>(cfg.checkpoint_interval, 1);
    uint64_t next_checkpoint = rec.examined + interval;

    auto visit = [&](const CirculantPair &p, int thr) -> std::optional<int> {
        rec.examined++;
        rec.cursor = rec.examined;
        TypeLabel t = predict_type_prop1(p);
        if (!type_allowed(cfg.type_filter, t)) {
            return std::nullopt;
        }
        auto d = evaluate_pair(p, std::max(thr, cfg.early_reject_threshold), workers);
        absorb(rec, p, {d, t});
        return d;
    };
    auto checkpoint = [&] {
        std::ostringstream s;
        s << rng;
        rec.rng_state = s.str();
        if (cfg.progress) {
            cfg.progress(rec);
        }
    };

    if (!rec.incumbent) {
        CirculantPair p;
        if (cfg.start) {
            if (cfg.start->order() != n) {
                throw std::invalid_argument("start pair order differs from n");
            }
            p = *cfg.start;
        } else {
            SupportSet a = random_symmetric(n, rng);
            uint64_t b = rng() & (n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
            p = CirculantPair(n, a, SupportSet::from_mask(n, b));
        }
        auto d = visit(p, 0);
        rec.incumbent = p;
        rec.incumbent_d = d.value_or(0);
    }
    while (rec.examined < stop) {
        // One move: flip a mirror pair of A or one position of B.
        uint64_t move = rng() % (fa + n);
        SupportSet a = rec.incumbent->supp_a();
        uint64_t b = rec.incumbent->supp_b().mask();
        if (move < fa) {
            a = symmetric_support(n, symmetric_bits(a) ^ (uint64_t{1} << move));
        } else {
            b ^= uint64_t{1} << (move - fa);
        }
        CirculantPair p(n, a, SupportSet::from_mask(n, b));
        auto d = visit(p, rec.incumbent_d);
        if (d && *d >= rec.incumbent_d) {
            rec.incumbent = p;
            rec.incumbent_d = *d;
        }
        if (rec.examined >= next_checkpoint) {
            next_checkpoint += interval;
            checkpoint();
        }
    }
    checkpoint();
    rec.complete = true;
    return rec;
}

SearchRecord run_search(const SearchConfig &cfg, const std::optional<SearchRecord> &resume) {
    switch (cfg.mode) {
        case SearchMode::Exhaustive:
            return exhaustive_search(cfg, resume);
        case SearchMode::Random:
            return random_search(cfg, resume);
        case SearchMode::SingleCirculant:
            return single_circulant_search(cfg, resume);
    }
    throw std::invalid_argument("unknown search mode");
}

}  // namespace circpair
