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

// circpair: command-line front end for the circulant-pair code toolkit.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "circpair/additive_code.h"
#include "circpair/catalog.h"
#include "circpair/circulant.h"
#include "circpair/minweight.h"
#include "circpair/parallel.h"
#include "circpair/search.h"

using namespace circpair;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    bool json = false;
    unsigned threads = 0;
    uint64_t budget = 0;
};

struct Inputs {
    std::vector<std::string> specs;
    std::string file;
    std::vector<std::string> names;
};

void add_inputs(CLI::App *cmd, Inputs &in) {
    cmd->add_option("specs", in.specs, "code-spec lines, e.g. 'name=C14II n=7 A=2,7 B=1,2,5'");
    cmd->add_option("-f,--file", in.file, "file of code-spec lines ('-' for stdin)");
    cmd->add_option("-n,--name", in.names, "catalog entry name");
}

std::vector<CodeSpec> read_specs(const Inputs &in) {
    std::vector<CodeSpec> out;
    auto parse_line = [&](const std::string &line, const std::string &where) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            return;
        }
        try {
            out.push_back(parse_code_spec(line));
        } catch (const CodeSpecError &e) {
            throw UsageError(where + ": field " + e.field() + ": " + e.what());
        } catch (const std::invalid_argument &e) {
            throw UsageError(where + ": " + e.what());
        }
    };
    for (size_t i = 0; i < in.specs.size(); i++) {
        parse_line(in.specs[i], "argument " + std::to_string(i + 1));
    }
    if (!in.file.empty()) {
        std::ifstream f;
        std::istream *s = &std::cin;
        if (in.file != "-") {
            f.open(in.file);
            if (!f) {
                throw UsageError("cannot open " + in.file);
            }
            s = &f;
        }
        std::string line;
        for (size_t no = 1; std::getline(*s, line); no++) {
            parse_line(line, in.file + ":" + std::to_string(no));
        }
    }
    for (const auto &name : in.names) {
        try {
            out.push_back({name, catalog_lookup(name).pair});
        } catch (const std::out_of_range &e) {
            throw UsageError(e.what());
        }
    }
    if (out.empty()) {
        throw UsageError("no code given (pass code-spec lines, --file or --name)");
    }
    return out;
}

MinWeightOptions engine_options(const Globals &g, const CirculantPair &p, bool symmetry) {
    MinWeightOptions o;
    o.workers = g.threads;
    o.enumeration_budget = g.budget ? g.budget : enumeration_budget_from_env();
    if (symmetry) {
        o.symmetry = circulant_symmetry(p);
    }
    return o;
}

json code_json(const CodeSpec &s, const AdditiveCode &c) {
    json j;
    j["name"] = s.name;
    j["n"] = s.pair.order();
    j["length"] = s.pair.length();
    j["self_dual"] = is_self_dual(c);
    j["type"] = to_string(predict_type_prop1(s.pair));
    j["min_weight"] = nullptr;
    j["certificate"] = nullptr;
    j["counts"] = json::object();
    return j;
}

void emit(const Globals &g, const json &docs, const std::vector<std::string> &text) {
    if (g.json) {
        std::cout << docs.dump(2) << "\n";
    } else {
        for (const auto &t : text) {
            std::cout << t;
        }
    }
}

int cmd_build(const Globals &g, const Inputs &in) {
    json docs = json::array();
    std::vector<std::string> text;
    for (const auto &s : read_specs(in)) {
        BinaryMatrix m = block_matrix(s.pair);
        auto gens = generator_matrix(m);
        std::string t = format_code_spec(s) + "\n";
        json rows = json::array();
        for (const auto &row : gens) {
            t += "# " + row.str() + "\n";
            rows.push_back(row.str());
        }
        text.push_back(t);
        json j = code_json(s, graph_code(m));
        j["generators"] = rows;
        docs.push_back(j);
    }
    emit(g, docs, text);
    return kExitOk;
}

int cmd_check(const Globals &g, const Inputs &in) {
    json docs = json::array();
    std::vector<std::string> text;
    int status = kExitOk;
    for (const auto &s : read_specs(in)) {
        AdditiveCode c = graph_code(block_matrix(s.pair));
        bool sd = is_self_dual(c);
        TypeLabel by_rule = predict_type_prop1(s.pair);
        TypeLabel by_degree = type_by_degrees(block_matrix(s.pair));
        bool agree = by_rule == by_degree;
        if (!sd || !agree) {
            status = kExitMismatch;
        }
        std::ostringstream t;
        t << s.name << ": length=" << s.pair.length() << " self_dual=" << (sd ? "yes" : "no")
          << " type=" << to_string(by_rule) << " degrees=" << to_string(by_degree) << " "
          << (sd && agree ? "OK" : "MISMATCH") << "\n";
        text.push_back(t.str());
        docs.push_back(code_json(s, c));
    }
    emit(g, docs, text);
    return status;
}

int cmd_minweight(const Globals &g, const Inputs &in, int verify_d, int find_d, bool no_symmetry, bool enumerate,
                  bool show_cert) {
    json docs = json::array();
    std::vector<std::string> text;
    int status = kExitOk;
    for (const auto &s : read_specs(in)) {
        AdditiveCode c = graph_code(block_matrix(s.pair));
        MinWeightOptions o = engine_options(g, s.pair, !no_symmetry);
        json j = code_json(s, c);
        std::ostringstream t;
        if (find_d > 0) {
            auto w = find_word_of_weight_at_most(c, find_d, 12, o);
            t << s.name << ": word of weight <= " << find_d << ": "
              << (w ? w->str() + " (weight " + std::to_string(w->weight()) + ")" : "none found") << "\n";
            j["found"] = w ? json(w->str()) : json(nullptr);
            if (!w) {
                status = kExitMismatch;
            }
        } else if (verify_d > 0) {
            auto r = verify_no_word_below(c, verify_d, o);
            auto check = check_certificate(c, r.certificate);
            t << s.name << ": no word below " << verify_d << ": " << (r.holds ? "holds" : "fails");
            if (r.counterexample) {
                t << " counterexample " << r.counterexample->str() << " (weight " << r.counterexample->weight()
                  << ")";
            }
            t << " certificate " << (check.sound ? "sound" : "UNSOUND: " + check.reason) << "\n";
            if (show_cert) {
                t << serialize_certificate(r.certificate);
            }
            j["verified_below"] = verify_d;
            j["holds"] = r.holds;
            j["certificate"] = serialize_certificate(r.certificate);
            if (!r.holds || !check.sound) {
                status = kExitMismatch;
            }
        } else {
            WeightCertificate cert = enumerate ? min_weight_enumerate(c, o) : min_weight(c, o);
            auto check = check_certificate(c, cert);
            t << s.name << ": d=" << cert.claimed_d << " method=" << to_string(cert.method) << " certificate "
              << (check.sound ? "sound" : "UNSOUND: " + check.reason) << "\n";
            if (show_cert) {
                t << serialize_certificate(cert);
            }
            j["min_weight"] = cert.claimed_d;
            j["certificate"] = serialize_certificate(cert);
            if (!check.sound) {
                status = kExitMismatch;
            }
        }
        text.push_back(t.str());
        docs.push_back(j);
    }
    emit(g, docs, text);
    return status;
}

int cmd_count(const Globals &g, const Inputs &in, const std::vector<int> &weights, bool no_symmetry) {
    if (weights.empty()) {
        throw UsageError("count needs --weights");
    }
    json docs = json::array();
    std::vector<std::string> text;
    for (const auto &s : read_specs(in)) {
        AdditiveCode c = graph_code(block_matrix(s.pair));
        CountOptions o;
        o.engine = engine_options(g, s.pair, !no_symmetry);
        json j = code_json(s, c);
        std::ostringstream t;
        for (const auto &r : count_words_of_weights(c, weights, o)) {
            t << s.name << ": A_" << r.weight << " = " << r.count << (r.exhaustive ? "" : " (lower bound)") << "\n";
            j["counts"][std::to_string(r.weight)] = {{"count", r.count}, {"exhaustive", r.exhaustive}};
        }
        text.push_back(t.str());
        docs.push_back(j);
    }
    emit(g, docs, text);
    return kExitOk;
}

int cmd_classify(const Globals &g, const Inputs &in) {
    json docs = json::array();
    std::vector<std::string> text;
    int status = kExitOk;
    uint64_t budget = g.budget ? g.budget : enumeration_budget_from_env();
    for (const auto &s : read_specs(in)) {
        BinaryMatrix m = block_matrix(s.pair);
        AdditiveCode c = graph_code(m);
        TypeLabel rule = predict_type_prop1(s.pair);
        auto cls = classify_type(c, budget);
        std::optional<TypeLabel> walked;
        try {
            walked = classify_type_enumerative(c, budget);
        } catch (const BudgetExceeded &) {
        }
        bool agree = cls == rule && (!walked || *walked == rule);
        if (!agree) {
            status = kExitMismatch;
        }
        std::ostringstream t;
        t << s.name << ": rule=" << to_string(rule) << " degrees=" << (cls ? to_string(*cls) : "unknown")
          << " enumeration=" << (walked ? to_string(*walked) : "over budget") << " " << (agree ? "OK" : "MISMATCH")
          << "\n";
        text.push_back(t.str());
        json j = code_json(s, c);
        j["type_enumerative"] = walked ? json(to_string(*walked)) : json(nullptr);
        docs.push_back(j);
    }
    emit(g, docs, text);
    return status;
}

struct SearchArgs {
    std::string mode = "exhaustive";
    size_t n = 0;
    std::string type = "any";
    uint64_t seed = 0;
    uint64_t budget = 0;
    uint64_t interval = 10000;
    int reject = 0;
    bool decimation = false;
    std::string checkpoint;
    std::string resume;
    std::string start;
};

int cmd_search(const Globals &g, const SearchArgs &a) {
    SearchConfig cfg;
    try {
        cfg.mode = parse_search_mode(a.mode);
        cfg.type_filter = parse_type_filter(a.type);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    cfg.n = a.n;
    cfg.seed = a.seed;
    cfg.budget = a.budget;
    cfg.checkpoint_interval = a.interval;
    cfg.early_reject_threshold = a.reject;
    cfg.decimation_reduction = a.decimation;
    cfg.workers = g.threads;
    if (!a.start.empty()) {
        try {
            cfg.start = parse_code_spec(a.start).pair;
        } catch (const std::invalid_argument &e) {
            throw UsageError(std::string("--start: ") + e.what());
        }
    }
    std::optional<SearchRecord> resume;
    if (!a.resume.empty()) {
        std::ifstream f(a.resume);
        if (!f) {
            throw UsageError("cannot open " + a.resume);
        }
        std::stringstream ss;
        ss << f.rdbuf();
        resume = parse_record(ss.str());
    }
    cfg.progress = [&](const SearchRecord &r) {
        std::cerr << progress_line(r) << "\n";
        if (!a.checkpoint.empty()) {
            std::ofstream(a.checkpoint) << serialize_record(r);
        }
    };
    SearchRecord r = run_search(cfg, resume);
    if (g.json) {
        json j;
        j["mode"] = to_string(r.mode);
        j["n"] = r.n;
        j["best_d"] = r.best_d;
        j["best_type_i"] = r.best_type_i;
        j["best_type_ii"] = r.best_type_ii;
        j["examined"] = r.examined;
        j["complete"] = r.complete;
        j["witnesses"] = json::array();
        for (size_t i = 0; i < r.witnesses.size(); i++) {
            j["witnesses"].push_back(format_code_spec({"w" + std::to_string(i + 1), r.witnesses[i]}));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << serialize_record(r);
    }
    return kExitOk;
}

int cmd_catalog_list(const Globals &g) {
    json docs = json::array();
    std::vector<std::string> text;
    for (const auto &e : catalog()) {
        text.push_back(format_code_spec({e.name, e.pair}) + " d=" + std::to_string(e.claimed_d) +
                       " type=" + (e.claimed_type ? to_string(*e.claimed_type) : "unspecified") +
                       " tier=" + to_string(e.tier()) + "\n");
        docs.push_back({{"name", e.name},
                        {"n", e.pair.order()},
                        {"length", e.pair.length()},
                        {"claimed_d", e.claimed_d},
                        {"tier", to_string(e.tier())}});
    }
    emit(g, docs, text);
    return kExitOk;
}

int cmd_catalog_verify(const Globals &g, const std::vector<std::string> &names, bool all, const std::string &tier_s,
                       bool counts) {
    Tier tier;
    try {
        tier = parse_tier(tier_s);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    std::vector<const CatalogEntry *> todo;
    if (all) {
        for (const auto &e : catalog()) {
            if (int(e.tier()) <= int(tier)) {
                todo.push_back(&e);
            }
        }
    } else {
        if (names.empty()) {
            throw UsageError("catalog verify needs --name or --all");
        }
        for (const auto &n : names) {
            try {
                todo.push_back(&catalog_lookup(n));
            } catch (const std::out_of_range &e) {
                throw UsageError(e.what());
            }
        }
    }
    json docs = json::array();
    int status = kExitOk;
    for (const CatalogEntry *e : todo) {
        AdditiveCode c = code_of(e->pair);
        MinWeightOptions o = engine_options(g, e->pair, true);
        CodeSpec s{e->name, e->pair};
        json j = code_json(s, c);
        bool ok = j["self_dual"].get<bool>();
        TypeLabel type = predict_type_prop1(e->pair);
        if (e->claimed_type) {
            auto cls = classify_type(c);
            ok = ok && cls && *cls == *e->claimed_type && type == *e->claimed_type;
        }
        std::ostringstream t;
        t << e->name << ": length=" << e->pair.length();
        WeightCertificate cert;
        if (e->tier() == Tier::Long) {
            // Upper bound from a witness, lower bound from the certificate.
            auto w = find_word_of_weight_at_most(c, e->claimed_d, 12, o);
            auto v = verify_no_word_below(c, e->claimed_d, o);
            bool sound = check_certificate(c, v.certificate).sound;
            bool exact = w && int(w->weight()) == e->claimed_d && v.holds && sound;
            if (exact) {
                cert = v.certificate;
                cert.exact = true;
                cert.witness = *w;
            }
            ok = ok && exact;
            t << " d=" << (exact ? std::to_string(e->claimed_d) : "?");
            j["min_weight"] = exact ? json(e->claimed_d) : json(nullptr);
        } else {
            cert = min_weight(c, o);
            ok = ok && cert.claimed_d == e->claimed_d && check_certificate(c, cert).sound;
            t << " d=" << cert.claimed_d;
            j["min_weight"] = cert.claimed_d;
        }
        j["certificate"] = serialize_certificate(cert);
        t << " type=" << to_string(type) << (e->claimed_type ? "" : " (computed)");
        if (ok && cert.exact) {
            t << " quantum=" << quantum_params(c, cert).str();
        }
        bool want_counts = !e->claimed_counts.empty() && (counts || tier == Tier::Long);
        if (want_counts) {
            std::vector<int> ws;
            for (const auto &[w, n] : e->claimed_counts) {
                ws.push_back(w);
            }
            CountOptions co;
            co.engine = o;
            for (const auto &r : count_words_of_weights(c, ws, co)) {
                bool match = r.exhaustive && r.count == e->claimed_counts.at(r.weight);
                ok = ok && match;
                t << " A_" << r.weight << "=" << r.count << (r.exhaustive ? "" : "(partial)");
                j["counts"][std::to_string(r.weight)] = {{"count", r.count}, {"exhaustive", r.exhaustive}};
            }
        }
        t << " " << (ok ? "PASS" : "FAIL") << "\n";
        if (!ok) {
            status = kExitMismatch;
        }
        j["pass"] = ok;
        docs.push_back(j);
        if (!g.json) {
            std::cout << t.str() << std::flush;
        }
    }
    if (g.json) {
        std::cout << docs.dump(2) << "\n";
    }
    return status;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"circpair: self-dual additive GF(4) codes from pairs of circulants"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--threads", g.threads, "worker threads (default: CIRCPAIR_THREADS or all cores)");
    app.add_option("--budget", g.budget, "enumeration budget (default: CIRCPAIR_ENUM_BUDGET or 2^28)");

    Inputs in;
    auto *build = app.add_subcommand("build", "dump the generator matrix of each pair");
    add_inputs(build, in);
    auto *check = app.add_subcommand("check", "self-duality and type of each pair");
    add_inputs(check, in);
    auto *classify = app.add_subcommand("classify", "type by rule, degrees and enumeration");
    add_inputs(classify, in);

    auto *mw = app.add_subcommand("minweight", "minimum weight with a certificate");
    add_inputs(mw, in);
    int verify_d = 0, find_d = 0;
    bool no_symmetry = false, enumerate = false, show_cert = false;
    mw->add_option("--verify", verify_d, "only prove that no word is lighter than D");
    mw->add_option("--find", find_d, "only look for a word of weight at most D");
    mw->add_flag("--no-symmetry", no_symmetry, "use greedy windows instead of the circulant automorphisms");
    mw->add_flag("--enumerate", enumerate, "walk every codeword");
    mw->add_flag("--certificate", show_cert, "print the certificate");

    auto *count = app.add_subcommand("count", "number of codewords of given weights");
    add_inputs(count, in);
    std::vector<int> weights;
    count->add_option("-w,--weights", weights, "weights to count")->delimiter(',');
    count->add_flag("--no-symmetry", no_symmetry, "use greedy windows instead of the circulant automorphisms");

    auto *search = app.add_subcommand("search", "search pairs (or single circulants) for large minimum weight");
    SearchArgs sa;
    search->add_option("--mode", sa.mode, "exhaustive, random or single")->capture_default_str();
    search->add_option("--order", sa.n, "circulant order n")->required();
    search->add_option("--type", sa.type, "any, TypeI or TypeII")->capture_default_str();
    search->add_option("--seed", sa.seed, "random seed");
    search->add_option("--candidates", sa.budget, "candidates to examine (0: whole space)");
    search->add_option("--checkpoint-interval", sa.interval, "candidates per checkpoint")->capture_default_str();
    search->add_option("--reject-below", sa.reject, "ignore candidates with smaller minimum weight");
    search->add_flag("--decimation", sa.decimation, "skip pairs equivalent under decimation and shifts of B");
    search->add_option("--checkpoint", sa.checkpoint, "write the record here at each checkpoint");
    search->add_option("--resume", sa.resume, "continue from a saved record");
    search->add_option("--start", sa.start, "random mode: starting pair as a code-spec line");

    auto *cat = app.add_subcommand("catalog", "embedded catalog of codes");
    cat->require_subcommand(1);
    auto *cat_list = cat->add_subcommand("list", "list catalog entries");
    auto *cat_verify = cat->add_subcommand("verify", "verify catalog claims");
    std::vector<std::string> names;
    bool all = false, counts = false;
    std::string tier = "fast";
    cat_verify->add_option("--name", names, "entry name");
    cat_verify->add_flag("--all", all, "every entry up to the tier");
    cat_verify->add_option("--tier", tier, "fast, full or long")->capture_default_str();
    cat_verify->add_flag("--counts", counts, "also verify the claimed weight counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*build) return cmd_build(g, in);
        if (*check) return cmd_check(g, in);
        if (*classify) return cmd_classify(g, in);
        if (*mw) return cmd_minweight(g, in, verify_d, find_d, no_symmetry, enumerate, show_cert);
        if (*count) return cmd_count(g, in, weights, no_symmetry);
        if (*search) return cmd_search(g, sa);
        if (*cat_list) return cmd_catalog_list(g);
        if (*cat_verify) return cmd_catalog_verify(g, names, all, tier, counts);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExceeded &e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "hint: drop --enumerate, or raise --budget / CIRCPAIR_ENUM_BUDGET\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
