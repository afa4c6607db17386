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

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

#include "circpair/minweight.h"

namespace circpair {

namespace {

bool is_permutation_of(const Permutation &p, size_t n) {
    if (p.size() != n) {
        return false;
    }
    std::vector<bool> seen(n, false);
    for (uint32_t x : p) {
        if (x >= n || seen[x]) {
            return false;
        }
        seen[x] = true;
    }
    return true;
}

CertificateCheck fail(std::string reason) { return {false, std::move(reason)}; }

size_t window_rank(const AdditiveCode &c, const std::vector<uint32_t> &window) {
    std::vector<F4Vector> rows;
    for (const auto &b : c.basis()) {
        F4Vector p(window.size());
        for (size_t i = 0; i < window.size(); i++) {
            p.set(i, b.get(window[i]));
        }
        rows.push_back(p);
    }
    return gf2_rank(std::move(rows));
}

std::string join_coords(const std::vector<uint32_t> &v) {
    if (v.empty()) {
        return "-";
    }
    std::string s;
    for (size_t i = 0; i < v.size(); i++) {
        s += (i ? "," : "") + std::to_string(v[i] + 1);
    }
    return s;
}

std::vector<uint32_t> parse_coords(const std::string &s, size_t length) {
    std::vector<uint32_t> out;
    if (s == "-") {
        return out;
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        unsigned long v = std::stoul(tok, &pos);
        if (pos != tok.size() || v == 0 || v > length) {
            throw std::invalid_argument("certificate: bad coordinate '" + tok + "'");
        }
        out.push_back(uint32_t(v - 1));
    }
    return out;
}

}  // namespace

F4Vector apply_permutation(const Permutation &perm, const F4Vector &x) {
    if (!is_permutation_of(perm, x.size())) {
        throw std::invalid_argument("apply_permutation: not a permutation of the coordinates");
    }
    F4Vector y(x.size());
    for (size_t i = 0; i < x.size(); i++) {
        y.set(perm[i], x.get(i));
    }
    return y;
}

bool is_automorphism(const AdditiveCode &c, const Permutation &perm) {
    if (!is_permutation_of(perm, c.length())) {
        return false;
    }
    return std::all_of(c.basis().begin(), c.basis().end(),
                       [&](const F4Vector &b) { return c.contains(apply_permutation(perm, b)); });
}

SymmetryPlan circulant_symmetry(const CirculantPair &p) {
    uint32_t n = uint32_t(p.order());
    SymmetryPlan s;
    s.rotation.resize(2 * n);
    s.swap.resize(2 * n);
    for (uint32_t i = 0; i < n; i++) {
        s.cycle.push_back(i);
        s.partner.push_back(n + i);
        s.rotation[i] = (i + 1) % n;
        s.rotation[n + i] = n + (i + 1) % n;
        uint32_t neg = (n - i) % n;
        s.swap[i] = n + neg;
        s.swap[n + i] = neg;
    }
    return s;
}

CertificateCheck check_certificate(const AdditiveCode &c, const WeightCertificate &cert) {
    size_t n = c.length();
    if (cert.witness) {
        const F4Vector &w = *cert.witness;
        if (w.size() != n) {
            return fail("witness has the wrong length");
        }
        if (w.is_zero() || !c.contains(w)) {
            return fail("witness is not a nonzero codeword");
        }
        if (cert.exact && int(w.weight()) != cert.claimed_d) {
            return fail("witness weight " + std::to_string(w.weight()) + " differs from the claim");
        }
    } else if (cert.exact) {
        return fail("exact claim without a witness");
    }

    if (cert.method == CertificateMethod::FullEnumeration) {
        if (c.rank() >= 63 || cert.enumerated != (uint64_t{1} << c.rank()) - 1) {
            return fail("full enumeration did not cover every nonzero codeword");
        }
        if (!cert.exact) {
            return fail("full enumeration must give an exact claim");
        }
        return {true, "full enumeration of " + std::to_string(cert.enumerated) + " codewords"};
    }

    for (size_t a = 0; a < cert.automorphisms.size(); a++) {
        if (!is_automorphism(c, cert.automorphisms[a])) {
            return fail("automorphism " + std::to_string(a) + " does not preserve the code");
        }
    }
    std::vector<int> owner(n, -1);
    long long bound = 0;
    bool exhausted = false;
    for (size_t k = 0; k < cert.passes.size(); k++) {
        const BoundPass &p = cert.passes[k];
        std::string tag = "pass " + std::to_string(k) + ": ";
        for (uint32_t i : p.window) {
            if (i >= n) {
                return fail(tag + "coordinate out of range");
            }
            if (owner[i] != -1) {
                return fail(tag + "windows overlap");
            }
            owner[i] = int(k);
        }
        if (int(window_rank(c, p.window)) != p.window_rank) {
            return fail(tag + "window rank does not match the code");
        }
        if (p.contribution != p.radius + 1) {
            return fail(tag + "contribution must be radius + 1");
        }
        if (p.via_automorphism >= 0) {
            if (size_t(p.via_automorphism) >= cert.automorphisms.size() || p.source_form < 0 ||
                size_t(p.source_form) >= cert.passes.size() || size_t(p.source_form) == k) {
                return fail(tag + "bad automorphism reference");
            }
            const BoundPass &src = cert.passes[size_t(p.source_form)];
            if (src.via_automorphism >= 0) {
                return fail(tag + "source pass is itself credited");
            }
            if (src.radius != p.radius) {
                return fail(tag + "radius differs from the source pass");
            }
            const Permutation &g = cert.automorphisms[size_t(p.via_automorphism)];
            std::vector<uint32_t> image;
            for (uint32_t i : src.window) {
                image.push_back(g[i]);
            }
            std::vector<uint32_t> mine = p.window;
            std::sort(image.begin(), image.end());
            std::sort(mine.begin(), mine.end());
            if (image != mine) {
                return fail(tag + "automorphism does not map the source window onto this window");
            }
        }
        if (p.orbit_automorphism >= 0) {
            if (size_t(p.orbit_automorphism) >= cert.automorphisms.size()) {
                return fail(tag + "bad orbit automorphism reference");
            }
            const Permutation &g = cert.automorphisms[size_t(p.orbit_automorphism)];
            size_t m = p.window.size();
            for (size_t i = 0; i < m; i++) {
                if (g[p.window[i]] != p.window[(i + 1) % m]) {
                    return fail(tag + "window is not a cycle of the orbit automorphism");
                }
            }
            for (uint32_t i = 0; i < n; i++) {
                uint32_t x = i;
                for (size_t s = 0; s < m; s++) {
                    x = g[x];
                }
                if (x != i) {
                    return fail(tag + "orbit automorphism order differs from the cycle length");
                }
            }
        }
        if (p.radius >= int(p.window.size()) && p.radius >= 0) {
            exhausted = true;
        }
        bound += p.contribution;
    }
    if (cert.claimed_d <= 1) {
        return {true, "claim of at most 1 holds for any nonzero code"};
    }
    if (exhausted) {
        return {true, "a window was exhausted; every codeword was enumerated"};
    }
    if (bound < cert.claimed_d) {
        return fail("lower bound " + std::to_string(bound) + " is below the claim " + std::to_string(cert.claimed_d));
    }
    return {true, "lower bound " + std::to_string(bound) + " from " + std::to_string(cert.passes.size()) + " windows"};
}

std::string serialize_certificate(const WeightCertificate &cert) {
    std::ostringstream out;
    out << "method " << to_string(cert.method) << "\n";
    out << "claimed_d " << cert.claimed_d << "\n";
    out << "exact " << (cert.exact ? 1 : 0) << "\n";
    out << "enumerated " << cert.enumerated << "\n";
    out << "witness " << (cert.witness ? cert.witness->str() : "-") << "\n";
    for (const auto &g : cert.automorphisms) {
        out << "automorphism " << join_coords(std::vector<uint32_t>(g.begin(), g.end())) << "\n";
    }
    for (const auto &p : cert.passes) {
        out << "pass form=" << p.form_index << " rank=" << p.window_rank << " radius=" << p.radius
            << " contribution=" << p.contribution << " via=" << p.via_automorphism << " source=" << p.source_form
            << " orbit=" << p.orbit_automorphism << " window=" << join_coords(p.window) << "\n";
    }
    return out.str();
}

WeightCertificate parse_certificate(const std::string &text, size_t length) {
    WeightCertificate cert;
    std::istringstream in(text);
    std::string line;
    bool seen_method = false;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        try {
            if (key == "method") {
                std::string m;
                ls >> m;
                if (m == "full_enumeration") {
                    cert.method = CertificateMethod::FullEnumeration;
                } else if (m == "windowed_bound") {
                    cert.method = CertificateMethod::WindowedBound;
                } else {
                    throw std::invalid_argument("unknown method '" + m + "'");
                }
                seen_method = true;
            } else if (key == "claimed_d") {
                ls >> cert.claimed_d;
            } else if (key == "exact") {
                int e = 0;
                ls >> e;
                cert.exact = e != 0;
            } else if (key == "enumerated") {
                ls >> cert.enumerated;
            } else if (key == "witness") {
                std::string w;
                ls >> w;
                if (w != "-") {
                    if (w.size() != length) {
                        throw std::invalid_argument("witness length mismatch");
                    }
                    cert.witness = F4Vector::from_string(w);
                }
            } else if (key == "automorphism") {
                std::string s;
                ls >> s;
                auto g = parse_coords(s, length);
                if (g.size() != length) {
                    throw std::invalid_argument("automorphism length mismatch");
                }
                cert.automorphisms.push_back(Permutation(g.begin(), g.end()));
            } else if (key == "pass") {
                BoundPass p;
                std::string field;
                while (ls >> field) {
                    auto eq = field.find('=');
                    if (eq == std::string::npos) {
                        throw std::invalid_argument("malformed pass field '" + field + "'");
                    }
                    std::string k = field.substr(0, eq), v = field.substr(eq + 1);
                    if (k == "window") {
                        p.window = parse_coords(v, length);
                        continue;
                    }
                    int x = std::stoi(v);
                    if (k == "form") p.form_index = x;
                    else if (k == "rank") p.window_rank = x;
                    else if (k == "radius") p.radius = x;
                    else if (k == "contribution") p.contribution = x;
                    else if (k == "via") p.via_automorphism = x;
                    else if (k == "source") p.source_form = x;
                    else if (k == "orbit") p.orbit_automorphism = x;
                    else throw std::invalid_argument("unknown pass field '" + k + "'");
                }
                cert.passes.push_back(std::move(p));
            } else {
                throw std::invalid_argument("unknown key '" + key + "'");
            }
            if (ls.fail() && !ls.eof()) {
                throw std::invalid_argument("malformed value");
            }
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("certificate line '" + line + "': " + e.what());
        } catch (const std::out_of_range &) {
            throw std::invalid_argument("certificate line '" + line + "': value out of range");
        }
    }
    if (!seen_method) {
        throw std::invalid_argument("certificate: missing method line");
    }
    return cert;
}

}  // namespace circpair
