#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "codes.hpp"
#include "diagrams.hpp"
#include "kauffman.hpp"
#include "parallel.hpp"
#include "poly.hpp"

namespace tricross {

class ReferenceError : public std::runtime_error {
public:
    ReferenceError(std::size_t line, const std::string& msg)
        : std::runtime_error("reference line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Crossing number read off a standard name: 6_1, 8^3_4, K11n38, L10n7.
inline int crossing_number_of(const std::string& name) {
    std::size_t i = (!name.empty() && (name[0] == 'K' || name[0] == 'L')) ? 1 : 0;
    std::size_t j = i;
    while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
    if (j == i) return -1;
    return std::stoi(name.substr(i, j - i));
}

/// Table order: digit runs compare as numbers, so 8_3 < 8_12 < 10_1.
inline bool name_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i])), db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            long x = std::stol(a.substr(i, i2 - i)), y = std::stol(b.substr(j, j2 - j));
            if (x != y) return x < y;
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

/// Mirror images are merged: the key is the smaller of Φ and its mirror.
inline LaurentPoly2 mirror_key(const LaurentPoly2& p) {
    auto m = mirror_poly(p);
    return m < p ? m : p;
}

/// Φ of the k-component crossingless unlink.
inline LaurentPoly2 unlink_poly(int k) { return LaurentPoly2::delta().pow(k - 1); }

struct ReferenceEntry {
    std::string name;
    int components = 0;
    DecoratedPd pd;
    LaurentPoly2 poly;  // F under the stored orientation
    LaurentPoly2 phi;   // orientation-free a^(-self writhe) Λ, used for matching
    int crossing_number = -1;
};

struct ReferenceTable {
    std::vector<ReferenceEntry> entries;
    std::map<std::pair<LaurentPoly2, int>, std::vector<int>> index;
    std::vector<std::vector<std::string>> collisions;

    std::vector<int> match(const LaurentPoly2& phi, int components) const {
        auto it = index.find({mirror_key(phi), components});
        return it == index.end() ? std::vector<int>{} : it->second;
    }

    const ReferenceEntry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }
};

namespace detail {
inline std::vector<std::string> csv_fields(const std::string& line) {
    std::vector<std::string> out(1);
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') quoted = !quoted;
        else if (ch == ',' && !quoted) out.emplace_back();
        else if (ch != '\r') out.back() += ch;
    }
    return out;
}

inline std::vector<int> parse_signs(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s + " ") {
        if (ch == '-' || ch == '+' || std::isdigit(static_cast<unsigned char>(ch))) cur += ch;
        else if (!cur.empty()) {
            out.push_back(std::stoi(cur));
            cur.clear();
        }
    }
    return out;
}
}  // namespace detail

/// Read `name,components,pd[,signs]`.  Without a signs column each component
/// is oriented along increasing labels.  Polynomials are always recomputed.
inline ReferenceTable load_reference(std::istream& in, unsigned threads = 1) {
    ReferenceTable t;
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) throw ReferenceError(0, "empty file");
    ++lineno;
    auto head = detail::csv_fields(line);
    if (head.size() < 3 || head[0] != "name" || head[1] != "components" || head[2] != "pd")
        throw ReferenceError(1, "header must start with name,components,pd");
    std::vector<std::size_t> lines;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        auto f = detail::csv_fields(line);
        if (f.size() < 3) throw ReferenceError(lineno, "expected at least 3 fields");
        ReferenceEntry e;
        e.name = f[0];
        e.crossing_number = crossing_number_of(e.name);
        try {
            e.components = std::stoi(f[1]);
            auto pd = parse_pd(f[2]);
            if (f.size() > 3 && !f[3].empty()) {
                e.pd.pd = pd;
                e.pd.signs = detail::parse_signs(f[3]);
                check_decoration(e.pd);
            } else {
                e.pd = decorate_consecutive(pd);
            }
        } catch (const ParseError& err) {
            throw ReferenceError(lineno, e.name + ": " + err.what());
        } catch (const std::exception& err) {
            throw ReferenceError(lineno, e.name + ": " + err.what());
        }
        if (component_count(e.pd) != e.components)
            throw ReferenceError(lineno, e.name + ": PD has " + std::to_string(component_count(e.pd)) +
                                             " components, row says " + std::to_string(e.components));
        t.entries.push_back(std::move(e));
        lines.push_back(lineno);
    }
    auto polys = parallel_map(t.entries.size(), threads, [&](std::size_t i) {
        const auto& d = t.entries[i].pd;
        return std::pair{kauffman_f(d), kauffman_unoriented(d)};
    });
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        t.entries[i].poly = polys[i].first;
        t.entries[i].phi = polys[i].second;
        t.index[{mirror_key(polys[i].second), t.entries[i].components}].push_back(static_cast<int>(i));
    }
    for (const auto& [key, ids] : t.index)
        if (ids.size() > 1) {
            std::vector<std::string> names;
            for (int i : ids) names.push_back(t.entries[i].name);
            t.collisions.push_back(std::move(names));
        }
    return t;
}

inline ReferenceTable load_reference(const std::string& path, unsigned threads = 1) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open reference file " + path);
    return load_reference(in, threads);
}

struct Identification {
    LaurentPoly2 phi;
    int components = 0;
    bool trivial = false;           // unknot or crossingless unlink
    std::vector<int> candidates;    // reference indices after the tie-breaker
    std::vector<int> raw;           // before it
    int crossing_bound = -1;        // set when the tie-breaker ran
};

/// Match a classical diagram.  When several names share the polynomial, the
/// crossing count after R1/R2 simplification bounds the crossing number and
/// removes candidates above it; whatever remains is reported, never guessed.
inline Identification identify(const DecoratedPd& d, const ReferenceTable& ref) {
    Identification r;
    r.phi = kauffman_unoriented(d);
    r.components = component_count(d);
    if (r.phi == unlink_poly(r.components)) {
        r.trivial = true;
        return r;
    }
    r.raw = ref.match(r.phi, r.components);
    r.candidates = r.raw;
    if (r.raw.size() > 1) {
        r.crossing_bound = static_cast<int>(simplify_pd(d).num_crossings());
        std::vector<int> keep;
        for (int i : r.raw)
            if (ref.entries[i].crossing_number <= r.crossing_bound) keep.push_back(i);
        if (!keep.empty()) r.candidates = keep;
    }
    return r;
}

struct NameRecord {
    std::string name;
    int components = 0;
    int c3 = 0;
    std::string witness;
    bool ambiguous = false;
    std::vector<std::string> shared_with;
};

struct UnmatchedPoly {
    std::string phi;
    int components = 0;
    long diagrams = 0;
};

struct LevelSummary {
    int n = 0;
    long projections = 0;
    long diagrams = 0;   // |TD_n|
    long evaluated = 0;  // one of each T<->B mirror pair
    long trivial = 0;
    long tie_breaks = 0;
    std::vector<std::string> knots, links;  // names first seen at this n
    std::vector<UnmatchedPoly> unmatched;
};

struct ClassificationResult {
    std::vector<NameRecord> records;  // by c3, then reference order
    std::vector<LevelSummary> levels;

    const NameRecord* find(const std::string& name) const {
        for (const auto& r : records)
            if (r.name == name) return &r;
        return nullptr;
    }
};

namespace detail {
// Index into level_permutations() of the labeling with T and B exchanged.
inline int tb_swapped(int perm) {
    auto p = level_permutations()[perm];
    for (auto& l : p) l = static_cast<Level>(2 - static_cast<int>(l));
    const auto& all = level_permutations();
    return static_cast<int>(std::find(all.begin(), all.end(), p) - all.begin());
}
}  // namespace detail

/// Identify every diagram over Th_1..Th_N (projections[n-1] is Th_n) and
/// give each name its first n.  Exchanging T and B everywhere gives the
/// mirror image, whose polynomial matches the same names, so only the
/// labeling of each such pair whose first crossing comes earlier in
/// level_permutations() order is evaluated.
inline ClassificationResult classify(const std::vector<std::vector<SPdCode>>& projections, const ReferenceTable& ref,
                                     unsigned threads = 1) {
    struct DiagramHit {
        Identification id;
        std::vector<int> digits;
    };
    ClassificationResult res;
    std::map<int, int> first_seen;  // reference index -> position in res.records
    for (std::size_t level = 0; level < projections.size(); ++level) {
        const int n = static_cast<int>(level) + 1;
        const auto& th = projections[level];
        LevelSummary sum;
        sum.n = n;
        sum.projections = static_cast<long>(th.size());
        long total = 1;
        for (int i = 0; i < n; ++i) total *= 6;
        sum.diagrams = total * sum.projections;
        auto per_projection = parallel_map(th.size(), threads, [&](std::size_t pi) {
            std::vector<DiagramHit> hits;
            std::vector<int> digit(n, 0);
            for (long k = 0; k < total; ++k) {
                long x = k;
                for (int c = n - 1; c >= 0; --c) {
                    digit[c] = static_cast<int>(x % 6);
                    x /= 6;
                }
                if (detail::tb_swapped(digit[0]) < digit[0]) continue;
                TripleDiagram d{th[pi], {}};
                for (int c = 0; c < n; ++c) d.levels.push_back(level_permutations()[digit[c]]);
                hits.push_back({identify(expand(d), ref), digit});
            }
            return hits;
        });
        std::map<std::pair<LaurentPoly2, int>, long> unmatched;
        for (std::size_t pi = 0; pi < th.size(); ++pi)
            for (const auto& h : per_projection[pi]) {
                ++sum.evaluated;
                if (h.id.trivial) {
                    ++sum.trivial;
                    continue;
                }
                if (h.id.crossing_bound >= 0) ++sum.tie_breaks;
                if (h.id.candidates.empty()) {
                    ++unmatched[{mirror_key(h.id.phi), h.id.components}];
                    continue;
                }
                for (int idx : h.id.candidates) {
                    auto it = first_seen.find(idx);
                    if (it != first_seen.end()) {
                        if (h.id.candidates.size() > 1) res.records[it->second].ambiguous = true;
                        continue;
                    }
                    const auto& e = ref.entries[idx];
                    NameRecord r;
                    r.name = e.name;
                    r.components = e.components;
                    r.c3 = n;
                    TripleDiagram d{th[pi], {}};
                    for (int c = 0; c < n; ++c) d.levels.push_back(level_permutations()[h.digits[c]]);
                    r.witness = serialize(name_crossings(d));
                    r.ambiguous = h.id.candidates.size() > 1;
                    for (int other : h.id.raw)
                        if (other != idx) r.shared_with.push_back(ref.entries[other].name);
                    first_seen[idx] = static_cast<int>(res.records.size());
                    res.records.push_back(std::move(r));
                }
            }
        for (const auto& [key, count] : unmatched) sum.unmatched.push_back({key.first.to_string(), key.second, count});
        res.levels.push_back(std::move(sum));
    }
    std::stable_sort(res.records.begin(), res.records.end(), [](const NameRecord& a, const NameRecord& b) {
        if (a.c3 != b.c3) return a.c3 < b.c3;
        return name_less(a.name, b.name);
    });
    for (const auto& r : res.records) {
        auto& lv = res.levels[r.c3 - 1];
        (r.components == 1 ? lv.knots : lv.links).push_back(r.name);
    }
    return res;
}

struct C2Report {
    int n = 0;
    int th0 = 0;
    int single_component = 0;
};

/// How many loop-free minimal projections have one component.  A knot with
/// c2 = 3 c3 = 3n needs such a projection.
inline C2Report check_c2_3c3(int n, const std::vector<SPdCode>& th0) {
    C2Report r;
    r.n = n;
    r.th0 = static_cast<int>(th0.size());
    for (const auto& p : th0)
        if (components(p).component_count() == 1) ++r.single_component;
    return r;
}

}  // namespace tricross
