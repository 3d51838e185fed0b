#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "diagrams.hpp"
#include "generate.hpp"
#include "identify.hpp"
#include "kauffman.hpp"
#include "maps.hpp"

// Checks shared by the acceptance binary and `tricross verify-tables`.

namespace tricross {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline bool all_pass(const std::vector<CheckResult>& v) {
    return std::all_of(v.begin(), v.end(), [](const CheckResult& c) { return c.pass; });
}

// ---------------------------------------------------------------------------
// published data

/// Published catalog sizes; -1 where no count is given.
struct EnumerationCounts {
    int n;
    long sh, ta, tb, gr, th0, th, td;
};

inline const std::vector<EnumerationCounts>& published_counts() {
    static const std::vector<EnumerationCounts> rows{
        {2, 2, 14, 4, 2, 1, 3, 108},
        {3, 9, 108, 18, 4, 1, 9, 1944},
        {4, 62, 1312, 222, 20, 5, 57, 73872},
        {5, 803, 29198, -1, -1, 12, -1, -1},
    };
    return rows;
}

inline long diagram_count(const ProjectionCatalogs& p) {
    long t = static_cast<long>(p.th.th.size());
    for (int i = 0; i < p.n; ++i) t *= 6;
    return t;
}

inline std::vector<CheckResult> check_counts(const ProjectionCatalogs& p) {
    std::vector<CheckResult> out;
    auto it = std::find_if(published_counts().begin(), published_counts().end(),
                           [&](const EnumerationCounts& r) { return r.n == p.n; });
    if (it == published_counts().end()) return out;
    auto add = [&](const std::string& col, long want, std::size_t got) {
        if (want < 0) return;
        out.push_back({col, static_cast<long>(got) == want,
                       "got " + std::to_string(got) + ", expected " + std::to_string(want)});
    };
    const std::string n = std::to_string(p.n);
    add("Sh_" + std::to_string(2 * p.n), it->sh, p.sh.size());
    add("Ta_" + n, it->ta, p.ta.size());
    add("Tb_" + n, it->tb, p.tb.size());
    add("Gr_" + n, it->gr, p.gr.size());
    add("Th0_" + n, it->th0, p.th.th0.size());
    add("Th_" + n, it->th, p.th.th.size());
    add("TD_" + n, it->td, static_cast<std::size_t>(diagram_count(p)));
    return out;
}

struct MinimalRow {
    std::string name, kind, code;
};

struct C3Row {
    std::string name, kind;
    int c3 = 0;
};

namespace detail {
inline std::vector<std::vector<std::string>> read_csv_rows(const std::string& path, std::size_t columns) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<std::string>> out;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        auto f = csv_fields(line);
        if (f.size() != columns) throw ReferenceError(lineno, "expected " + std::to_string(columns) + " fields");
        out.push_back(std::move(f));
    }
    return out;
}
}  // namespace detail

/// `name,kind,sPD`
inline std::vector<MinimalRow> load_minimal_rows(const std::string& path) {
    std::vector<MinimalRow> out;
    for (auto& f : detail::read_csv_rows(path, 3)) out.push_back({f[0], f[1], f[2]});
    return out;
}

/// `name,kind,c3`
inline std::vector<C3Row> load_c3_rows(const std::string& path) {
    std::vector<C3Row> out;
    for (auto& f : detail::read_csv_rows(path, 3)) out.push_back({f[0], f[1], std::stoi(f[2])});
    return out;
}

// ---------------------------------------------------------------------------
// minimal diagrams and worked examples

/// Parse, check the naming round trip and the renumbering up to
/// isomorphism, and identify the expansion.
inline CheckResult check_minimal_row(const MinimalRow& row, const ReferenceTable& ref) {
    CheckResult r{row.name, false, ""};
    try {
        auto code = parse_spd(row.code);
        auto d = diagram_from_code(code);
        auto back = name_crossings(d);
        for (std::size_t c = 0; c < code.size(); ++c)
            if (back.crossings[c].name != code.crossings[c].name) {
                r.detail = "crossing " + std::to_string(c + 1) + " renames to " + to_string(back.crossings[c].name);
                return r;
            }
        if (!isomorphic(map_from_code(renumber(d.projection)), map_from_code(d.projection), false)) {
            r.detail = "renumbered code is not isomorphic to the original";
            return r;
        }
        auto id = identify(expand(d), ref);
        if (id.trivial) {
            r.detail = "expansion is a trivial " + std::to_string(id.components) + "-component diagram";
            return r;
        }
        std::string names;
        for (int i : id.candidates) {
            names += (names.empty() ? "" : " ") + ref.entries[i].name;
            if (ref.entries[i].name == row.name) r.pass = true;
        }
        r.detail = names.empty() ? "no reference match" : "identifies as " + names;
    } catch (const std::exception& e) {
        r.detail = e.what();
    }
    return r;
}

inline CheckResult check_contraction_example() {
    const auto shadow = parse_pd(
        "PD[X[1,4,2,5],X[3,8,4,9],X[12,6,13,5],X[13,16,14,1],X[9,14,10,15],X[15,10,16,11],X[6,12,7,11],X[7,2,8,3]]");
    const auto want =
        parse_spd("sPD[eX[1,4,2,12,6,13],eX[4,9,3,3,7,2],eX[15,10,16,6,12,7],eX[1,13,16,10,15,9]]");
    auto got = contract(shadow, {5, 8, 11, 14});
    const auto k = components(got).component_count();
    return {"contraction of the 8-crossing knot shadow", got == want && k == 3,
            serialize(got) + ", " + std::to_string(k) + " components"};
}

/// P2 lists every tuple of P1 starting one position later, so dart 6k+p of
/// P1 sits at 6k+p-1 in P2.
struct RotatedPair {
    SPdCode p1, p2;
    Permutation s;
};

inline RotatedPair rotated_pair(const SPdCode& p1) {
    RotatedPair r{p1, p1, {}};
    for (auto& x : r.p2.crossings) x.edges = rotate_left(x.edges, 1);
    for (int k = 0; k < static_cast<int>(p1.size()); ++k)
        for (int p = 0; p < 6; ++p) r.s.push_back(6 * k + (p + 5) % 6);
    return r;
}

/// s∘rot1 = rot2∘s and s∘opp1 = opp2∘s.
inline bool is_conjugator(const CombMap& m1, const CombMap& m2, const Permutation& s) {
    if (s.size() != static_cast<std::size_t>(m1.num_darts()) || m1.num_darts() != m2.num_darts()) return false;
    for (int d = 0; d < m1.num_darts(); ++d)
        if (s[m1.rot[d]] != m2.rot[s[d]] || s[m1.opp[d]] != m2.opp[s[d]]) return false;
    return true;
}

inline CheckResult check_rotated_pair(const SPdCode& p1, const std::string& expected_cycles) {
    auto pr = rotated_pair(p1);
    auto m1 = map_from_code(pr.p1), m2 = map_from_code(pr.p2);
    CheckResult r{"isotopic pair " + serialize(pr.p1) + " ~ " + serialize(pr.p2), false, ""};
    const bool conj = is_conjugator(m1, m2, pr.s);
    const bool cycles = cycle_notation(pr.s) == expected_cycles;
    auto w = isomorphic(m1, m2, false);
    // the found witness differs from s by an automorphism of P1
    const bool coset = w && is_conjugator(m1, m1, compose(inverse(pr.s), *w));
    r.pass = conj && cycles && coset;
    r.detail = "s = " + cycle_notation(pr.s) + (conj ? " conjugates" : " does not conjugate") +
               ", found witness " + (w ? cycle_notation(*w) : std::string("none")) +
               (coset ? " (in s.Aut)" : " (outside s.Aut)");
    return r;
}

// ---------------------------------------------------------------------------
// isomorphism oracle

/// A random connected planar map with the given number of edges, grown by
/// leaves and face chords (loops and multi-edges allowed), then relabelled.
inline CombMap random_planar_map(std::mt19937& rng, int edges) {
    CombMap m{{0, 1}, {1, 0}};
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    while (m.num_edges() < edges) {
        if (pick(3) == 0) {
            const int x = pick(m.num_darts()), y1 = m.num_darts(), y2 = y1 + 1;
            m.rot.push_back(m.rot[x]);
            m.rot.push_back(y2);
            m.rot[x] = y1;
            m.opp.push_back(y2);
            m.opp.push_back(y1);
        } else {
            auto fc = face_corners(m);
            const auto& f = fc[pick(static_cast<int>(fc.size()))];
            m = insert_edge(m, f[pick(static_cast<int>(f.size()))], f[pick(static_cast<int>(f.size()))]);
        }
    }
    Permutation s(m.num_darts());
    std::iota(s.begin(), s.end(), 0);
    std::shuffle(s.begin(), s.end(), rng);
    return relabel(m, s);
}

/// Exhaustive search for a dart bijection commuting with rot and opp,
/// pruned only by vertex and face degrees.
inline bool brute_force_isomorphic(const CombMap& a, const CombMap& b) {
    const int n = a.num_darts();
    if (n != b.num_darts()) return false;
    auto degree_of = [](const std::vector<std::vector<int>>& cycles, int n) {
        std::vector<int> deg(n);
        for (const auto& c : cycles)
            for (int d : c) deg[d] = static_cast<int>(c.size());
        return deg;
    };
    const auto va = degree_of(vertices(a), n), vb = degree_of(vertices(b), n);
    const auto fa = degree_of(faces(a), n), fb = degree_of(faces(b), n);
    const auto ra = inverse(a.rot);
    std::vector<int> s(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> assign = [&](int d) -> bool {
        if (d == n) return true;
        for (int t = 0; t < n; ++t) {
            if (used[t] || va[d] != vb[t] || fa[d] != fb[t]) continue;
            s[d] = t;
            bool ok = true;
            if (s[a.rot[d]] >= 0 && s[a.rot[d]] != b.rot[t]) ok = false;
            if (ok && s[ra[d]] >= 0 && b.rot[s[ra[d]]] != t) ok = false;
            if (ok && s[a.opp[d]] >= 0 && s[a.opp[d]] != b.opp[t]) ok = false;
            if (ok) {
                used[t] = 1;
                if (assign(d + 1)) return true;
                used[t] = 0;
            }
            s[d] = -1;
        }
        return false;
    };
    return assign(0);
}

struct IsomorphismTally {
    int pairs = 0;
    int isomorphic = 0;
    int disagreements = 0;
    std::string first_disagreement;
};

/// Canonical-form equality and isomorphic() against the brute-force search,
/// with and without mirror images, on random pairs of maps.
inline IsomorphismTally compare_isomorphism(int pairs, int max_edges, std::uint32_t seed) {
    std::mt19937 rng(seed);
    IsomorphismTally t;
    for (int i = 0; i < pairs; ++i) {
        const int e = std::uniform_int_distribution<int>(1, max_edges)(rng);
        auto m1 = random_planar_map(rng, e);
        // a third each: unrelated, relabelled copy, relabelled mirror image
        CombMap m2;
        if (i % 3 == 0) {
            m2 = random_planar_map(rng, e);
        } else {
            Permutation s(m1.num_darts());
            std::iota(s.begin(), s.end(), 0);
            std::shuffle(s.begin(), s.end(), rng);
            m2 = relabel(i % 3 == 1 ? m1 : mirror(m1), s);
        }
        const bool direct = brute_force_isomorphic(m1, m2);
        const bool up_to_mirror = direct || brute_force_isomorphic(m1, mirror(m2));
        const bool cf_direct = canonical_form(m1, false) == canonical_form(m2, false);
        const bool cf_mirror = canonical_form(m1, true) == canonical_form(m2, true);
        const bool found = isomorphic(m1, m2, false).has_value();
        const bool found_mirror = isomorphic(m1, m2, true).has_value();
        ++t.pairs;
        t.isomorphic += up_to_mirror;
        if (direct != cf_direct || up_to_mirror != cf_mirror || direct != found || up_to_mirror != found_mirror) {
            if (!t.disagreements++)
                t.first_disagreement = "pair " + std::to_string(i) + " with " + std::to_string(e) + " edges";
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// move invariance

struct MoveTally {
    long diagrams = 0;
    long m2 = 0, t1 = 0, clasp = 0;
    long failures = 0;
    std::string first_failure;
};

/// Φ of the expansion before and after every M2 slide, every T1 reduction
/// and every clasp conversion, over all labelings of the given projections
/// (the first `limit` diagrams when limit >= 0).
inline MoveTally check_moves(const std::vector<SPdCode>& th, long limit = -1) {
    MoveTally t;
    auto fail = [&](const std::string& what, const TripleDiagram& d) {
        if (!t.failures++) t.first_failure = what + " on " + serialize(name_crossings(d));
    };
    for (const auto& p : th) {
        const auto m2_sites = detect_m2(p);
        for (const auto& d : enumerate_labelings(p)) {
            if (limit >= 0 && t.diagrams >= limit) return t;
            ++t.diagrams;
            const auto e = expand(d);
            const auto phi = kauffman_unoriented(e);
            for (int c : m2_sites) {
                ++t.m2;
                if (kauffman_unoriented(expand(apply_m2(d, c))) != phi) fail("M2", d);
                if (d.size() > 1 && detail::loop_site(d, c).straight != Level::M) {
                    ++t.t1;
                    if (kauffman_unoriented(expand(reduce_t1(d, c))) != phi) fail("T1", d);
                }
            }
            for (const auto& site : find_clasps(e)) {
                ++t.clasp;
                if (kauffman_unoriented(expand(clasp_convert(e, site))) != phi) fail("clasp", d);
            }
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// Reidemeister insertions

namespace detail {
// Incoming ends of every crossing; enough to fix every component's direction.
inline std::vector<std::pair<int, int>> heads_of(const DecoratedPd& d) {
    std::vector<std::pair<int, int>> h;
    for (int c = 0; c < static_cast<int>(d.num_crossings()); ++c) {
        h.push_back({c, 0});
        h.push_back({c, d.signs[c] == 1 ? 3 : 1});
    }
    return h;
}

inline int max_label(const PdCode& pd) {
    int m = 0;
    for (const auto& x : pd.crossings)
        for (int e : x) m = std::max(m, e);
    return m;
}
}  // namespace detail

/// Put a curl on the edge ending at (crossing, slot).  variant 0..7 picks
/// which two adjacent slots of the new crossing carry the loop and which
/// way round the strand enters, so both curl signs and both sides occur.
inline DecoratedPd insert_r1(const DecoratedPd& d, int crossing, int slot, int variant) {
    PdCode pd = d.pd;
    const int e = pd.crossings[crossing][slot];
    const int loop = detail::max_label(pd) + 1, c = loop + 1;
    pd.crossings[crossing][slot] = c;
    const int i = variant % 4;
    std::array<int, 4> x{};
    x[i] = x[(i + 1) % 4] = loop;
    x[(i + 2) % 4] = variant < 4 ? e : c;
    x[(i + 3) % 4] = variant < 4 ? c : e;
    pd.crossings.push_back(x);
    return decorate(pd, d.free_loops, detail::heads_of(d));
}

/// Push a finger of the edge of dart d1 over (or under) the edge of dart d2
/// across the face the two darts share.  Darts are 4k+p of the PD map.
inline DecoratedPd insert_r2(const DecoratedPd& d, int d1, int d2, bool over) {
    const auto m = map_from_code(d.pd);
    PdCode pd = d.pd;
    auto at = [&](int dart) -> int& { return pd.crossings[dart / 4][dart % 4]; };
    int next = detail::max_label(pd);
    const int a = ++next, b = ++next, c = ++next, p = ++next, q = ++next, r = ++next;
    // face walks keep the face on the right of each dart, so d1's edge runs
    // right to left below the face and d2's left to right above it
    at(d1) = a;
    at(m.opp[d1]) = c;
    at(d2) = p;
    at(m.opp[d2]) = r;
    std::array<int, 4> right{a, r, b, q}, left{c, q, b, p};
    if (over) {
        right = rotate_left(right, 1);
        left = rotate_left(left, 1);
    }
    pd.crossings.push_back(right);
    pd.crossings.push_back(left);
    return decorate(pd, d.free_loops, detail::heads_of(d));
}

/// One random R1 or R2 insertion.
inline DecoratedPd random_reidemeister(const DecoratedPd& d, std::mt19937& rng) {
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    const int n = static_cast<int>(d.num_crossings());
    if (pick(2) == 0) return insert_r1(d, pick(n), pick(4), pick(8));
    const auto fs = faces(map_from_code(d.pd));
    for (int attempt = 0; attempt < 64; ++attempt) {
        const auto& f = fs[pick(static_cast<int>(fs.size()))];
        const int d1 = f[pick(static_cast<int>(f.size()))], d2 = f[pick(static_cast<int>(f.size()))];
        auto edge = [&](int dart) { return d.pd.crossings[dart / 4][dart % 4]; };
        if (edge(d1) != edge(d2)) return insert_r2(d, d1, d2, pick(2) == 0);
    }
    return insert_r1(d, pick(n), pick(4), pick(8));
}

struct ReidemeisterTally {
    int trials = 0;
    int failures = 0;
    std::string first_failure;
};

/// F after `trials` independent random insertions (one or two each) into d.
inline ReidemeisterTally check_reidemeister(const DecoratedPd& d, int trials, std::uint32_t seed) {
    std::mt19937 rng(seed);
    ReidemeisterTally t;
    const auto f = kauffman_f(d);
    for (int i = 0; i < trials; ++i) {
        auto x = random_reidemeister(d, rng);
        if (rng() % 2) x = random_reidemeister(x, rng);
        ++t.trials;
        bool ok;
        try {
            map_from_code(x.pd);
            ok = kauffman_f(x) == f;
        } catch (const std::exception&) {
            ok = false;
        }
        if (!ok && !t.failures++) t.first_failure = serialize(x);
    }
    return t;
}

// ---------------------------------------------------------------------------
// classification

inline int reference_crossing_limit(const ReferenceTable& ref) {
    int m = 0;
    for (const auto& e : ref.entries) m = std::max(m, e.crossing_number);
    return m;
}

inline std::string join_names(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
    return s;
}

/// Names first seen at c3 = n of one kind against the published list,
/// restricted to names within the reference's crossing range.
inline CheckResult check_level(const ClassificationResult& res, const std::vector<C3Row>& expected, int n, bool knots,
                               int crossing_limit) {
    std::set<std::string> want, got;
    for (const auto& r : expected)
        if (r.c3 == n && (r.kind == "knot") == knots && crossing_number_of(r.name) <= crossing_limit)
            want.insert(r.name);
    if (n >= 1 && n <= static_cast<int>(res.levels.size())) {
        const auto& lv = res.levels[n - 1];
        for (const auto& x : knots ? lv.knots : lv.links) got.insert(x);
    }
    std::vector<std::string> missing, extra;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
    CheckResult r{std::string(knots ? "K_" : "L_") + std::to_string(n) + " (<= " + std::to_string(crossing_limit) +
                      " crossings)",
                  missing.empty() && extra.empty(), std::to_string(got.size()) + " names, expected " +
                                                        std::to_string(want.size())};
    if (!missing.empty()) r.detail += "; missing " + join_names(missing);
    if (!extra.empty()) r.detail += "; extra " + join_names(extra);
    return r;
}

inline CheckResult check_c2(const C2Report& r, bool expect_none) {
    const bool ok = expect_none ? r.single_component == 0 : r.single_component >= 1;
    return {"one-component projections in Th0_" + std::to_string(r.n), ok,
            std::to_string(r.single_component) + " of " + std::to_string(r.th0)};
}

}  // namespace tricross
