#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "codes.hpp"
#include "maps.hpp"
#include "parallel.hpp"

namespace tricross {

class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kGeneratorVersion = 1;

// ---------------------------------------------------------------------------
// planar map surgery

/// Insert a new edge between corner(x1) and corner(x2), where corner(x) is the
/// angle just counterclockwise of dart x.  The corners must lie in one face
/// for the result to stay spherical.  New darts get ids n and n+1.
inline CombMap insert_edge(const CombMap& m, int x1, int x2) {
    CombMap r = m;
    const int y1 = m.num_darts(), y2 = y1 + 1;
    r.rot.resize(y1 + 2);
    r.opp.resize(y1 + 2);
    r.opp[y1] = y2;
    r.opp[y2] = y1;
    if (x1 == x2) {
        // a loop inside a single corner
        r.rot[y1] = y2;
        r.rot[y2] = m.rot[x1];
        r.rot[x1] = y1;
        return r;
    }
    r.rot[y1] = m.rot[x1];
    r.rot[x1] = y1;
    r.rot[y2] = r.rot[x2];
    r.rot[x2] = y2;
    return r;
}

/// Corners of every face: the face through dart f contributes corner(opp f).
inline std::vector<std::vector<int>> face_corners(const CombMap& m) {
    std::vector<std::vector<int>> out;
    for (const auto& f : faces(m)) {
        std::vector<int> cs;
        for (int d : f) cs.push_back(m.opp[d]);
        out.push_back(std::move(cs));
    }
    return out;
}

/// Medial map: one 4-valent vertex per edge, one edge per corner.  Dart
/// 4k+s is slot s of the vertex for edge k (edges numbered by smaller dart).
/// For an edge with darts d < d' the slots, counterclockwise, meet the corners
/// at rot^-1(d'), d, rot^-1(d), d'.
inline CombMap medial(const CombMap& m) {
    const int n = m.num_darts();
    std::vector<int> edge(n), first(n);
    int k = 0;
    for (int d = 0; d < n; ++d)
        if (d < m.opp[d]) {
            edge[d] = edge[m.opp[d]] = k++;
            first[d] = 1;
            first[m.opp[d]] = 0;
        }
    CombMap md;
    md.rot.resize(4 * k);
    md.opp.assign(4 * k, -1);
    for (int v = 0; v < k; ++v)
        for (int s = 0; s < 4; ++s) md.rot[4 * v + s] = 4 * v + (s + 1) % 4;
    for (int x = 0; x < n; ++x) {
        int y = m.rot[x];
        int a = 4 * edge[x] + (first[x] ? 1 : 3);
        int b = 4 * edge[y] + (first[y] ? 2 : 0);
        md.opp[a] = b;
        md.opp[b] = a;
    }
    return md;
}

/// A connected 4-valent map is prime and reduced when no two faces share
/// two edges and no edge has one face on both sides (which also excludes
/// 1-gons once there is more than one crossing).
inline bool is_prime_reduced_shadow(const CombMap& m) {
    std::vector<int> face_of(m.rot.size());
    auto fs = faces(m);
    for (int f = 0; f < static_cast<int>(fs.size()); ++f)
        for (int d : fs[f]) face_of[d] = f;
    std::set<std::pair<int, int>> seen;
    for (int d = 0; d < m.num_darts(); ++d) {
        if (d > m.opp[d]) continue;
        int a = face_of[d], b = face_of[m.opp[d]];
        if (a == b) return false;
        if (!seen.insert(std::minmax(a, b)).second) return false;
    }
    for (const auto& f : fs)
        if (f.size() == 1) return false;
    return true;
}

// ---------------------------------------------------------------------------
// shadows

/// Nonseparable planar maps with e edges (e >= 2), one per class up to
/// orientation-reversing isomorphism.  Built level by level: add an edge
/// between two distinct vertices of a face, then close under duality.  For any
/// edge of a nonseparable map either its deletion or its contraction stays
/// nonseparable, and contraction is dual to deletion, so nothing is missed.
inline std::vector<CombMap> nonseparable_maps(int e) {
    if (e < 2) throw std::invalid_argument("nonseparable maps need at least 2 edges");
    std::vector<CombMap> level{map_from_rotations({{1, 2}, {2, 1}})};
    for (int k = 3; k <= e; ++k) {
        std::map<CanonicalForm, CombMap> next;
        auto add = [&](const CombMap& x) {
            auto cf = canonical_form(x, true);
            next.emplace(std::move(cf), x);
        };
        for (const auto& m : level) {
            auto vert = vertex_of_darts(m);
            for (const auto& cs : face_corners(m))
                for (std::size_t i = 0; i < cs.size(); ++i)
                    for (std::size_t j = i + 1; j < cs.size(); ++j)
                        if (vert[cs[i]] != vert[cs[j]]) add(insert_edge(m, cs[i], cs[j]));
        }
        std::vector<CombMap> closed;
        for (const auto& [cf, m] : next) closed.push_back(m);
        for (const auto& m : closed) add(dual(m));
        level.clear();
        for (auto& [cf, m] : next) level.push_back(std::move(m));
    }
    return level;
}

struct Shadow {
    CombMap map;
    PdCode pd;  // strand-consecutive labels, 1..2c
};

inline PdCode pd_from_4valent(const CombMap& m) {
    PdCode pd;
    for (const auto& r : rotations_of(m)) {
        if (r.size() != 4) throw std::invalid_argument("map is not 4-valent");
        pd.crossings.push_back({r[0], r[1], r[2], r[3]});
    }
    return renumber(pd);
}

/// Prime reduced connected shadows with c crossings, up to sphere
/// isomorphism and mirror.  Order: by canonical form.
inline std::vector<Shadow> gen_shadows(int c, int cap = 10) {
    if (c < 2) throw std::invalid_argument("shadows need at least 2 crossings");
    if (c > cap) throw ResourceLimitError("shadow generation capped at " + std::to_string(cap) + " crossings");
    std::map<CanonicalForm, CombMap> found;
    for (const auto& m : nonseparable_maps(c)) {
        CombMap md = medial(m);
        if (!is_prime_reduced_shadow(md)) continue;
        found.emplace(canonical_form(md, true), md);
    }
    std::vector<Shadow> out;
    for (auto& [cf, md] : found) {
        PdCode pd = pd_from_4valent(md);
        out.push_back({map_from_code(pd), pd});
    }
    return out;
}

// ---------------------------------------------------------------------------
// contraction

/// All perfect matchings of the crossings by non-loop edges, as sorted label
/// sets.  Parallel edges give distinct sets.
inline std::vector<std::vector<int>> contraction_candidates(const PdCode& shadow) {
    const int n = static_cast<int>(shadow.size());
    EdgeEnds<4> ends(shadow.crossings);
    std::vector<std::vector<int>> out;
    if (n % 2) return out;
    std::vector<char> used(n, 0);
    std::vector<int> chosen;
    auto rec = [&](auto&& self) -> void {
        int i = 0;
        while (i < n && used[i]) ++i;
        if (i == n) {
            auto s = chosen;
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
            return;
        }
        used[i] = 1;
        std::set<int> tried;
        for (int p = 0; p < 4; ++p) {
            int e = shadow.crossings[i][p];
            if (!tried.insert(e).second) continue;
            int j = ends.other(e, {i, p}).first;
            if (j == i || used[j]) continue;
            used[j] = 1;
            chosen.push_back(e);
            self(self);
            chosen.pop_back();
            used[j] = 0;
        }
        used[i] = 0;
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

/// Merge the endpoints of every edge in `matching`.  For edge e joining
/// crossings A (earlier in the code) and B, each 4-tuple is rotated so that e
/// comes last, e is dropped, and A's three remaining labels are followed by
/// B's.  Output crossings follow ascending contracted label; labels are kept.
inline SPdCode contract(const PdCode& shadow, const std::vector<int>& matching) {
    validate(shadow);
    const int n = static_cast<int>(shadow.size());
    EdgeEnds<4> ends(shadow.crossings);
    std::vector<int> labels = matching;
    std::sort(labels.begin(), labels.end());
    if (static_cast<int>(labels.size()) * 2 != n)
        throw std::invalid_argument("matching must cover every crossing exactly once");
    std::vector<char> used(n, 0);
    SPdCode out;
    for (int e : labels) {
        auto it = ends.ends.find(e);
        if (it == ends.ends.end()) throw std::invalid_argument("matching names unknown edge " + std::to_string(e));
        auto [ea, eb] = it->second;
        if (ea.first == eb.first) throw std::invalid_argument("cannot contract loop edge " + std::to_string(e));
        if (ea.first > eb.first) std::swap(ea, eb);
        if (used[ea.first] || used[eb.first])
            throw std::invalid_argument("matching edges share a crossing at edge " + std::to_string(e));
        used[ea.first] = used[eb.first] = 1;
        SPdCrossing x;
        x.name = CrossingName::eX;
        auto a = rotate_left(shadow.crossings[ea.first], ea.second + 1);
        auto b = rotate_left(shadow.crossings[eb.first], eb.second + 1);
        x.edges = {a[0], a[1], a[2], b[0], b[1], b[2]};
        out.crossings.push_back(x);
    }
    return out;
}

// ---------------------------------------------------------------------------
// triple-crossing projections

/// Number of edges with both ends at each crossing.
inline std::vector<int> loops_per_crossing(const SPdCode& p) {
    std::vector<int> out(p.size(), 0);
    for (std::size_t c = 0; c < p.size(); ++c) {
        std::map<int, int> k;
        for (int e : p.crossings[c].edges) ++k[e];
        for (auto [e, m] : k)
            if (m == 2) ++out[c];
    }
    return out;
}

/// Position p (0..5) of a petal loop at crossing c, meaning edges[p] ==
/// edges[p+1 mod 6]; -1 when the crossing has no such loop.
inline int petal_position(const SPdCode& p, int c) {
    const auto& e = p.crossings[c].edges;
    for (int k = 0; k < 6; ++k)
        if (e[k] == e[(k + 1) % 6]) return k;
    return -1;
}

/// Slide the loop at crossing c to the opposite side: with the loop rotated
/// to the end, [x1,x2,x3,x4,L,L] becomes [x1,x2,L,L,x3,x4].
inline SPdCode m2_projection(const SPdCode& p, int c) {
    int k = petal_position(p, c);
    if (k < 0) throw std::invalid_argument("no loop at crossing " + std::to_string(c));
    SPdCode out = p;
    auto r = rotate_left(p.crossings[c].edges, k + 2);  // loop now at positions 4,5
    out.crossings[c].edges = {r[0], r[1], r[4], r[5], r[2], r[3]};
    return out;
}

struct TaItem {
    int shadow_index;
    std::vector<int> matching;
    SPdCode code;  // renumbered
};

inline std::vector<TaItem> gen_Ta(int n, const std::vector<Shadow>& shadows, unsigned threads = 1) {
    auto parts = parallel_map(shadows.size(), threads, [&](std::size_t i) {
        std::vector<TaItem> v;
        for (auto& mt : contraction_candidates(shadows[i].pd))
            v.push_back({static_cast<int>(i), mt, renumber(contract(shadows[i].pd, mt))});
        return v;
    });
    std::vector<TaItem> out;
    for (auto& v : parts)
        for (auto& x : v) {
            if (static_cast<int>(x.code.size()) != n) throw std::logic_error("contraction size mismatch");
            out.push_back(std::move(x));
        }
    return out;
}

inline CanonicalForm projection_form(const SPdCode& p) { return canonical_form(map_from_code(p), true); }

/// Ta up to sphere isomorphism and mirror; the first occurrence represents its class.
inline std::vector<SPdCode> gen_Tb(const std::vector<TaItem>& ta, std::vector<int>* class_of = nullptr,
                                   unsigned threads = 1) {
    auto forms = parallel_map(ta.size(), threads, [&](std::size_t i) { return projection_form(ta[i].code); });
    std::map<CanonicalForm, int> index;
    std::vector<SPdCode> out;
    if (class_of) class_of->assign(ta.size(), -1);
    for (std::size_t i = 0; i < ta.size(); ++i) {
        auto [it, fresh] = index.emplace(forms[i], static_cast<int>(out.size()));
        if (fresh) out.push_back(ta[i].code);
        if (class_of) (*class_of)[i] = it->second;
    }
    return out;
}

struct ThResult {
    std::vector<SPdCode> th;
    std::vector<SPdCode> th0;
    std::vector<int> orbit_sizes;  // number of filtered Tb items per Th class
    int filtered = 0;              // Tb items with at most one loop per crossing
};

/// Drop projections with two or more loops at some crossing, then quotient by
/// the loop slide.  Orbits are closed breadth-first over canonical forms.
inline ThResult gen_Th(const std::vector<SPdCode>& tb) {
    ThResult r;
    std::map<CanonicalForm, int> orbit_of;  // form -> orbit id
    std::vector<int> rep;                   // orbit id -> index into r.th
    for (const auto& p : tb) {
        auto lc = loops_per_crossing(p);
        if (std::any_of(lc.begin(), lc.end(), [](int k) { return k >= 2; })) continue;
        ++r.filtered;
        auto cf = projection_form(p);
        if (auto it = orbit_of.find(cf); it != orbit_of.end()) {
            ++r.orbit_sizes[rep[it->second]];
            continue;
        }
        const int id = static_cast<int>(rep.size());
        rep.push_back(static_cast<int>(r.th.size()));
        r.th.push_back(p);
        r.orbit_sizes.push_back(1);
        if (std::all_of(lc.begin(), lc.end(), [](int k) { return k == 0; })) r.th0.push_back(p);
        std::vector<SPdCode> queue{p};
        orbit_of.emplace(cf, id);
        while (!queue.empty()) {
            SPdCode q = std::move(queue.back());
            queue.pop_back();
            for (int c = 0; c < static_cast<int>(q.size()); ++c) {
                if (petal_position(q, c) < 0) continue;
                SPdCode s = m2_projection(q, c);
                auto f = projection_form(s);
                auto [it, fresh] = orbit_of.emplace(f, id);
                if (fresh) queue.push_back(std::move(s));
                else if (it->second != id) throw std::logic_error("loop-slide orbits overlap");
            }
        }
    }
    return r;
}

/// The c3 = 1 projections: one 6-valent vertex whose darts are paired without
/// crossings, up to rotation and reflection.
inline std::vector<SPdCode> projections_n1() {
    std::map<CanonicalForm, SPdCode> found;
    std::array<int, 6> lab{};
    auto rec = [&](auto&& self, int next) -> void {
        int i = 0;
        while (i < 6 && lab[i]) ++i;
        if (i == 6) {
            SPdCode code{{{CrossingName::eX, lab}}};
            CombMap m = map_from_rotations({{lab.begin(), lab.end()}});
            if (euler_characteristic(m) == 2) found.emplace(canonical_form(m, true), renumber(code));
            return;
        }
        for (int j = i + 1; j < 6; ++j) {
            if (lab[j]) continue;
            lab[i] = lab[j] = next;
            self(self, next + 1);
            lab[i] = lab[j] = 0;
        }
    };
    rec(rec, 1);
    std::vector<SPdCode> out;
    for (auto& [cf, c] : found) out.push_back(c);
    return out;
}

// ---------------------------------------------------------------------------
// dual graphs

struct GrItem {
    CombMap map;
    int quads = 0;
    int hexes = 0;
    int index = 0;  // 1-based within (quads, hexes)

    std::string name() const {
        return "g^{" + std::to_string(quads) + "," + std::to_string(hexes) + "}_" + std::to_string(index);
    }
};

/// Remove every loop, leaving 4-valent vertices where petals were.
inline CombMap strip_loops(const SPdCode& p) {
    std::vector<std::vector<int>> rs;
    for (const auto& x : p.crossings) {
        std::map<int, int> k;
        for (int e : x.edges) ++k[e];
        std::vector<int> r;
        for (int e : x.edges)
            if (k[e] == 1) r.push_back(e);
        rs.push_back(std::move(r));
    }
    return map_from_rotations(rs);
}

inline bool min_degree_at_least(const CombMap& m, int k) {
    for (const auto& v : vertices(m))
        if (static_cast<int>(v.size()) < k) return false;
    return true;
}

/// Duals of loop-stripped Th projections, kept when simple, connected, of
/// minimum degree two and with only 4- and 6-gonal faces.
inline std::vector<GrItem> gen_Gr(const std::vector<SPdCode>& th) {
    std::map<CanonicalForm, GrItem> found;
    std::vector<CanonicalForm> order;
    for (const auto& p : th) {
        CombMap g = dual(strip_loops(p));
        if (!is_connected(g) || !is_simple(g) || !min_degree_at_least(g, 2)) continue;
        GrItem it;
        bool ok = true;
        for (int deg : degrees(faces(g))) {
            if (deg == 4) ++it.quads;
            else if (deg == 6) ++it.hexes;
            else ok = false;
        }
        if (!ok) continue;
        auto cf = canonical_form(g, true);
        if (found.count(cf)) continue;
        it.map = g;
        found.emplace(cf, it);
        order.push_back(cf);
    }
    std::vector<GrItem> out;
    std::map<std::pair<int, int>, int> counter;
    for (const auto& cf : order) {
        GrItem it = found.at(cf);
        it.index = ++counter[{it.quads, it.hexes}];
        out.push_back(std::move(it));
    }
    return out;
}

// ---------------------------------------------------------------------------
// full pipeline for one n

struct ProjectionCatalogs {
    int n = 0;
    std::vector<Shadow> sh;
    std::vector<TaItem> ta;
    std::vector<SPdCode> tb;
    ThResult th;
    std::vector<GrItem> gr;
    double seconds = 0;
};

inline ProjectionCatalogs generate_all(int n, unsigned threads = 1, int shadow_cap = 10) {
    auto t0 = std::chrono::steady_clock::now();
    ProjectionCatalogs c;
    c.n = n;
    if (n == 1) {
        c.th.th = projections_n1();
        c.th.filtered = static_cast<int>(c.th.th.size());
        c.th.orbit_sizes.assign(c.th.th.size(), 1);
        for (const auto& p : c.th.th) {
            auto lc = loops_per_crossing(p);
            if (lc[0] == 0) c.th.th0.push_back(p);
        }
    } else {
        c.sh = gen_shadows(2 * n, shadow_cap);
        c.ta = gen_Ta(n, c.sh, threads);
        c.tb = gen_Tb(c.ta, nullptr, threads);
        c.th = gen_Th(c.tb);
        c.gr = gen_Gr(c.th.th);
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

}  // namespace tricross
