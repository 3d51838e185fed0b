#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "codes.hpp"
#include "generate.hpp"
#include "kauffman.hpp"

namespace tricross {

enum class Level : std::uint8_t { B = 0, M = 1, T = 2 };

inline char level_char(Level l) { return "BMT"[static_cast<int>(l)]; }

class OrientationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PatternError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A projection plus, per crossing, the level of each of its three strands;
/// strand s of a crossing occupies positions s and s+3.
struct TripleDiagram {
    SPdCode projection;
    std::vector<std::array<Level, 3>> levels;

    std::size_t size() const noexcept { return projection.size(); }
    friend bool operator==(const TripleDiagram&, const TripleDiagram&) = default;
};

/// The six strand-to-level bijections in a fixed order.
inline const std::array<std::array<Level, 3>, 6>& level_permutations() {
    static const std::array<std::array<Level, 3>, 6> perms = [] {
        std::array<std::array<Level, 3>, 6> p{};
        std::array<Level, 3> x{Level::B, Level::M, Level::T};
        int i = 0;
        do p[i++] = x;
        while (std::next_permutation(x.begin(), x.end()));
        return p;
    }();
    return perms;
}

/// All 6^n labelings, odometer order with the last crossing fastest.
inline std::vector<TripleDiagram> enumerate_labelings(const SPdCode& projection) {
    const int n = static_cast<int>(projection.size());
    std::vector<TripleDiagram> out;
    std::vector<int> digit(n, 0);
    while (true) {
        TripleDiagram d{projection, {}};
        for (int c = 0; c < n; ++c) d.levels.push_back(level_permutations()[digit[c]]);
        out.push_back(std::move(d));
        int c = n - 1;
        while (c >= 0 && ++digit[c] == 6) digit[c--] = 0;
        if (c < 0) break;
    }
    return out;
}

/// For every crossing, the position (s or s+3) where strand s enters when
/// each component is oriented by increasing labels.  A component with one
/// or two edges reads the same both ways; it is oriented so that the first
/// occurrence of its smallest label is incoming, as renumber does.
inline std::vector<std::array<int, 3>> incoming_positions(const SPdCode& p) {
    auto t = detail::tuples_of<6>(p);
    const int n = static_cast<int>(t.size());
    EdgeEnds<6> ends(t);
    std::vector<std::array<int, 3>> in(n, {-1, -1, -1});
    for (const auto& cyc : components(p).components) {
        if (cyc.size() <= 2) {
            auto at = ends.ends.at(cyc[0])[0];
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                in[at.first][at.second % 3] = at.second;
                int out = (at.second + 3) % 6;
                at = ends.other(t[at.first][out], {at.first, out});
            }
            continue;
        }
        const int lo = cyc.front(), hi = *std::max_element(cyc.begin(), cyc.end());
        for (int e : cyc) {
            int next = e == hi ? lo : e + 1;
            for (auto [c, q] : ends.ends.at(e))
                if (t[c][(q + 3) % 6] == next) in[c][q % 3] = q;
        }
    }
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 3; ++s)
            if (in[c][s] < 0)
                throw OrientationError("labels do not increase along the strand at crossing " + std::to_string(c + 1));
    return in;
}

/// How a named crossing is written.  In the standard reading an eY tuple
/// lists its ends in the rotation order of the map and its strands at
/// positions 1,2,3 are B,M,T; an eX tuple lists them in the reverse order,
/// so that positions 1,2,3 again carry B,M,T.  Exchanging the two names
/// only mirrors every diagram in the plane.  `listed_order` takes every
/// tuple in rotation order (eY: B,M,T and eX: B,T,M at positions 1,2,3);
/// it is kept to show that this reading does not fit the tables.
enum class NamingConvention { standard, listed_order };

namespace detail {
inline std::array<int, 6> reversed_tuple(const std::array<int, 6>& a) { return {a[0], a[5], a[4], a[3], a[2], a[1]}; }
}  // namespace detail

/// Write every crossing starting at the incoming end of its B strand, named
/// by the direction in which the strands read B,M,T.
inline SPdCode name_crossings(const TripleDiagram& d, NamingConvention conv = NamingConvention::standard) {
    if (d.levels.size() != d.projection.size()) throw std::invalid_argument("one level triple per crossing needed");
    auto ends = incoming_positions(d.projection);
    SPdCode out;
    for (std::size_t c = 0; c < d.size(); ++c) {
        const auto& lv = d.levels[c];
        int sB = static_cast<int>(std::find(lv.begin(), lv.end(), Level::B) - lv.begin());
        if (sB == 3) throw std::invalid_argument("crossing without a B strand");
        int pB = ends[c][sB];
        auto r = rotate_left(d.projection.crossings[c].edges, pB);
        bool eY = lv[(pB + 1) % 3] == Level::M;
        SPdCrossing x;
        x.edges = (eY || conv == NamingConvention::listed_order) ? r : detail::reversed_tuple(r);
        x.name = eY ? CrossingName::eY : CrossingName::eX;
        out.crossings.push_back(x);
    }
    return out;
}

/// Inverse of name_crossings.  The projection is returned in rotation order
/// with every crossing named eX, the way the generator writes projections.
inline TripleDiagram diagram_from_code(const SPdCode& code, NamingConvention conv = NamingConvention::standard) {
    validate(code);
    TripleDiagram d;
    for (const auto& x : code.crossings) {
        bool eY = x.name == CrossingName::eY;
        bool reverse = !eY && conv == NamingConvention::standard;
        d.projection.crossings.push_back({CrossingName::eX, reverse ? detail::reversed_tuple(x.edges) : x.edges});
        // reversing an eX tuple brings its T strand to position 2
        d.levels.push_back(eY ? std::array<Level, 3>{Level::B, Level::M, Level::T}
                           : std::array<Level, 3>{Level::B, Level::T, Level::M});
    }
    // a B strand on a component of one or two edges may start at either end
    std::map<int, std::size_t> length;
    for (const auto& cyc : components(d.projection).components)
        for (int e : cyc) length[e] = cyc.size();
    auto ends = incoming_positions(d.projection);
    for (std::size_t c = 0; c < d.size(); ++c)
        if (ends[c][0] != 0 && length[d.projection.crossings[c].edges[0]] > 2)
            throw OrientationError("position 1 of crossing " + std::to_string(c + 1) + " is not incoming");
    return d;
}

// ---------------------------------------------------------------------------
// classical expansion

/// A diagram mixing classical (4 ends, under-strand on slots 0/2) and triple
/// (6 ends, levels per strand) crossings.  `incoming` optionally marks edge
/// ends known to be incoming (1), outgoing (0) or unknown (-1).
struct MixedDiagram {
    struct Vertex {
        bool triple = false;
        std::array<int, 6> edges{};
        std::array<Level, 3> levels{Level::B, Level::M, Level::T};
        std::array<signed char, 6> incoming{-1, -1, -1, -1, -1, -1};
    };
    std::vector<Vertex> vertices;
    int free_loops = 0;
};

inline MixedDiagram to_mixed(const TripleDiagram& d) {
    MixedDiagram m;
    std::vector<std::array<int, 3>> ends;
    try {
        ends = incoming_positions(d.projection);
    } catch (const OrientationError&) {
        ends.clear();
    }
    for (std::size_t c = 0; c < d.size(); ++c) {
        MixedDiagram::Vertex v;
        v.triple = true;
        v.edges = d.projection.crossings[c].edges;
        v.levels = d.levels[c];
        if (!ends.empty())
            for (int s = 0; s < 3; ++s) {
                v.incoming[ends[c][s]] = 1;
                v.incoming[(ends[c][s] + 3) % 6] = 0;
            }
        m.vertices.push_back(v);
    }
    return m;
}

/// Split every triple crossing into three classical crossings, each strand
/// pair crossing once with the higher level on top.  Slots of the triple
/// crossing are 0..5 counterclockwise; the three crossings list
///   P01: ext0, ext1, ->P02, ->P12
///   P02: ->P01, ext2, ext3, ->P12
///   P12: ->P01, ->P02, ext4, ext5
/// so strand s runs ext s -> ext s+3 through the two crossings it meets.
inline DecoratedPd expand(const MixedDiagram& m) {
    int next = 0;
    for (const auto& v : m.vertices)
        for (int k = 0; k < (v.triple ? 6 : 4); ++k) next = std::max(next, v.edges[k]);
    ++next;
    PdCode pd;
    std::vector<std::pair<int, int>> heads;
    for (const auto& v : m.vertices) {
        if (!v.triple) {
            const int c = static_cast<int>(pd.size());
            pd.crossings.push_back({v.edges[0], v.edges[1], v.edges[2], v.edges[3]});
            for (int k = 0; k < 4; ++k)
                if (v.incoming[k] == 1) heads.push_back({c, k});
            continue;
        }
        const auto& e = v.edges;
        int a = next++, b = next++, cc = next++;
        std::array<std::array<int, 4>, 3> x{{{e[0], e[1], a, b}, {a, e[2], e[3], cc}, {b, cc, e[4], e[5]}}};
        // which strands meet at each of the three crossings: slots 0/2 carry the first
        const std::array<std::pair<int, int>, 3> meet{{{0, 1}, {0, 2}, {1, 2}}};
        // where external end k sits: (which crossing, slot before any rotation)
        const std::array<std::pair<int, int>, 6> ext{{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}}};
        std::array<int, 3> shift{0, 0, 0};
        for (int i = 0; i < 3; ++i) {
            auto [s1, s2] = meet[i];
            if (v.levels[s1] > v.levels[s2]) {
                x[i] = rotate_left(x[i], 1);
                shift[i] = 1;
            }
        }
        const int base = static_cast<int>(pd.size());
        for (int i = 0; i < 3; ++i) pd.crossings.push_back(x[i]);
        for (int k = 0; k < 6; ++k)
            if (v.incoming[k] == 1) {
                auto [i, s] = ext[k];
                heads.push_back({base + i, (s - shift[i] + 4) % 4});
            }
    }
    if (pd.crossings.empty()) {
        DecoratedPd d;
        d.free_loops = m.free_loops;
        return d;
    }
    return decorate(pd, m.free_loops, heads);
}

inline DecoratedPd expand(const TripleDiagram& d) { return expand(to_mixed(d)); }

// ---------------------------------------------------------------------------
// local moves

/// Crossings carrying two adjacent loops (the M1 pattern).
inline std::vector<int> detect_m1(const SPdCode& projection) {
    std::vector<int> out;
    for (int c = 0; c < static_cast<int>(projection.size()); ++c) {
        const auto& e = projection.crossings[c].edges;
        for (int k = 0; k < 6; ++k)
            if (e[k] == e[(k + 1) % 6] && e[(k + 2) % 6] == e[(k + 3) % 6]) {
                out.push_back(c);
                break;
            }
    }
    return out;
}

/// Crossings with exactly one loop, the places where M2 applies.
inline std::vector<int> detect_m2(const SPdCode& projection) {
    std::vector<int> out;
    auto lc = loops_per_crossing(projection);
    for (int c = 0; c < static_cast<int>(projection.size()); ++c)
        if (lc[c] == 1 && petal_position(projection, c) >= 0) out.push_back(c);
    return out;
}

namespace detail {
// The loop at crossing c rotated to the end: [x1,x2,x3,x4,L,L].  Returns the
// rotation and the levels of the straight strand (x1-x4) and of the loop
// halves at x2 and x3.
struct LoopSite {
    int rot;
    std::array<int, 6> r;
    Level straight, part2, part3;
};

inline LoopSite loop_site(const TripleDiagram& d, int c) {
    if (c < 0 || c >= static_cast<int>(d.size())) throw PatternError("crossing index out of range");
    int k = petal_position(d.projection, c);
    if (k < 0) throw PatternError("no loop at crossing " + std::to_string(c + 1));
    if (loops_per_crossing(d.projection)[c] != 1)
        throw PatternError("crossing " + std::to_string(c + 1) + " carries more than one loop");
    LoopSite s;
    s.rot = k + 2;
    s.r = rotate_left(d.projection.crossings[c].edges, s.rot);
    const auto& lv = d.levels[c];
    s.straight = lv[(s.rot + 0) % 3];
    s.part2 = lv[(s.rot + 1) % 3];
    s.part3 = lv[(s.rot + 2) % 3];
    return s;
}
}  // namespace detail

namespace detail {
// The loop slide without relabeling; crossing c keeps its labels.
inline TripleDiagram slide_loop(const TripleDiagram& d, int c) {
    auto s = loop_site(d, c);
    TripleDiagram out = d;
    const auto& r = s.r;
    out.projection.crossings[c].edges = {r[0], r[1], r[4], r[5], r[2], r[3]};
    if (s.straight != Level::M) out.levels[c] = {s.part2, s.straight, s.part3};
    else out.levels[c] = {s.part3, Level::M, s.part2};
    return out;
}
}  // namespace detail

/// Slide the single loop at crossing c to the other side of the crossing.
/// When the straight strand is T or B it keeps its level and the new loop
/// halves at x1 and x4 take the old levels at x2 and x3.  When it is M (a
/// clasp) the new straight strand is M and the halves swap, which keeps the
/// clasp's handedness.
inline TripleDiagram apply_m2(const TripleDiagram& d, int c) {
    auto out = detail::slide_loop(d, c);
    out.projection = renumber(out.projection);
    return out;
}

/// Remove a crossing whose loop is made of the M strand and one other, i.e.
/// whose straight strand is T or B: it can be lifted off the loop, leaving a
/// curl.  The strand ends x1,x4 and x2,x3 are joined.
inline TripleDiagram reduce_t1(const TripleDiagram& d, int c) {
    auto s = detail::loop_site(d, c);
    if (s.straight == Level::M) throw PatternError("loop at crossing " + std::to_string(c + 1) + " has no M strand");
    if (d.size() < 2) throw PatternError("reduction would leave no triple crossing");
    const auto& r = s.r;
    int x1 = r[0], x2 = r[1], x3 = r[2], x4 = r[3];
    std::map<int, int> join{{x4, x1}, {x3, x2}};
    TripleDiagram out;
    for (int k = 0; k < static_cast<int>(d.size()); ++k) {
        if (k == c) continue;
        SPdCrossing x = d.projection.crossings[k];
        for (auto& e : x.edges)
            if (auto it = join.find(e); it != join.end()) e = it->second;
        out.projection.crossings.push_back(x);
        out.levels.push_back(d.levels[k]);
    }
    validate(out.projection);
    out.projection = renumber(out.projection);
    return out;
}

/// A clasp: crossings c1, c2 joined by the edges at (c1,p)-(c2,q) and
/// (c1,p+1)-(c2,q-1), with one strand over at c1 and under at c2.
struct ClaspSite {
    int c1, p, c2, q;
};

inline std::vector<ClaspSite> find_clasps(const DecoratedPd& d) {
    std::vector<ClaspSite> out;
    EdgeEnds<4> ends(d.pd.crossings);
    const auto& x = d.pd.crossings;
    for (int c1 = 0; c1 < static_cast<int>(x.size()); ++c1)
        for (int p = 0; p < 4; ++p) {
            auto [c2, q] = ends.other(x[c1][p], {c1, p});
            if (c2 == c1 || (p % 2) == (q % 2)) continue;
            int e2 = x[c1][(p + 1) % 4];
            if (ends.other(e2, {c1, (p + 1) % 4}) != std::pair<int, int>{c2, (q + 3) % 4}) continue;
            out.push_back({c1, p, c2, q});
        }
    return out;
}

/// Replace a clasp by one triple crossing [x1,x2,x3,x4,L,L]: the strand
/// through (c1,p) becomes the straight strand at level M, the other strand
/// becomes the loop.  The loop half starting at x2 passes c1's crossing, so
/// it goes on top exactly when the straight strand was under there.
inline MixedDiagram clasp_convert(const DecoratedPd& d, const ClaspSite& s) {
    const auto& x = d.pd.crossings;
    bool ok = false;
    for (const auto& f : find_clasps(d))
        if (f.c1 == s.c1 && f.p == s.p && f.c2 == s.c2 && f.q == s.q) ok = true;
    if (!ok) throw PatternError("no clasp at the given site");
    int label = 0;
    for (const auto& t : x)
        for (int e : t) label = std::max(label, e);
    MixedDiagram m;
    m.free_loops = d.free_loops;
    for (int c = 0; c < static_cast<int>(x.size()); ++c) {
        if (c == s.c1 || c == s.c2) continue;
        MixedDiagram::Vertex v;
        std::copy(x[c].begin(), x[c].end(), v.edges.begin());
        m.vertices.push_back(v);
    }
    MixedDiagram::Vertex t;
    t.triple = true;
    const int L = label + 1;
    t.edges = {x[s.c1][(s.p + 2) % 4], x[s.c1][(s.p + 3) % 4], x[s.c2][(s.q + 1) % 4], x[s.c2][(s.q + 2) % 4], L, L};
    bool straight_under_at_c1 = s.p % 2 == 0;
    t.levels[0] = Level::M;
    t.levels[1] = straight_under_at_c1 ? Level::T : Level::B;  // half at x2
    t.levels[2] = straight_under_at_c1 ? Level::B : Level::T;  // half at x3
    m.vertices.push_back(t);
    return m;
}

}  // namespace tricross
