#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "codes.hpp"

namespace tricross {

using Permutation = std::vector<int>;

/// Spherical combinatorial map on darts 0..2e-1.
///
/// rot[d] is the next dart counterclockwise around the vertex of d and opp[d]
/// is the other half of the edge of d.  Faces are the cycles of rot∘opp, so
/// walking a face keeps it on the left.
struct CombMap {
    std::vector<int> rot;
    std::vector<int> opp;

    int num_darts() const noexcept { return static_cast<int>(rot.size()); }
    int num_edges() const noexcept { return num_darts() / 2; }

    int face_next(int d) const { return rot[opp[d]]; }

    friend bool operator==(const CombMap&, const CombMap&) = default;
};

/// Cycles of a permutation, each starting at its smallest element, ordered by that element.
inline std::vector<std::vector<int>> cycles_of(const Permutation& p) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(p.size(), 0);
    for (int s = 0; s < static_cast<int>(p.size()); ++s) {
        if (seen[s]) continue;
        std::vector<int> cyc;
        for (int d = s; !seen[d]; d = p[d]) {
            seen[d] = 1;
            cyc.push_back(d);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

inline Permutation inverse(const Permutation& p) {
    Permutation q(p.size());
    for (int i = 0; i < static_cast<int>(p.size()); ++i) q[p[i]] = i;
    return q;
}

/// (p ∘ q)(x) = p(q(x)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
    Permutation r(q.size());
    for (int i = 0; i < static_cast<int>(q.size()); ++i) r[i] = p[q[i]];
    return r;
}

inline std::vector<std::vector<int>> vertices(const CombMap& m) { return cycles_of(m.rot); }

inline Permutation face_permutation(const CombMap& m) {
    Permutation f(m.rot.size());
    for (int d = 0; d < m.num_darts(); ++d) f[d] = m.face_next(d);
    return f;
}

inline std::vector<std::vector<int>> faces(const CombMap& m) { return cycles_of(face_permutation(m)); }

inline std::vector<int> degrees(const std::vector<std::vector<int>>& cycles) {
    std::vector<int> out;
    for (const auto& c : cycles) out.push_back(static_cast<int>(c.size()));
    return out;
}

inline int euler_characteristic(const CombMap& m) {
    return static_cast<int>(vertices(m).size()) - m.num_edges() + static_cast<int>(faces(m).size());
}

inline bool is_connected(const CombMap& m) {
    if (m.rot.empty()) return true;
    std::vector<char> seen(m.rot.size(), 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int count = 1;
    while (!st.empty()) {
        int d = st.back();
        st.pop_back();
        for (int x : {m.rot[d], m.opp[d]})
            if (!seen[x]) {
                seen[x] = 1;
                ++count;
                st.push_back(x);
            }
    }
    return count == m.num_darts();
}

/// Structural sanity: rot is a permutation, opp a fixed-point-free involution.
inline void check_map(const CombMap& m) {
    const int n = m.num_darts();
    if (static_cast<int>(m.opp.size()) != n || n % 2) throw std::invalid_argument("dart arrays disagree");
    std::vector<char> hit(n, 0);
    for (int d = 0; d < n; ++d) {
        if (m.rot[d] < 0 || m.rot[d] >= n || hit[m.rot[d]]) throw std::invalid_argument("rot is not a permutation");
        hit[m.rot[d]] = 1;
        if (m.opp[d] < 0 || m.opp[d] >= n || m.opp[d] == d || m.opp[m.opp[d]] != d)
            throw std::invalid_argument("opp is not a fixed-point-free involution");
    }
}

/// Build a map from labelled rotations: vertex v lists its edge labels
/// counterclockwise; every label must occur exactly twice.  Dart ids follow
/// reading order, so dart = (offset of vertex) + position.
inline CombMap map_from_rotations(const std::vector<std::vector<int>>& rotations) {
    CombMap m;
    std::map<int, std::vector<int>> where;
    int d = 0;
    for (const auto& r : rotations) {
        const int base = d;
        for (std::size_t k = 0; k < r.size(); ++k, ++d) {
            m.rot.push_back(base + static_cast<int>((k + 1) % r.size()));
            where[r[k]].push_back(d);
        }
    }
    m.opp.assign(m.rot.size(), -1);
    for (const auto& [label, ds] : where) {
        if (ds.size() != 2) throw std::invalid_argument("label " + std::to_string(label) + " does not occur twice");
        m.opp[ds[0]] = ds[1];
        m.opp[ds[1]] = ds[0];
    }
    return m;
}

namespace detail {
inline CombMap checked_spherical(CombMap m) {
    if (m.rot.empty()) throw std::invalid_argument("empty code has no map");
    check_map(m);
    if (!is_connected(m)) throw std::invalid_argument("code is not connected");
    if (euler_characteristic(m) != 2) throw std::invalid_argument("code is not spherical (Euler characteristic != 2)");
    return m;
}
}  // namespace detail

/// Dart of (crossing k, position p) is 6k+p for sPD and 4k+p for PD codes.
inline CombMap map_from_code(const SPdCode& code) {
    validate(code);
    std::vector<std::vector<int>> rs;
    for (const auto& x : code.crossings) rs.emplace_back(x.edges.begin(), x.edges.end());
    return detail::checked_spherical(map_from_rotations(rs));
}

inline CombMap map_from_code(const PdCode& code) {
    validate(code);
    std::vector<std::vector<int>> rs;
    for (const auto& x : code.crossings) rs.emplace_back(x.begin(), x.end());
    return detail::checked_spherical(map_from_rotations(rs));
}

inline CombMap mirror(const CombMap& m) { return CombMap{inverse(m.rot), m.opp}; }

/// Faces become vertices.  The dual keeps dart ids and opp; its rotation is
/// the face walk, and dual(dual(m)) == m exactly.
inline CombMap dual(const CombMap& m) {
    return CombMap{face_permutation(m), m.opp};
}

/// Apply the relabelling s (dart x becomes s[x]).
inline CombMap relabel(const CombMap& m, const Permutation& s) {
    CombMap r;
    r.rot.assign(m.rot.size(), 0);
    r.opp.assign(m.opp.size(), 0);
    for (int x = 0; x < m.num_darts(); ++x) {
        r.rot[s[x]] = s[m.rot[x]];
        r.opp[s[x]] = s[m.opp[x]];
    }
    return r;
}

struct CanonicalForm {
    std::vector<std::int32_t> code;
    bool mirrored = false;

    std::string bytes() const {
        std::string s;
        for (auto v : code) {
            s.push_back(static_cast<char>(v & 0xff));
            s.push_back(static_cast<char>((v >> 8) & 0xff));
        }
        return s;
    }

    friend bool operator==(const CanonicalForm& x, const CanonicalForm& y) { return x.code == y.code; }
    friend auto operator<=>(const CanonicalForm& x, const CanonicalForm& y) { return x.code <=> y.code; }
};

namespace detail {

// BFS numbering from root following (step, opp); emits for each dart in
// discovery order the labels of step(d) and opp(d).  Returns false as soon as
// the partial code exceeds `best` (when best is non-empty).
inline bool bfs_code(const std::vector<int>& step, const std::vector<int>& opp, int root,
                     std::vector<std::int32_t>& out, const std::vector<std::int32_t>* best,
                     std::vector<int>& label, std::vector<int>& order) {
    const int n = static_cast<int>(step.size());
    std::fill(label.begin(), label.end(), -1);
    order.clear();
    out.clear();
    label[root] = 0;
    order.push_back(root);
    bool tied = best != nullptr && !best->empty();
    for (int i = 0; i < n; ++i) {
        if (i >= static_cast<int>(order.size())) return false;  // disconnected
        int d = order[i];
        for (int nb : {step[d], opp[d]}) {
            if (label[nb] < 0) {
                label[nb] = static_cast<int>(order.size());
                order.push_back(nb);
            }
            std::int32_t v = label[nb];
            if (tied) {
                std::int32_t b = (*best)[out.size()];
                if (v > b) return false;
                if (v < b) tied = false;
            }
            out.push_back(v);
        }
    }
    return true;
}

}  // namespace detail

/// Lexicographically least BFS code over all roots (and both orientations when
/// allow_mirror).  Equal forms iff the maps are isomorphic (up to mirror).
inline CanonicalForm canonical_form(const CombMap& m, bool allow_mirror) {
    const int n = m.num_darts();
    CanonicalForm best;
    std::vector<std::int32_t> cur;
    std::vector<int> label(n), order;
    order.reserve(n);
    auto run = [&](const std::vector<int>& step, bool mirrored) {
        for (int r = 0; r < n; ++r) {
            if (detail::bfs_code(step, m.opp, r, cur, &best.code, label, order)) {
                if (best.code.empty() || cur < best.code) {
                    best.code = cur;
                    best.mirrored = mirrored;
                }
            }
        }
    };
    run(m.rot, false);
    if (allow_mirror) run(inverse(m.rot), true);
    if (n > 0 && best.code.empty()) throw std::invalid_argument("canonical_form needs a connected map");
    return best;
}

/// A permutation s with s∘rot1 = rot2∘s and s∘opp1 = opp2∘s (against the
/// mirror of m2 when allow_mirror and no direct witness exists).
inline std::optional<Permutation> isomorphic(const CombMap& m1, const CombMap& m2, bool allow_mirror) {
    const int n = m1.num_darts();
    if (n != m2.num_darts()) return std::nullopt;
    if (n == 0) return Permutation{};
    auto attempt = [&](const std::vector<int>& rot2, int target) -> std::optional<Permutation> {
        Permutation s(n, -1), back(n, -1);
        std::vector<int> st{0};
        s[0] = target;
        back[target] = 0;
        while (!st.empty()) {
            int d = st.back();
            st.pop_back();
            const std::array<std::pair<int, int>, 2> steps{{{m1.rot[d], rot2[s[d]]}, {m1.opp[d], m2.opp[s[d]]}}};
            for (auto [x, y] : steps) {
                if (s[x] < 0) {
                    if (back[y] >= 0) return std::nullopt;
                    s[x] = y;
                    back[y] = x;
                    st.push_back(x);
                } else if (s[x] != y) {
                    return std::nullopt;
                }
            }
        }
        for (int d = 0; d < n; ++d)
            if (s[d] < 0) return std::nullopt;  // m1 disconnected
        return s;
    };
    for (int t = 0; t < n; ++t)
        if (auto s = attempt(m2.rot, t)) return s;
    if (allow_mirror) {
        auto inv = inverse(m2.rot);
        for (int t = 0; t < n; ++t)
            if (auto s = attempt(inv, t)) return s;
    }
    return std::nullopt;
}

/// Paper-style view: tau = vertex rotation, sigma = opp∘rot^-1 (the inverse
/// face walk), so that sigma∘tau = opp is an involution.
struct PermutationPair {
    Permutation sigma;
    Permutation tau;
};

inline PermutationPair sigma_tau(const CombMap& m) {
    return {compose(m.opp, inverse(m.rot)), m.rot};
}

inline CombMap from_sigma_tau(const PermutationPair& p) {
    CombMap m{p.tau, compose(p.sigma, p.tau)};
    check_map(m);
    return m;
}

/// Cycle notation on 1-based points, e.g. "(1,6,5,4,3,2)(7,12,11,10,9,8)".
/// Fixed points are omitted; the identity prints as "()".
inline std::string cycle_notation(const Permutation& p) {
    std::string s;
    for (const auto& c : cycles_of(p)) {
        if (c.size() < 2) continue;
        s += '(';
        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i] + 1);
        s += ')';
    }
    return s.empty() ? "()" : s;
}

inline Permutation parse_cycles(std::string_view text, int n) {
    Permutation p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<int> cyc;
    int num = -1;
    for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
            num = (num < 0 ? 0 : num * 10) + (ch - '0');
            continue;
        }
        if (num >= 0) {
            cyc.push_back(num - 1);
            num = -1;
        }
        if (ch == ')') {
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
                if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("cycle point out of range");
                p[a] = b;
            }
            cyc.clear();
        }
    }
    return p;
}

/// True when the map has an edge whose two darts sit at the same vertex.
inline bool has_loop(const CombMap& m) {
    std::vector<int> vert(m.rot.size());
    auto vs = vertices(m);
    for (int v = 0; v < static_cast<int>(vs.size()); ++v)
        for (int d : vs[v]) vert[d] = v;
    for (int d = 0; d < m.num_darts(); ++d)
        if (vert[d] == vert[m.opp[d]]) return true;
    return false;
}

inline std::vector<int> vertex_of_darts(const CombMap& m) {
    std::vector<int> vert(m.rot.size());
    auto vs = vertices(m);
    for (int v = 0; v < static_cast<int>(vs.size()); ++v)
        for (int d : vs[v]) vert[d] = v;
    return vert;
}

/// No loops and no two edges joining the same pair of vertices.
inline bool is_simple(const CombMap& m) {
    auto vert = vertex_of_darts(m);
    std::map<std::pair<int, int>, int> seen;
    for (int d = 0; d < m.num_darts(); ++d) {
        int a = vert[d], b = vert[m.opp[d]];
        if (a == b) return false;
        if (a < b && ++seen[{a, b}] > 1) return false;
    }
    return true;
}

/// Rotations of a map as labelled tuples (edge label = 1 + index of the edge
/// in order of its smaller dart), starting each vertex at its smallest dart.
inline std::vector<std::vector<int>> rotations_of(const CombMap& m) {
    std::vector<int> edge(m.rot.size(), 0);
    int next = 1;
    for (int d = 0; d < m.num_darts(); ++d)
        if (d < m.opp[d]) edge[d] = edge[m.opp[d]] = next++;
    std::vector<std::vector<int>> out;
    for (const auto& v : vertices(m)) {
        std::vector<int> r;
        for (int d : v) r.push_back(edge[d]);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace tricross
