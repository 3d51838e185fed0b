#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "codes.hpp"
#include "poly.hpp"

namespace tricross {

/// Classical diagram in the usual PD convention: X[a,b,c,d] lists the edge
/// ends counterclockwise starting from the incoming under-strand, so the
/// under-strand runs a -> c.  signs[i] is +1 when the over-strand runs d -> b.
/// Components without crossings are counted in free_loops.
struct DecoratedPd {
    PdCode pd;
    std::vector<int> signs;
    int free_loops = 0;

    std::size_t num_crossings() const noexcept { return pd.crossings.size(); }
    int writhe() const { return std::accumulate(signs.begin(), signs.end(), 0); }

    friend bool operator==(const DecoratedPd&, const DecoratedPd&) = default;
};

class CrossingCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string serialize(const DecoratedPd& d) {
    std::string s = serialize(d.pd) + " signs[";
    for (std::size_t i = 0; i < d.signs.size(); ++i) s += (i ? "," : "") + std::to_string(d.signs[i]);
    s += "]";
    if (d.free_loops) s += " loops[" + std::to_string(d.free_loops) + "]";
    return s;
}

/// Orient an unoriented decorated code (under-strand at slots 0/2) and bring
/// it to the PD convention.  preferred_heads lists (crossing, slot) ends that
/// should be incoming; a component without a preference is walked so that
/// the first occurrence of its smallest label is the end it enters.
inline DecoratedPd decorate(const PdCode& under02, int free_loops = 0,
                            const std::vector<std::pair<int, int>>& preferred_heads = {}) {
    validate(under02);
    const auto& t = under02.crossings;
    EdgeEnds<4> ends(t);
    std::map<std::pair<int, int>, bool> incoming;
    auto walk = [&](std::pair<int, int> head) {
        while (!incoming.count(head)) {
            int e = t[head.first][head.second];
            incoming[head] = true;
            incoming[ends.other(e, head)] = false;
            int q = (head.second + 2) % 4;
            head = ends.other(t[head.first][q], {head.first, q});
        }
    };
    for (auto h : preferred_heads)
        if (!incoming.count(h)) walk(h);
    for (const auto& [label, two] : ends.ends)
        if (!incoming.count(two[0])) walk(std::min(two[0], two[1]));
    DecoratedPd d;
    d.free_loops = free_loops;
    for (int c = 0; c < static_cast<int>(t.size()); ++c) {
        auto x = t[c];
        int sign;
        if (incoming.at({c, 0})) {
            sign = incoming.at({c, 3}) ? 1 : -1;
        } else {
            x = rotate_left(x, 2);
            sign = incoming.at({c, 1}) ? 1 : -1;
        }
        d.pd.crossings.push_back(x);
        d.signs.push_back(sign);
    }
    return d;
}

/// PD code whose labels increase along every component (the tabulation
/// convention): slot 0 is the incoming under end and the over-strand
/// direction is read off the label order.  On a component of two edges the
/// labels read the same both ways, so its direction comes from the slot 0
/// ends it has elsewhere.
inline DecoratedPd decorate_consecutive(const PdCode& pd) {
    validate(pd);
    std::map<int, std::pair<int, int>> range;
    for (const auto& cyc : components(pd).components) {
        auto [lo, hi] = std::minmax_element(cyc.begin(), cyc.end());
        for (int e : cyc) range[e] = {*lo, *hi};
    }
    auto succ = [&](int e) { return e == range[e].second ? range[e].first : e + 1; };
    std::vector<std::pair<int, int>> heads;
    for (int c = 0; c < static_cast<int>(pd.size()); ++c) heads.push_back({c, 0});
    for (int c = 0; c < static_cast<int>(pd.size()); ++c) {
        const auto& x = pd.crossings[c];
        bool up = succ(x[3]) == x[1], down = succ(x[1]) == x[3];
        if (up != down) heads.push_back({c, up ? 3 : 1});
    }
    return decorate(pd, 0, heads);
}

/// Every edge must have exactly one incoming end under the stored orientation.
inline void check_decoration(const DecoratedPd& d) {
    if (d.signs.size() != d.pd.crossings.size()) throw std::invalid_argument("sign vector length mismatch");
    if (d.free_loops < 0) throw std::invalid_argument("negative loop count");
    validate(d.pd);
    std::map<int, int> in;
    for (std::size_t c = 0; c < d.pd.crossings.size(); ++c) {
        const auto& x = d.pd.crossings[c];
        if (d.signs[c] != 1 && d.signs[c] != -1) throw std::invalid_argument("signs must be +1 or -1");
        ++in[x[0]];
        ++in[d.signs[c] == 1 ? x[3] : x[1]];
    }
    for (const auto& x : d.pd.crossings)
        for (int e : x)
            if (in[e] != 1) throw std::invalid_argument("inconsistent orientation at edge " + std::to_string(e));
}

inline int component_count(const DecoratedPd& d) {
    return static_cast<int>(components(d.pd).component_count()) + d.free_loops;
}

/// Writhe restricted to crossings of a component with itself; unlike the
/// full writhe it does not depend on the orientation chosen.
inline int self_writhe(const DecoratedPd& d) {
    std::map<int, int> comp;
    auto cs = components(d.pd).components;
    for (int i = 0; i < static_cast<int>(cs.size()); ++i)
        for (int e : cs[i]) comp[e] = i;
    int w = 0;
    for (std::size_t c = 0; c < d.pd.crossings.size(); ++c)
        if (comp[d.pd.crossings[c][0]] == comp[d.pd.crossings[c][1]]) w += d.signs[c];
    return w;
}

// ---------------------------------------------------------------------------
// skein engine

struct KauffmanOptions {
    bool reduce = true;  // Reidemeister I/II removal and clasp pivots
    bool memo = true;
    int crossing_cap = 16;
};

namespace kdetail {

/// Slot diagram: crossing c owns slots 4c..4c+3 counterclockwise with the
/// under-strand on slots 0/2; nb[s] is the slot joined to s by an edge.
struct Slots {
    std::vector<int> nb;
    int loops = 0;

    int crossings() const { return static_cast<int>(nb.size()) / 4; }
};

inline int cx(int s) { return s >> 2; }
inline int loc(int s) { return s & 3; }
inline int slot(int c, int k) { return 4 * c + (k & 3); }

inline Slots from_pd(const PdCode& under02, int loops) {
    Slots d;
    d.loops = loops;
    d.nb.assign(4 * under02.size(), -1);
    std::map<int, int> first;
    for (int c = 0; c < static_cast<int>(under02.size()); ++c)
        for (int k = 0; k < 4; ++k) {
            int e = under02.crossings[c][k];
            auto it = first.find(e);
            if (it == first.end()) {
                first[e] = slot(c, k);
            } else {
                d.nb[it->second] = slot(c, k);
                d.nb[slot(c, k)] = it->second;
            }
        }
    return d;
}

/// Drop the crossings flagged in `gone`.  thru[s] is where a strand entering
/// removed slot s leaves its crossing.  Surviving slots are rejoined along
/// these routes; routes that close up become free loops.  `keep` (optional)
/// carries a per-slot payload to the surviving slots.
inline Slots remove_crossings(const Slots& d, const std::vector<char>& gone, const std::vector<int>& thru,
                              std::vector<char>* keep = nullptr) {
    const int n = d.crossings();
    std::vector<int> newidx(n, -1);
    int m = 0;
    for (int c = 0; c < n; ++c)
        if (!gone[c]) newidx[c] = m++;
    Slots r;
    r.loops = d.loops;
    r.nb.assign(4 * m, -1);
    std::vector<char> kept;
    if (keep) kept.assign(4 * m, 0);
    auto mapped = [&](int s) { return slot(newidx[cx(s)], loc(s)); };
    std::vector<char> used(d.nb.size(), 0);
    for (int s = 0; s < static_cast<int>(d.nb.size()); ++s) {
        if (gone[cx(s)]) continue;
        int t = d.nb[s];
        while (gone[cx(t)]) {
            int u = thru[t];
            used[t] = used[u] = 1;
            t = d.nb[u];
        }
        r.nb[mapped(s)] = mapped(t);
        if (keep) kept[mapped(s)] = (*keep)[s];
    }
    for (int s = 0; s < static_cast<int>(d.nb.size()); ++s) {
        if (!gone[cx(s)] || used[s]) continue;
        int t = s;
        do {
            int u = thru[t];
            used[t] = used[u] = 1;
            t = d.nb[u];
        } while (!used[t]);
        ++r.loops;
    }
    if (keep) *keep = std::move(kept);
    return r;
}

inline std::vector<int> straight_thru(int n) {
    std::vector<int> th(4 * n);
    for (int s = 0; s < 4 * n; ++s) th[s] = slot(cx(s), loc(s) + 2);
    return th;
}

/// Crossing c switched: new slot k is old slot k+1.
inline Slots switched(const Slots& d, int c) {
    Slots r = d;
    auto remap = [&](int s) { return cx(s) == c ? slot(c, loc(s) + 3) : s; };
    for (int s = 0; s < static_cast<int>(d.nb.size()); ++s) r.nb[remap(s)] = remap(d.nb[s]);
    return r;
}

/// Crossing c smoothed, joining slots (0,1),(2,3) when `first`, else (0,3),(1,2).
inline Slots smoothed(const Slots& d, int c, bool first) {
    std::vector<char> gone(d.crossings(), 0);
    gone[c] = 1;
    std::vector<int> th = straight_thru(d.crossings());
    for (int k = 0; k < 4; ++k) th[slot(c, k)] = slot(c, first ? (k ^ 1) : (3 - k));
    return remove_crossings(d, gone, th);
}

/// A curl at c joins slots (k, k+1); returns k or -1.
inline int curl_at(const Slots& d, int c) {
    for (int k = 0; k < 4; ++k)
        if (d.nb[slot(c, k)] == slot(c, k + 1)) return k;
    return -1;
}

/// A bigon: slot s = (c1,p) joined to (c2,q) and (c1,p+1) joined to (c2,q-1).
/// It can be removed by Reidemeister II iff p and q have equal parity.
inline bool is_bigon(const Slots& d, int s) {
    int t = d.nb[s];
    int c1 = cx(s), c2 = cx(t);
    if (c1 == c2) return false;
    return d.nb[slot(c1, loc(s) + 1)] == slot(c2, loc(t) + 3);
}

/// Exhaustive Reidemeister I and II removal.  Returns the a-exponent picked up
/// from curls.  `keep` is an optional per-slot payload carried along.
inline int reduce(Slots& d, std::vector<char>* keep = nullptr) {
    int apow = 0;
    for (bool changed = true; changed;) {
        changed = false;
        const int n = d.crossings();
        for (int c = 0; c < n; ++c) {
            int k = curl_at(d, c);
            if (k < 0) continue;
            apow += (k % 2 == 0) ? 1 : -1;
            std::vector<char> gone(n, 0);
            gone[c] = 1;
            d = remove_crossings(d, gone, straight_thru(n), keep);
            changed = true;
            break;
        }
        if (changed) continue;
        for (int s = 0; s < static_cast<int>(d.nb.size()); ++s) {
            if (!is_bigon(d, s) || (loc(s) & 1) != (loc(d.nb[s]) & 1)) continue;
            std::vector<char> gone(n, 0);
            gone[cx(s)] = gone[cx(d.nb[s])] = 1;
            d = remove_crossings(d, gone, straight_thru(n), keep);
            changed = true;
            break;
        }
    }
    return apow;
}

/// Connected pieces of the crossing graph (free loops dropped).
inline std::vector<Slots> split(const Slots& d) {
    const int n = d.crossings();
    std::vector<int> piece(n, -1);
    std::vector<std::vector<int>> members;
    for (int r = 0; r < n; ++r) {
        if (piece[r] >= 0) continue;
        const int id = static_cast<int>(members.size());
        members.emplace_back();
        std::vector<int> st{r};
        piece[r] = id;
        while (!st.empty()) {
            int c = st.back();
            st.pop_back();
            members[id].push_back(c);
            for (int k = 0; k < 4; ++k) {
                int c2 = cx(d.nb[slot(c, k)]);
                if (piece[c2] < 0) {
                    piece[c2] = id;
                    st.push_back(c2);
                }
            }
        }
    }
    if (members.size() <= 1) {
        Slots one = d;
        one.loops = 0;
        return members.empty() ? std::vector<Slots>{} : std::vector<Slots>{one};
    }
    std::vector<Slots> out;
    for (auto& mem : members) {
        std::sort(mem.begin(), mem.end());
        std::vector<int> idx(n, -1);
        for (int i = 0; i < static_cast<int>(mem.size()); ++i) idx[mem[i]] = i;
        Slots p;
        p.nb.resize(4 * mem.size());
        for (int i = 0; i < static_cast<int>(mem.size()); ++i)
            for (int k = 0; k < 4; ++k) {
                int t = d.nb[slot(mem[i], k)];
                p.nb[slot(i, k)] = slot(idx[cx(t)], loc(t));
            }
        out.push_back(std::move(p));
    }
    return out;
}

/// Least code over every crossing as root with either under-slot first.
/// Rotating a crossing by two slots keeps over/under, so this identifies
/// diagrams up to planar isotopy and relabelling.
inline std::string canonical_key(const Slots& d) {
    const int n = d.crossings();
    std::vector<int> best, cur, idx(n), base(n), order;
    cur.reserve(4 * n);
    order.reserve(n);
    for (int r = 0; r < n; ++r)
        for (int b : {0, 2}) {
            std::fill(idx.begin(), idx.end(), -1);
            order.assign(1, r);
            idx[r] = 0;
            base[r] = b;
            cur.clear();
            bool tied = !best.empty();
            bool worse = false;
            for (int i = 0; i < static_cast<int>(order.size()) && !worse; ++i) {
                int c = order[i];
                for (int j = 0; j < 4; ++j) {
                    int t = d.nb[slot(c, base[c] + j)];
                    int c2 = cx(t);
                    if (idx[c2] < 0) {
                        idx[c2] = static_cast<int>(order.size());
                        base[c2] = loc(t) & ~1;
                        order.push_back(c2);
                    }
                    int v = 4 * idx[c2] + ((loc(t) - base[c2]) & 3);
                    if (tied) {
                        int bv = best[cur.size()];
                        if (v > bv) {
                            worse = true;
                            break;
                        }
                        if (v < bv) tied = false;
                    }
                    cur.push_back(v);
                }
            }
            if (!worse && (best.empty() || cur < best)) best = cur;
        }
    std::string key(reinterpret_cast<const char*>(best.data()), best.size() * sizeof(int));
    return key;
}

struct Pass {
    int crossing;
    int enter;  // local slot of entry
};

/// Strand components as sequences of crossing passes.
inline std::vector<std::vector<Pass>> strand_passes(const Slots& d) {
    std::vector<char> seen(d.nb.size(), 0);
    std::vector<std::vector<Pass>> out;
    for (int s0 = 0; s0 < static_cast<int>(d.nb.size()); ++s0) {
        if (seen[s0]) continue;
        std::vector<Pass> comp;
        int e = s0;
        while (!seen[e]) {
            int x = slot(cx(e), loc(e) + 2);
            seen[e] = seen[x] = 1;
            comp.push_back({cx(e), loc(e)});
            e = d.nb[x];
        }
        out.push_back(std::move(comp));
    }
    return out;
}

/// Sign of a crossing from the directions of its two passes.
inline int pass_sign(int under_enter, int over_enter) {
    int u = under_enter == 0 ? 1 : -1;
    int o = over_enter == 3 ? 1 : -1;
    return u * o;
}

struct Plan {
    int bad = 0;
    int pivot = -1;
    int self_writhe = 0;
    int components = 0;
};

/// Best descending traversal: each component gets its own base point and
/// direction, and the components are stacked in the best order.  A crossing is
/// bad when the strand reaching it first goes under.
inline Plan descending_plan(const Slots& d) {
    auto comps = strand_passes(d);
    const int k = static_cast<int>(comps.size());
    const int n = d.crossings();
    std::vector<int> comp_of_pass_under(n, -1), comp_of_pass_over(n, -1), under_enter(n), over_enter(n);
    for (int i = 0; i < k; ++i)
        for (const auto& p : comps[i]) {
            if (p.enter % 2 == 0) {
                comp_of_pass_under[p.crossing] = i;
                under_enter[p.crossing] = p.enter;
            } else {
                comp_of_pass_over[p.crossing] = i;
                over_enter[p.crossing] = p.enter;
            }
        }
    Plan plan;
    plan.components = k;
    for (int c = 0; c < n; ++c)
        if (comp_of_pass_under[c] == comp_of_pass_over[c]) plan.self_writhe += pass_sign(under_enter[c], over_enter[c]);

    std::vector<int> stamp(n, -1);
    int stamp_id = 0;
    std::vector<int> self_first_bad(k, -1);
    for (int i = 0; i < k; ++i) {
        const auto& ps = comps[i];
        const int len = static_cast<int>(ps.size());
        int best = -1, best_first = -1;
        for (int dir = 0; dir < 2 && best != 0; ++dir)
            for (int st = 0; st < len && best != 0; ++st) {
                ++stamp_id;
                int bad = 0, first = -1;
                for (int j = 0; j < len; ++j) {
                    int idx = dir == 0 ? (st + j) % len : (st - j + len) % len;
                    const Pass& p = ps[idx];
                    if (comp_of_pass_under[p.crossing] != comp_of_pass_over[p.crossing]) continue;
                    if (stamp[p.crossing] == stamp_id) continue;
                    stamp[p.crossing] = stamp_id;
                    if (p.enter % 2 == 0) {
                        ++bad;
                        if (first < 0) first = p.crossing;
                        if (best >= 0 && bad >= best) break;
                    }
                }
                if (best < 0 || bad < best) {
                    best = bad;
                    best_first = first;
                }
            }
        plan.bad += best;
        self_first_bad[i] = best_first;
    }
    if (plan.pivot < 0)
        for (int i = 0; i < k && plan.pivot < 0; ++i)
            if (self_first_bad[i] >= 0) plan.pivot = self_first_bad[i];

    if (k > 1) {
        std::vector<std::vector<int>> under(k, std::vector<int>(k, 0));
        for (int c = 0; c < n; ++c) {
            int a = comp_of_pass_under[c], b = comp_of_pass_over[c];
            if (a != b) ++under[a][b];
        }
        std::vector<int> perm(k), best_perm;
        std::iota(perm.begin(), perm.end(), 0);
        int best = -1;
        auto cost = [&](const std::vector<int>& pr) {
            int s = 0;
            for (int x = 0; x < k; ++x)
                for (int y = x + 1; y < k; ++y) s += under[pr[x]][pr[y]];
            return s;
        };
        if (k <= 7) {
            do {
                int cst = cost(perm);
                if (best < 0 || cst < best) {
                    best = cst;
                    best_perm = perm;
                }
            } while (best != 0 && std::next_permutation(perm.begin(), perm.end()));
        } else {
            best_perm = perm;
            best = cost(perm);
        }
        plan.bad += best;
        if (plan.pivot < 0 && best > 0) {
            std::vector<int> rank(k);
            for (int x = 0; x < k; ++x) rank[best_perm[x]] = x;
            for (int c = 0; c < n; ++c) {
                int a = comp_of_pass_under[c], b = comp_of_pass_over[c];
                if (a != b && rank[a] < rank[b]) {
                    plan.pivot = c;
                    break;
                }
            }
        }
    }
    return plan;
}

}  // namespace kdetail

/// Regular-isotopy Kauffman polynomial Λ (unoriented) with unknot = 1:
/// Λ(D) + Λ(D') = z(Λ(D0) + Λ(D∞)) at any crossing, Λ(curl) = a^{±1}Λ.
class KauffmanEngine {
public:
    explicit KauffmanEngine(KauffmanOptions opts = {}) : opts_(opts) {}

    const KauffmanOptions& options() const noexcept { return opts_; }
    std::size_t memo_size() const noexcept { return memo_.size(); }
    void clear() { memo_.clear(); }

    LaurentPoly2 lambda(const DecoratedPd& d) {
        if (static_cast<int>(d.num_crossings()) > opts_.crossing_cap)
            throw CrossingCapError("diagram has " + std::to_string(d.num_crossings()) + " crossings, cap is " +
                                   std::to_string(opts_.crossing_cap));
        if (d.num_crossings() == 0 && d.free_loops == 0) throw std::invalid_argument("empty diagram");
        return eval(kdetail::from_pd(d.pd, d.free_loops));
    }

    LaurentPoly2 lambda_slots(const kdetail::Slots& s) { return eval(s); }

private:
    KauffmanOptions opts_;
    std::unordered_map<std::string, LaurentPoly2> memo_;

    LaurentPoly2 eval(kdetail::Slots d) {
        int apow = opts_.reduce ? kdetail::reduce(d) : 0;
        auto pieces = kdetail::split(d);
        const int parts = d.loops + static_cast<int>(pieces.size());
        LaurentPoly2 result = LaurentPoly2::delta().pow(static_cast<unsigned>(std::max(parts - 1, 0)));
        result = result.shifted(apow, 0);
        for (const auto& p : pieces) result *= eval_connected(p);
        return result;
    }

    LaurentPoly2 eval_connected(const kdetail::Slots& d) {
        std::string key;
        if (opts_.memo) {
            key = kdetail::canonical_key(d);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        LaurentPoly2 val;
        auto plan = kdetail::descending_plan(d);
        if (plan.bad == 0) {
            val = LaurentPoly2::delta().pow(static_cast<unsigned>(plan.components - 1)).shifted(plan.self_writhe, 0);
        } else {
            int pivot = plan.pivot;
            if (opts_.reduce) {
                // switching one crossing of a clasp makes it removable
                for (int s = 0; s < static_cast<int>(d.nb.size()); ++s)
                    if (kdetail::is_bigon(d, s)) {
                        pivot = kdetail::cx(s);
                        break;
                    }
            }
            LaurentPoly2 sm = eval(kdetail::smoothed(d, pivot, true)) + eval(kdetail::smoothed(d, pivot, false));
            val = sm.shifted(0, 1) - eval(kdetail::switched(d, pivot));
        }
        if (opts_.memo) memo_.emplace(std::move(key), val);
        return val;
    }
};

/// Per-thread engine with the default options; its memo persists across calls.
inline KauffmanEngine& thread_engine() {
    thread_local KauffmanEngine engine;
    return engine;
}

inline LaurentPoly2 kauffman_lambda(const DecoratedPd& d) { return thread_engine().lambda(d); }

/// F = a^(-writhe) Λ, the ambient-isotopy Kauffman polynomial under the
/// stored orientation.
inline LaurentPoly2 kauffman_f(const DecoratedPd& d) {
    check_decoration(d);
    return kauffman_lambda(d).shifted(-d.writhe(), 0);
}

inline LaurentPoly2 kauffman_f(const DecoratedPd& d, KauffmanEngine& engine) {
    check_decoration(d);
    return engine.lambda(d).shifted(-d.writhe(), 0);
}

/// a^(-self writhe) Λ: equals F for knots and does not depend on how the
/// components of a link are oriented.  Used for identification.
inline LaurentPoly2 kauffman_unoriented(const DecoratedPd& d) {
    return kauffman_lambda(d).shifted(-self_writhe(d), 0);
}

inline LaurentPoly2 kauffman_unoriented(const DecoratedPd& d, KauffmanEngine& engine) {
    return engine.lambda(d).shifted(-self_writhe(d), 0);
}

// ---------------------------------------------------------------------------
// simplification

/// Greedy Reidemeister I and II removal, keeping the orientation.  The result
/// has at most as many crossings and the same F; its labels run 1..2c along
/// the components.
inline DecoratedPd simplify_pd(const DecoratedPd& d) {
    check_decoration(d);
    using namespace kdetail;
    Slots s = from_pd(d.pd, d.free_loops);
    std::vector<char> in(s.nb.size(), 0);
    for (int c = 0; c < static_cast<int>(d.num_crossings()); ++c) {
        in[slot(c, 0)] = 1;
        in[slot(c, d.signs[c] == 1 ? 3 : 1)] = 1;
    }
    reduce(s, &in);
    // label edges along the orientation, component by component
    const int n = s.crossings();
    std::vector<int> label(s.nb.size(), 0);
    int next = 0;
    for (int s0 = 0; s0 < static_cast<int>(s.nb.size()); ++s0) {
        if (!in[s0] || label[s0]) continue;
        int e = s0;
        do {
            label[e] = label[s.nb[e]] = ++next;  // the edge entering slot e
            e = s.nb[slot(cx(e), loc(e) + 2)];
        } while (e != s0);
    }
    DecoratedPd out;
    out.free_loops = s.loops;
    for (int c = 0; c < n; ++c) {
        std::array<int, 4> x{label[slot(c, 0)], label[slot(c, 1)], label[slot(c, 2)], label[slot(c, 3)]};
        bool over_in_3 = in[slot(c, 3)] != 0;
        if (!in[slot(c, 0)]) {
            x = rotate_left(x, 2);
            over_in_3 = in[slot(c, 1)] != 0;
        }
        out.pd.crossings.push_back(x);
        out.signs.push_back(over_in_3 ? 1 : -1);
    }
    return out;
}

}  // namespace tricross
