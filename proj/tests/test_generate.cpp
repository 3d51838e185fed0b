#include <gtest/gtest.h>

#include <random>
#include <set>

#include "tricross/tricross.hpp"

using namespace tricross;

namespace {

const char* kShadow8 =
    "PD[X[1,4,2,5],X[3,8,4,9],X[12,6,13,5],X[13,16,14,1],X[9,14,10,15],X[15,10,16,11],X[6,12,7,11],X[7,2,8,3]]";

const ProjectionCatalogs& catalogs(int n) {
    static std::map<int, ProjectionCatalogs> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, generate_all(n)).first;
    return it->second;
}

// Removing two distinct edges splits the vertex set.
bool has_two_edge_cut(const CombMap& m) {
    auto vs = vertices(m);
    auto vert = vertex_of_darts(m);
    std::vector<int> edges;
    for (int d = 0; d < m.num_darts(); ++d)
        if (d < m.opp[d]) edges.push_back(d);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            std::set<int> cut{edges[i], m.opp[edges[i]], edges[j], m.opp[edges[j]]};
            std::vector<char> seen(vs.size(), 0);
            std::vector<int> stack{0};
            seen[0] = 1;
            int reached = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int d : vs[v]) {
                    if (cut.count(d)) continue;
                    int w = vert[m.opp[d]];
                    if (!seen[w]) {
                        seen[w] = 1;
                        ++reached;
                        stack.push_back(w);
                    }
                }
            }
            if (reached != static_cast<int>(vs.size())) return true;
        }
    return false;
}

bool brute_prime_reduced(const CombMap& m) {
    for (int deg : degrees(faces(m)))
        if (deg == 1) return false;
    return !has_two_edge_cut(m);
}

std::vector<std::vector<int>> brute_matchings(const PdCode& pd) {
    const int n = static_cast<int>(pd.size());
    std::map<int, std::vector<int>> at;
    for (int c = 0; c < n; ++c)
        for (int e : pd.crossings[c]) at[e].push_back(c);
    std::vector<int> labels;
    for (const auto& [e, cs] : at)
        if (cs[0] != cs[1]) labels.push_back(e);
    std::vector<std::vector<int>> out;
    if (n % 2) return out;
    const int k = static_cast<int>(labels.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (__builtin_popcount(mask) != n / 2) continue;
        std::vector<int> cover(n, 0), chosen;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) {
                chosen.push_back(labels[i]);
                for (int c : at[labels[i]]) ++cover[c];
            }
        if (std::all_of(cover.begin(), cover.end(), [](int x) { return x == 1; })) out.push_back(chosen);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Generate, PublishedCountsUpToFour) {
    for (int n = 2; n <= 4; ++n)
        for (const auto& r : check_counts(catalogs(n))) EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
    EXPECT_EQ(catalogs(1).th.th.size(), 2u);
}

TEST(Generate, ContractionCandidatesOfTheEightCrossingShadow) {
    auto pd = parse_pd(kShadow8);
    auto cands = contraction_candidates(pd);
    EXPECT_NE(std::find(cands.begin(), cands.end(), std::vector<int>{5, 8, 11, 14}), cands.end());
    EXPECT_EQ(cands, brute_matchings(pd));
    EXPECT_TRUE(check_contraction_example().pass);
    EXPECT_TRUE(contraction_candidates(parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]")).empty());
}

TEST(Generate, ContractionCandidatesMatchSubsetEnumeration) {
    for (int c : {4, 6})
        for (const auto& s : gen_shadows(c)) EXPECT_EQ(contraction_candidates(s.pd), brute_matchings(s.pd));
}

TEST(Generate, ContractionKeepsFacesAndMergesVertices) {
    for (int c : {4, 6, 8})
        for (const auto& s : gen_shadows(c))
            for (const auto& mt : contraction_candidates(s.pd)) {
                auto before = map_from_code(s.pd);
                auto after = map_from_code(contract(s.pd, mt));
                EXPECT_EQ(vertices(after).size(), vertices(before).size() - mt.size());
                EXPECT_EQ(after.num_darts() / 2, before.num_darts() / 2 - static_cast<int>(mt.size()));
                EXPECT_EQ(faces(after).size(), faces(before).size());
                for (int v : degrees(vertices(after))) EXPECT_EQ(v, 6);
            }
    EXPECT_THROW(contract(parse_pd(kShadow8), {5, 8, 11}), std::invalid_argument);
    EXPECT_THROW(contract(parse_pd(kShadow8), {1, 4, 11, 14}), std::invalid_argument);
}

TEST(Generate, PrimalityFilterMatchesTwoEdgeCuts) {
    std::mt19937 rng(77);
    int prime = 0, composite = 0;
    for (int i = 0; i < 3000; ++i) {
        auto m = medial(random_planar_map(rng, 2 + i % 5));
        bool expect = brute_prime_reduced(m);
        EXPECT_EQ(is_prime_reduced_shadow(m), expect);
        (expect ? prime : composite)++;
    }
    EXPECT_GT(prime, 100);
    EXPECT_GT(composite, 100);
    for (int c = 2; c <= 6; ++c)
        for (const auto& s : gen_shadows(c)) EXPECT_TRUE(brute_prime_reduced(s.map));
}

TEST(Generate, ShadowsAreDistinctSphericalAndFourValent) {
    for (int c = 2; c <= 8; ++c) {
        std::set<CanonicalForm> forms;
        for (const auto& s : gen_shadows(c)) {
            EXPECT_EQ(euler_characteristic(s.map), 2);
            for (int v : degrees(vertices(s.map))) EXPECT_EQ(v, 4);
            EXPECT_TRUE(forms.insert(canonical_form(s.map, true)).second);
        }
    }
    EXPECT_THROW(gen_shadows(12, 10), ResourceLimitError);
}

TEST(Generate, TbClassesPartitionTa) {
    for (int n = 2; n <= 4; ++n) {
        const auto& p = catalogs(n);
        std::vector<int> class_of;
        auto tb = gen_Tb(p.ta, &class_of);
        EXPECT_EQ(tb, p.tb);
        std::vector<int> hits(tb.size(), 0);
        for (std::size_t i = 0; i < p.ta.size(); ++i) {
            ASSERT_GE(class_of[i], 0);
            ++hits[class_of[i]];
            EXPECT_TRUE(isomorphic(map_from_code(p.ta[i].code), map_from_code(tb[class_of[i]]), true).has_value());
        }
        for (int h : hits) EXPECT_GT(h, 0);
        for (std::size_t i = 0; i < tb.size(); ++i)
            for (std::size_t j = i + 1; j < tb.size(); ++j)
                EXPECT_NE(projection_form(tb[i]), projection_form(tb[j]));
        for (const auto& t : p.ta)
            for (int v : degrees(vertices(map_from_code(t.code)))) EXPECT_EQ(v, 6);
    }
}

TEST(Generate, ThOrbitsAccountForEveryFilteredItem) {
    for (int n = 2; n <= 4; ++n) {
        const auto& th = catalogs(n).th;
        EXPECT_EQ(std::accumulate(th.orbit_sizes.begin(), th.orbit_sizes.end(), 0), th.filtered);
        EXPECT_EQ(th.orbit_sizes.size(), th.th.size());
        for (const auto& p : th.th0) {
            EXPECT_NE(std::find(th.th.begin(), th.th.end(), p), th.th.end());
            for (int k : loops_per_crossing(p)) EXPECT_EQ(k, 0);
        }
        for (const auto& p : th.th)
            for (int k : loops_per_crossing(p)) EXPECT_LE(k, 1);
        // the loop-slide orbit of one representative holds no other
        std::map<CanonicalForm, int> rep_of;
        for (std::size_t i = 0; i < th.th.size(); ++i) rep_of[projection_form(th.th[i])] = static_cast<int>(i);
        for (std::size_t i = 0; i < th.th.size(); ++i) {
            std::set<CanonicalForm> seen{projection_form(th.th[i])};
            std::vector<SPdCode> queue{th.th[i]};
            while (!queue.empty()) {
                auto q = queue.back();
                queue.pop_back();
                for (int c : detect_m2(q)) {
                    auto s = m2_projection(q, c);
                    auto f = projection_form(s);
                    if (!seen.insert(f).second) continue;
                    if (auto it = rep_of.find(f); it != rep_of.end()) EXPECT_EQ(it->second, static_cast<int>(i));
                    queue.push_back(s);
                }
            }
        }
    }
}

TEST(Generate, LoopSlideIsAnInvolutionOnProjections) {
    for (const auto& p : catalogs(3).tb)
        for (int c : detect_m2(p)) {
            auto back = m2_projection(m2_projection(p, c), c);
            EXPECT_EQ(projection_form(back), projection_form(p));
        }
}

TEST(Generate, HexagonOnlyDualsAreLoopFree) {
    for (int n = 2; n <= 4; ++n)
        for (const auto& g : catalogs(n).gr) {
            EXPECT_FALSE(has_loop(g.map));
            EXPECT_TRUE(is_simple(g.map));
            EXPECT_EQ(g.quads + g.hexes, static_cast<int>(faces(g.map).size()));
            EXPECT_EQ(g.quads + g.hexes, n);
            EXPECT_EQ(euler_characteristic(g.map), 2);
        }
}

TEST(Generate, Deterministic) {
    auto a = generate_all(3, 1), b = generate_all(3, 4);
    EXPECT_EQ(a.tb, b.tb);
    EXPECT_EQ(a.th.th, b.th.th);
    EXPECT_EQ(a.th.th0, b.th.th0);
    ASSERT_EQ(a.ta.size(), b.ta.size());
    for (std::size_t i = 0; i < a.ta.size(); ++i) EXPECT_EQ(a.ta[i].code, b.ta[i].code);
}
