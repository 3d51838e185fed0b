#include <gtest/gtest.h>

#include <fstream>

#include "tricross/tricross.hpp"

using namespace tricross;

namespace {

const ReferenceTable& ref10() {
    static const ReferenceTable t = load_reference(TRICROSS_DATA_DIR "/reference_le10.csv");
    return t;
}

std::vector<std::pair<std::string, LaurentPoly2>> knotinfo_rows() {
    std::vector<std::pair<std::string, LaurentPoly2>> out;
    for (const auto& f : detail::read_csv_rows(TRICROSS_TEST_DATA "/knotinfo_kauffman_le10.csv", 2))
        out.push_back({f[0], LaurentPoly2::parse(f[1])});
    return out;
}

}  // namespace

TEST(Kauffman, MatchesKnotInfoUpToMirror) {
    auto rows = knotinfo_rows();
    ASSERT_EQ(rows.size(), 249u);
    for (const auto& [name, want] : rows) {
        const auto* e = ref10().find(name);
        ASSERT_NE(e, nullptr) << name;
        auto f = kauffman_f(e->pd);
        EXPECT_TRUE(f == want || f == want.mirrored()) << name << ": " << f.to_string();
        EXPECT_EQ(f, kauffman_unoriented(e->pd)) << name;
    }
}

TEST(Kauffman, Unknots) {
    DecoratedPd unknot;
    unknot.free_loops = 1;
    EXPECT_EQ(kauffman_f(unknot), LaurentPoly2::constant(1));
    EXPECT_EQ(kauffman_f(decorate_consecutive(parse_pd("PD[X[1,1,2,2]]"))), LaurentPoly2::constant(1));
    EXPECT_EQ(kauffman_f(decorate_consecutive(parse_pd("PD[X[2,1,1,2]]"))), LaurentPoly2::constant(1));
    DecoratedPd two;
    two.free_loops = 2;
    EXPECT_EQ(kauffman_f(two), LaurentPoly2::delta());
    EXPECT_EQ(kauffman_f(two), unlink_poly(2));
}

TEST(Kauffman, ReidemeisterInsertionsKeepF) {
    std::uint32_t seed = 100;
    for (const char* name : {"3_1", "4_1", "5_1", "5_2", "6_2", "7_4", "2^2_1", "4^2_1", "5^2_1", "6^3_2"}) {
        const auto* e = ref10().find(name);
        ASSERT_NE(e, nullptr) << name;
        auto t = check_reidemeister(e->pd, 60, seed++);
        EXPECT_EQ(t.failures, 0) << name << ": " << t.first_failure;
    }
}

TEST(Kauffman, EveryR2InsertionOnTheTrefoil) {
    const auto& d = ref10().find("3_1")->pd;
    const auto f = kauffman_f(d);
    auto edge = [&](int dart) { return d.pd.crossings[dart / 4][dart % 4]; };
    int tried = 0;
    for (const auto& face : faces(map_from_code(d.pd)))
        for (int d1 : face)
            for (int d2 : face) {
                if (edge(d1) == edge(d2)) continue;
                for (bool over : {false, true}) {
                    auto x = insert_r2(d, d1, d2, over);
                    ++tried;
                    EXPECT_EQ(x.num_crossings(), d.num_crossings() + 2);
                    EXPECT_EQ(euler_characteristic(map_from_code(x.pd)), 2);
                    EXPECT_EQ(kauffman_f(x), f) << serialize(x);
                }
            }
    EXPECT_GT(tried, 0);
}

TEST(Kauffman, EveryR1InsertionOnTheFigureEight) {
    const auto& d = ref10().find("4_1")->pd;
    const auto f = kauffman_f(d);
    std::set<int> signs;
    for (int c = 0; c < static_cast<int>(d.num_crossings()); ++c)
        for (int s = 0; s < 4; ++s)
            for (int v = 0; v < 8; ++v) {
                auto x = insert_r1(d, c, s, v);
                EXPECT_EQ(euler_characteristic(map_from_code(x.pd)), 2);
                EXPECT_EQ(kauffman_f(x), f) << serialize(x);
                signs.insert(x.signs.back());
            }
    EXPECT_EQ(signs.size(), 2u);
}

TEST(Kauffman, MemoAndReductionsDoNotChangeLambda) {
    KauffmanEngine fast(KauffmanOptions{true, true, 16});
    KauffmanEngine plain(KauffmanOptions{false, false, 16});
    int compared = 0;
    for (const auto& e : ref10().entries) {
        if (e.crossing_number > 8) continue;
        EXPECT_EQ(fast.lambda(e.pd), plain.lambda(e.pd)) << e.name;
        ++compared;
    }
    EXPECT_GT(compared, 50);
}

TEST(Kauffman, CrossingCap) {
    KauffmanEngine small(KauffmanOptions{true, true, 4});
    EXPECT_THROW(small.lambda(ref10().find("6_1")->pd), CrossingCapError);
}

TEST(Kauffman, TripleExpansionAgreesWithTabulatedPd) {
    for (const auto& row : load_minimal_rows(TRICROSS_DATA_DIR "/minimal_diagrams.csv")) {
        if (row.kind != "knot") continue;
        const auto* e = ref10().find(row.name);
        if (!e) continue;
        auto via_triple = kauffman_f(expand(diagram_from_code(parse_spd(row.code))));
        EXPECT_TRUE(via_triple == e->poly || via_triple == e->poly.mirrored()) << row.name;
    }
    for (const char* name : {"3_1", "4_1", "5_2", "6_1"}) {
        for (const auto& row : load_minimal_rows(TRICROSS_DATA_DIR "/minimal_diagrams.csv"))
            if (row.name == name)
                EXPECT_EQ(kauffman_f(expand(diagram_from_code(parse_spd(row.code)))), ref10().find(name)->poly) << name;
    }
}

TEST(Kauffman, SimplifyKeepsF) {
    std::mt19937 rng(8);
    for (const char* name : {"3_1", "5_2", "2^2_1", "6^3_2"}) {
        const auto& d = ref10().find(name)->pd;
        for (int i = 0; i < 20; ++i) {
            auto x = random_reidemeister(random_reidemeister(d, rng), rng);
            auto s = simplify_pd(x);
            EXPECT_LE(s.num_crossings(), x.num_crossings());
            EXPECT_EQ(kauffman_f(s), kauffman_f(d)) << serialize(x);
        }
    }
    EXPECT_EQ(simplify_pd(decorate_consecutive(parse_pd("PD[X[1,1,2,2]]"))).num_crossings(), 0u);
}

TEST(Kauffman, MirrorFlipsA) {
    for (const char* name : {"3_1", "5_1", "7_2", "2^2_1"}) {
        auto d = ref10().find(name)->pd;
        // a quarter turn of every tuple swaps over and under; slot k moves to k-1
        PdCode m = d.pd;
        for (auto& x : m.crossings) x = rotate_left(x, 1);
        std::vector<std::pair<int, int>> heads;
        for (auto [c, k] : detail::heads_of(d)) heads.push_back({c, (k + 3) % 4});
        auto md = decorate(m, d.free_loops, heads);
        EXPECT_EQ(md.writhe(), -d.writhe()) << name;
        EXPECT_EQ(kauffman_f(md), kauffman_f(d).mirrored()) << name;
    }
}
