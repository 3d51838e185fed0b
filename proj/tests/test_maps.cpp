#include <gtest/gtest.h>

#include <random>

#include "tricross/tricross.hpp"

using namespace tricross;

TEST(Maps, RotatedTuplePairHasThePrintedWitness) {
    // two-crossing projection, second copy with every tuple started one later
    auto p1 = generate_all(2).th.th.front();
    auto pr = rotated_pair(p1);
    ASSERT_NE(pr.p1, pr.p2);
    auto m1 = map_from_code(pr.p1), m2 = map_from_code(pr.p2);
    EXPECT_NE(m1, m2);
    EXPECT_EQ(cycle_notation(pr.s), "(1,6,5,4,3,2)(7,12,11,10,9,8)");
    EXPECT_TRUE(is_conjugator(m1, m2, pr.s));
    EXPECT_EQ(parse_cycles("(1,6,5,4,3,2)(7,12,11,10,9,8)", 12), pr.s);

    auto w = isomorphic(m1, m2, false);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(is_conjugator(m1, m2, *w));
    EXPECT_TRUE(is_conjugator(m1, m1, compose(inverse(pr.s), *w)));
    EXPECT_TRUE(check_rotated_pair(p1, "(1,6,5,4,3,2)(7,12,11,10,9,8)").pass);

    // the permutation-pair view: conjugating (sigma, tau) by s gives P2's pair
    auto st1 = sigma_tau(m1), st2 = sigma_tau(m2);
    EXPECT_EQ(compose(pr.s, compose(st1.sigma, inverse(pr.s))), st2.sigma);
    EXPECT_EQ(compose(pr.s, compose(st1.tau, inverse(pr.s))), st2.tau);
}

TEST(Maps, CanonicalFormAgreesWithBruteForce) {
    auto t = compare_isomorphism(1000, 8, 12345u);
    EXPECT_EQ(t.pairs, 1000);
    EXPECT_EQ(t.disagreements, 0) << t.first_disagreement;
    EXPECT_GT(t.isomorphic, 300);
    EXPECT_LT(t.isomorphic, 1000);
}

TEST(Maps, BruteForceSeparatesChiralMaps) {
    // some random maps are not isomorphic to their mirror images
    std::mt19937 rng(9);
    int chiral = 0;
    for (int i = 0; i < 300; ++i) {
        auto m = random_planar_map(rng, 7);
        if (!brute_force_isomorphic(m, mirror(m))) {
            ++chiral;
            EXPECT_NE(canonical_form(m, false), canonical_form(mirror(m), false));
            EXPECT_EQ(canonical_form(m, true), canonical_form(mirror(m), true));
        }
    }
    EXPECT_GT(chiral, 0);
}

TEST(Maps, SigmaTauRoundTrip) {
    std::mt19937 rng(4);
    for (int i = 0; i < 200; ++i) {
        auto m = random_planar_map(rng, 1 + i % 8);
        auto st = sigma_tau(m);
        auto prod = compose(st.sigma, st.tau);
        for (int d = 0; d < m.num_darts(); ++d) {
            EXPECT_NE(prod[d], d);
            EXPECT_EQ(prod[prod[d]], d);
        }
        EXPECT_EQ(from_sigma_tau(st), m);
        EXPECT_EQ(euler_characteristic(m), 2);
        EXPECT_EQ(dual(dual(m)), m);
        EXPECT_EQ(euler_characteristic(dual(m)), 2);
        EXPECT_EQ(parse_cycles(cycle_notation(st.sigma), m.num_darts()), st.sigma);
    }
}

TEST(Maps, CanonicalFormIsALabelInvariant) {
    std::mt19937 rng(21);
    for (int i = 0; i < 200; ++i) {
        auto m = random_planar_map(rng, 1 + i % 8);
        Permutation s(m.num_darts());
        std::iota(s.begin(), s.end(), 0);
        std::shuffle(s.begin(), s.end(), rng);
        auto r = relabel(m, s);
        EXPECT_EQ(canonical_form(m, false), canonical_form(r, false));
        auto w = isomorphic(m, r, false);
        ASSERT_TRUE(w.has_value());
        EXPECT_TRUE(is_conjugator(m, r, *w));
    }
}

TEST(Maps, CodesGiveSphericalMaps) {
    for (const auto& row : load_minimal_rows(TRICROSS_DATA_DIR "/minimal_diagrams.csv")) {
        auto m = map_from_code(diagram_from_code(parse_spd(row.code)).projection);
        EXPECT_EQ(euler_characteristic(m), 2) << row.name;
        for (int v : degrees(vertices(m))) EXPECT_EQ(v, 6);
    }
    EXPECT_THROW(map_from_code(parse_spd("sPD[eX[1,2,3,1,2,3]]")), std::invalid_argument);
}
