#include <gtest/gtest.h>

#include <set>

#include "tricross/tricross.hpp"

using namespace tricross;

namespace {

const char* kShadow8 =
    "PD[X[1,4,2,5],X[3,8,4,9],X[12,6,13,5],X[13,16,14,1],X[9,14,10,15],X[15,10,16,11],X[6,12,7,11],X[7,2,8,3]]";

// Labels run 1..3n and step by one along every strand, wrapping once per
// component: one end of each label e faces e+1 across its crossing.
::testing::AssertionResult consecutive_along_strands(const SPdCode& c) {
    std::map<int, std::vector<std::pair<int, int>>> where;
    for (int k = 0; k < static_cast<int>(c.size()); ++k)
        for (int p = 0; p < 6; ++p) where[c.crossings[k].edges[p]].push_back({k, p});
    const int e_max = static_cast<int>(3 * c.size());
    if (static_cast<int>(where.size()) != e_max || where.begin()->first != 1 || where.rbegin()->first != e_max)
        return ::testing::AssertionFailure() << "labels are not 1.." << e_max;
    int wraps = 0;
    for (const auto& [e, ends] : where) {
        bool next = false;
        for (auto [k, p] : ends) next |= c.crossings[k].edges[(p + 3) % 6] == e + 1;
        if (!next) ++wraps;
    }
    const int comps = static_cast<int>(components(c).component_count());
    if (wraps != comps)
        return ::testing::AssertionFailure() << wraps << " strand breaks for " << comps << " components in "
                                             << serialize(c);
    return ::testing::AssertionSuccess();
}

}  // namespace

TEST(Codes, ParseSerializeRoundTrip) {
    for (const auto& row : load_minimal_rows(TRICROSS_DATA_DIR "/minimal_diagrams.csv")) {
        auto c = parse_spd(row.code);
        EXPECT_EQ(parse_spd(serialize(c)), c) << row.name;
        std::string squeezed;
        for (char ch : row.code)
            if (ch != ' ') squeezed += ch;
        EXPECT_EQ(serialize(c), squeezed) << row.name;
    }
    auto pd = parse_pd(kShadow8);
    EXPECT_EQ(serialize(pd), kShadow8);
}

TEST(Codes, ClassicalShadowHasEightCrossingsAndSixteenLabels) {
    auto pd = parse_pd(kShadow8);
    EXPECT_EQ(pd.size(), 8u);
    std::set<int> labels;
    for (const auto& x : pd.crossings) labels.insert(x.begin(), x.end());
    EXPECT_EQ(labels.size(), 16u);
    EXPECT_EQ(*labels.begin(), 1);
    EXPECT_EQ(*labels.rbegin(), 16);
}

TEST(Codes, Errors) {
    EXPECT_EQ(parse_pd("PD[X[1,2,1,2]]").size(), 1u);
    try {
        parse_pd("PD[X[1,2,3]]");
        FAIL() << "arity error expected";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.kind(), ParseError::Kind::arity);
        EXPECT_NE(e.position(), ParseError::npos);
    }
    try {
        parse_spd("sPD[eY[1,2,3,4,5,6],eZ[1,2,3,4,5,6]]");
        FAIL() << "syntax error expected";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.kind(), ParseError::Kind::syntax);
        EXPECT_EQ(e.position(), 20u);
    }
    EXPECT_THROW(parse_spd("sPD[eX[1,1,2,2,3,4]]"), ParseError);
    EXPECT_THROW(parse_spd("sPD[eX[1,1,2,2,3,3]] trailing"), ParseError);
}

TEST(Codes, ComponentCounts) {
    EXPECT_EQ(components(parse_spd("sPD[eY[4,2,5,5,1,6],eY[3,1,2,4,6,3]]")).component_count(), 1u);
    EXPECT_EQ(components(parse_spd("sPD[eY[8,1,9,9,2,10],eY[3,2,4,4,1,5],eY[5,12,6,6,11,3],eY[10,11,7,7,12,8]]"))
                  .component_count(),
              4u);
    auto fig = contract(parse_pd(kShadow8), {5, 8, 11, 14});
    EXPECT_EQ(components(fig).component_count(), 3u);
    EXPECT_EQ(components(parse_pd(kShadow8)).component_count(), 1u);
}

TEST(Codes, RenumberOracleOnGeneratedProjections) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : generate_all(n).th.th) {
            auto r = renumber(p);
            EXPECT_TRUE(consecutive_along_strands(r));
            EXPECT_EQ(renumber(r), r) << "not idempotent on " << serialize(p);
            EXPECT_TRUE(isomorphic(map_from_code(r), map_from_code(p), false).has_value());
            // relabel 10, 20, ... in a scrambled order and renumber again
            SPdCode scaled = p;
            const int e = static_cast<int>(3 * p.size());
            for (auto& x : scaled.crossings)
                for (auto& l : x.edges) l = 10 * (e + 1 - l);
            auto rs = renumber(scaled);
            EXPECT_TRUE(consecutive_along_strands(rs));
            EXPECT_TRUE(isomorphic(map_from_code(rs), map_from_code(p), false).has_value());
        }
}

TEST(Codes, ClassicalRenumber) {
    auto pd = parse_pd(kShadow8);
    auto r = renumber(pd);
    EXPECT_EQ(renumber(r), r);
    EXPECT_EQ(components(r).component_count(), 1u);
    EXPECT_TRUE(isomorphic(map_from_code(r), map_from_code(pd), false).has_value());
}
