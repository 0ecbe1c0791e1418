#include <gtest/gtest.h>

#include "common.hpp"
#include "webkup/evaluate.hpp"
#include "webkup/gornik.hpp"
#include "webkup/tableaux.hpp"

using namespace webkup;

TEST(Eisenstein, CubeRoot) {
    Eisenstein z = Eisenstein::zeta_power(1);
    EXPECT_EQ(z * z * z, Eisenstein::zeta_power(0));
    EXPECT_EQ(Eisenstein::zeta_power(0) + z + z * z, Eisenstein{});
    EXPECT_EQ(Eisenstein::zeta_power(-1), z * z);
    EXPECT_EQ(Eisenstein::zeta_power(2), (Eisenstein{-1, -1}));
}

TEST(Gornik, ColoringCounts) {
    EXPECT_EQ(colorings(test::tripod()).size(), 6u);
    EXPECT_EQ(colorings(LadderWeb::identity({})).size(), 1u);
    EXPECT_EQ(count_colorings(close(test::arc(), test::arc())), 3u);
    EXPECT_EQ(count_colorings(close(test::tripod(), test::tripod())), 6u);
    EXPECT_EQ(count_colorings(PlanarWeb::from_ladder(LadderWeb::identity({}))), 1u);
    EXPECT_EQ(count_colorings(PlanarWeb::from_ladder(test::tripod())), 6u);
}

TEST(Gornik, BlockExamples) {
    BlockDecomposition a = blocks(parse_enhanced_sign_string("+-"));
    EXPECT_EQ(a.blocks.size(), 3u);
    for (const auto& [j, n] : a.blocks) EXPECT_EQ(n, 1u);
    BlockDecomposition t = blocks(parse_enhanced_sign_string("+++"));
    EXPECT_EQ(t.blocks.size(), 6u);
    for (const auto& [j, n] : t.blocks) EXPECT_EQ(n, 1u);
    BlockDecomposition e = blocks(parse_enhanced_sign_string(""));
    ASSERT_EQ(e.blocks.size(), 1u);
    EXPECT_EQ(e.blocks.begin()->second, 1u);
}

TEST(Gornik, BlocksMatchCenter) {
    for (std::size_t n = 0; n <= 7; ++n)
        for (const SignString& S : all_sign_strings(n)) {
            if (weight_sum(weight_of_sign_string(S)) % 3) continue;
            EnhancedSignString E = enhance(S);
            BlockDecomposition b = blocks(E);
            EXPECT_EQ(b.blocks.size(), center_dim(E));
            for (const auto& [j, c] : b.blocks) EXPECT_GE(c, 1u);
        }
}

TEST(Gornik, DimensionIdentity) {
    for (std::size_t n = 0; n <= 6; ++n)
        for (const SignString& S : all_sign_strings(n)) {
            RelationReport r = check_gornik_dimension(enhance(S));
            EXPECT_TRUE(r.ok()) << to_string(S) << " " << r.summary();
        }
}

TEST(Gornik, PlanarCountMatchesBracketAtOne) {
    for (const char* s : {"+-+-", "+++---", "++-+-"}) {
        SignString S = parse_sign_string(s);
        auto B = enumerate_basis(S);
        for (const BasisWeb& u : B)
            for (const BasisWeb& v : B) {
                PlanarWeb c = close(u.web, v.web);
                EXPECT_EQ(BigInt(static_cast<long long>(count_colorings(c))), evaluate_closed_statesum(c).at_one());
                std::uint64_t loops = 1;
                for (int i = 0; i < c.free_loops(); ++i) loops *= 3;
                EXPECT_EQ(planar_colorings(c).size() * loops, count_colorings(c));
            }
    }
}

TEST(Gornik, R1Relations) {
    EXPECT_TRUE(verify_R1_relations(PlanarWeb::from_ladder(test::tripod())).ok());
    EXPECT_TRUE(verify_R1_relations(close(test::arc(), test::arc())).ok());
    for (const BasisWeb& b : enumerate_basis(parse_sign_string("+-+-+-"))) {
        RelationReport r = verify_R1_relations(PlanarWeb::from_ladder(b.web));
        EXPECT_TRUE(r.ok()) << r.summary();
    }
}
