#include <gtest/gtest.h>

#include "common.hpp"
#include "webkup/dual_canonical.hpp"
#include "webkup/evaluate.hpp"

using namespace webkup;
using webkup::test::q;

TEST(DualCanonical, SymmetricPart) {
    LaurentPoly p = q(2, 3) + q(0, 2) + q(-1) + q(-3, 5);
    LaurentPoly f = symmetric_part(p);
    EXPECT_TRUE(f.is_bar_invariant());
    EXPECT_TRUE((p - f).in_negative_part());
    EXPECT_EQ(f, q(2, 3) + q(0, 2) + q(-2, 3));
    EXPECT_EQ(symmetric_part(q(-1)), LaurentPoly());
}

TEST(DualCanonical, KeyMatrixInverse) {
    KeyMatrix m{{parse_state_string("1"), parse_state_string("0")}, {{1, q(1) + q(-1)}, {0, 1}}};
    EXPECT_TRUE(m.is_unitriangular());
    KeyMatrix inv = unitriangular_inverse(m);
    EXPECT_TRUE((m * inv).is_identity());
    EXPECT_FALSE(inv.is_nonnegative());
}

TEST(DualCanonical, ArcAndTripodAreDualCanonical) {
    for (const char* s : {"+-", "+++"}) {
        SignString S = parse_sign_string(s);
        DualCanonicalBasis D = dual_canonical_basis(S);
        ASSERT_EQ(D.keys.size(), 1u);
        EXPECT_EQ(D.vectors.at(D.keys[0]), expansion(enumerate_basis(S)[0].web).coefficients);
        EXPECT_TRUE(web_to_dualcan(D).is_identity());
    }
    KeyMatrix B = bar_on_tensor_coords(parse_sign_string("+-"));
    EXPECT_TRUE(B.is_identity());
    EXPECT_TRUE(bar_on_tensor_coords({}).is_identity());
}

TEST(DualCanonical, TripodLowerCoefficients) {
    DualCanonicalBasis D = dual_canonical_basis(parse_sign_string("+++"));
    const Coords& v = D.vectors.begin()->second;
    std::multiset<std::string> lower;
    LaurentPoly form;
    for (const auto& [j, c] : v) {
        form += c * c;
        if (j != D.keys[0]) lower.insert(c.to_string());
    }
    EXPECT_EQ(lower, (std::multiset<std::string>{"q^-1", "q^-1", "q^-2", "q^-2", "q^-3"}));
    EXPECT_EQ(form, q(0) + q(-2, 2) + q(-4, 2) + q(-6));
}

TEST(DualCanonical, BarIsInvolution) {
    for (std::size_t n = 0; n <= 6; ++n)
        for (const SignString& S : all_sign_strings(n)) EXPECT_TRUE(is_involution(bar_on_tensor_coords(S)));
}

TEST(DualCanonical, VerifiedUpToSix) {
    for (std::size_t n = 0; n <= 6; ++n)
        for (const SignString& S : all_sign_strings(n)) {
            RelationReport r = verify_dual_canonical(S);
            EXPECT_TRUE(r.ok()) << to_string(S) << " " << r.summary();
            DualCanonicalBasis D = dual_canonical_basis(S);
            KeyMatrix d = web_to_dualcan(D);
            EXPECT_TRUE(d.is_unitriangular());
            EXPECT_TRUE(d.is_nonnegative());
        }
}

TEST(DualCanonical, OrdersAgree) {
    for (const char* s : {"+-+-+-", "++--+-", "+++---"}) {
        SignString S = parse_sign_string(s);
        EXPECT_EQ(dual_canonical_basis(S).vectors, dual_canonical_basis(S, CorrectionOrder::AscendingToFixpoint).vectors);
    }
}

TEST(DualCanonical, BasisMatrixShape) {
    BasisMatrix M = basis_matrix(parse_sign_string("++--"));
    EXPECT_EQ(M.rows.size(), 2u);
    EXPECT_TRUE(M.is_unitriangular());
    EXPECT_TRUE(M.is_nonnegative());
    EXPECT_TRUE(M.dominant_block().is_unitriangular());
}

TEST(DualCanonical, SmallSearchFindsNothing) {
    CounterexampleSearch s = find_noncanonical_weight_zero(6);
    EXPECT_TRUE(s.complete);
    EXPECT_EQ(s.frontier, 6);
    EXPECT_TRUE(s.found.empty());
    EXPECT_GT(s.webs, 0u);
}

TEST(DualCanonical, SearchInstancesAreValid) {
    CounterexampleSearch s = find_noncanonical_weight_zero(8);
    for (const NoncanonicalFlow& f : s.found) {
        EXPECT_EQ(f.flow.weight, 0);
        EXPECT_NE(f.flow.boundary, f.key);
    }
}
