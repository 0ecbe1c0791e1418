#include <gtest/gtest.h>

#include "common.hpp"
#include "webkup/evaluate.hpp"
#include "webkup/howe.hpp"
#include "webkup/planar.hpp"
#include "webkup/tableaux.hpp"

using namespace webkup;

TEST(Growth, Examples) {
    GrowthResult arc = growth(parse_sign_string("+-"), parse_state_string("1m"));
    EXPECT_TRUE(arc.terminated);
    EXPECT_TRUE(arc.web.bottom_is_empty());
    GrowthResult tri = growth(parse_sign_string("+++"), parse_state_string("10m"));
    EXPECT_TRUE(tri.terminated);
    EXPECT_EQ(PlanarWeb::from_ladder(tri.web).trivalent_count(), 1);
    EXPECT_TRUE(growth(parse_sign_string("+-+-+++"), parse_state_string("1100m0m")).terminated);
    EXPECT_FALSE(growth(parse_sign_string("+-"), parse_state_string("m1")).terminated);
}

TEST(Growth, DominanceExamples) {
    EXPECT_TRUE(is_dominant_closed(parse_sign_string("+-"), parse_state_string("1m")));
    EXPECT_FALSE(is_dominant_closed(parse_sign_string("+-"), parse_state_string("m1")));
    EXPECT_TRUE(is_dominant_closed({}, {}));
}

TEST(Growth, TerminatesExactlyOnDominantPaths) {
    for (std::size_t n = 0; n <= 7; ++n)
        for (const SignString& S : all_sign_strings(n))
            for (const StateString& J : all_state_strings(n)) {
                bool d = is_dominant_closed(S, J);
                GrowthResult g = growth(S, J);
                ASSERT_EQ(d, g.terminated) << to_string(S) << " " << state_to_string(J);
                if (!d) continue;
                EXPECT_EQ(g.flow.weight, 0);
                EXPECT_EQ(g.flow.boundary, J);
            }
}

TEST(Growth, BasisIsUnitriangularAndPositive) {
    for (std::size_t n = 0; n <= 7; ++n)
        for (const SignString& S : all_sign_strings(n))
            for (const BasisWeb& b : enumerate_basis(S)) {
                ExpansionVector e = expansion(b.web);
                EXPECT_EQ(e.leading(), b.key);
                EXPECT_EQ(e.at(b.key), LaurentPoly(1));
                for (const auto& [j, c] : e.coefficients) EXPECT_TRUE(c.is_nonnegative());
            }
}

TEST(Growth, BasisCountsMatchTensorOracle) {
    EXPECT_EQ(enumerate_basis(parse_sign_string("+-")).size(), 1u);
    EXPECT_EQ(enumerate_basis(parse_sign_string("+++")).size(), 1u);
    EXPECT_EQ(enumerate_basis(parse_sign_string("++--")).size(), 2u);
    EXPECT_EQ(enumerate_basis(parse_sign_string("++++++")).size(), 5u);
    EXPECT_EQ(enumerate_basis(parse_sign_string("+++---")).size(), 6u);
    for (std::size_t n = 0; n <= 8; ++n)
        for (const SignString& S : all_sign_strings(n))
            EXPECT_EQ(BigInt(static_cast<long long>(enumerate_basis(S).size())), invariant_dimension(S)) << to_string(S);
}

TEST(Growth, EnhancedBasisKeepsErasedStrands) {
    auto B = enumerate_basis(parse_enhanced_sign_string("x+o+-+"));
    auto H = enumerate_basis(parse_sign_string("++-+"));
    ASSERT_EQ(B.size(), H.size());
    for (std::size_t i = 0; i < B.size(); ++i) {
        EXPECT_EQ(B[i].key, H[i].key);
        EXPECT_EQ(B[i].web.top(), (GlWeight{3, 1, 0, 1, 2, 1}));
        EXPECT_EQ(expansion(B[i].web).coefficients, expansion(H[i].web).coefficients);
    }
}

TEST(Growth, KeysDescend) {
    auto B = enumerate_basis(parse_sign_string("+-+-+-"));
    for (std::size_t i = 1; i < B.size(); ++i) EXPECT_TRUE(state_less(B[i].key, B[i - 1].key));
}

TEST(Tableaux, HatStateExamples) {
    EXPECT_EQ(hat_state(parse_state_string("0"), {2}), parse_state_string("1m"));
    EXPECT_EQ(hat_state(parse_state_string("1"), {1}), parse_state_string("1"));
    EXPECT_EQ(hat_state(parse_state_string("1m"), {1, 2}), parse_state_string("10m"));
    EXPECT_THROW(hat_state(parse_state_string("1"), {3}), WebError);
}

TEST(Tableaux, CondsExamples) {
    EXPECT_TRUE(satisfies_conds(parse_state_string("10m"), {1, 1, 1}));
    EXPECT_FALSE(satisfies_conds(parse_state_string("11"), {1, 2}));
    EXPECT_TRUE(satisfies_conds({}, {}));
}

TEST(Tableaux, StateToTableauExample) {
    Tableau t = state_to_tableau(parse_state_string("10m"), {1, 1, 1});
    ASSERT_EQ(t.rows.size(), 1u);
    EXPECT_EQ(t.rows[0], (std::array<int, 3>{1, 2, 3}));
    EXPECT_TRUE(t.is_semistandard());
    Tableau e = state_to_tableau({}, {});
    EXPECT_TRUE(e.rows.empty());
}

TEST(Tableaux, Counts) {
    EXPECT_EQ(count_column_strict(1, {1, 1, 1}), 6u);
    EXPECT_EQ(count_semistandard(1, {1, 1, 1}), 1u);
    EXPECT_EQ(count_column_strict(1, {1, 2}), 3u);
    EXPECT_EQ(count_semistandard(1, {3}), 1u);
    EXPECT_EQ(center_dim(parse_enhanced_sign_string("+++")), 6u);
    EXPECT_EQ(center_dim(parse_enhanced_sign_string("+-")), 3u);
    EXPECT_EQ(center_dim(parse_enhanced_sign_string("")), 1u);
}

TEST(Tableaux, RoundtripAndBijection) {
    for (std::size_t n = 0; n <= 7; ++n)
        for (const SignString& S : all_sign_strings(n)) {
            GlWeight mu = weight_of_sign_string(S);
            if (weight_sum(mu) % 3) continue;
            std::uint64_t valid = 0;
            for (const StateString& J : all_state_strings(n)) {
                if (!satisfies_conds(J, mu)) continue;
                ++valid;
                Tableau T = state_to_tableau(J, mu);
                EXPECT_TRUE(T.is_column_strict());
                EXPECT_EQ(tableau_to_state(T), std::make_pair(J, mu));
                EXPECT_EQ(T.is_semistandard(), is_dominant_closed(S, J)) << to_string(S) << " " << state_to_string(J);
            }
            EXPECT_EQ(valid, count_column_strict(weight_sum(mu) / 3, mu));
            EXPECT_EQ(enumerate_basis(S).size(), count_semistandard(weight_sum(mu) / 3, mu));
        }
}

TEST(Tableaux, ConstructFlowProperties) {
    for (std::size_t n = 0; n <= 6; ++n)
        for (const SignString& S : all_sign_strings(n)) {
            GlWeight mu = weight_of_sign_string(S);
            for (const StateString& J : all_state_strings(n)) {
                if (!satisfies_conds(J, mu)) {
                    EXPECT_THROW(construct_flow(J, mu), WebError);
                    continue;
                }
                FlowWitness w = construct_flow(J, mu);
                EXPECT_EQ(w.flow.boundary, J);
                EXPECT_TRUE(PlanarWeb::from_ladder(w.web).is_non_elliptic());
                if (is_dominant_closed(S, J)) EXPECT_EQ(w.web, growth(S, J).web);
            }
        }
}

TEST(Tableaux, FlowExistenceMatchesConds) {
    for (std::size_t n = 0; n <= 6; ++n)
        for (const SignString& S : all_sign_strings(n)) {
            GlWeight mu = weight_of_sign_string(S);
            std::set<StateString> reached;
            for (const BasisWeb& b : enumerate_basis(S))
                for (const Flow& f : enumerate_flows(b.web)) reached.insert(f.boundary);
            for (const StateString& J : all_state_strings(n))
                EXPECT_EQ(reached.count(J) == 1, satisfies_conds(J, mu)) << to_string(S) << " " << state_to_string(J);
        }
}

TEST(Tableaux, FullEntriesRoundtrip) {
    for (int k = 1; k <= 2; ++k)
        for (const GlWeight& mu : lambda_3(3 * k, 3 * k))
            for (const Tableau& T : semistandard_tableaux(k, mu)) {
                Tableau h = delete_full_entries(T);
                EXPECT_TRUE(h.is_semistandard());
                EXPECT_EQ(h.type, hat_weight(mu));
                EXPECT_EQ(insert_full_entries(h, mu), T);
            }
}
