#include <gtest/gtest.h>

#include "common.hpp"
#include "webkup/evaluate.hpp"
#include "webkup/howe.hpp"
#include "webkup/tableaux.hpp"

using namespace webkup;

namespace {

WebVector basis_vector(const GlWeight& w, const std::string& key) {
    const WebSpace& s = web_space(w);
    return s.basis_vector(*s.index_of(parse_state_string(key)));
}

}  // namespace

TEST(Howe, GeneratorImages) {
    auto h = phi_generator(1, 1, {2, 2});
    ASSERT_TRUE(h.has_value());
    EXPECT_EQ(h->top(), (GlWeight{3, 1}));
    EXPECT_EQ(h->slices().size(), 1u);
    EXPECT_FALSE(phi_generator(1, 1, {3, 1}).has_value());
    SchurWord x{{1, 2, 1}, {{-1, 2, 1}, {1, 1, 1}}};
    auto two = phi_ladder(x);
    ASSERT_TRUE(two.has_value());
    EXPECT_EQ(two->slices(), (std::vector<Slice>{{1, 1, 1}, {-1, 2, 1}}));
    EXPECT_EQ(two->top(), (GlWeight{2, 0, 2}));
}

TEST(Howe, WordTargets) {
    SchurWord x{{3, 0, 0}, {{-1, 1, 1}, {-1, 2, 1}, {-1, 1, 1}}};
    EXPECT_EQ(*x.target(), (GlWeight{1, 1, 1}));
    EXPECT_EQ(x.to_string(), "E_{-1}E_{-2}E_{-1}1_(3,0,0)");
    SchurWord zero{{3, 0}, {{1, 1, 1}}};
    EXPECT_FALSE(zero.target().has_value());
    EXPECT_TRUE(phi_word(zero).is_zero());
}

TEST(Howe, PhiWordExamples) {
    WebVector e = phi_word(SchurWord{{3, 0, 0}, {}});
    ASSERT_EQ(e.terms.size(), 1u);
    EXPECT_EQ(e.terms.begin()->second, LaurentPoly(1));
    SchurWord tri{{3, 0, 0}, {{-1, 1, 1}, {-1, 2, 1}, {-1, 1, 1}}};
    EXPECT_EQ(phi_word(tri), basis_vector({1, 1, 1}, "10m"));
}

TEST(Howe, CommutatorOnTwoOne) {
    SchurElement x;
    x.add(LaurentPoly(1), SchurWord{{2, 1}, {{1, 1, 1}, {-1, 1, 1}}});
    x.add(LaurentPoly(-1), SchurWord{{2, 1}, {{-1, 1, 1}, {1, 1, 1}}});
    EXPECT_EQ(operator_of(x, {2, 1}), operator_of(LadderWeb::identity({2, 1})));
}

TEST(Howe, DistantCommutatorVanishes) {
    SchurElement x;
    x.add(LaurentPoly(1), SchurWord{{1, 1, 2, 2}, {{1, 1, 1}, {-1, 3, 1}}});
    x.add(LaurentPoly(-1), SchurWord{{1, 1, 2, 2}, {{-1, 3, 1}, {1, 1, 1}}});
    EXPECT_EQ(operator_of(x, {2, 0, 1, 3}), operator_of(SchurElement{}, {2, 0, 1, 3}));
}

TEST(Howe, DividedPowerImages) {
    WebOperator full = phi_divided_power(1, 1, 3, {0, 3});
    EXPECT_EQ(full.target, (GlWeight{3, 0}));
    ASSERT_EQ(full.columns.size(), 1u);
    const auto& [src, col] = *full.columns.begin();
    EXPECT_EQ(src, forced_state({0, 3}));
    ASSERT_EQ(col.size(), 1u);
    EXPECT_EQ(col.begin()->first, forced_state({3, 0}));
    EXPECT_EQ(col.begin()->second, LaurentPoly(1));
    EXPECT_EQ(phi_divided_power(1, 1, 2, {0, 2}), operator_of(LadderWeb({0, 2}, {{1, 1, 2}})));
    for (const GlWeight& l : lambda_3(3, 3))
        for (int i = 1; i <= 2; ++i)
            if (auto g = phi_generator(1, i, l)) EXPECT_EQ(phi_divided_power(1, i, 1, l), operator_of(*g));
}

TEST(Howe, RelationsAtThree) {
    RelationReport r = verify_schur_relations(3);
    EXPECT_TRUE(r.ok()) << r.summary();
    EXPECT_GT(r.checks, 0u);
}

TEST(Howe, RelationsAtSix) {
    RelationReport r = verify_schur_relations(6);
    EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(Howe, TauAdjunction) {
    for (int n : {3, 6})
        for (const GlWeight& l : lambda_3(n, n))
            for (int i = 1; i < n; ++i) {
                RelationReport r = check_tau_adjunction(l, i);
                EXPECT_TRUE(r.ok()) << r.summary();
            }
    EXPECT_TRUE(check_tau_adjunction({1, 2, 0}, 1).ok());
}

TEST(Howe, InverseGrowthTripod) {
    SchurWord x = inverse_growth(parse_state_string("10m"), parse_enhanced_sign_string("+++"));
    EXPECT_EQ(x.to_string(), "E_{-1}E_{-2}E_{-1}1_(3,0,0)");
    SchurWord e = inverse_growth({}, parse_enhanced_sign_string("xoo"));
    EXPECT_TRUE(e.generators.empty());
}

TEST(Howe, InverseGrowthRoundtrip) {
    for (int n : {3, 6})
        for (const GlWeight& l : lambda_3(n, n)) {
            const WebSpace& s = web_space(l);
            for (std::size_t b = 0; b < s.dimension(); ++b) {
                SchurWord x = inverse_growth(s.basis()[b].key, sign_string_of_weight(l));
                GlWeight source(n, 0);
                std::fill(source.begin(), source.begin() + n / 3, 3);
                EXPECT_EQ(x.source, source);
                EXPECT_EQ(phi_word(x), s.basis_vector(b));
            }
        }
}

TEST(Howe, DimensionOracles) {
    EXPECT_EQ(howe_irrep_dimension(3), BigInt(10));
    EXPECT_EQ(howe_irrep_dimension(6), BigInt(490));
    for (int n : {3, 6}) {
        std::uint64_t total = 0;
        for (const GlWeight& l : lambda_3(n, n)) {
            std::size_t d = web_space(l).dimension();
            EXPECT_EQ(d, count_semistandard(n / 3, l));
            total += d;
        }
        EXPECT_EQ(BigInt(static_cast<long long>(total)), howe_irrep_dimension(n));
    }
}

TEST(Howe, ReduceRejectsVectorsOutsideSpan) {
    const WebSpace& s = web_space({1, 2});
    StateVector v{{*lift_state(parse_state_string("1m"), {1, 2}), LaurentPoly(1)}};
    EXPECT_FALSE(s.reduce(v).has_value());
    EXPECT_EQ(*s.reduce(s.tensor(0)), s.basis_vector(0));
}
