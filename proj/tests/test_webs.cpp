#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "webkup/evaluate.hpp"
#include "webkup/io.hpp"
#include "webkup/planar.hpp"

using namespace webkup;
using webkup::test::q;

namespace {

LadderWeb data_web(const char* name) { return read_ladder_file(std::string(WEBKUP_DATA_DIR) + "/" + name); }

}  // namespace

TEST(Signs, WeightOfSignString) {
    EXPECT_EQ(weight_of_sign_string(parse_enhanced_sign_string("+-")), (GlWeight{1, 2}));
    EXPECT_EQ(weight_of_sign_string(parse_enhanced_sign_string("")), GlWeight{});
    EXPECT_EQ(weight_of_sign_string(parse_enhanced_sign_string("xo+")), (GlWeight{3, 0, 1}));
    EXPECT_EQ(to_string(sign_string_of_weight({3, 0, 1, 2})), "xo+-");
    EXPECT_EQ(to_string(hat(parse_enhanced_sign_string("xo+-"))), "+-");
    EXPECT_THROW(parse_enhanced_sign_string("+a"), WebError);
    EXPECT_THROW(parse_state_string("12"), WebError);
}

TEST(Signs, StateOrder) {
    auto all = all_state_strings(3);
    ASSERT_EQ(all.size(), 27u);
    EXPECT_EQ(state_to_string(all.front()), "111");
    EXPECT_EQ(state_to_string(all.back()), "mmm");
    for (std::size_t i = 1; i < all.size(); ++i) EXPECT_TRUE(state_less(all[i], all[i - 1]));
}

TEST(Signs, LambdaSets) {
    EXPECT_EQ(lambda_3(3, 3).size(), 10u);
    EXPECT_TRUE(in_lambda_12({1, 2, 2, 1}, 4, 6));
    EXPECT_FALSE(in_lambda_3({4, 0, 2}, 3, 6));
    EXPECT_TRUE(in_lambda_plus({3, 2, 0}, 3, 5));
}

TEST(Ladder, RejectsOutOfRangeLabels) {
    EXPECT_THROW(LadderWeb({3, 1}, {{1, 1, 1}}), WebError);
    EXPECT_FALSE(apply_slice({3, 1}, {1, 1, 1}).has_value());
    EXPECT_EQ(*apply_slice({2, 2}, {1, 1, 1}), (GlWeight{3, 1}));
}

TEST(Ladder, ReflectIsInvolution) {
    LadderWeb t = test::tripod();
    LadderWeb r = reflect(t);
    EXPECT_EQ(r.bottom(), t.top());
    EXPECT_EQ(r.top(), t.bottom());
    EXPECT_EQ(reflect(r), t);
    LadderWeb id = LadderWeb::identity({1, 2});
    EXPECT_EQ(reflect(id), id);
}

TEST(Planar, ClosuresHaveExpectedShape) {
    PlanarWeb circle = close(test::arc(), test::arc());
    EXPECT_TRUE(circle.is_closed());
    EXPECT_EQ(circle.trivalent_count() + circle.free_loops(), 1);
    PlanarWeb theta = close(test::tripod(), test::tripod());
    EXPECT_EQ(theta.trivalent_count(), 2);
    EXPECT_EQ(theta.edge_count(), 3u);
    EXPECT_TRUE(theta.orientation_admissible());
    EXPECT_TRUE(theta.euler_holds());
    PlanarWeb empty = close(LadderWeb::identity({}), LadderWeb::identity({}));
    EXPECT_TRUE(empty.is_empty());
}

TEST(Planar, BasisWebsAreNonElliptic) {
    for (std::size_t n = 0; n <= 6; ++n)
        for (const SignString& S : all_sign_strings(n))
            for (const BasisWeb& b : enumerate_basis(S)) {
                PlanarWeb p = PlanarWeb::from_ladder(b.web);
                EXPECT_TRUE(p.is_non_elliptic()) << to_string(S) << " " << state_to_string(b.key);
                EXPECT_TRUE(p.orientation_admissible());
                EXPECT_TRUE(p.euler_holds());
            }
}

TEST(Evaluate, FrozenClosedValues) {
    EXPECT_EQ(evaluate_closed_statesum(data_web("circle.json")), quantum_int(3));
    EXPECT_EQ(evaluate_closed_statesum(data_web("theta.json")), quantum_int(2) * quantum_int(3));
    PlanarWeb theta = close(test::tripod(), test::tripod());
    EXPECT_EQ(evaluate_closed_rewrite(theta), q(3) + q(1, 2) + q(-1, 2) + q(-3));
    EXPECT_EQ(evaluate_closed_rewrite(PlanarWeb::from_ladder(data_web("circle.json"))), quantum_int(3));
    EXPECT_EQ(evaluate_closed_statesum(LadderWeb::identity({})), LaurentPoly(1));
}

TEST(Evaluate, FlowsOfSmallWebs) {
    auto circle = enumerate_flows(data_web("circle.json"));
    ASSERT_EQ(circle.size(), 3u);
    std::multiset<int> w;
    for (const Flow& f : circle) w.insert(f.weight);
    EXPECT_EQ(w, (std::multiset<int>{-2, 0, 2}));
    auto tri = enumerate_flows(test::tripod(), parse_state_string("10m"));
    ASSERT_EQ(tri.size(), 1u);
    EXPECT_EQ(tri[0].weight, 0);
    auto empty = enumerate_flows(LadderWeb::identity({}));
    ASSERT_EQ(empty.size(), 1u);
    EXPECT_EQ(empty[0].weight, 0);
}

TEST(Evaluate, ArcExpansion) {
    ExpansionVector e = expansion(test::arc());
    ASSERT_EQ(e.coefficients.size(), 3u);
    EXPECT_EQ(e.at(parse_state_string("1m")), LaurentPoly(1));
    EXPECT_EQ(e.at(parse_state_string("00")), q(-1));
    EXPECT_EQ(e.at(parse_state_string("m1")), q(-2));
    ExpansionVector empty = expansion(LadderWeb::identity({}));
    EXPECT_EQ(empty.at({}), LaurentPoly(1));
}

TEST(Evaluate, TripodExpansion) {
    ExpansionVector e = expansion(test::tripod());
    ASSERT_EQ(e.coefficients.size(), 6u);
    EXPECT_EQ(state_to_string(e.leading()), "10m");
    LaurentPoly sq;
    for (const auto& [j, c] : e.coefficients) sq += c * c;
    EXPECT_EQ(sq, (quantum_int(2) * quantum_int(3)).shifted(-3));
    EXPECT_EQ(e.at(parse_state_string("1m0")), q(-1));
    EXPECT_EQ(e.at(parse_state_string("01m")), q(-1));
    EXPECT_EQ(e.at(parse_state_string("m10")), q(-2));
    EXPECT_EQ(e.at(parse_state_string("0m1")), q(-2));
    EXPECT_EQ(e.at(parse_state_string("m01")), q(-3));
}

TEST(Evaluate, Forms) {
    EXPECT_EQ(kuperberg_form(test::arc(), test::arc()), quantum_int(3).shifted(2));
    EXPECT_EQ(lusztig_form(test::arc(), test::arc()), q(0) + q(-2) + q(-4));
    LadderWeb e = LadderWeb::identity({});
    EXPECT_EQ(kuperberg_form(e, e), LaurentPoly(1));
    EXPECT_EQ(lusztig_form(e, e), LaurentPoly(1));
}

TEST(Evaluate, EvaluatorsAgreeOnBasisPairs) {
    for (std::size_t n = 0; n <= 5; ++n)
        for (const SignString& S : all_sign_strings(n)) {
            auto B = enumerate_basis(S);
            for (const BasisWeb& u : B)
                for (const BasisWeb& v : B) {
                    PlanarWeb c = close(u.web, v.web);
                    LaurentPoly a = evaluate_closed_statesum(c);
                    EXPECT_EQ(a, evaluate_closed_rewrite(c));
                    EXPECT_TRUE(a.is_bar_invariant());
                    EXPECT_EQ(lusztig_form(u.web, v.web), lusztig_form(expansion(u.web), expansion(v.web)));
                }
        }
}

TEST(Evaluate, SquareWindowRelation) {
    // E_{+1}E_{-1} on (2,1) is the identity plus E_{-1}E_{+1}.
    LadderWeb ef({2, 1}, {{-1, 1, 1}, {1, 1, 1}});
    LadderWeb fe({2, 1}, {{1, 1, 1}, {-1, 1, 1}});
    for (const PackedState s : all_states({2, 1})) {
        StateVector in{{s, LaurentPoly(1)}};
        StateVector a = sweep(ef, in), b = sweep(fe, in);
        b[s] += LaurentPoly(1);
        for (auto it = a.begin(); it != a.end();) it = it->second.is_zero() ? a.erase(it) : std::next(it);
        for (auto it = b.begin(); it != b.end();) it = it->second.is_zero() ? b.erase(it) : std::next(it);
        EXPECT_EQ(a, b);
    }
}
