#include "webkup/calibration.hpp"

#include <sstream>

#include "webkup/evaluate.hpp"
#include "webkup/flows.hpp"
#include "webkup/growth.hpp"

namespace webkup {

namespace {

// A linear combination of slice words evaluated on every state of a weight.
struct Term {
    LaurentPoly coeff;
    std::vector<Slice> word;  // applied left to right
};

StateVector apply_word(const std::vector<Slice>& word, const GlWeight& lambda, PackedState s,
                       const WeightRules& rules) {
    StateVector v;
    v[s] = LaurentPoly(1);
    GlWeight cur = lambda;
    for (const Slice& sl : word) {
        auto next = apply_slice(cur, sl);
        if (!next) return {};
        v = transfer(v, sl, rules);
        cur = *next;
    }
    return v;
}

bool combination_vanishes(const std::vector<Term>& terms, const GlWeight& lambda, const WeightRules& rules) {
    for (PackedState s : all_states(lambda)) {
        StateVector total;
        for (const Term& t : terms)
            for (auto& [k, c] : apply_word(t.word, lambda, s, rules)) total[k] += t.coeff * c;
        for (auto& [k, c] : total)
            if (!c.is_zero()) return false;
    }
    return true;
}

std::vector<GlWeight> all_weights(int n) {
    std::vector<GlWeight> out{GlWeight{}};
    for (int i = 0; i < n; ++i) {
        std::vector<GlWeight> next;
        for (auto& w : out)
            for (int x = 0; x <= 3; ++x) {
                GlWeight v = w;
                v.push_back(x);
                next.push_back(v);
            }
        out = std::move(next);
    }
    return out;
}

bool two_strand_commutator(const WeightRules& rules) {
    for (const GlWeight& l : all_weights(2)) {
        Slice e{1, 1, 1}, f{-1, 1, 1};
        std::vector<Term> terms{{LaurentPoly(1), {f, e}}, {LaurentPoly(-1), {e, f}}, {-quantum_int(l[0] - l[1]), {}}};
        if (!combination_vanishes(terms, l, rules)) return false;
    }
    return true;
}

bool three_strand_relations(const WeightRules& rules) {
    for (const GlWeight& l : all_weights(3)) {
        for (int s : {1, -1}) {
            Slice a{s, 1, 1}, b{s, 2, 1};
            // Serre: x^2 y - [2] x y x + y x^2 = 0, for (x,y) = (a,b) and (b,a).
            std::vector<Term> t1{{LaurentPoly(1), {b, a, a}}, {-quantum_int(2), {a, b, a}}, {LaurentPoly(1), {a, a, b}}};
            std::vector<Term> t2{{LaurentPoly(1), {a, b, b}}, {-quantum_int(2), {b, a, b}}, {LaurentPoly(1), {b, b, a}}};
            if (!combination_vanishes(t1, l, rules) || !combination_vanishes(t2, l, rules)) return false;
            Slice c{-s, 2, 1};
            std::vector<Term> t3{{LaurentPoly(1), {c, a}}, {LaurentPoly(-1), {a, c}}};
            if (!combination_vanishes(t3, l, rules)) return false;
        }
    }
    return true;
}

bool circle_value(const WeightRules& rules) {
    LadderWeb circle({3, 0}, {{-1, 1, 1}, {1, 1, 1}});
    return evaluate_closed_statesum(circle, rules) == quantum_int(3);
}

}  // namespace

bool satisfies_ladder_relations(const WeightRules& rules) {
    return rules.consistent() && two_strand_commutator(rules) && three_strand_relations(rules) && circle_value(rules);
}

bool canonical_flows_have_weight_zero(const WeightRules& rules, int max_boundary) {
    for (int n = 0; n <= max_boundary; ++n) {
        for (unsigned m = 0; m < (1u << n); ++m) {
            SignString S;
            for (int i = 0; i < n; ++i) S.push_back((m >> i) & 1 ? Sign::Minus : Sign::Plus);
            for (const BasisWeb& b : enumerate_basis(S)) {
                ExpansionVector e = expansion(b.web, rules);
                if (e.at(b.key) != LaurentPoly(1)) return false;
            }
        }
    }
    return true;
}

CalibrationReport calibrate(int max_boundary) {
    CalibrationReport r;
    std::vector<WeightRules::Matrix> pool;
    const int off[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
    for (int code = 0; code < 729; ++code) {
        WeightRules::Matrix w{};
        int c = code;
        for (const auto& o : off) {
            w[o[0]][o[1]] = c % 3 - 1;
            c /= 3;
        }
        pool.push_back(w);
    }
    r.candidates = pool.size();
    auto stage = [&](const std::string& name, auto pred) {
        std::vector<WeightRules::Matrix> kept;
        for (const auto& w : pool)
            if (pred(WeightRules(w))) kept.push_back(w);
        pool = std::move(kept);
        r.stages.push_back({name, pool.size()});
    };
    stage("divided powers are monomials", [](const WeightRules& x) { return x.consistent(); });
    stage("circle evaluates to [3]", circle_value);
    stage("[E,F] on two strands", two_strand_commutator);
    stage("Serre and far commutation on three strands", three_strand_relations);
    stage("canonical flows have weight zero",
          [&](const WeightRules& x) { return canonical_flows_have_weight_zero(x, max_boundary); });
    r.solutions = pool;
    return r;
}

std::string CalibrationReport::summary() const {
    std::ostringstream os;
    os << "candidates: " << candidates << "\n";
    for (const auto& s : stages) os << "  " << s.constraint << ": " << s.survivors << "\n";
    for (const auto& w : solutions) os << "  solution " << WeightRules(w).describe() << "\n";
    return os.str();
}

}  // namespace webkup
