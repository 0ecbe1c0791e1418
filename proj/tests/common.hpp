#pragma once

#include <random>

#include "webkup/growth.hpp"
#include "webkup/laurent.hpp"
#include "webkup/signs.hpp"

namespace webkup::test {

inline LaurentPoly q(int e, int c = 1) { return LaurentPoly::monomial(e, BigInt(c)); }

inline LadderWeb basis_web(const std::string& sign, const std::string& key) {
    GrowthResult g = grow(parse_enhanced_sign_string(sign), parse_state_string(key));
    return g.web;
}
inline LadderWeb arc() { return basis_web("+-", "1m"); }
inline LadderWeb tripod() { return basis_web("+++", "10m"); }

inline LaurentPoly random_poly(std::mt19937& rng, int span = 6, int terms = 5, int coeff = 9) {
    std::uniform_int_distribution<int> e(-span, span), c(-coeff, coeff), n(0, terms);
    std::vector<LaurentPoly::Term> t;
    for (int i = n(rng); i > 0; --i) t.push_back({e(rng), BigInt(c(rng))});
    return LaurentPoly::from_terms(std::move(t));
}

}  // namespace webkup::test
