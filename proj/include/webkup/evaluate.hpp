#pragma once

#include <functional>
#include <map>

#include "webkup/flows.hpp"
#include "webkup/ladder.hpp"
#include "webkup/laurent.hpp"
#include "webkup/planar.hpp"

namespace webkup {

// Sum of q^weight over the flows of a closed ladder web.
LaurentPoly evaluate_closed_statesum(const LadderWeb& w, const WeightRules& rules = WeightRules::standard());
// State sum over the ladder presentation the planar web was drawn from.
LaurentPoly evaluate_closed_statesum(const PlanarWeb& w);
// Reduces by the loop, digon and square relations until only scalars remain.
LaurentPoly evaluate_closed_rewrite(const PlanarWeb& w);

// Tensor coordinates of a web with empty bottom boundary, keyed by the state
// string on its top strands and ordered with the largest first.
struct ExpansionVector {
    SignString sign;
    std::map<StateString, LaurentPoly, std::greater<StateString>> coefficients;

    LaurentPoly at(const StateString& j) const;
    // The lexicographically largest supported state.
    const StateString& leading() const;
};

ExpansionVector expansion(const LadderWeb& w, const WeightRules& rules = WeightRules::standard());

// Number of labelled top strands of a web.
int boundary_length(const LadderWeb& w);
// q^{l} <u* v> with l the boundary length; the gluing puts the mirror of u on top of v.
LaurentPoly kuperberg_form(const LadderWeb& u, const LadderWeb& v);
// q^{-l} <u* v>.
LaurentPoly lusztig_form(const LadderWeb& u, const LadderWeb& v);
// sum_J c_u(J) c_v(J) from the expansion vectors.
LaurentPoly lusztig_form(const ExpansionVector& u, const ExpansionVector& v);

}  // namespace webkup
