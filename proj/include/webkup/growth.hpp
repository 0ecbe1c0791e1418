#pragma once

#include <vector>

#include "webkup/flows.hpp"
#include "webkup/ladder.hpp"
#include "webkup/signs.hpp"

namespace webkup {

// Rule sets for growing a web downward from a (sign, state) boundary.
enum class GrowthMode {
    // Arcs only on states (1,-1), Y-merges only when the left state is larger,
    // H-moves only to shift a blocking 0 leftward. Terminates exactly on
    // dominant paths and then yields the basis web with its canonical flow.
    Canonical,
    // Falls back to any weight-consistent arc, Y or H move when the canonical
    // rules are stuck. Terminates on every boundary with equal counts in the
    // expanded state string.
    Extended,
};

struct GrowthResult {
    LadderWeb web;
    bool terminated = false;
    // The flow traced by the state bookkeeping; meaningful when terminated.
    Flow flow;
};

// Grows a web under S; the 0 and 3 entries of S are carried along as erased
// strands, and J lists the states of the 1 and 2 entries.
GrowthResult grow(const EnhancedSignString& S, const StateString& J, GrowthMode mode = GrowthMode::Canonical);
GrowthResult growth(const SignString& S, const StateString& J);

bool is_dominant_closed(const SignString& S, const StateString& J);
// All J with is_dominant_closed(S, J), in decreasing lexicographic order.
std::vector<StateString> dominant_states(const SignString& S);

struct BasisWeb {
    StateString key;
    LadderWeb web;
    Flow canonical_flow;
};

// The basis webs over hat(S), keyed by their dominant state strings, in
// decreasing lexicographic order of the key.
std::vector<BasisWeb> enumerate_basis(const EnhancedSignString& S);
std::vector<BasisWeb> enumerate_basis(const SignString& S);

}  // namespace webkup
