#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "webkup/flows.hpp"
#include "webkup/ladder.hpp"
#include "webkup/signs.hpp"

namespace webkup {

// Filling of the rectangle (3^k). Columns are labelled +1, 0, -1 from left to
// right; entries are 1-based positions of the governing composition.
struct Tableau {
    std::vector<std::array<int, 3>> rows;
    GlWeight type;

    bool is_column_strict() const;
    bool is_semistandard() const;
    friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows == b.rows && a.type == b.type; }
    friend bool operator<(const Tableau& a, const Tableau& b) { return a.rows < b.rows; }
};

// Column index (0, 1, 2) of the column labelled c (+1, 0, -1).
inline int column_of_label(int c) { return 1 - c; }
inline int label_of_column(int col) { return 1 - col; }

// The expanded state string: a 2-entry with state 1, -1, 0 becomes (1,0), (0,-1), (1,-1).
StateString hat_state(const StateString& J, const GlWeight& mu);
bool satisfies_conds(const StateString& J, const GlWeight& mu);

Tableau state_to_tableau(const StateString& J, const GlWeight& mu);
std::pair<StateString, GlWeight> tableau_to_state(const Tableau& T);

// A basis web under the sign string of mu carrying a flow that extends J.
struct FlowWitness {
    LadderWeb web;
    Flow flow;
};
FlowWitness construct_flow(const StateString& J, const GlWeight& mu);

std::uint64_t count_column_strict(int k, const GlWeight& mu);
std::uint64_t count_semistandard(int k, const GlWeight& mu);
std::vector<Tableau> semistandard_tableaux(int k, const GlWeight& mu);
std::vector<Tableau> column_strict_tableaux(int k, const GlWeight& mu);

// Deletes the three cells of every entry i with mu_i = 3 and renumbers the
// remaining entries along the hat composition; insert_full_entries inverts it.
Tableau delete_full_entries(const Tableau& T);
Tableau insert_full_entries(const Tableau& That, const GlWeight& mu);

std::uint64_t center_dim(const EnhancedSignString& S);

}  // namespace webkup
