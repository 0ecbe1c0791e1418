#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "webkup/flows.hpp"
#include "webkup/planar.hpp"
#include "webkup/report.hpp"
#include "webkup/signs.hpp"

namespace webkup {

// a + b z in Z[z] with z a primitive cube root of unity, z^2 = -1 - z.
struct Eisenstein {
    long long a = 0;
    long long b = 0;

    static Eisenstein zeta_power(int e);
    friend Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) { return {x.a + y.a, x.b + y.b}; }
    friend Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) { return {x.a - y.a, x.b - y.b}; }
    friend Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    friend bool operator==(const Eisenstein& x, const Eisenstein& y) { return x.a == y.a && x.b == y.b; }
};

// Flows read as admissible 3-colourings of the edges of a ladder web.
std::vector<Flow> colorings(const LadderWeb& w);

// Edge colourings of a planar web with colours -1, 0, 1, pairwise distinct
// at every trivalent vertex; entry e is the colour of the edge through dart
// 2e and 2e+1 after pairing.
using EdgeColoring = std::vector<int>;
// Counts by backtracking on the edges; every free loop contributes a factor 3.
std::uint64_t count_colorings(const PlanarWeb& w);
std::vector<EdgeColoring> planar_colorings(const PlanarWeb& w);

struct BlockDecomposition {
    EnhancedSignString sign;
    // N_J: basis webs with a colouring extending J, counted with multiplicity.
    std::map<StateString, std::uint64_t, std::greater<StateString>> blocks;

    std::uint64_t total() const;
    std::uint64_t sum_of_squares() const;
};

BlockDecomposition blocks(const EnhancedSignString& S);

// Colouring counts of every closed pairing against the bracket at q = 1, and
// the total against the sum of squared block sizes.
RelationReport check_gornik_dimension(const EnhancedSignString& S);

// The three edge-ring identities at each trivalent vertex of each colouring.
RelationReport verify_R1_relations(const PlanarWeb& w);

}  // namespace webkup
