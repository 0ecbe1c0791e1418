#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "webkup/ladder.hpp"
#include "webkup/laurent.hpp"
#include "webkup/weights.hpp"

namespace webkup {

// Colour sets of all strands at one ladder level, 3 bits per strand.
using PackedState = std::uint64_t;
constexpr std::size_t kMaxStrands = 21;

inline ColorSet strand_colors(PackedState s, std::size_t i) { return static_cast<ColorSet>((s >> (3 * i)) & 7u); }
inline PackedState set_strand_colors(PackedState s, std::size_t i, ColorSet c) {
    return (s & ~(PackedState{7} << (3 * i))) | (PackedState{c} << (3 * i));
}

// The unique state of a weight whose labels are all 0 or 3.
PackedState forced_state(const GlWeight& lambda);
// Every state whose strand i carries lambda[i] colors.
std::vector<PackedState> all_states(const GlWeight& lambda);
// States on the strands with label 1 or 2.
StateString boundary_state(PackedState s, const GlWeight& lambda);
// Inverse of boundary_state; labels 0 and 3 get their forced sets.
std::optional<PackedState> lift_state(const StateString& j, const GlWeight& lambda);

using StateVector = std::unordered_map<PackedState, LaurentPoly>;

// One transfer-matrix step across a slice.
StateVector transfer(const StateVector& in, const Slice& s,
                     const WeightRules& rules = WeightRules::standard());
// Transfers through every slice of w.
StateVector sweep(const LadderWeb& w, StateVector in, const WeightRules& rules = WeightRules::standard());

// An admissible colouring of a ladder web: the colour set of every strand
// segment at every level. Rung colours are the differences between levels.
struct Flow {
    std::vector<PackedState> levels;
    // States on the labelled strands at the top and bottom.
    StateString boundary;
    StateString bottom_boundary;
    int weight = 0;
    friend bool operator==(const Flow& a, const Flow& b) { return a.levels == b.levels; }
};

// Colour set carried by rung t of the flow.
ColorSet rung_colors(const LadderWeb& w, const Flow& f, std::size_t t);

// All flows on w; with a boundary, only those whose top state equals it.
std::vector<Flow> enumerate_flows(const LadderWeb& w, const std::optional<StateString>& boundary = std::nullopt,
                                  const WeightRules& rules = WeightRules::standard());

}  // namespace webkup
