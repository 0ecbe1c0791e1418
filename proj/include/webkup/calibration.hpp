#pragma once

#include <string>
#include <vector>

#include "webkup/weights.hpp"

namespace webkup {

struct CalibrationStage {
    std::string constraint;
    std::size_t survivors;
};

struct CalibrationReport {
    std::size_t candidates = 0;
    std::vector<CalibrationStage> stages;
    std::vector<WeightRules::Matrix> solutions;
    std::string summary() const;
};

// Searches unit rules with off-diagonal entries in {-1, 0, 1} against: exact
// monomial divided powers, [E_i, E_{-i}] 1_l = [l_i - l_{i+1}] 1_l on two
// strands, the Serre and far-commutation relations on three strands, the
// circle value [3], and weight zero on the growth flow of every dominant path
// with at most `max_boundary` points.
CalibrationReport calibrate(int max_boundary = 6);

// Checks the two- and three-strand relations for one set of rules.
bool satisfies_ladder_relations(const WeightRules& rules);
bool canonical_flows_have_weight_zero(const WeightRules& rules, int max_boundary);

}  // namespace webkup
