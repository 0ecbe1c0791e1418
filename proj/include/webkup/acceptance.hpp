#pragma once

#include <functional>
#include <string>
#include <vector>

namespace webkup {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

constexpr int kCriteria = 13;

CriterionResult run_criterion(int id);
// Runs every criterion in order, reporting each as it finishes.
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result = nullptr);
// "PASS [3] name (1.23 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace webkup
