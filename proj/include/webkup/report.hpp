#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace webkup {

// Outcome of an exhaustive verification sweep.
struct RelationReport {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void record(bool pass, const std::string& what) {
        ++checks;
        if (!pass) failures.push_back(what);
    }
    void merge(const RelationReport& o) {
        checks += o.checks;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
    std::string summary() const {
        std::ostringstream os;
        os << checks << " checks, " << failures.size() << " failures";
        for (std::size_t i = 0; i < failures.size() && i < 20; ++i) os << "\n  " << failures[i];
        return os.str();
    }
};

}  // namespace webkup
