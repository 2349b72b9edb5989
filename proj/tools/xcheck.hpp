#pragma once

#include <string>
#include <vector>

namespace endpoint::xcheck {

inline constexpr int kCriteria = 12;

struct Check {
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    bool strict = false;  // measured < bound instead of <=
    bool pass = false;
};

struct Report {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    std::vector<std::string> notes;
    double seconds = 0.0;
    bool passed() const;
};

// Runs one acceptance criterion (1..12). Library exceptions are caught and
// reported as a failed check.
Report run(int id);

// One PASS/FAIL line followed by indented check and note lines.
std::string format(const Report& r);

}  // namespace endpoint::xcheck
