// Acceptance runner: one PASS/FAIL line per criterion. With arguments, runs only
// the listed criteria; exit status is 0 iff every criterion run passed.

#include <cstdlib>
#include <iostream>
#include <vector>

#include "xcheck.hpp"

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    if (ids.empty())
        for (int i = 1; i <= endpoint::xcheck::kCriteria; ++i) ids.push_back(i);
    bool all = true;
    for (int id : ids) {
        const endpoint::xcheck::Report r = endpoint::xcheck::run(id);
        std::cout << endpoint::xcheck::format(r) << std::flush;
        all = all && r.passed();
    }
    return all ? 0 : 1;
}
