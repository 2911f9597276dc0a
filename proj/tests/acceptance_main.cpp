// Acceptance runner: one PASS/FAIL line per criterion.
//   qar_acceptance                 run all criteria
//   qar_acceptance --criterion N   run criterion N only

#include <cstdlib>
#include <iostream>
#include <string>

#include "qar/acceptance.hpp"

int main(int argc, char** argv) {
    using namespace qar::acceptance;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: qar_acceptance [--criterion N]\n";
            return 2;
        }
    }
    if (only != 0 && (only < 1 || only > kCriterionCount)) {
        std::cerr << "criterion must be in 1.." << kCriterionCount << "\n";
        return 2;
    }

    bool all_passed = true;
    for (int id = 1; id <= kCriterionCount; ++id) {
        if (only != 0 && id != only) continue;
        const CriterionResult r = run_criterion(id);
        std::cout << format_line(r) << std::endl;
        all_passed = all_passed && r.passed;
    }
    return all_passed ? 0 : 1;
}
