// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <cstdlib>
#include <iostream>
#include <string>

#include "schelling/verify/acceptance.hpp"

int main(int argc, char** argv) {
    schelling::verify::AcceptanceOptions options;
    if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);

    int passed = 0;
    for (int id = 1; id <= schelling::verify::kCriterionCount; ++id) {
        const auto result = schelling::verify::run_criterion(id, options);
        std::cout << schelling::verify::format_line(result) << std::endl;
        if (result.passed) ++passed;
    }
    std::cout << passed << "/" << schelling::verify::kCriterionCount << " criteria passed" << std::endl;
    return passed == schelling::verify::kCriterionCount ? EXIT_SUCCESS : EXIT_FAILURE;
}
