#ifndef SCHELLING_VERIFY_ACCEPTANCE_HPP
#define SCHELLING_VERIFY_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace schelling::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    std::uint64_t seed = 20240617;
    int workers = 8;  ///< the parallel side of the determinism check
};

inline constexpr int kCriterionCount = 12;

/// Runs one criterion (1..12). Never throws; an exception is a failure with
/// its message as detail.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

/// "[PASS] 01 name: detail (0.12 s)"
std::string format_line(const CriterionResult& result);

}  // namespace schelling::verify

#endif  // SCHELLING_VERIFY_ACCEPTANCE_HPP
