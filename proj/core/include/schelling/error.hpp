#ifndef SCHELLING_ERROR_HPP
#define SCHELLING_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace schelling {

enum class ErrorCode {
    // tolerance vectors
    EmptyOrShort,
    NotNormalized,
    NotMonotone,
    Trivial,
    Negative,
    AlphaOutOfRange,
    AlphaBinaryTrivial,
    // games and assignments
    InvalidGame,
    InvalidAssignment,
    NodeEmpty,
    NodeUnknown,
    // topology
    SelfLoop,
    DuplicateEdge,
    Disconnected,
    TooSmall,
    NotATree,
    NotGrid,
    // equilibrium analysis
    BudgetExceeded,
    NoEquilibrium,
    ZeroWelfareEquilibrium,
    // constructions
    WrongGameClass,
    RowOverflow,
    KTooLarge,
    ConstructionCheckFailed,
    // instances and bounds
    T1IsOne,
    BadB,
    DegenerateDenominator,
    InvalidParameters,
    // file formats
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// The one exception type thrown for contract violations in this library.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace schelling

#endif  // SCHELLING_ERROR_HPP
