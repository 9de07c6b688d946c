#include "schelling/error.hpp"

namespace schelling {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyOrShort: return "EmptyOrShort";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::NotMonotone: return "NotMonotone";
        case ErrorCode::Trivial: return "Trivial";
        case ErrorCode::Negative: return "Negative";
        case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
        case ErrorCode::AlphaBinaryTrivial: return "AlphaBinaryTrivial";
        case ErrorCode::InvalidGame: return "InvalidGame";
        case ErrorCode::InvalidAssignment: return "InvalidAssignment";
        case ErrorCode::NodeEmpty: return "NodeEmpty";
        case ErrorCode::NodeUnknown: return "NodeUnknown";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::NotGrid: return "NotGrid";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NoEquilibrium: return "NoEquilibrium";
        case ErrorCode::ZeroWelfareEquilibrium: return "ZeroWelfareEquilibrium";
        case ErrorCode::WrongGameClass: return "WrongGameClass";
        case ErrorCode::RowOverflow: return "RowOverflow";
        case ErrorCode::KTooLarge: return "KTooLarge";
        case ErrorCode::ConstructionCheckFailed: return "ConstructionCheckFailed";
        case ErrorCode::T1IsOne: return "T1IsOne";
        case ErrorCode::BadB: return "BadB";
        case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorCode::InvalidParameters: return "InvalidParameters";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace schelling
