#include "schelling/tolerance.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "schelling/error.hpp"

namespace schelling {

ToleranceVector ToleranceVector::make(std::span<const Rational> values) {
    if (values.size() < 2) {
        throw Error(ErrorCode::EmptyOrShort, "tolerance vector needs at least two entries");
    }
    if (values.front() != Rational(1)) {
        throw Error(ErrorCode::NotNormalized, "t_0 must be 1, got " + values.front().str());
    }
    for (std::size_t d = 1; d < values.size(); ++d) {
        if (values[d] > values[d - 1]) {
            throw Error(ErrorCode::NotMonotone,
                        "tolerance vector increases at d=" + std::to_string(d));
        }
    }
    if (values.back() < Rational(0)) {
        throw Error(ErrorCode::Negative, "t_{lambda-1} is negative");
    }
    if (values.back() == Rational(1)) {
        throw Error(ErrorCode::Trivial, "t_{lambda-1} = 1 makes every agent fully tolerant");
    }
    return ToleranceVector(std::vector<Rational>(values.begin(), values.end()));
}

int ToleranceVector::ones_prefix() const noexcept {
    int alpha = 0;
    while (alpha < lambda() && values_[static_cast<std::size_t>(alpha)] == Rational(1)) ++alpha;
    return alpha;
}

std::optional<int> ToleranceVector::binary_alpha() const noexcept {
    int alpha = ones_prefix();
    for (int d = alpha; d < lambda(); ++d) {
        if (values_[static_cast<std::size_t>(d)] != Rational(0)) return std::nullopt;
    }
    return alpha;
}

bool lexicographically_less(const ToleranceVector& a, const ToleranceVector& b) {
    return std::lexicographical_compare(a.values_.begin(), a.values_.end(), b.values_.begin(),
                                        b.values_.end());
}

std::optional<ToleranceKind> parse_tolerance_kind(std::string_view name) {
    if (name == "zero") return ToleranceKind::zero;
    if (name == "alpha_binary" || name == "alpha-binary") return ToleranceKind::alpha_binary;
    if (name == "proportional") return ToleranceKind::proportional;
    if (name == "inverse_proportional" || name == "inverse-proportional") {
        return ToleranceKind::inverse_proportional;
    }
    return std::nullopt;
}

std::string_view to_string(ToleranceKind kind) {
    switch (kind) {
        case ToleranceKind::zero: return "zero";
        case ToleranceKind::alpha_binary: return "alpha_binary";
        case ToleranceKind::proportional: return "proportional";
        case ToleranceKind::inverse_proportional: return "inverse_proportional";
    }
    return "unknown";
}

ToleranceVector standard_tolerance(ToleranceKind kind, int lambda, std::optional<int> alpha) {
    if (lambda < 2) throw Error(ErrorCode::EmptyOrShort, "lambda must be at least 2");
    if (alpha.has_value() != (kind == ToleranceKind::alpha_binary)) {
        throw Error(ErrorCode::AlphaOutOfRange, "alpha is required for, and only for, alpha_binary");
    }
    std::vector<Rational> values(static_cast<std::size_t>(lambda));
    switch (kind) {
        case ToleranceKind::zero:
            values[0] = 1;
            break;
        case ToleranceKind::alpha_binary:
            if (*alpha < 1 || *alpha > lambda) {
                throw Error(ErrorCode::AlphaOutOfRange, "alpha must lie in [1, lambda]");
            }
            if (*alpha == lambda) {
                throw Error(ErrorCode::AlphaBinaryTrivial,
                            "alpha = lambda gives the all-ones vector");
            }
            for (int d = 0; d < *alpha; ++d) values[static_cast<std::size_t>(d)] = 1;
            break;
        case ToleranceKind::proportional:
            for (int d = 0; d < lambda; ++d) {
                values[static_cast<std::size_t>(d)] = Rational(1) - Rational(d, lambda - 1);
            }
            break;
        case ToleranceKind::inverse_proportional:
            for (int d = 0; d < lambda; ++d) values[static_cast<std::size_t>(d)] = Rational(1, d + 1);
            break;
    }
    return ToleranceVector::make(values);
}

Rational ToleranceSums::tau_ell_total() const {
    Rational total;
    for (const auto& t : tau_ell) total += t;
    return total;
}

ToleranceSums tolerance_sums(const ToleranceVector& tv) {
    ToleranceSums sums;
    const int lambda = tv.lambda();
    for (int d = 0; d < lambda; ++d) sums.tau += tv[d];
    sums.tau_ell.reserve(static_cast<std::size_t>(lambda));
    for (int ell = 1; ell <= lambda; ++ell) {
        Rational total;
        for (int k = 1; k <= lambda; ++k) total += tv[std::abs(ell - k)];
        sums.tau_ell.push_back(total);
    }
    return sums;
}

}  // namespace schelling
