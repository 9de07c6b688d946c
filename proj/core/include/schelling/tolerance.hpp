#ifndef SCHELLING_TOLERANCE_HPP
#define SCHELLING_TOLERANCE_HPP

#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "schelling/rational.hpp"

namespace schelling {

/// Tolerance weights t_0..t_{λ-1}, indexed by type distance.
///
/// Invariants: λ >= 2, 1 = t_0 >= t_1 >= ... >= t_{λ-1} >= 0 and
/// t_{λ-1} < 1. Only constructible through `make`, which validates.
class ToleranceVector {
public:
    static ToleranceVector make(std::span<const Rational> values);
    static ToleranceVector make(std::initializer_list<Rational> values) {
        return make(std::span<const Rational>(values.begin(), values.size()));
    }

    [[nodiscard]] int lambda() const noexcept { return static_cast<int>(values_.size()); }
    [[nodiscard]] const Rational& operator[](int distance) const { return values_.at(static_cast<std::size_t>(distance)); }
    [[nodiscard]] const std::vector<Rational>& values() const noexcept { return values_; }

    /// Largest α such that t_d = 1 for every d < α.
    [[nodiscard]] int ones_prefix() const noexcept;
    /// α if the vector is α-binary (t_d = 1 for d < α, 0 otherwise).
    [[nodiscard]] std::optional<int> binary_alpha() const noexcept;
    [[nodiscard]] bool is_zero_tolerance() const noexcept { return binary_alpha() == 1; }

    friend bool operator==(const ToleranceVector&, const ToleranceVector&) = default;
    /// Lexicographic order on (t_0, ..., t_{λ-1}); only meaningful for equal λ.
    friend bool lexicographically_less(const ToleranceVector& a, const ToleranceVector& b);

private:
    explicit ToleranceVector(std::vector<Rational> values) : values_(std::move(values)) {}
    std::vector<Rational> values_;
};

enum class ToleranceKind { zero, alpha_binary, proportional, inverse_proportional };

std::optional<ToleranceKind> parse_tolerance_kind(std::string_view name);
std::string_view to_string(ToleranceKind kind);

ToleranceVector standard_tolerance(ToleranceKind kind, int lambda, std::optional<int> alpha = std::nullopt);

struct ToleranceSums {
    Rational tau;                   ///< Σ_d t_d
    std::vector<Rational> tau_ell;  ///< tau_ell[ℓ-1] = Σ_k t_{|ℓ-k|}, ℓ = 1..λ
    [[nodiscard]] Rational tau_ell_total() const;
};

ToleranceSums tolerance_sums(const ToleranceVector& tv);

}  // namespace schelling

#endif  // SCHELLING_TOLERANCE_HPP
