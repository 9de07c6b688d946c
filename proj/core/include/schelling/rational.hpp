#ifndef SCHELLING_RATIONAL_HPP
#define SCHELLING_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace schelling {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator, so equality is
/// structural. Arithmetic goes through 128-bit intermediates and throws
/// `std::overflow_error` if a reduced result does not fit in 64 bits.
class Rational {
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t value) noexcept : num_(value), den_(1) {}  // NOLINT: implicit by design of a number type
    Rational(std::int64_t num, std::int64_t den);

    [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }

    [[nodiscard]] double to_double() const noexcept;
    /// "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string str() const;

    /// Parses "p/q", "p", or "-p/q". Whitespace is not accepted.
    static Rational parse(std::string_view text);

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& r) { return Rational(0) - r; }

    friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept;

private:
    __extension__ using wide = __int128;
    static Rational from_wide(wide num, wide den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Renders the non-authoritative decimal companion used in reports:
/// six significant digits, `%g` style.
std::string to_decimal(const Rational& r);

/// "p/q (decimal)" as printed by the command-line tools.
std::string exact_and_decimal(const Rational& r);

}  // namespace schelling

#endif  // SCHELLING_RATIONAL_HPP
