#include "schelling/rational.hpp"

#include <charconv>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace schelling {
namespace {

__extension__ using wide = __int128;

wide wide_abs(wide v) { return v < 0 ? -v : v; }

wide wide_gcd(wide a, wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(wide v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t out = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (text.empty() || ec != std::errc() || ptr != last) {
        throw std::invalid_argument("not a rational: \"" + std::string(whole) + "\"");
    }
    return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    *this = from_wide(num, den);
}

Rational Rational::from_wide(wide num, wide den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    wide g = wide_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (!fits(num) || !fits(den)) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

double Rational::to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    std::int64_t n = parse_int(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");
    }
    std::int64_t d = parse_int(den_text, text);
    if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    return Rational(n, d);
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) return *this = from_wide(wide(num_) + rhs.num_, den_);
    return *this = from_wide(wide(num_) * rhs.den_ + wide(rhs.num_) * den_, wide(den_) * rhs.den_);
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (den_ == rhs.den_) return *this = from_wide(wide(num_) - rhs.num_, den_);
    return *this = from_wide(wide(num_) * rhs.den_ - wide(rhs.num_) * den_, wide(den_) * rhs.den_);
}

Rational& Rational::operator*=(const Rational& rhs) {
    return *this = from_wide(wide(num_) * rhs.num_, wide(den_) * rhs.den_);
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("division by zero rational");
    return *this = from_wide(wide(num_) * rhs.den_, wide(den_) * rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
    wide l = wide(lhs.num_) * rhs.den_;
    wide r = wide(rhs.num_) * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string to_decimal(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", r.to_double());
    return buf;
}

std::string exact_and_decimal(const Rational& r) { return r.str() + " (" + to_decimal(r) + ")"; }

}  // namespace schelling
