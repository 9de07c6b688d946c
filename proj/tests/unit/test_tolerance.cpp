#include <gtest/gtest.h>

#include <random>

#include "schelling/error.hpp"
#include "schelling/instances.hpp"
#include "schelling/tolerance.hpp"
#include "schelling/verify/graphs.hpp"

using namespace schelling;

namespace {

ErrorCode code_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no Error thrown";
    return ErrorCode::InvalidParameters;
}

}  // namespace

TEST(ToleranceVector, ValidVector) {
    const auto tv = ToleranceVector::make({1, Rational(1, 2), 0});
    EXPECT_EQ(tv.lambda(), 3);
    EXPECT_EQ(tv[1], Rational(1, 2));
    EXPECT_EQ(tv.ones_prefix(), 1);
    EXPECT_FALSE(tv.binary_alpha());
}

TEST(ToleranceVector, Rejections) {
    EXPECT_EQ(code_of([] { ToleranceVector::make({1, 1}); }), ErrorCode::Trivial);
    EXPECT_EQ(code_of([] { ToleranceVector::make({1, 0, Rational(1, 2)}); }), ErrorCode::NotMonotone);
    EXPECT_EQ(code_of([] { ToleranceVector::make({1}); }), ErrorCode::EmptyOrShort);
    EXPECT_EQ(code_of([] { ToleranceVector::make({}); }), ErrorCode::EmptyOrShort);
    EXPECT_EQ(code_of([] { ToleranceVector::make({Rational(1, 2), 0}); }), ErrorCode::NotNormalized);
    EXPECT_EQ(code_of([] { ToleranceVector::make({1, Rational(-1, 2)}); }), ErrorCode::Negative);
}

TEST(StandardTolerance, Kinds) {
    EXPECT_EQ(standard_tolerance(ToleranceKind::alpha_binary, 7, 2), ToleranceVector::make({1, 1, 0, 0, 0, 0, 0}));
    EXPECT_EQ(standard_tolerance(ToleranceKind::proportional, 3), ToleranceVector::make({1, Rational(1, 2), 0}));
    EXPECT_EQ(standard_tolerance(ToleranceKind::inverse_proportional, 3),
              ToleranceVector::make({1, Rational(1, 2), Rational(1, 3)}));
    EXPECT_EQ(standard_tolerance(ToleranceKind::zero, 4), ToleranceVector::make({1, 0, 0, 0}));
    EXPECT_TRUE(standard_tolerance(ToleranceKind::zero, 4).is_zero_tolerance());
    EXPECT_EQ(standard_tolerance(ToleranceKind::alpha_binary, 7, 2).binary_alpha(), 2);
}

TEST(StandardTolerance, Errors) {
    EXPECT_EQ(code_of([] { standard_tolerance(ToleranceKind::alpha_binary, 4, 4); }), ErrorCode::AlphaBinaryTrivial);
    EXPECT_EQ(code_of([] { standard_tolerance(ToleranceKind::alpha_binary, 4, 0); }), ErrorCode::AlphaOutOfRange);
    EXPECT_EQ(code_of([] { standard_tolerance(ToleranceKind::alpha_binary, 4); }), ErrorCode::AlphaOutOfRange);
    EXPECT_EQ(code_of([] { standard_tolerance(ToleranceKind::zero, 4, 2); }), ErrorCode::AlphaOutOfRange);
    EXPECT_EQ(code_of([] { standard_tolerance(ToleranceKind::zero, 1); }), ErrorCode::EmptyOrShort);
}

TEST(StandardTolerance, NamesRoundTrip) {
    for (auto kind : {ToleranceKind::zero, ToleranceKind::alpha_binary, ToleranceKind::proportional,
                      ToleranceKind::inverse_proportional}) {
        EXPECT_EQ(parse_tolerance_kind(to_string(kind)), kind);
    }
    EXPECT_FALSE(parse_tolerance_kind("nope"));
}

TEST(ToleranceSums, Examples) {
    for (int lambda = 2; lambda <= 7; ++lambda) {
        const auto sums = tolerance_sums(standard_tolerance(ToleranceKind::zero, lambda));
        EXPECT_EQ(sums.tau, Rational(1));
        for (const auto& t : sums.tau_ell) EXPECT_EQ(t, Rational(1));
    }
    EXPECT_EQ(tolerance_sums(standard_tolerance(ToleranceKind::proportional, 3)).tau, Rational(3, 2));
    EXPECT_EQ(tolerance_sums(standard_tolerance(ToleranceKind::inverse_proportional, 3)).tau, Rational(11, 6));
    EXPECT_EQ(tolerance_sums(standard_tolerance(ToleranceKind::inverse_proportional, 5)).tau, harmonic(5));
}

TEST(ToleranceSums, EndpointAndMiddleBoundsOnRandomVectors) {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 500; ++k) {
        const int lambda = 2 + k % 6;
        const auto tv = verify::random_tolerance(lambda, rng);
        const auto sums = tolerance_sums(tv);
        ASSERT_EQ(static_cast<int>(sums.tau_ell.size()), lambda);
        EXPECT_EQ(sums.tau_ell.front(), sums.tau);
        EXPECT_EQ(sums.tau_ell.back(), sums.tau);
        for (int l = 1; l + 1 < lambda; ++l) EXPECT_LT(sums.tau_ell[l], Rational(2) * sums.tau);
        // Στ_ℓ <= 2(λ-1)τ
        EXPECT_LE(sums.tau_ell_total(), Rational(2 * (lambda - 1)) * sums.tau);
    }
}

TEST(ToleranceVector, LexicographicOrder) {
    const auto base = ToleranceVector::make({1, 1, 0, 0});
    const auto above = ToleranceVector::make({1, 1, Rational(1, 3), 0});
    EXPECT_TRUE(lexicographically_less(base, above));
    EXPECT_FALSE(lexicographically_less(above, base));
    EXPECT_FALSE(lexicographically_less(base, base));
}
