#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "twinprime/legendre.hpp"

using namespace twinprime;
using namespace twinprime::legendre;

TEST(FirstPrimes, Matches) {
    EXPECT_TRUE(first_primes(0).empty());
    EXPECT_EQ(first_primes(10), oracle::first_primes(10));
    const PhiQuery q(100, 4);
    EXPECT_EQ(q.primes, (std::vector<std::uint64_t>{2, 3, 5, 7}));
}

TEST(Phi, RecursiveExamples) {
    EXPECT_EQ(phi_recursive(10, 2), 3u);
    EXPECT_EQ(phi_recursive(20, 3), 6u);
    EXPECT_EQ(phi_recursive(12345, 0), 12345u);
    EXPECT_EQ(phi_recursive(0, 5), 0u);
    EXPECT_EQ(oracle::phi(10, 2), 3u);
    EXPECT_EQ(oracle::phi(20, 3), 6u);
}

TEST(Phi, MobiusExamples) {
    // 10 - 5 - 3 + 1
    EXPECT_EQ(phi_mobius_signed(PhiQuery(10, 2)), 3);
    EXPECT_EQ(phi_mobius(20, 3), 6u);
    EXPECT_EQ(phi_mobius(7, 1), 4u);
    EXPECT_EQ(oracle::phi(7, 1), 4u);
}

TEST(Phi, MobiusGuard) {
    EXPECT_NO_THROW(phi_mobius(100, mobius_max_r));
    try {
        phi_mobius(100, mobius_max_r + 1);
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("2^r"), std::string::npos);
    }
}

TEST(Phi, LargeRBothRoutes) {
    // r = 25 primes go up to 97; every n in [2, 100] with a factor <= 97 drops out.
    EXPECT_EQ(phi_mobius(100, 25), 1u);
    EXPECT_EQ(phi_recursive(100, 25), 1u);
    EXPECT_EQ(phi_recursive(1'000'000, 30), oracle::phi(1'000'000, 30));
}

TEST(Phi, RoutesAgreeExhaustively) {
    for (std::size_t r = 0; r <= 7; ++r)
        for (std::uint64_t y = 0; y <= 2000; ++y) {
            const PhiQuery q(y, r);
            const auto brute = oracle::phi(y, r);
            ASSERT_EQ(phi_recursive(q), brute) << y << "," << r;
            ASSERT_EQ(phi_mobius(q), brute) << y << "," << r;
        }
}

TEST(Phi, Monotonicity) {
    for (std::uint64_t y = 0; y <= 500; ++y)
        for (std::size_t r = 1; r <= 8; ++r) ASSERT_LE(phi_recursive(y, r), phi_recursive(y, r - 1));
    for (std::size_t r = 0; r <= 8; ++r)
        for (std::uint64_t y = 1; y <= 500; ++y) ASSERT_GE(phi_recursive(y, r), phi_recursive(y - 1, r));
}

TEST(PhiPlusR, Examples) {
    const auto s = build_sieve(10'000);
    const auto a = check_eq9(s, 100, 4);
    EXPECT_EQ(a.pi_y, 25u);
    EXPECT_EQ(a.phi, oracle::phi(100, 4));
    EXPECT_EQ(a.phi, 22u);
    EXPECT_TRUE(a.bound_ok);

    const auto b = check_eq9(s, 10, 0);
    EXPECT_EQ(b.pi_y, 4u);
    EXPECT_EQ(b.phi, 10u);
    EXPECT_TRUE(b.bound_ok);

    const auto c = check_eq9(s, 10'000, 10);
    EXPECT_EQ(c.phi, oracle::phi(10'000, 10));
    EXPECT_TRUE(c.bound_ok);

    EXPECT_THROW(check_eq9(s, 10'001, 1), sieve_range_error);
}

TEST(PhiPlusR, HoldsOnGrid) {
    const auto s = build_sieve(10'000);
    for (std::size_t r = 0; r <= 10; ++r)
        for (std::uint64_t y = 0; y <= 10'000; ++y) ASSERT_TRUE(check_eq9(s, y, r).bound_ok) << y << "," << r;
}

TEST(SqrtRank, Values) {
    const auto s = build_sieve(10'000);
    EXPECT_EQ(sqrt_rank(s, 100), 4u);
    EXPECT_EQ(sqrt_rank(s, 120), 4u);
    EXPECT_EQ(sqrt_rank(s, 121), 5u);
    EXPECT_EQ(sqrt_rank(s, 3), 0u);
}

TEST(DensityBound, AtOneMillion) {
    const auto s = build_sieve(1'000'000);
    const auto d = density_upper_bound(s, {1.0, 1'000'000});
    EXPECT_NEAR(d.bound, 0.409672032672531, 1e-12);
    EXPECT_DOUBLE_EQ(d.actual, 0.078498);
    EXPECT_TRUE(d.holds);
    EXPECT_EQ(d.r, 13u);
}

TEST(DensityBound, ParameterGuards) {
    EXPECT_NO_THROW((DensityBoundParams{1.4, 1000}.validate()));
    try {
        DensityBoundParams{1.5, 1000}.validate();
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("c*ln2"), std::string::npos);
    }
    try {
        DensityBoundParams{1.0, 2}.validate();
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("ln c + ln ln y"), std::string::npos);
    }
    EXPECT_THROW((DensityBoundParams{0.0, 1000}.validate()), std::invalid_argument);
    EXPECT_THROW((DensityBoundParams{1.0, 1}.validate()), std::invalid_argument);
}

TEST(DensityBound, HoldsOnGrid) {
    const auto s = build_sieve(1'000'000);
    for (const double c : {0.8, 1.0, 1.2, 1.4})
        for (std::uint64_t y = 1000; y <= 1'000'000; y *= 10) {
            const auto d = density_upper_bound(s, {c, y});
            EXPECT_TRUE(d.holds) << c << " " << y;
            EXPECT_LT(std::pow(2.0, static_cast<double>(d.r)), static_cast<double>(y));
        }
}
