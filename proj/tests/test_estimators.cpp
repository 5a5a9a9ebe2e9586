#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "twinprime/estimators.hpp"
#include "twinprime/invariants.hpp"
#include "twinprime/paper_fixture.hpp"

using namespace twinprime;

namespace {
const PrimeSieve& sieve_1e6() {
    static const auto s = build_sieve(1'000'000);
    return s;
}

void expect_rel(double got, double want, double rel = 1e-12) {
    EXPECT_LE(std::abs(got - want), rel * std::abs(want)) << got << " vs " << want;
}
}  // namespace

TEST(Rounding, HalfAwayFromZero) {
    EXPECT_EQ(round_half_away(0.5), 1);
    EXPECT_EQ(round_half_away(2.5), 3);
    EXPECT_EQ(round_half_away(-2.5), -3);
    EXPECT_EQ(round_half_away(2.4999999), 2);
    EXPECT_EQ(round_half_away(5.963), 6);
}

TEST(Trost, Examples) {
    const auto a = trost_bounds(100);
    expect_rel(a.lower, 14.4764827301083942550);
    expect_rel(a.upper, 34.7435585522601462121);
    const auto b = trost_bounds(5);
    expect_rel(b.lower, 2.07111644853203936902);
    expect_rel(b.upper, 4.97067947647689448566);
    const auto c = trost_bounds(1'000'000);
    expect_rel(c.lower, 48254.9424336946475168);
    expect_rel(c.upper, 115811.861840867154040);
    const auto& s = sieve_1e6();
    for (const std::uint64_t x : {5, 100, 1'000'000}) {
        const auto t = trost_bounds(x);
        const auto p = static_cast<double>(count_primes(s, x));
        EXPECT_LT(t.lower, p);
        EXPECT_LT(p, t.upper);
    }
    EXPECT_THROW(trost_bounds(4), std::invalid_argument);
}

TEST(AbBounds, FormulaValues) {
    struct Case {
        std::uint64_t x;
        double a, b;
    };
    // 30-digit evaluations of the closed forms.
    const Case cases[] = {
        {5, 1.89639804698829553174, 4.95965494977539450350},
        {50, 2.65133493225224953233, 10.8415995794412418421},
        {500, 8.97937840529989316104, 42.3998892812807392709},
        {10'000, 73.2851200733887035651, 372.584219524065345576},
        {100'000, 445.567849808337028825, 2330.93701514617967254},
        {1'000'000, 2983.04945418081219695, 15892.2292153308818967},
    };
    for (const auto& c : cases) {
        const auto ab = theorem1_bounds(c.x);
        expect_rel(ab.a, c.a);
        expect_rel(ab.b, c.b);
        EXPECT_LT(ab.a, ab.b);
    }
    EXPECT_EQ(round_half_away(theorem1_bounds(50).a), 3);
    EXPECT_EQ(round_half_away(theorem1_bounds(50).b), 11);
    EXPECT_EQ(round_half_away(theorem1_bounds(10'000).a), 73);
    EXPECT_EQ(round_half_away(theorem1_bounds(1'000'000).a), 2983);
    EXPECT_THROW(theorem1_bounds(4), std::invalid_argument);
}

TEST(AbBounds, DenominatorPositiveFromFive) {
    for (std::uint64_t x = 5; x <= 100'000; ++x) ASSERT_NO_THROW(theorem1_bounds(x));
}

TEST(Sandwich, Examples) {
    const auto& s = sieve_1e6();
    const auto a = sandwich_check(s, 500);
    EXPECT_EQ(round_half_away(a.row.a_bound), 9);
    EXPECT_EQ(a.row.pi2_x, 24u);
    EXPECT_EQ(round_half_away(a.row.b_bound), 42);
    EXPECT_TRUE(a.holds);
    EXPECT_TRUE(a.pi2_inside);

    const auto b = sandwich_check(s, 5);
    EXPECT_EQ(b.pi_pi_x, 2u);
    EXPECT_TRUE(b.holds);

    const auto c = sandwich_check(s, 100'000);
    EXPECT_EQ(c.row.pi2_x, 1224u);
    EXPECT_EQ(round_half_away(c.row.b_bound), 2331);
    EXPECT_TRUE(c.holds);
}

TEST(Sandwich, TrostAndHOnLogGrid) {
    const auto& s = sieve_1e6();
    const auto grid = log_grid(5, 1'000'000, 200);
    ASSERT_EQ(grid.size(), 200u);
    EXPECT_EQ(grid.front(), 5u);
    EXPECT_EQ(grid.back(), 1'000'000u);
    for (const auto x : grid) {
        EXPECT_TRUE(sandwich_check(s, x).holds) << x;
        const auto t = trost_bounds(x);
        const auto p = static_cast<double>(count_primes(s, x));
        EXPECT_TRUE(t.lower < p && p < t.upper) << x;
        const auto pi2 = count_twin_pairs(s, x);
        if (pi2 > 0) {
            const double h = h_ratio(x, count_primes(s, x), pi2);
            EXPECT_TRUE(h > 0 && h < 5.12) << x;
        }
    }
}

TEST(TwinConstant, SmallProductsExact) {
    EXPECT_DOUBLE_EQ(twin_prime_constant(3), 1.5);
    EXPECT_DOUBLE_EQ(twin_prime_constant(4), 1.5);
    EXPECT_DOUBLE_EQ(twin_prime_constant(5), 1.40625);
    // 2 * (3/4) * (15/16) * (35/36)
    EXPECT_DOUBLE_EQ(twin_prime_constant(7), 1.3671875);
    EXPECT_NEAR(twin_prime_constant(7), static_cast<double>(oracle::twin_constant(7)), 1e-15);
    EXPECT_THROW(twin_prime_constant(2), std::invalid_argument);
}

TEST(TwinConstant, MatchesLogSumOracle) {
    for (const std::uint64_t pmax : {100, 1000, 100'000}) {
        const double want = static_cast<double>(oracle::twin_constant(pmax));
        EXPECT_NEAR(twin_prime_constant(pmax), want, 1e-9) << pmax;
    }
}

TEST(TwinConstant, DecreasingWithBoundedTail) {
    double prev = twin_prime_constant(3);
    for (const std::uint64_t pmax : {10, 100, 1000, 10'000, 100'000, 1'000'000}) {
        const double v = twin_prime_constant(pmax);
        EXPECT_LT(v, prev) << pmax;
        prev = v;
    }
    // sum_{p > pmax} 1/(p-1)^2 < 1/(pmax-1) bounds the remaining relative change.
    const double d = twin_prime_constant(100'000) - twin_prime_constant(1'000'000);
    EXPECT_GT(d, 0.0);
    EXPECT_LT(d, 2.0 / (100'000 - 1));
    EXPECT_NEAR(twin_prime_constant(1'000'000), 1.320323721179676, 1e-9);
}

TEST(HardyLittlewood, Eq1Verbatim) {
    EstimatorConfig cfg;
    const double c2 = twin_prime_constant(cfg.euler_pmax);
    expect_rel(hl_estimate_eq1(1'000'000, cfg), c2 * 1e6 / std::log(1e6));
    EXPECT_NEAR(hl_estimate_eq1(1'000'000, cfg), 95'570, 50);
    EXPECT_NEAR(hl_estimate_eq1(1000, cfg), 191.1, 0.1);
    EXPECT_THROW(hl_estimate_eq1(4, cfg), std::invalid_argument);
}

TEST(HardyLittlewood, Eq1OverestimatesIncreasingly) {
    const auto& s = sieve_1e6();
    EstimatorConfig cfg;
    cfg.euler_pmax = 10'000;
    double prev = 0;
    for (std::uint64_t x = 1000; x <= 1'000'000; x *= 10) {
        const double r = hl_estimate_eq1(x, cfg) / static_cast<double>(count_twin_pairs(s, x));
        EXPECT_GT(r, prev);
        prev = r;
    }
    EXPECT_GT(prev, 10.0);
}

TEST(HardyLittlewood, Eq2Truncated) {
    EstimatorConfig cfg;
    cfg.euler_pmax = 3;
    expect_rel(hl_estimate_eq2(1000, cfg), 62.8705656705379764066);
    cfg.euler_pmax = 5;
    expect_rel(hl_estimate_eq2(1000, cfg), 78.5882070881724705083);
    EXPECT_GT(trailing_product(1'000'000) / trailing_product(1000), 1.5);
    EXPECT_DOUBLE_EQ(trailing_product(3), 2.0);
}

TEST(HRatio, Examples) {
    EXPECT_DOUBLE_EQ(h_ratio(50, 15, 6), 300.0 / 225.0);
    EXPECT_NEAR(h_ratio(1'000'000, 78'498, 8'164), 1.3249, 1e-4);
    EXPECT_EQ(h_ratio(1000, 168, 0), 0.0);
    EXPECT_THROW(h_ratio(10, 0, 0), std::invalid_argument);
    const auto& s = sieve_1e6();
    const auto pi = count_primes(s, 1'000'000);
    const auto pi2 = count_twin_pairs(s, 1'000'000);
    EXPECT_DOUBLE_EQ(h_ratio(1'000'000, pi, pi2), 1e6 * 8169.0 / (78498.0 * 78498.0));
}

TEST(HRatio, UpperBoundCheck) {
    const auto& s = sieve_1e6();
    EXPECT_TRUE(h_upper_bound_check(s, 1'000'000));
    EXPECT_TRUE(h_upper_bound_check(s, 50));
    EXPECT_TRUE(h_upper_bound_check(s, 17));
    EXPECT_THROW(h_upper_bound_check(s, 16), std::invalid_argument);
}

TEST(Pi2Star, Examples) {
    const EstimatorConfig cfg;
    EXPECT_EQ(pi2_star(50, 15, cfg), 6u);
    EXPECT_EQ(pi2_star(1'000'000, 78'498, cfg), 8165u);
    EXPECT_THROW(pi2_star(50, 0, cfg), std::invalid_argument);
    EXPECT_THROW(pi2_star(4, 2, cfg), std::invalid_argument);
}

TEST(Pi2Star, TiesRoundAway) {
    EstimatorConfig cfg;
    cfg.h_c = 5.0;  // 5 * 4 / 8 = 2.5
    EXPECT_EQ(pi2_star(8, 2, cfg), 3u);
    cfg.h_c = 1.0;  // 0.5
    EXPECT_EQ(pi2_star(8, 2, cfg), 1u);
}

TEST(EstimateRows, FieldsConsistent) {
    const auto& s = sieve_1e6();
    const EstimatorConfig cfg;
    for (const auto x : paper::table3_checkpoints) {
        const auto r = estimate_row(s, x, cfg);
        EXPECT_NEAR(r.h, r.eta_pp / r.eta_p, 1e-12 * r.h);
        EXPECT_EQ(r.abs_delta, r.pi2_x > r.pi2_star ? r.pi2_x - r.pi2_star : r.pi2_star - r.pi2_x);
        EXPECT_DOUBLE_EQ(r.rel_error, static_cast<double>(r.abs_delta) / static_cast<double>(r.pi2_x));
    }
    // Exact pi_2(5000) = 126, so the estimator misses by 7 there.
    const auto r5000 = estimate_row(s, 5000, cfg);
    EXPECT_EQ(r5000.pi2_x, 126u);
    EXPECT_EQ(r5000.pi2_star, 119u);
    EXPECT_EQ(r5000.abs_delta, 7u);
}

TEST(Calibrate, Mean) {
    EXPECT_THROW(calibrate_hc({}), std::invalid_argument);
    EstimateRow one;
    one.h = 1.0;
    EXPECT_DOUBLE_EQ(calibrate_hc(std::span<const EstimateRow>(&one, 1)), 1.0);

    std::vector<EstimateRow> printed;
    for (const auto& p : paper::table3) {
        EstimateRow r;
        r.h = p.h;
        printed.push_back(r);
    }
    EXPECT_NEAR(calibrate_hc(printed), paper_h_c, 1e-2);
}

TEST(Config, Validation) {
    EstimatorConfig c;
    EXPECT_NO_THROW(c.validate());
    c.h_c = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = {};
    c.euler_pmax = 2;
    EXPECT_THROW(c.validate(), std::invalid_argument);
}
