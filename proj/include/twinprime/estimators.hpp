// estimators.hpp
// Closed-form bounds and estimators for pi(x) and pi_2(x): the Trost bounds,
// the A/B sandwich for pi(pi(x)), Hardy-Littlewood style asymptotics with
// truncated Euler products, the density ratio h and the empirical pi_2*.
#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "twinprime/counting.hpp"
#include "twinprime/sieve.hpp"

namespace twinprime {

inline constexpr double paper_h_c = 1.325067;
inline constexpr double h_upper_limit = 5.12;

struct EstimatorConfig {
    double h_c = paper_h_c;
    std::uint64_t euler_pmax = 1'000'000;
    double c_density = 1.0;

    void validate() const {
        if (!(h_c > 0.0)) throw std::invalid_argument("EstimatorConfig: h_c must be > 0");
        if (euler_pmax < 3) throw std::invalid_argument("EstimatorConfig: euler_pmax must be >= 3");
    }
};

// Nearest integer, ties away from zero.
inline std::int64_t round_half_away(double v) { return static_cast<std::int64_t>(std::llround(v)); }

struct TrostBounds {
    double lower = 0.0;  // 2x / (3 ln x)
    double upper = 0.0;  // 8x / (5 ln x)
};

inline TrostBounds trost_bounds(std::uint64_t x) {
    if (x < 5) throw std::invalid_argument("trost_bounds: x must be >= 5, got " + std::to_string(x));
    const double xd = static_cast<double>(x);
    const double lx = std::log(xd);
    return {2.0 * xd / (3.0 * lx), 8.0 * xd / (5.0 * lx)};
}

struct Theorem1Bounds {
    double a = 0.0;
    double b = 0.0;
};

// A = 4x / (9 ln x [ln x - ln ln x - ln 1.5]),  B = 64x / (25 ln x [ln x - ln ln x + ln 1.6]).
inline Theorem1Bounds theorem1_bounds(std::uint64_t x) {
    if (x < 5) throw std::invalid_argument("theorem1_bounds: x must be >= 5, got " + std::to_string(x));
    const double xd = static_cast<double>(x);
    const double lx = std::log(xd);
    const double llx = std::log(lx);
    const double den_a = lx - llx - std::log(1.5);
    const double den_b = lx - llx + std::log(1.6);
    if (!(den_a > 0.0))
        throw std::invalid_argument("theorem1_bounds: ln x - ln ln x - ln 1.5 <= 0 at x=" + std::to_string(x));
    if (!(den_b > 0.0))
        throw std::invalid_argument("theorem1_bounds: ln x - ln ln x + ln 1.6 <= 0 at x=" + std::to_string(x));
    return {4.0 * xd / (9.0 * lx * den_a), 64.0 * xd / (25.0 * lx * den_b)};
}

struct BoundsRow {
    std::uint64_t x = 0;
    double a_bound = 0.0;
    std::uint64_t pi2_x = 0;
    double b_bound = 0.0;

    bool operator==(const BoundsRow&) const = default;
};

struct SandwichCheck {
    BoundsRow row;
    std::uint64_t pi_pi_x = 0;
    bool holds = false;        // A < pi(pi(x)) < B
    bool pi2_inside = false;   // A < pi_2(x) < B
};

inline SandwichCheck sandwich_check(const PrimeSieve& sieve, std::uint64_t x) {
    const auto ab = theorem1_bounds(x);
    SandwichCheck out;
    out.row = {x, ab.a, count_twin_pairs(sieve, x), ab.b};
    out.pi_pi_x = pi_pi(sieve, x);
    const auto ppi = static_cast<double>(out.pi_pi_x);
    const auto p2 = static_cast<double>(out.row.pi2_x);
    out.holds = ab.a < ppi && ppi < ab.b;
    out.pi2_inside = ab.a < p2 && p2 < ab.b;
    return out;
}

namespace detail {

inline std::vector<std::uint64_t> odd_primes_upto(std::uint64_t pmax) {
    std::vector<std::uint64_t> out;
    if (pmax < 3) return out;
    if (pmax < 5) return {3};
    const auto s = PrimeSieve::build(pmax);
    s.for_each_prime(3, pmax, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

}  // namespace detail

// 2 * prod_{3 <= p <= pmax} (1 - 1/(p-1)^2).
inline double twin_prime_constant(std::uint64_t pmax) {
    if (pmax < 3) throw std::invalid_argument("twin_prime_constant: pmax must be >= 3");
    double prod = 2.0;
    for (const auto p : detail::odd_primes_upto(pmax)) {
        const double q = static_cast<double>(p - 1);
        prod *= 1.0 - 1.0 / (q * q);
    }
    return prod;
}

// prod_{3 <= p <= pmax} (p-1)/(p-2). Diverges (like ln pmax) as pmax grows.
inline double trailing_product(std::uint64_t pmax) {
    if (pmax < 3) throw std::invalid_argument("trailing_product: pmax must be >= 3");
    double prod = 1.0;
    for (const auto p : detail::odd_primes_upto(pmax))
        prod *= static_cast<double>(p - 1) / static_cast<double>(p - 2);
    return prod;
}

// C_2 * x / ln x, as printed (note: not x / (ln x)^2).
inline double hl_estimate_eq1(std::uint64_t x, const EstimatorConfig& cfg) {
    if (x < 5) throw std::invalid_argument("hl_estimate_eq1: x must be >= 5");
    const double xd = static_cast<double>(x);
    return twin_prime_constant(cfg.euler_pmax) * xd / std::log(xd);
}

// C_2 * x / (ln x)^2 * prod (p-1)/(p-2), trailing product truncated at euler_pmax.
inline double hl_estimate_eq2(std::uint64_t x, const EstimatorConfig& cfg) {
    if (x < 5) throw std::invalid_argument("hl_estimate_eq2: x must be >= 5");
    const double xd = static_cast<double>(x);
    const double lx = std::log(xd);
    return twin_prime_constant(cfg.euler_pmax) * xd / (lx * lx) * trailing_product(cfg.euler_pmax);
}

// h = eta_PP / eta_P = x * pi_2(x) / pi(x)^2.
inline double h_ratio(std::uint64_t x, std::uint64_t pi_x, std::uint64_t pi2_x) {
    if (pi_x == 0) throw std::invalid_argument("h_ratio: pi(x) must be > 0");
    const double p = static_cast<double>(pi_x);
    return static_cast<double>(x) * static_cast<double>(pi2_x) / (p * p);
}

inline bool h_upper_bound_check(const PrimeSieve& sieve, std::uint64_t x) {
    if (x < 17) throw std::invalid_argument("h_upper_bound_check: x must be >= 17");
    const auto pi_x = count_primes(sieve, x);
    // The 5.12 derivation leans on pi(x) > x / ln x.
    if (!(static_cast<double>(pi_x) > static_cast<double>(x) / std::log(static_cast<double>(x))))
        throw std::logic_error("h_upper_bound_check: pi(x) > x/ln x fails at x=" + std::to_string(x));
    const double h = h_ratio(x, pi_x, count_twin_pairs(sieve, x));
    return h > 0.0 && h < h_upper_limit;
}

// round(h_c * pi(x)^2 / x), ties away from zero.
inline std::uint64_t pi2_star(std::uint64_t x, std::uint64_t pi_x, const EstimatorConfig& cfg) {
    if (x < 5) throw std::invalid_argument("pi2_star: x must be >= 5");
    if (pi_x == 0) throw std::invalid_argument("pi2_star: pi(x) must be > 0");
    const double p = static_cast<double>(pi_x);
    return static_cast<std::uint64_t>(round_half_away(cfg.h_c * p * p / static_cast<double>(x)));
}

struct EstimateRow {
    std::uint64_t x = 0;
    double eta_p = 0.0;   // pi(x) / x
    double eta_pp = 0.0;  // pi_2(x) / pi(x)
    double h = 0.0;
    std::uint64_t pi2_x = 0;
    std::uint64_t pi2_star = 0;
    std::uint64_t abs_delta = 0;
    double rel_error = 0.0;

    bool operator==(const EstimateRow&) const = default;
};

inline EstimateRow estimate_row(const PrimeSieve& sieve, std::uint64_t x, const EstimatorConfig& cfg) {
    EstimateRow row;
    row.x = x;
    const auto pi_x = count_primes(sieve, x);
    row.pi2_x = count_twin_pairs(sieve, x);
    row.eta_p = static_cast<double>(pi_x) / static_cast<double>(x);
    row.eta_pp = static_cast<double>(row.pi2_x) / static_cast<double>(pi_x);
    row.h = h_ratio(x, pi_x, row.pi2_x);
    row.pi2_star = pi2_star(x, pi_x, cfg);
    row.abs_delta = row.pi2_x > row.pi2_star ? row.pi2_x - row.pi2_star : row.pi2_star - row.pi2_x;
    row.rel_error = row.pi2_x > 0 ? static_cast<double>(row.abs_delta) / static_cast<double>(row.pi2_x) : 0.0;
    return row;
}

inline std::vector<EstimateRow> estimate_rows(const PrimeSieve& sieve, std::span<const std::uint64_t> xs,
                                              const EstimatorConfig& cfg) {
    std::vector<EstimateRow> rows;
    rows.reserve(xs.size());
    for (const auto x : xs) rows.push_back(estimate_row(sieve, x, cfg));
    return rows;
}

// Arithmetic mean of the h column.
inline double calibrate_hc(std::span<const EstimateRow> rows) {
    if (rows.empty()) throw std::invalid_argument("calibrate_hc: no rows");
    double sum = 0.0;
    for (const auto& r : rows) sum += r.h;
    return sum / static_cast<double>(rows.size());
}

}  // namespace twinprime
