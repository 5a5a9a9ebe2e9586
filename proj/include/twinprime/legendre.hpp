// legendre.hpp
// Legendre's phi(y, r): how many n in [1, y] are divisible by none of the
// first r primes. Two independent evaluations are provided (recurrence and
// the signed Moebius sum) and are cross-checked against each other in tests.
#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "twinprime/counting.hpp"
#include "twinprime/sieve.hpp"

namespace twinprime::legendre {

// Largest r accepted by phi_mobius: it sums 2^r terms.
inline constexpr unsigned mobius_max_r = 25;

// The first r primes, by trial division against the primes found so far.
inline std::vector<std::uint64_t> first_primes(std::size_t r) {
    std::vector<std::uint64_t> ps;
    ps.reserve(r);
    for (std::uint64_t n = 2; ps.size() < r; ++n) {
        bool prime = true;
        for (const auto p : ps) {
            if (p * p > n) break;
            if (n % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) ps.push_back(n);
    }
    return ps;
}

struct PhiQuery {
    std::uint64_t y = 0;
    std::size_t r = 0;
    std::vector<std::uint64_t> primes;  // P_1 .. P_r

    PhiQuery(std::uint64_t y_, std::size_t r_) : y(y_), r(r_), primes(first_primes(r_)) {}
};

namespace detail {

inline std::uint64_t phi_rec(std::uint64_t y, std::size_t r, std::span<const std::uint64_t> ps) {
    if (r == 0 || y == 0) return y;
    return phi_rec(y, r - 1, ps) - phi_rec(y / ps[r - 1], r - 1, ps);
}

}  // namespace detail

// phi(y, r) = phi(y, r-1) - phi(floor(y / P_r), r-1).
inline std::uint64_t phi_recursive(const PhiQuery& q) { return detail::phi_rec(q.y, q.r, q.primes); }

inline std::uint64_t phi_recursive(std::uint64_t y, std::size_t r) { return phi_recursive(PhiQuery(y, r)); }

// Sum over every subset S of {P_1..P_r} of (-1)^|S| * floor(y / prod S).
inline std::int64_t phi_mobius_signed(const PhiQuery& q) {
    if (q.r > mobius_max_r)
        throw std::invalid_argument("phi_mobius: r=" + std::to_string(q.r) + " exceeds " +
                                    std::to_string(mobius_max_r) + " (sum has 2^r terms)");
    std::int64_t total = 0;
    const std::uint64_t subsets = std::uint64_t{1} << q.r;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        std::uint64_t d = 1;
        int sign = 1;
        for (std::size_t k = 0; k < q.r && d <= q.y; ++k) {
            if ((mask >> k) & 1u) {
                d *= q.primes[k];
                sign = -sign;
            }
        }
        // d > y means floor(y/d) = 0; the product can be left partial.
        if (d <= q.y) total += sign * static_cast<std::int64_t>(q.y / d);
    }
    return total;
}

inline std::uint64_t phi_mobius(const PhiQuery& q) { return static_cast<std::uint64_t>(phi_mobius_signed(q)); }

inline std::uint64_t phi_mobius(std::uint64_t y, std::size_t r) { return phi_mobius(PhiQuery(y, r)); }

// pi(sqrt(y)), the r used in the divisor-range subscript of the Moebius sum.
inline std::size_t sqrt_rank(const PrimeSieve& sieve, std::uint64_t y) {
    const auto s = twinprime::detail::isqrt(y);
    return s < 2 ? 0 : static_cast<std::size_t>(sieve.prime_count_upto(s));
}

struct Eq9Check {
    std::uint64_t pi_y = 0;
    std::uint64_t phi = 0;
    bool bound_ok = false;  // pi(y) <= phi(y, r) + r
};

inline Eq9Check check_eq9(const PrimeSieve& sieve, std::uint64_t y, std::size_t r) {
    Eq9Check out;
    out.pi_y = sieve.prime_count_upto(y);
    out.phi = phi_recursive(y, r);
    out.bound_ok = out.pi_y <= out.phi + r;
    return out;
}

struct DensityBoundParams {
    double c = 1.0;
    std::uint64_t y = 0;

    // Throws std::invalid_argument naming the violated inequality.
    void validate() const {
        if (!(c > 0.0)) throw std::invalid_argument("density bound: c must be > 0");
        if (!(c * std::log(2.0) < 1.0))
            throw std::invalid_argument("density bound: c*ln2 = " + std::to_string(c * std::log(2.0)) +
                                        " must be < 1");
        if (y < 2) throw std::invalid_argument("density bound: y must be >= 2");
        const double denom = std::log(c) + std::log(std::log(static_cast<double>(y)));
        if (!(denom > 0.0))
            throw std::invalid_argument("density bound: ln c + ln ln y = " + std::to_string(denom) +
                                        " must be > 0");
    }
};

struct DensityBound {
    std::uint64_t r = 0;  // floor(c ln y)
    double bound = 0.0;   // 1/(ln c + ln ln y) + 2 y^(c ln2 - 1)
    double actual = 0.0;  // pi(y)/y
    bool holds = false;
};

inline double density_bound_value(const DensityBoundParams& p) {
    p.validate();
    const double y = static_cast<double>(p.y);
    return 1.0 / (std::log(p.c) + std::log(std::log(y))) + 2.0 * std::pow(y, p.c * std::log(2.0) - 1.0);
}

inline DensityBound density_upper_bound(const PrimeSieve& sieve, const DensityBoundParams& p) {
    DensityBound out;
    out.bound = density_bound_value(p);
    out.r = static_cast<std::uint64_t>(std::floor(p.c * std::log(static_cast<double>(p.y))));
    out.actual = static_cast<double>(sieve.prime_count_upto(p.y)) / static_cast<double>(p.y);
    out.holds = out.actual < out.bound;
    return out;
}

}  // namespace twinprime::legendre
