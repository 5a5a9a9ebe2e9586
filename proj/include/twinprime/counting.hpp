// counting.hpp
// Exact pi(x), pi_2(x) and the composed count pi(pi(x)) over a built sieve.
#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "twinprime/sieve.hpp"

namespace twinprime {

struct CountCheckpoint {
    std::uint64_t x = 0;
    std::uint64_t pi_x = 0;
    std::uint64_t pi2_x = 0;
    std::uint64_t pi_pi_x = 0;
    double ratio = 0.0;  // pi2_x / pi_pi_x

    bool operator==(const CountCheckpoint&) const = default;
};

inline std::uint64_t count_primes(const PrimeSieve& sieve, std::uint64_t x) {
    if (x < 2 || x > sieve.limit())
        throw sieve_range_error("count_primes: x=" + std::to_string(x) + " outside [2, " +
                                std::to_string(sieve.limit()) + "]");
    return sieve.prime_count_upto(x);
}

// Pairs (p, p+2) counted once by the smaller member, included iff p + 2 <= x.
inline std::uint64_t count_twin_pairs(const PrimeSieve& sieve, std::uint64_t x) {
    if (x < 5 || x > sieve.limit())
        throw sieve_range_error("count_twin_pairs: x=" + std::to_string(x) + " outside [5, " +
                                std::to_string(sieve.limit()) + "]");
    return sieve.twin_count_upto(x);
}

inline std::uint64_t pi_pi(const PrimeSieve& sieve, std::uint64_t x) {
    if (x < 5) throw sieve_range_error("pi_pi: x=" + std::to_string(x) + " below 5");
    return count_primes(sieve, count_primes(sieve, x));
}

inline CountCheckpoint make_checkpoint(const PrimeSieve& sieve, std::uint64_t x) {
    CountCheckpoint row;
    row.x = x;
    row.pi_x = count_primes(sieve, x);
    row.pi2_x = count_twin_pairs(sieve, x);
    row.pi_pi_x = count_primes(sieve, row.pi_x);
    row.ratio = row.pi_pi_x > 0 ? static_cast<double>(row.pi2_x) / static_cast<double>(row.pi_pi_x)
                                : std::numeric_limits<double>::quiet_NaN();
    return row;
}

// xs must be non-empty, strictly increasing and inside [5, limit].
inline std::vector<CountCheckpoint> checkpoint_rows(const PrimeSieve& sieve, std::span<const std::uint64_t> xs) {
    if (xs.empty()) throw std::invalid_argument("checkpoint_rows: no checkpoints given");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 5 || xs[i] > sieve.limit())
            throw std::invalid_argument("checkpoint_rows: x=" + std::to_string(xs[i]) + " outside [5, " +
                                        std::to_string(sieve.limit()) + "]");
        if (i > 0 && xs[i] <= xs[i - 1])
            throw std::invalid_argument("checkpoint_rows: checkpoints must be strictly increasing");
    }
    std::vector<CountCheckpoint> rows;
    rows.reserve(xs.size());
    for (const auto x : xs) rows.push_back(make_checkpoint(sieve, x));
    return rows;
}

}  // namespace twinprime
