// Minimal library usage: counts, the composed count and the empirical estimate.
#include <iostream>

#include "twinprime/twinprime.hpp"

int main() {
    using namespace twinprime;

    const auto sieve = build_sieve(1'000'000);
    const EstimatorConfig cfg;

    for (const std::uint64_t x : {1'000, 10'000, 100'000, 1'000'000}) {
        const auto pi_x = count_primes(sieve, x);
        const auto pi2_x = count_twin_pairs(sieve, x);
        std::cout << "x=" << x << "  pi=" << pi_x << "  pi2=" << pi2_x << "  pi(pi)=" << pi_pi(sieve, x)
                  << "  pi2*=" << pi2_star(x, pi_x, cfg) << "  h=" << format_fixed(h_ratio(x, pi_x, pi2_x), 6)
                  << "\n";
    }
}
