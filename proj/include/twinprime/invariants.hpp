// invariants.hpp
// The invariant suite behind `twinprime check`: each check runs a grid,
// counts violations and never throws for a failed property.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twinprime/counting.hpp"
#include "twinprime/estimators.hpp"
#include "twinprime/legendre.hpp"
#include "twinprime/paper_fixture.hpp"
#include "twinprime/sieve.hpp"
#include "twinprime/table.hpp"

namespace twinprime {

struct CheckResult {
    std::string name;
    std::uint64_t evaluated = 0;
    std::uint64_t violations = 0;
    std::string first_failure;

    bool passed() const { return violations == 0; }
};

struct SuiteSummary {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
    }

    const CheckResult* find(std::string_view name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

// n points geometrically spaced over [lo, hi], rounded to integers; both ends exact.
inline std::vector<std::uint64_t> log_grid(std::uint64_t lo, std::uint64_t hi, std::size_t n) {
    std::vector<std::uint64_t> xs;
    if (n == 0 || hi < lo) return xs;
    if (n == 1) return {lo};
    const double l0 = std::log(static_cast<double>(lo));
    const double l1 = std::log(static_cast<double>(hi));
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(n - 1);
        auto x = static_cast<std::uint64_t>(std::llround(std::exp(l0 + t * (l1 - l0))));
        xs.push_back(std::clamp(x, lo, hi));
    }
    xs.front() = lo;
    xs.back() = hi;
    return xs;
}

inline constexpr std::size_t invariant_grid_points = 200;
inline constexpr std::uint64_t invariant_grid_max = 1'000'000;
inline constexpr double estimator_max_rel_error = 0.04;
inline constexpr std::uint64_t estimator_min_x = 1500;

namespace detail {

inline bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t brute_phi(std::uint64_t y, std::span<const std::uint64_t> ps) {
    std::uint64_t n_ok = 0;
    for (std::uint64_t n = 1; n <= y; ++n)
        n_ok += std::none_of(ps.begin(), ps.end(), [n](std::uint64_t p) { return n % p == 0; });
    return n_ok;
}

class CheckRunner {
public:
    explicit CheckRunner(std::string name) { r_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& describe) {
        ++r_.evaluated;
        if (ok) return;
        if (r_.violations++ == 0) r_.first_failure = describe();
    }

    CheckResult take() { return std::move(r_); }

private:
    CheckResult r_;
};

}  // namespace detail

inline SuiteSummary run_invariant_suite(const PrimeSieve& sieve, const EstimatorConfig& cfg) {
    using detail::CheckRunner;
    SuiteSummary out;
    const std::uint64_t top = std::min(sieve.limit(), invariant_grid_max);
    const auto grid = log_grid(5, top, invariant_grid_points);
    auto s = [](auto v) { return std::to_string(v); };

    {
        CheckRunner c("sieve_matches_trial_division");
        for (std::uint64_t n = 2; n <= std::min<std::uint64_t>(sieve.limit(), 100'000); ++n)
            c.expect(sieve.is_prime(n) == detail::trial_division_prime(n), [&] { return "n=" + s(n); });
        out.checks.push_back(c.take());
    }
    {
        CheckRunner c("counts_monotone");
        std::uint64_t prev_pi = 0, prev_pi2 = 0;
        for (std::uint64_t x = 5; x <= top; ++x) {
            const auto p = count_primes(sieve, x);
            const auto t = count_twin_pairs(sieve, x);
            c.expect(p >= prev_pi && t >= prev_pi2, [&] { return "x=" + s(x); });
            prev_pi = p;
            prev_pi2 = t;
        }
        out.checks.push_back(c.take());
    }
    {
        CheckRunner c("pi2_le_pi");
        for (const auto x : grid)
            c.expect(count_twin_pairs(sieve, x) <= count_primes(sieve, x), [&] { return "x=" + s(x); });
        out.checks.push_back(c.take());
    }
    {
        CheckRunner c("twin_density_decreasing");
        double prev_per_x = 1.0, prev_per_pi = 1.0;
        for (std::uint64_t x = 1000; x <= top; x *= 10) {
            const auto t = static_cast<double>(count_twin_pairs(sieve, x));
            const double per_x = t / static_cast<double>(x);
            const double per_pi = t / static_cast<double>(count_primes(sieve, x));
            c.expect(per_x < prev_per_x && per_pi < prev_per_pi, [&] { return "x=" + s(x); });
            prev_per_x = per_x;
            prev_per_pi = per_pi;
        }
        out.checks.push_back(c.take());
    }
    {
        CheckRunner c("trost_bounds");
        for (const auto x : grid) {
            const auto b = trost_bounds(x);
            const auto p = static_cast<double>(count_primes(sieve, x));
            c.expect(b.lower < p && p < b.upper, [&] { return "x=" + s(x); });
        }
        out.checks.push_back(c.take());
    }
    {
        CheckRunner c("ab_sandwich");
        for (const auto x : grid) c.expect(sandwich_check(sieve, x).holds, [&] { return "x=" + s(x); });
        out.checks.push_back(c.take());
    }
    {
        CheckRunner c("h_below_5_12");
        for (const auto x : grid) {
            const auto t = count_twin_pairs(sieve, x);
            if (t == 0) continue;
            const double h = h_ratio(x, count_primes(sieve, x), t);
            c.expect(h > 0.0 && h < h_upper_limit, [&] { return "x=" + s(x) + " h=" + format_fixed(h, 6); });
        }
        out.checks.push_back(c.take());
    }
    {
        CheckRunner c("phi_routes_agree");
        for (std::size_t r = 0; r <= 7; ++r) {
            const auto ps = legendre::first_primes(r);
            for (std::uint64_t y = 0; y <= 2000; ++y) {
                legendre::PhiQuery q(y, r);
                const auto rec = legendre::phi_recursive(q);
                c.expect(rec == legendre::phi_mobius(q) && rec == detail::brute_phi(y, ps),
                         [&] { return "y=" + s(y) + " r=" + s(r); });
            }
        }
        out.checks.push_back(c.take());
    }
    {
        CheckRunner c("phi_plus_r_bound");
        const std::uint64_t ymax = std::min<std::uint64_t>(sieve.limit(), 10'000);
        for (std::size_t r = 0; r <= 10; ++r)
            for (std::uint64_t y = 0; y <= ymax; ++y)
                c.expect(legendre::check_eq9(sieve, y, r).bound_ok, [&] { return "y=" + s(y) + " r=" + s(r); });
        out.checks.push_back(c.take());
    }
    {
        CheckRunner c("density_bound");
        for (const double cc : {0.8, 1.0, 1.2, 1.4})
            for (std::uint64_t y = 1000; y <= top; y *= 10)
                c.expect(legendre::density_upper_bound(sieve, {cc, y}).holds,
                         [&] { return "c=" + format_fixed(cc, 1) + " y=" + s(y); });
        out.checks.push_back(c.take());
    }
    {
        CheckRunner c("estimator_accuracy");
        for (const auto x : paper::table3_checkpoints) {
            if (x < estimator_min_x || x > sieve.limit()) continue;
            const auto row = estimate_row(sieve, x, cfg);
            c.expect(row.rel_error <= estimator_max_rel_error,
                     [&] { return "x=" + s(x) + " rel_error=" + format_fixed(row.rel_error, 4); });
        }
        out.checks.push_back(c.take());
    }
    {
        CheckRunner c("twin_constant_decreasing");
        double prev = twin_prime_constant(3);
        for (const std::uint64_t pmax : {10, 100, 1000, 10'000, 100'000}) {
            const double v = twin_prime_constant(pmax);
            c.expect(v < prev, [&] { return "pmax=" + s(pmax); });
            prev = v;
        }
        out.checks.push_back(c.take());
    }
    return out;
}

inline std::string render_summary(const SuiteSummary& sum, bool json) {
    if (json) {
        nlohmann::json j = {{"passed", sum.all_passed()}, {"checks", nlohmann::json::array()}};
        for (const auto& c : sum.checks)
            j["checks"].push_back({{"name", c.name},
                                   {"passed", c.passed()},
                                   {"evaluated", c.evaluated},
                                   {"violations", c.violations},
                                   {"first_failure", c.first_failure}});
        return j.dump(2) + "\n";
    }
    std::string out;
    for (const auto& c : sum.checks) {
        out += (c.passed() ? "PASS " : "FAIL ") + c.name + " (" + std::to_string(c.evaluated) + " evaluated";
        if (!c.passed()) out += ", " + std::to_string(c.violations) + " violations, first: " + c.first_failure;
        out += ")\n";
    }
    return out;
}

}  // namespace twinprime
