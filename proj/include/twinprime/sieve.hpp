// sieve.hpp
// Segmented, odd-only sieve of Eratosthenes over [2, limit].
//
// Encoding:
//   bit index i  ->  odd number 2*i + 3
//   odd number n ->  bit index (n - 3) / 2
// 2 is special-cased; even numbers are never stored.
//
// Alongside the primality bits the sieve keeps a twin bitset (bit i set iff
// 2i+3 and 2i+5 are both prime) and per-word prefix popcounts for both, so
// pi(x) and pi_2(x) are O(1) after construction.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace twinprime {

class sieve_range_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Thrown when the requested limit would exceed SieveOptions::memory_budget.
class sieve_resource_error : public std::runtime_error {
public:
    sieve_resource_error(std::uint64_t required, std::uint64_t budget)
        : std::runtime_error("sieve needs ~" + std::to_string(required) +
                             " bytes, budget is " + std::to_string(budget) + " bytes"),
          required_bytes_(required) {}

    std::uint64_t required_bytes() const noexcept { return required_bytes_; }

private:
    std::uint64_t required_bytes_;
};

// 2^21 odd candidates = 256 KiB of bits per segment.
inline constexpr std::uint64_t default_segment_size = std::uint64_t{1} << 21;

struct SieveOptions {
    std::uint64_t segment_size = default_segment_size;  // odd candidates per segment
    unsigned threads = 1;
    std::uint64_t memory_budget = std::uint64_t{1} << 30;
};

namespace detail {

inline std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Plain sieve of Eratosthenes; returns the odd primes <= n.
inline std::vector<std::uint64_t> bootstrap_odd_primes(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 3) return out;
    std::vector<char> composite(n + 1, 0);
    for (std::uint64_t p = 3; p <= n; p += 2) {
        if (composite[p]) continue;
        out.push_back(p);
        for (std::uint64_t m = p * p; m <= n; m += 2 * p) composite[m] = 1;
    }
    return out;
}

inline std::uint64_t low_mask(unsigned bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace detail

class PrimeSieve {
public:
    // Bytes held by a sieve of the given limit (bits + twin bits + two rank tables).
    static std::uint64_t estimate_bytes(std::uint64_t limit) {
        const std::uint64_t words = (num_bits(limit) + 63) / 64;
        return words * (2 * sizeof(std::uint64_t) + 2 * sizeof(std::uint64_t)) + sizeof(PrimeSieve);
    }

    static PrimeSieve build(std::uint64_t limit, const SieveOptions& opts = {}) {
        if (limit < 5)
            throw std::invalid_argument("sieve limit must be >= 5, got " + std::to_string(limit));
        const std::uint64_t need = estimate_bytes(limit);
        if (need > opts.memory_budget) throw sieve_resource_error(need, opts.memory_budget);

        PrimeSieve s;
        s.limit_ = limit;
        // Segments must start on a word boundary so threads never share a word.
        s.segment_size_ = std::max<std::uint64_t>(64, (opts.segment_size + 63) / 64 * 64);
        s.nbits_ = num_bits(limit);
        s.words_.assign((s.nbits_ + 63) / 64, 0);

        const auto sieving = detail::bootstrap_odd_primes(detail::isqrt(limit));
        const std::uint64_t nseg = (s.nbits_ + s.segment_size_ - 1) / s.segment_size_;
        const unsigned nthreads =
            static_cast<unsigned>(std::clamp<std::uint64_t>(opts.threads == 0 ? 1 : opts.threads, 1, nseg));

        auto worker = [&](unsigned t) {
            for (std::uint64_t seg = t; seg < nseg; seg += nthreads) s.sieve_segment(seg, sieving);
        };
        if (nthreads == 1) {
            worker(0);
        } else {
            std::vector<std::jthread> pool;
            pool.reserve(nthreads);
            for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        }

        s.build_twins_and_ranks();
        return s;
    }

    std::uint64_t limit() const noexcept { return limit_; }
    std::uint64_t segment_size() const noexcept { return segment_size_; }

    bool is_prime(std::uint64_t n) const {
        check_range(n, "is_prime");
        if (n == 2) return true;
        if (n % 2 == 0) return false;
        return test_bit(words_, (n - 3) / 2);
    }

    // pi(x) for 0 <= x <= limit.
    std::uint64_t prime_count_upto(std::uint64_t x) const {
        if (x > limit_) throw sieve_range_error("x=" + std::to_string(x) + " exceeds sieve limit " +
                                                std::to_string(limit_));
        if (x < 2) return 0;
        if (x < 3) return 1;
        return 1 + rank(words_, prime_rank_, (x - 3) / 2);
    }

    // Number of pairs (p, p+2), both prime, with p + 2 <= x, for 0 <= x <= limit.
    std::uint64_t twin_count_upto(std::uint64_t x) const {
        if (x > limit_) throw sieve_range_error("x=" + std::to_string(x) + " exceeds sieve limit " +
                                                std::to_string(limit_));
        if (x < 5) return 0;
        return rank(twins_, twin_rank_, (x - 5) / 2);
    }

    // Calls f(p) for each prime p in [lo, hi], ascending.
    template <class F>
    void for_each_prime(std::uint64_t lo, std::uint64_t hi, F&& f) const {
        check_interval(lo, hi);
        if (lo <= 2) f(std::uint64_t{2});
        if (hi < 3) return;
        scan_bits(words_, lo <= 3 ? 0 : (lo - 2) / 2, (hi - 3) / 2,
                  [&](std::uint64_t i) { f(2 * i + 3); });
    }

    std::vector<std::uint64_t> primes(std::uint64_t lo, std::uint64_t hi) const {
        std::vector<std::uint64_t> out;
        for_each_prime(lo, hi, [&](std::uint64_t p) { out.push_back(p); });
        return out;
    }

    // Twin pairs (p, p+2) with lo <= p and p + 2 <= hi.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> twin_pairs(std::uint64_t lo, std::uint64_t hi) const {
        check_interval(lo, hi);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        if (hi < 5) return out;
        scan_bits(twins_, lo <= 3 ? 0 : (lo - 2) / 2, (hi - 5) / 2,
                  [&](std::uint64_t i) { out.emplace_back(2 * i + 3, 2 * i + 5); });
        return out;
    }

    // Raw odd-only primality words; exposed for byte-level determinism checks.
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    PrimeSieve() = default;

    static std::uint64_t num_bits(std::uint64_t limit) { return limit < 3 ? 0 : (limit - 3) / 2 + 1; }

    static bool test_bit(const std::vector<std::uint64_t>& w, std::uint64_t i) {
        return (w[i / 64] >> (i % 64)) & 1u;
    }

    // Set bits in [0, last].
    static std::uint64_t rank(const std::vector<std::uint64_t>& w, const std::vector<std::uint64_t>& prefix,
                              std::uint64_t last) {
        const std::uint64_t word = last / 64;
        const auto bits = static_cast<unsigned>(last % 64) + 1;
        return prefix[word] + static_cast<std::uint64_t>(std::popcount(w[word] & detail::low_mask(bits)));
    }

    template <class F>
    static void scan_bits(const std::vector<std::uint64_t>& w, std::uint64_t first, std::uint64_t last, F&& f) {
        if (first > last) return;
        for (std::uint64_t word = first / 64; word <= last / 64; ++word) {
            std::uint64_t bits = w[word];
            if (word == first / 64) bits &= ~detail::low_mask(static_cast<unsigned>(first % 64));
            if (word == last / 64) bits &= detail::low_mask(static_cast<unsigned>(last % 64) + 1);
            while (bits) {
                f(word * 64 + static_cast<std::uint64_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    void check_range(std::uint64_t n, const char* what) const {
        if (n < 2 || n > limit_)
            throw sieve_range_error(std::string(what) + ": n=" + std::to_string(n) + " outside [2, " +
                                    std::to_string(limit_) + "]");
    }

    void check_interval(std::uint64_t lo, std::uint64_t hi) const {
        if (lo < 2 || lo > hi || hi > limit_)
            throw sieve_range_error("interval [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                    "] outside [2, " + std::to_string(limit_) + "] or reversed");
    }

    void sieve_segment(std::uint64_t seg, const std::vector<std::uint64_t>& sieving) {
        const std::uint64_t first = seg * segment_size_;
        const std::uint64_t last = std::min(first + segment_size_, nbits_) - 1;
        const std::uint64_t first_word = first / 64;
        const std::uint64_t last_word = last / 64;
        std::fill(words_.begin() + static_cast<std::ptrdiff_t>(first_word),
                  words_.begin() + static_cast<std::ptrdiff_t>(last_word) + 1, ~std::uint64_t{0});
        if (last_word == words_.size() - 1)
            words_[last_word] &= detail::low_mask(static_cast<unsigned>(last % 64) + 1);

        const std::uint64_t lo_n = 2 * first + 3;
        const std::uint64_t hi_n = 2 * last + 3;
        for (const std::uint64_t p : sieving) {
            if (p * p > hi_n) break;
            std::uint64_t m = std::max(p * p, (lo_n + p - 1) / p * p);
            if (m % 2 == 0) m += p;
            for (std::uint64_t i = (m - 3) / 2; i <= last; i += p)
                words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
        }
    }

    void build_twins_and_ranks() {
        const std::size_t n = words_.size();
        twins_.resize(n);
        prime_rank_.resize(n);
        twin_rank_.resize(n);
        std::uint64_t pc = 0;
        std::uint64_t tc = 0;
        for (std::size_t w = 0; w < n; ++w) {
            const std::uint64_t next = w + 1 < n ? words_[w + 1] : 0;
            twins_[w] = words_[w] & ((words_[w] >> 1) | (next << 63));
            prime_rank_[w] = pc;
            twin_rank_[w] = tc;
            pc += static_cast<std::uint64_t>(std::popcount(words_[w]));
            tc += static_cast<std::uint64_t>(std::popcount(twins_[w]));
        }
    }

    std::uint64_t limit_ = 0;
    std::uint64_t segment_size_ = default_segment_size;
    std::uint64_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> twins_;
    std::vector<std::uint64_t> prime_rank_;  // set bits in words_[0, w)
    std::vector<std::uint64_t> twin_rank_;
};

inline PrimeSieve build_sieve(std::uint64_t limit, const SieveOptions& opts = {}) {
    return PrimeSieve::build(limit, opts);
}

}  // namespace twinprime
