#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "pgg/common.hpp"

namespace pgg::primes {

// One entry of the prime gap sequence, with the p0 = 1 convention:
// record ell carries p_ell and the backward gap p_ell - p_{ell-1}.
// The stream therefore starts (1, 2, 1), (2, 3, 1), (3, 5, 2), ...
struct GapRecord {
    std::int64_t index;
    std::int64_t prime;
    std::int64_t gap;
};

// sinks return false to stop the stream early
using GapSink = std::function<bool(const GapRecord&)>;
using PrimeSink = std::function<bool(std::int64_t)>;

// Segmented sieve over odd numbers, 2^20 bits (one bit per odd) per segment.
void for_each_prime(std::int64_t limit, const PrimeSink& sink);
void for_each_prime_in(std::int64_t lo, std::int64_t hi, const PrimeSink& sink);

// Emits every GapRecord with prime <= limit, in order. Throws domain_error for
// limit < 2. The telescoping identity sum(gaps) = p_n - 1 is self-checked
// every 10^5 records.
void sieve_gaps(std::int64_t limit, const GapSink& sink);

// Resume emission after a known record (used by the gap cache when extending).
void sieve_gaps_resume(const GapRecord& last, std::int64_t limit, const GapSink& sink);

std::vector<GapRecord> gap_list(std::int64_t limit);

// Gaps of the first n primes; the sieving limit is estimated and grown as needed.
std::vector<GapRecord> first_gaps(std::int64_t n);

std::int64_t next_prime_above(std::int64_t x);

// Chebyshev psi(x) = sum of log p over prime powers p^k <= x, Kahan-compensated.
double chebyshev_psi(std::int64_t x);

// Prime-counting pi(x).
std::int64_t prime_count(std::int64_t x);

// Largest forward gap p_{l+1} - p_l over p_l <= x (the gap may end above x).
// Requires x >= 3.
std::int64_t max_forward_gap(std::int64_t x);

// (k, S) of the forward gaps: k counts l with p_l <= x and gap >= N,
// S sums the gaps with p_l <= x and gap > N. The >= / > asymmetry is part of
// the contract.
std::pair<std::int64_t, std::int64_t> large_gap_count_sum(std::int64_t x, std::int64_t N);

struct GapStats {
    std::int64_t x = 0;
    std::int64_t max_gap = 0;
    std::map<std::int64_t, std::int64_t> k_n; // N -> count of forward gaps >= N
    std::map<std::int64_t, std::int64_t> s_n; // N -> sum of forward gaps > N
    std::map<std::int64_t, std::int64_t> histogram; // forward gap -> count
};

GapStats gap_stats(std::int64_t x, const std::vector<std::int64_t>& n_values);

struct DusartPoint {
    std::int64_t x = 0;
    std::int64_t pi = 0;
    double lower = 0.0;
    double upper = 0.0;
    bool upper_applicable = false;
};

// pi(x) against the Dusart bracket on a logarithmic grid of `points` values
// spanning [599, limit].
std::vector<DusartPoint> dusart_sweep(std::int64_t limit, int points);

} // namespace pgg::primes
