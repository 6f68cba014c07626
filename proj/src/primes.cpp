#include "pgg/primes.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pgg/analytic.hpp"

namespace pgg::primes {

namespace {

constexpr std::int64_t kSegmentBits = std::int64_t(1) << 20; // odds per segment

// primes <= limit by a plain odd-only sieve; used for base primes only
std::vector<std::int64_t> small_primes(std::int64_t limit) {
    std::vector<std::int64_t> out;
    if (limit < 2) return out;
    out.push_back(2);
    std::int64_t half = (limit - 1) / 2; // odd numbers 3,5,...,2*half+1
    std::vector<bool> composite(half + 1, false);
    for (std::int64_t i = 1; 2 * i + 1 <= limit / (2 * i + 1); ++i) {
        if (composite[i]) continue;
        std::int64_t p = 2 * i + 1;
        for (std::int64_t j = (p * p - 1) / 2; j <= half; j += p) composite[j] = true;
    }
    for (std::int64_t i = 1; i <= half; ++i)
        if (!composite[i]) out.push_back(2 * i + 1);
    return out;
}

} // namespace

void for_each_prime_in(std::int64_t lo, std::int64_t hi, const PrimeSink& sink) {
    if (hi < 2 || hi < lo) return;
    if (lo <= 2 && hi >= 2 && !sink(2)) return;
    std::int64_t root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(hi)));
    while (root * root > hi) --root;
    while ((root + 1) * (root + 1) <= hi) ++root;
    std::vector<std::int64_t> base = small_primes(root);

    std::int64_t start = std::max<std::int64_t>(lo, 3);
    if (start % 2 == 0) ++start;
    std::vector<std::uint64_t> bits(kSegmentBits / 64);
    for (std::int64_t seg_lo = start; seg_lo <= hi; seg_lo += 2 * kSegmentBits) {
        std::int64_t seg_hi = std::min<std::int64_t>(hi, seg_lo + 2 * kSegmentBits - 2);
        std::fill(bits.begin(), bits.end(), 0);
        std::int64_t count = (seg_hi - seg_lo) / 2 + 1; // odds in [seg_lo, seg_hi]
        for (std::int64_t p : base) {
            if (p == 2) continue;
            if (p * p > seg_hi) break;
            std::int64_t first = std::max(p * p, ((seg_lo + p - 1) / p) * p);
            if (first % 2 == 0) first += p;
            for (std::int64_t m = first; m <= seg_hi; m += 2 * p) {
                std::int64_t bit = (m - seg_lo) / 2;
                bits[bit >> 6] |= std::uint64_t(1) << (bit & 63);
            }
        }
        for (std::int64_t bit = 0; bit < count; ++bit) {
            if (!(bits[bit >> 6] >> (bit & 63) & 1)) {
                if (!sink(seg_lo + 2 * bit)) return;
            }
        }
    }
}

void for_each_prime(std::int64_t limit, const PrimeSink& sink) {
    for_each_prime_in(2, limit, sink);
}

void sieve_gaps(std::int64_t limit, const GapSink& sink) {
    if (limit < 2) throw domain_error("sieve_gaps: limit must be >= 2");
    std::int64_t prev = 1; // p0 = 1 convention
    std::int64_t index = 0;
    std::int64_t gap_sum = 0;
    for_each_prime(limit, [&](std::int64_t p) {
        ++index;
        std::int64_t gap = p - prev;
        gap_sum += gap;
        if (index % 100000 == 0 && gap_sum != p - 1)
            throw error("sieve_gaps: telescoping check failed at index " + std::to_string(index));
        prev = p;
        return sink(GapRecord{index, p, gap});
    });
}

void sieve_gaps_resume(const GapRecord& last, std::int64_t limit, const GapSink& sink) {
    if (limit <= last.prime) return;
    std::int64_t prev = last.prime;
    std::int64_t index = last.index;
    for_each_prime_in(last.prime + 1, limit, [&](std::int64_t p) {
        ++index;
        GapRecord r{index, p, p - prev};
        prev = p;
        return sink(r);
    });
}

std::vector<GapRecord> gap_list(std::int64_t limit) {
    std::vector<GapRecord> out;
    sieve_gaps(limit, [&](const GapRecord& r) {
        out.push_back(r);
        return true;
    });
    return out;
}

std::vector<GapRecord> first_gaps(std::int64_t n) {
    if (n < 1) throw domain_error("first_gaps: n must be >= 1");
    // p_n < n (log n + log log n) for n >= 6
    double nd = static_cast<double>(std::max<std::int64_t>(n, 6));
    std::int64_t limit =
        static_cast<std::int64_t>(nd * (std::log(nd) + std::log(std::log(nd)))) + 16;
    for (;;) {
        std::vector<GapRecord> out;
        out.reserve(n);
        sieve_gaps(limit, [&](const GapRecord& r) {
            out.push_back(r);
            return r.index < n;
        });
        if (static_cast<std::int64_t>(out.size()) == n) return out;
        limit *= 2;
    }
}

std::int64_t next_prime_above(std::int64_t x) {
    if (x < 2) return 2;
    // Bertrand: there is a prime in (x, 2x)
    for (std::int64_t hi = x + 64; hi <= 4 * x + 64; hi *= 2) {
        std::int64_t found = 0;
        for_each_prime_in(x + 1, hi, [&](std::int64_t p) {
            found = p;
            return false;
        });
        if (found) return found;
    }
    throw error("next_prime_above: search failed");
}

double chebyshev_psi(std::int64_t x) {
    if (x < 1) throw domain_error("chebyshev_psi: x must be >= 1");
    double sum = 0.0, comp = 0.0;
    auto add = [&](double v) { // Kahan
        double y = v - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    for_each_prime(x, [&](std::int64_t p) {
        std::int64_t k = 1;
        std::int64_t pk = p; // largest k with p^k <= x, exact integer arithmetic
        while (pk <= x / p) {
            pk *= p;
            ++k;
        }
        add(static_cast<double>(k) * std::log(static_cast<double>(p)));
        return true;
    });
    return sum;
}

std::int64_t prime_count(std::int64_t x) {
    if (x < 2) return 0;
    std::int64_t count = 0;
    for_each_prime(x, [&](std::int64_t) {
        ++count;
        return true;
    });
    return count;
}

std::int64_t max_forward_gap(std::int64_t x) {
    if (x < 3) throw domain_error("max_forward_gap: x must be >= 3");
    std::int64_t best = 0, prev = -1;
    for_each_prime(x, [&](std::int64_t p) {
        if (prev > 0) best = std::max(best, p - prev);
        prev = p;
        return true;
    });
    // the gap starting at the last prime <= x ends above x
    best = std::max(best, next_prime_above(x) - prev);
    return best;
}

std::pair<std::int64_t, std::int64_t> large_gap_count_sum(std::int64_t x, std::int64_t N) {
    if (x < 2) throw domain_error("large_gap_count_sum: x must be >= 2");
    if (N < 1) throw domain_error("large_gap_count_sum: N must be >= 1");
    std::int64_t k = 0, s = 0, prev = -1;
    auto take = [&](std::int64_t gap) {
        if (gap >= N) ++k;
        if (gap > N) s += gap;
    };
    for_each_prime(x, [&](std::int64_t p) {
        if (prev > 0) take(p - prev);
        prev = p;
        return true;
    });
    take(next_prime_above(x) - prev);
    return {k, s};
}

GapStats gap_stats(std::int64_t x, const std::vector<std::int64_t>& n_values) {
    if (x < 2) throw domain_error("gap_stats: x must be >= 2");
    GapStats st;
    st.x = x;
    std::int64_t prev = -1;
    auto take = [&](std::int64_t gap) {
        ++st.histogram[gap];
        st.max_gap = std::max(st.max_gap, gap);
    };
    for_each_prime(x, [&](std::int64_t p) {
        if (prev > 0) take(p - prev);
        prev = p;
        return true;
    });
    take(next_prime_above(x) - prev);
    for (std::int64_t N : n_values) {
        std::int64_t k = 0, s = 0;
        for (auto [g, c] : st.histogram) {
            if (g >= N) k += c;
            if (g > N) s += g * c;
        }
        st.k_n[N] = k;
        st.s_n[N] = s;
    }
    return st;
}

std::vector<DusartPoint> dusart_sweep(std::int64_t limit, int points) {
    if (limit < 599) throw domain_error("dusart_sweep: limit must be >= 599");
    if (points < 2) throw domain_error("dusart_sweep: need at least 2 grid points");
    std::set<std::int64_t> grid;
    double lo = std::log(599.0), hi = std::log(static_cast<double>(limit));
    for (int i = 0; i < points; ++i) {
        double lx = lo + (hi - lo) * i / (points - 1);
        std::int64_t x = static_cast<std::int64_t>(std::llround(std::exp(lx)));
        grid.insert(std::clamp<std::int64_t>(x, 599, limit));
    }
    std::vector<DusartPoint> out;
    out.reserve(grid.size());
    auto it = grid.begin();
    std::int64_t count = 0;
    for_each_prime(limit, [&](std::int64_t p) {
        while (it != grid.end() && *it < p) {
            auto b = analytic::dusart_bounds(static_cast<double>(*it));
            out.push_back({*it, count, b.lower, b.upper, b.upper_applicable});
            ++it;
        }
        ++count;
        return true;
    });
    while (it != grid.end()) {
        auto b = analytic::dusart_bounds(static_cast<double>(*it));
        out.push_back({*it, count, b.lower, b.upper, b.upper_applicable});
        ++it;
    }
    return out;
}

} // namespace pgg::primes
