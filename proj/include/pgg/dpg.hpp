#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>

#include "pgg/graphs.hpp"
#include "pgg/primes.hpp"

namespace pgg::dpg {

// Growth state: graph realizes the first n prime gaps; next_gap is the degree
// the next inserted vertex must receive (p_{n+1} - p_n).
struct DpgState {
    graphs::SimpleGraph graph;
    std::int64_t n = 0;
    std::int64_t next_gap = 0;
};

struct DpgCertificate {
    std::int64_t n = 0;   // sequence length after the event this certifies
    std::int64_t gap = 0; // the gap consumed (step) or the next gap (witness)
    std::int64_t matching_size = 0;
    std::optional<std::int64_t> witness_n; // N of the matching inequality
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool pass = false;
};

// Raised when the current graph provably has no matching of size gap/2; this
// would be a counterexample to the growth conjecture at that n, so it is
// always reported, never skipped.
class DpgStuckError : public error {
public:
    DpgStuckError(std::int64_t n, std::int64_t gap)
        : error("DPG stuck at n=" + std::to_string(n) + ": maximum matching below " +
                std::to_string(gap / 2) + " (gap " + std::to_string(gap) + ")"),
          n(n), gap(gap) {}
    std::int64_t n;
    std::int64_t gap;
};

// One degree-preserving step: pick a matching of size next_gap/2 (seeded
// greedy, augmented if short), remove it, attach the new vertex to all 2*nu
// endpoints. Removal and attachment run in ascending vertex order once the
// matching is fixed. Throws domain_error on odd gap, DpgStuckError when no
// matching of the required size exists.
DpgState dpg_step(DpgState state, std::mt19937_64& rng);

using CertificateSink = std::function<bool(const DpgCertificate&)>;

struct DpgRunResult {
    std::int64_t start_n = 0;
    std::int64_t end_n = 0;
    std::int64_t steps = 0;
    graphs::SimpleGraph final_graph;
};

// Havel-Hakimi realization of the first start_n gaps, then one dpg_step per
// prime up to end_n. The degree multiset is recomputed and compared after
// every step. Certificates stream through `sink` (return false to stop).
DpgRunResult dpg_run(std::int64_t start_n, std::int64_t end_n, std::uint64_t seed,
                     const CertificateSink& sink);

// Searches the distinct gap values N >= 2 of the first n gaps, ascending, for
//   N (p_{n+1} - p_n) + 2 sum_{gaps > N} gap < p_n.
// First hit becomes witness_n. Without a hit, lhs keeps the best attempt and
// pass stays false.
DpgCertificate dpg_inequality_witness(std::int64_t n);
DpgCertificate dpg_inequality_witness(std::int64_t n, std::span<const primes::GapRecord> gaps);

} // namespace pgg::dpg
