#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pgg/analytic.hpp"
#include "pgg/primes.hpp"

namespace pgg::verify {

// Incremental graphicality sweep over PD_n for n up to max_n, with full
// Erdos-Gallai spot checks at `spot_samples` seeded random n.
struct GraphicSweepResult {
    std::int64_t max_n = 0;
    bool pd1_not_graphic = false;
    std::vector<std::int64_t> failures; // n >= 2 whose PD_n tested non-graphic
    std::int64_t spot_checks = 0;
    std::int64_t spot_mismatches = 0;
    double seconds = 0;
    bool pass() const {
        return pd1_not_graphic && failures.empty() && spot_mismatches == 0;
    }
};
GraphicSweepResult graphic_sweep(std::span<const primes::GapRecord> gaps, std::int64_t max_n,
                                 int spot_samples, std::uint64_t seed);

struct DpgRunSummary {
    std::int64_t start_n = 0, end_n = 0, steps = 0;
    bool stuck = false;
    std::int64_t stuck_n = 0, stuck_gap = 0;
    double seconds = 0;
    bool pass() const { return !stuck && steps == end_n - start_n; }
};
// Runs the growth process, streaming one JSONL certificate per step into
// `jsonl_path` when non-empty.
DpgRunSummary dpg_run_check(std::int64_t start_n, std::int64_t end_n, std::uint64_t seed,
                            const std::string& jsonl_path);

// Every realization of PD_n (n <= max_n <= 8) must contain a matching of
// size (p_{n+1} - p_n)/2.
struct ConjectureSweepResult {
    std::int64_t max_n = 0;
    std::int64_t realizations_checked = 0;
    std::vector<std::int64_t> counterexample_n;
    bool pass() const { return counterexample_n.empty(); }
};
ConjectureSweepResult conjecture_matching_sweep(std::int64_t max_n);

// All nonincreasing sequences of length <= max_len (entries < length): where
// the delta-condition promises a matching of size d/2, every realization must
// deliver it.
struct VizingSweepResult {
    std::int64_t sequences = 0;
    std::int64_t graphic_sequences = 0;
    std::int64_t condition_hits = 0;
    std::int64_t realizations_checked = 0;
    std::int64_t counterexamples = 0;
    bool pass() const { return counterexamples == 0; }
};
VizingSweepResult vizing_condition_sweep(std::int64_t max_len);

struct DusartSweepSummary {
    std::int64_t limit = 0;
    std::int64_t points = 0;
    std::int64_t lower_violations = 0;
    std::int64_t upper_violations = 0;
    std::vector<primes::DusartPoint> grid;
    bool pass() const { return lower_violations == 0 && upper_violations == 0; }
};
DusartSweepSummary dusart_check(std::int64_t limit, int points);

struct ThresholdSummary {
    analytic::ThresholdReport graphic;
    analytic::ThresholdReport dpg;
    bool pass() const {
        return graphic.holds_at_paper_t && graphic.single_crossing && dpg.holds_at_paper_t &&
               dpg.single_crossing;
    }
};
// graphic bracket [29, 32], dpg bracket [33, 36], tol 1e-3
ThresholdSummary threshold_check();

struct ExplicitFormulaSample {
    double x = 0, T = 0;
    double approx = 0, psi = 0;
    double error = 0, envelope = 0, ratio = 0;
};
struct ZerosCheckSummary {
    std::string path;
    std::int64_t zero_count = 0;
    double max_ordinate = 0;
    bool rect_pass = false;
    std::int64_t rect_points = 0;
    std::vector<ExplicitFormulaSample> formula_samples;
    std::int64_t ratios_at_least_one = 0; // reported as findings, not failures
    bool pass() const {
        if (!rect_pass) return false;
        for (const auto& s : formula_samples)
            if (s.ratio > 10.0) return false; // that large means a bug, not a weak lemma
        return true;
    }
};
ZerosCheckSummary zeros_check(const std::string& path, std::int64_t max_psi_x = 10'000'000);

} // namespace pgg::verify
