#include "pgg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <set>

#include "pgg/dpg.hpp"
#include "pgg/graphic.hpp"
#include "pgg/graphs.hpp"
#include "pgg/zeros.hpp"

namespace pgg::verify {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

GraphicSweepResult graphic_sweep(std::span<const primes::GapRecord> gaps, std::int64_t max_n,
                                 int spot_samples, std::uint64_t seed) {
    if (static_cast<std::int64_t>(gaps.size()) < max_n)
        throw domain_error("graphic_sweep: need gap records through max_n (limit too small?)");
    auto t0 = std::chrono::steady_clock::now();
    GraphicSweepResult result;
    result.max_n = max_n;

    std::set<std::int64_t> spots;
    if (spot_samples > 0 && max_n >= 2) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::int64_t> dist(2, max_n);
        while (static_cast<int>(spots.size()) < std::min<std::int64_t>(spot_samples, max_n - 1))
            spots.insert(dist(rng));
    }

    graphic::IncrementalPdVerifier verifier(std::max<std::int64_t>(max_n, 2));
    for (std::int64_t i = 0; i < max_n; ++i) {
        auto verdict = verifier.push(gaps[static_cast<std::size_t>(i)]);
        std::int64_t n = i + 1;
        if (n == 1) {
            result.pd1_not_graphic = !verdict.graphic;
            continue;
        }
        if (!verdict.graphic) result.failures.push_back(n);
        if (spots.count(n)) {
            ++result.spot_checks;
            auto full = graphic::erdos_gallai_full(verifier.degrees());
            if (full.graphic != verdict.graphic) ++result.spot_mismatches;
        }
    }
    result.seconds = seconds_since(t0);
    return result;
}

DpgRunSummary dpg_run_check(std::int64_t start_n, std::int64_t end_n, std::uint64_t seed,
                            const std::string& jsonl_path) {
    auto t0 = std::chrono::steady_clock::now();
    DpgRunSummary summary;
    summary.start_n = start_n;
    summary.end_n = end_n;
    std::ofstream jsonl;
    if (!jsonl_path.empty()) {
        jsonl.open(jsonl_path, std::ios::trunc);
        if (!jsonl) throw io_error("dpg_run_check: cannot write " + jsonl_path);
    }
    try {
        dpg::dpg_run(start_n, end_n, seed, [&](const dpg::DpgCertificate& cert) {
            ++summary.steps;
            if (jsonl.is_open()) {
                jsonl << "{\"n\":" << cert.n << ",\"gap\":" << cert.gap
                      << ",\"matchingSize\":" << cert.matching_size
                      << ",\"pass\":" << (cert.pass ? "true" : "false") << "}\n";
            }
        });
    } catch (const dpg::DpgStuckError& e) {
        summary.stuck = true;
        summary.stuck_n = e.n;
        summary.stuck_gap = e.gap;
    }
    summary.seconds = seconds_since(t0);
    return summary;
}

ConjectureSweepResult conjecture_matching_sweep(std::int64_t max_n) {
    if (max_n > 8) throw domain_error("conjecture_matching_sweep: max_n must be <= 8");
    ConjectureSweepResult result;
    result.max_n = max_n;
    auto gaps = primes::first_gaps(max_n + 1);
    graphic::DegreeMultiset degrees;
    for (std::int64_t n = 1; n <= max_n; ++n) {
        degrees.insert(gaps[static_cast<std::size_t>(n - 1)].gap);
        if (!graphic::erdos_gallai_reduced(degrees).graphic) continue; // PD_1 only
        std::int64_t need = gaps[static_cast<std::size_t>(n)].gap / 2;
        bool bad = false;
        graphs::enumerate_realizations(
            degrees, std::numeric_limits<std::int64_t>::max(),
            [&](const graphs::SimpleGraph& g) {
                ++result.realizations_checked;
                if (graphs::maximum_matching(g).size() < need) {
                    bad = true;
                    return false;
                }
                return true;
            });
        if (bad) result.counterexample_n.push_back(n);
    }
    return result;
}

VizingSweepResult vizing_condition_sweep(std::int64_t max_len) {
    if (max_len > 8) throw domain_error("vizing_condition_sweep: max_len must be <= 8");
    VizingSweepResult result;
    std::vector<std::int64_t> seq;
    // enumerate nonincreasing sequences, entries bounded by both length-1 and
    // the previous entry (larger entries are never graphic)
    auto process = [&](const std::vector<std::int64_t>& values) {
        ++result.sequences;
        auto ms = graphic::DegreeMultiset::from_values(values);
        if (!graphic::erdos_gallai_reduced(ms).graphic) return;
        ++result.graphic_sequences;
        std::int64_t best_need = 0;
        for (std::int64_t delta = 1; delta <= ms.max_value() + 1; ++delta) {
            std::int64_t below = 0, above = 0;
            for (auto [v, c] : ms.counts()) (v < delta ? below : above) += v * c;
            std::int64_t budget = below - above;
            if (budget < 2 * delta) continue;
            std::int64_t d = (budget / delta) & ~std::int64_t(1); // round down to even
            if (d < 2) continue;
            if (!graphs::vizing_matching_bound(ms, delta, d))
                throw error("vizing_condition_sweep: direct evaluation disagrees");
            ++result.condition_hits;
            best_need = std::max(best_need, d / 2);
        }
        if (best_need == 0) return;
        graphs::enumerate_realizations(
            ms, std::numeric_limits<std::int64_t>::max(), [&](const graphs::SimpleGraph& g) {
                ++result.realizations_checked;
                if (graphs::maximum_matching(g).size() < best_need) ++result.counterexamples;
                return true;
            });
    };
    for (std::int64_t len = 1; len <= max_len; ++len) {
        seq.assign(static_cast<std::size_t>(len), 0);
        // odometer over nonincreasing sequences with entries in [0, len-1]
        for (;;) {
            process(seq);
            std::int64_t i = len - 1;
            while (i >= 0) {
                std::int64_t cap = i == 0 ? len - 1 : seq[static_cast<std::size_t>(i - 1)];
                if (seq[static_cast<std::size_t>(i)] < cap) break;
                --i;
            }
            if (i < 0) break;
            std::int64_t v = ++seq[static_cast<std::size_t>(i)];
            for (std::int64_t j = i + 1; j < len; ++j) seq[static_cast<std::size_t>(j)] = v;
        }
    }
    return result;
}

DusartSweepSummary dusart_check(std::int64_t limit, int points) {
    DusartSweepSummary summary;
    summary.limit = limit;
    summary.grid = primes::dusart_sweep(limit, points);
    summary.points = static_cast<std::int64_t>(summary.grid.size());
    for (const auto& p : summary.grid) {
        if (static_cast<double>(p.pi) < p.lower) ++summary.lower_violations;
        if (p.upper_applicable && static_cast<double>(p.pi) > p.upper) ++summary.upper_violations;
    }
    return summary;
}

ThresholdSummary threshold_check() {
    ThresholdSummary summary;
    summary.graphic = analytic::find_threshold(analytic::ThresholdKind::graphic, 29.0, 32.0);
    summary.dpg = analytic::find_threshold(analytic::ThresholdKind::dpg, 33.0, 36.0);
    return summary;
}

ZerosCheckSummary zeros_check(const std::string& path, std::int64_t max_psi_x) {
    ZerosCheckSummary summary;
    summary.path = path;
    auto table = zeros::load_zeros(path);
    summary.zero_count = table.count();
    summary.max_ordinate = table.max_ordinate();

    auto rect = zeros::rect_count_check(table);
    summary.rect_pass = rect.pass;
    summary.rect_points = rect.grid_points + rect.midpoints;

    std::vector<double> xs;
    for (double x = 1e4; x <= static_cast<double>(max_psi_x); x *= 10) xs.push_back(x + 0.5);
    std::vector<double> ts = {1000.0, 5000.0, std::floor(table.max_ordinate())};
    ts.erase(std::remove_if(ts.begin(), ts.end(),
                            [&](double t) { return t > table.max_ordinate() || t <= 50; }),
             ts.end());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (double x : xs) {
        double psi = primes::chebyshev_psi(static_cast<std::int64_t>(x));
        for (double T : ts) {
            auto ef = zeros::explicit_formula_psi(x, T, table);
            ExplicitFormulaSample s;
            s.x = ef.x;
            s.T = T;
            s.approx = ef.approx;
            s.psi = psi;
            s.error = std::fabs(ef.approx - psi);
            s.envelope = ef.trunc_error;
            s.ratio = s.error / s.envelope;
            if (s.ratio >= 1.0) ++summary.ratios_at_least_one;
            summary.formula_samples.push_back(s);
        }
    }
    return summary;
}

} // namespace pgg::verify
