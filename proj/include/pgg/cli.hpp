#pragma once

#include <string>

#include <json.hpp>

#include "pgg/verify.hpp"

namespace pgg::cli {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "pgg 0.1.0";
inline constexpr int kSchemaVersion = 1;

struct RunConfig {
    std::int64_t limit = 2'000'000;
    std::int64_t max_n = 100'000;
    std::int64_t dpg_start = 5;
    std::int64_t dpg_end = 10'000;
    std::uint64_t seed = 42;
    int spot_samples = 1000;
    std::string zeros_path;        // empty: skip the zeros checks
    std::string out_dir = "pgg-out";
    std::string cache_dir;         // empty: sieve without a gap cache
};

std::string iso_timestamp();

// envelope shared by every emitted certificate; key order is stable, only the
// timestamp varies between identical runs
json certificate(const std::string& command, const json& inputs, const json& results,
                 bool pass);

json to_json(const verify::GraphicSweepResult& r);
json to_json(const verify::DpgRunSummary& r);
json to_json(const verify::ConjectureSweepResult& r);
json to_json(const verify::VizingSweepResult& r);
json to_json(const verify::DusartSweepSummary& r); // without the grid
json to_json(const analytic::ThresholdReport& r);
json to_json(const verify::ZerosCheckSummary& r);
json dusart_grid_json(const verify::DusartSweepSummary& r);

// The whole pipeline: graphic sweep, growth run, tiny-n matching brute force,
// threshold reports, Dusart sweep, optional zeros checks. Artifacts land in
// config.out_dir; the returned aggregate is also written there.
json verify_all(const RunConfig& config);

// Renders thresholds.csv, dusart_margins.csv and (when present)
// explicit_formula_ratios.csv from a prior run's artifacts. Missing inputs
// raise io_error listing the expected paths.
void write_report_csvs(const std::string& out_dir);

} // namespace pgg::cli
