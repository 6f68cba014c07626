#include "pgg/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

#include "pgg/gap_cache.hpp"

namespace pgg::cli {

namespace fs = std::filesystem;

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json certificate(const std::string& command, const json& inputs, const json& results,
                 bool pass) {
    return json{{"schemaVersion", kSchemaVersion}, {"command", command},
                {"toolVersion", kToolVersion},     {"timestamp", iso_timestamp()},
                {"inputs", inputs},                {"results", results},
                {"pass", pass}};
}

json to_json(const verify::GraphicSweepResult& r) {
    return json{{"maxN", r.max_n},
                {"pd1NotGraphic", r.pd1_not_graphic},
                {"failures", r.failures},
                {"spotChecks", r.spot_checks},
                {"spotMismatches", r.spot_mismatches},
                {"seconds", r.seconds},
                {"pass", r.pass()}};
}

json to_json(const verify::DpgRunSummary& r) {
    json j{{"start", r.start_n}, {"end", r.end_n},        {"steps", r.steps},
           {"stuck", r.stuck},   {"seconds", r.seconds},  {"pass", r.pass()}};
    if (r.stuck) {
        j["stuckN"] = r.stuck_n;
        j["stuckGap"] = r.stuck_gap;
    }
    return j;
}

json to_json(const verify::ConjectureSweepResult& r) {
    return json{{"maxN", r.max_n},
                {"realizationsChecked", r.realizations_checked},
                {"counterexampleN", r.counterexample_n},
                {"pass", r.pass()}};
}

json to_json(const verify::VizingSweepResult& r) {
    return json{{"sequences", r.sequences},
                {"graphicSequences", r.graphic_sequences},
                {"conditionHits", r.condition_hits},
                {"realizationsChecked", r.realizations_checked},
                {"counterexamples", r.counterexamples},
                {"pass", r.pass()}};
}

json to_json(const verify::DusartSweepSummary& r) {
    return json{{"limit", r.limit},
                {"points", r.points},
                {"lowerViolations", r.lower_violations},
                {"upperViolations", r.upper_violations},
                {"pass", r.pass()}};
}

json dusart_grid_json(const verify::DusartSweepSummary& r) {
    json grid = json::array();
    for (const auto& p : r.grid) {
        grid.push_back(json{{"x", p.x},
                            {"pi", p.pi},
                            {"lower", p.lower},
                            {"upper", p.upper},
                            {"upperApplicable", p.upper_applicable}});
    }
    json j = to_json(r);
    j["grid"] = std::move(grid);
    return j;
}

json to_json(const analytic::ThresholdReport& r) {
    json samples = json::array();
    for (const auto& s : r.samples)
        samples.push_back(json{{"t", s.t}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"holds", s.holds}});
    return json{{"kind", r.kind == analytic::ThresholdKind::graphic ? "graphic" : "dpg"},
                {"tMin", r.t_min},
                {"failsBelow", r.fails_below},
                {"paperT", r.paper_t},
                {"holdsAtPaperT", r.holds_at_paper_t},
                {"singleCrossing", r.single_crossing},
                {"samples", std::move(samples)}};
}

json to_json(const verify::ZerosCheckSummary& r) {
    json samples = json::array();
    for (const auto& s : r.formula_samples) {
        samples.push_back(json{{"x", s.x},
                               {"T", s.T},
                               {"approx", s.approx},
                               {"psi", s.psi},
                               {"error", s.error},
                               {"envelope", s.envelope},
                               {"ratio", s.ratio}});
    }
    return json{{"path", r.path},
                {"zeroCount", r.zero_count},
                {"maxOrdinate", r.max_ordinate},
                {"rectPass", r.rect_pass},
                {"rectPoints", r.rect_points},
                {"ratiosAtLeastOne", r.ratios_at_least_one},
                {"explicitFormula", std::move(samples)},
                {"pass", r.pass()}};
}

namespace {

void write_json_file(const fs::path& path, const json& j) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw io_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

json read_json_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot read " + path.string());
    return json::parse(in);
}

} // namespace

json verify_all(const RunConfig& config) {
    fs::create_directories(config.out_dir);
    fs::path out(config.out_dir);

    std::vector<primes::GapRecord> gaps;
    if (!config.cache_dir.empty()) {
        fs::create_directories(config.cache_dir);
        fs::path cache = fs::path(config.cache_dir) / "gaps.bin";
        primes::ensure_gap_cache(cache.string(), config.limit);
        primes::stream_gap_cache(cache.string(), 0, [&](const primes::GapRecord& r) {
            gaps.push_back(r);
            return true;
        });
    } else {
        gaps = primes::gap_list(config.limit);
    }
    if (static_cast<std::int64_t>(gaps.size()) < config.max_n)
        throw domain_error("verify-all: limit " + std::to_string(config.limit) +
                           " yields only " + std::to_string(gaps.size()) +
                           " primes, below max_n " + std::to_string(config.max_n));

    auto sweep = verify::graphic_sweep(gaps, config.max_n, config.spot_samples, config.seed);
    write_json_file(out / "graphic_sweep.json", to_json(sweep));

    auto run = verify::dpg_run_check(config.dpg_start, config.dpg_end, config.seed,
                                     (out / "dpg_certificates.jsonl").string());

    auto conjecture = verify::conjecture_matching_sweep(8);

    auto thresholds = verify::threshold_check();
    write_json_file(out / "thresholds.json",
                    json{{"graphic", to_json(thresholds.graphic)},
                         {"dpg", to_json(thresholds.dpg)},
                         {"pass", thresholds.pass()}});

    auto dusart = verify::dusart_check(config.limit, 1000);
    write_json_file(out / "dusart.json", dusart_grid_json(dusart));

    json results{{"graphicSweep", to_json(sweep)},
                 {"dpgRun", to_json(run)},
                 {"conjectureMatching", to_json(conjecture)},
                 {"thresholds",
                  json{{"graphic", to_json(thresholds.graphic)},
                       {"dpg", to_json(thresholds.dpg)},
                       {"pass", thresholds.pass()}}},
                 {"dusart", to_json(dusart)}};
    bool pass = sweep.pass() && run.pass() && conjecture.pass() && thresholds.pass() &&
                dusart.pass();

    if (!config.zeros_path.empty()) {
        auto zchk = verify::zeros_check(config.zeros_path);
        write_json_file(out / "zeros.json", to_json(zchk));
        results["zeros"] = to_json(zchk);
        pass = pass && zchk.pass();
    }

    json inputs{{"limit", config.limit},       {"maxN", config.max_n},
                {"dpgStart", config.dpg_start}, {"dpgEnd", config.dpg_end},
                {"seed", config.seed},          {"spotSamples", config.spot_samples},
                {"zeros", config.zeros_path},   {"outDir", config.out_dir},
                {"cacheDir", config.cache_dir}};
    json cert = certificate("verify-all", inputs, results, pass);
    write_json_file(out / "certificate.json", cert);
    return cert;
}

void write_report_csvs(const std::string& out_dir) {
    fs::path out(out_dir);
    std::vector<std::string> missing;
    for (const char* name : {"thresholds.json", "dusart.json"})
        if (!fs::exists(out / name)) missing.push_back((out / name).string());
    if (!missing.empty()) {
        std::string msg = "report: missing artifacts (run verify-all first):";
        for (const auto& m : missing) msg += " " + m;
        throw io_error(msg);
    }

    {
        json t = read_json_file(out / "thresholds.json");
        std::ofstream csv(out / "thresholds.csv", std::ios::trunc);
        csv << "kind,t,lhs,rhs,holds\n";
        for (const char* kind : {"graphic", "dpg"})
            for (const auto& s : t[kind]["samples"])
                csv << kind << ',' << s["t"].get<double>() << ',' << s["lhs"].get<double>()
                    << ',' << s["rhs"].get<double>() << ',' << (s["holds"].get<bool>() ? 1 : 0)
                    << '\n';
    }
    {
        json d = read_json_file(out / "dusart.json");
        std::ofstream csv(out / "dusart_margins.csv", std::ios::trunc);
        csv << "x,pi,lower,lower_margin,upper,upper_margin,upper_applicable\n";
        for (const auto& p : d["grid"]) {
            double pi = p["pi"].get<double>();
            double lower = p["lower"].get<double>();
            double upper = p["upper"].get<double>();
            bool ua = p["upperApplicable"].get<bool>();
            csv << p["x"].get<std::int64_t>() << ',' << p["pi"].get<std::int64_t>() << ','
                << lower << ',' << (pi - lower) << ',' << upper << ','
                << (ua ? upper - pi : 0.0) << ',' << (ua ? 1 : 0) << '\n';
        }
    }
    if (fs::exists(out / "zeros.json")) {
        json z = read_json_file(out / "zeros.json");
        std::ofstream csv(out / "explicit_formula_ratios.csv", std::ios::trunc);
        csv << "x,T,approx,psi,error,envelope,ratio\n";
        for (const auto& s : z["explicitFormula"])
            csv << s["x"].get<double>() << ',' << s["T"].get<double>() << ','
                << s["approx"].get<double>() << ',' << s["psi"].get<double>() << ','
                << s["error"].get<double>() << ',' << s["envelope"].get<double>() << ','
                << s["ratio"].get<double>() << '\n';
    }
}

} // namespace pgg::cli
