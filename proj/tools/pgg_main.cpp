#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgg/cli.hpp"
#include "pgg/dpg.hpp"
#include "pgg/gap_cache.hpp"
#include "pgg/graphic.hpp"
#include "pgg/graphs.hpp"
#include "pgg/zeros.hpp"

namespace {

using json = nlohmann::json;

std::vector<std::int64_t> parse_int_list(const std::string& csv) {
    std::vector<std::int64_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw pgg::domain_error("expected a comma-separated integer list");
    return out;
}

std::string default_cache_dir() {
    const char* env = std::getenv("PGG_CACHE_DIR");
    return env ? env : "";
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

json verdict_json(const pgg::graphic::GraphicVerdict& v) {
    json j{{"graphic", v.graphic}, {"m", v.m}, {"checkedKs", v.checked_ks}};
    if (v.failing_k) j["failingK"] = *v.failing_k;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime gap graph laboratory"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    // ---- primes ----
    auto* primes_cmd = app.add_subcommand("primes", "sieve and gap statistics");
    primes_cmd->require_subcommand(1);

    auto* sieve_cmd = primes_cmd->add_subcommand("sieve", "sieve gaps into the cache");
    std::int64_t sieve_limit = 1'000'000;
    std::string sieve_cache;
    sieve_cmd->add_option("--limit", sieve_limit, "sieve primes up to this bound")->required();
    sieve_cmd->add_option("--cache", sieve_cache, "cache file (default $PGG_CACHE_DIR/gaps.bin)");
    sieve_cmd->callback([&] {
        std::string path = sieve_cache;
        if (path.empty()) {
            std::string dir = default_cache_dir();
            path = dir.empty() ? "gaps.bin" : dir + "/gaps.bin";
        }
        auto info = pgg::primes::ensure_gap_cache(path, sieve_limit);
        emit(json{{"cache", path}, {"limit", info.limit}, {"count", info.count}}, as_json,
             "cached " + std::to_string(info.count) + " gaps up to " +
                 std::to_string(info.limit) + " in " + path + "\n");
    });

    auto* stats_cmd = primes_cmd->add_subcommand("stats", "forward gap statistics");
    std::int64_t stats_limit = 1'000'000;
    std::string stats_nvalues = "2,4,6,8";
    stats_cmd->add_option("--limit", stats_limit, "count gaps starting at primes <= limit")
        ->required();
    stats_cmd->add_option("--n-values", stats_nvalues, "comma-separated N thresholds");
    stats_cmd->callback([&] {
        auto st = pgg::primes::gap_stats(stats_limit, parse_int_list(stats_nvalues));
        json hist = json::object(), kj = json::object(), sj = json::object();
        for (auto [g, c] : st.histogram) hist[std::to_string(g)] = c;
        for (auto [n, k] : st.k_n) kj[std::to_string(n)] = k;
        for (auto [n, s] : st.s_n) sj[std::to_string(n)] = s;
        std::cout << json{{"x", st.x},
                          {"maxGap", st.max_gap},
                          {"kN", kj},
                          {"sN", sj},
                          {"histogram", hist}}
                         .dump(2)
                  << '\n';
    });

    // ---- graphic ----
    auto* graphic_cmd = app.add_subcommand("graphic", "graphicality tests");
    graphic_cmd->require_subcommand(1);

    auto* check_cmd = graphic_cmd->add_subcommand("check", "test one degree sequence");
    std::string check_seq;
    bool check_full = false;
    check_cmd->add_option("--seq", check_seq, "comma-separated degrees")->required();
    check_cmd->add_flag("--full", check_full, "run the full criterion instead of the reduced one");
    check_cmd->callback([&] {
        auto values = parse_int_list(check_seq);
        auto ms = pgg::graphic::DegreeMultiset::from_values(values);
        auto v = check_full ? pgg::graphic::erdos_gallai_full(ms)
                            : pgg::graphic::erdos_gallai_reduced(ms);
        std::string text = v.graphic ? "graphic\n" : "not graphic\n";
        if (!v.graphic && v.failing_k)
            text = "not graphic (criterion fails at k=" + std::to_string(*v.failing_k) + ")\n";
        emit(verdict_json(v), as_json, text);
    });

    auto* sweep_cmd = graphic_cmd->add_subcommand("sweep", "test PD_n for all n <= max-n");
    std::int64_t sweep_max_n = 1'000'000;
    std::int64_t sweep_limit = 0;
    int sweep_spot = 1000;
    std::uint64_t sweep_seed = 42;
    std::string sweep_report;
    sweep_cmd->add_option("--max-n", sweep_max_n, "largest prefix length")->required();
    sweep_cmd->add_option("--limit", sweep_limit, "sieve limit (default: estimated)");
    sweep_cmd->add_option("--spot", sweep_spot, "full-criterion spot checks");
    sweep_cmd->add_option("--seed", sweep_seed, "spot check seed");
    sweep_cmd->add_option("--report", sweep_report, "write a JSON report here");
    sweep_cmd->callback([&] {
        std::vector<pgg::primes::GapRecord> gaps =
            sweep_limit > 0 ? pgg::primes::gap_list(sweep_limit)
                            : pgg::primes::first_gaps(sweep_max_n);
        auto r = pgg::verify::graphic_sweep(gaps, sweep_max_n, sweep_spot, sweep_seed);
        json j = pgg::cli::to_json(r);
        if (!sweep_report.empty()) {
            std::ofstream out(sweep_report, std::ios::trunc);
            if (!out) throw pgg::io_error("cannot write " + sweep_report);
            out << j.dump(2) << '\n';
        }
        emit(j, as_json,
             (r.pass() ? "sweep pass" : "SWEEP FAILED") + std::string(": max_n=") +
                 std::to_string(r.max_n) + " failures=" + std::to_string(r.failures.size()) +
                 " spot_mismatches=" + std::to_string(r.spot_mismatches) + " (" +
                 std::to_string(r.seconds) + "s)\n");
        if (!r.pass()) std::exit(1);
    });

    // ---- graphs ----
    auto* graphs_cmd = app.add_subcommand("graphs", "realization and matching");
    graphs_cmd->require_subcommand(1);

    auto* realize_cmd = graphs_cmd->add_subcommand("realize", "Havel-Hakimi realization");
    std::string realize_seq, realize_out;
    realize_cmd->add_option("--seq", realize_seq, "comma-separated degrees")->required();
    realize_cmd->add_option("--out", realize_out, "write edge list here (default stdout)");
    realize_cmd->callback([&] {
        auto ms = pgg::graphic::DegreeMultiset::from_values(parse_int_list(realize_seq));
        auto g = pgg::graphs::havel_hakimi_realize(ms);
        if (realize_out.empty()) {
            g.write_edge_list(std::cout);
        } else {
            std::ofstream out(realize_out, std::ios::trunc);
            if (!out) throw pgg::io_error("cannot write " + realize_out);
            g.write_edge_list(out);
        }
    });

    auto* match_cmd = graphs_cmd->add_subcommand("match", "maximum matching of an edge list");
    std::string match_in;
    std::uint64_t match_seed = 1;
    match_cmd->add_option("--in", match_in, "edge list file")->required();
    match_cmd->add_option("--seed", match_seed, "greedy seed");
    match_cmd->callback([&] {
        std::ifstream in(match_in);
        if (!in) throw pgg::io_error("cannot read " + match_in);
        auto g = pgg::graphs::SimpleGraph::read_edge_list(in);
        auto m = pgg::graphs::maximum_matching(g, match_seed);
        json edges = json::array();
        for (auto [u, v] : m.edges) edges.push_back(json::array({u, v}));
        std::string text = "maximum matching size " + std::to_string(m.size()) + "\n";
        emit(json{{"size", m.size()}, {"edges", edges}}, as_json, text);
    });

    // ---- dpg ----
    auto* dpg_cmd = app.add_subcommand("dpg", "degree-preserving growth");
    dpg_cmd->require_subcommand(1);

    auto* run_cmd = dpg_cmd->add_subcommand("run", "grow realizations along the gap sequence");
    std::int64_t run_start = 5, run_end = 10'000;
    std::uint64_t run_seed = 42;
    std::string run_certify, run_export;
    run_cmd->add_option("--start", run_start, "initial prefix length");
    run_cmd->add_option("--end", run_end, "final prefix length")->required();
    run_cmd->add_option("--seed", run_seed, "matching selection seed");
    run_cmd->add_option("--certify", run_certify, "write JSONL certificates here");
    run_cmd->add_option("--export-final", run_export, "write the final graph's edge list here");
    run_cmd->callback([&] {
        auto summary = pgg::verify::dpg_run_check(run_start, run_end, run_seed, run_certify);
        if (!run_export.empty() && !summary.stuck) {
            auto result = pgg::dpg::dpg_run(run_start, run_end, run_seed,
                                            [](const pgg::dpg::DpgCertificate&) { return true; });
            std::ofstream out(run_export, std::ios::trunc);
            if (!out) throw pgg::io_error("cannot write " + run_export);
            result.final_graph.write_edge_list(out);
        }
        std::string text = summary.stuck
                               ? "STUCK at n=" + std::to_string(summary.stuck_n) + " gap " +
                                     std::to_string(summary.stuck_gap) + "\n"
                               : std::to_string(summary.steps) + " steps, all degrees preserved (" +
                                     std::to_string(summary.seconds) + "s)\n";
        emit(pgg::cli::to_json(summary), as_json, text);
        if (!summary.pass()) std::exit(1);
    });

    auto* witness_cmd = dpg_cmd->add_subcommand("witness", "matching-inequality witness at n");
    std::int64_t witness_n = 0;
    witness_cmd->add_option("--n", witness_n, "prefix length")->required();
    witness_cmd->callback([&] {
        auto cert = pgg::dpg::dpg_inequality_witness(witness_n);
        json j{{"n", cert.n},     {"gap", cert.gap}, {"lhs", cert.lhs},
               {"rhs", cert.rhs}, {"pass", cert.pass}};
        if (cert.witness_n) j["witnessN"] = *cert.witness_n;
        std::string text =
            cert.pass ? "witness N=" + std::to_string(*cert.witness_n) + ": " +
                            std::to_string(cert.lhs) + " < " + std::to_string(cert.rhs) + "\n"
                      : "no witness N found (best lhs " + std::to_string(cert.lhs) +
                            " vs p_n " + std::to_string(cert.rhs) + ")\n";
        emit(j, as_json, text);
    });

    // ---- analytic ----
    auto* analytic_cmd = app.add_subcommand("analytic", "bound and threshold evaluators");
    analytic_cmd->require_subcommand(1);

    auto* thresholds_cmd = analytic_cmd->add_subcommand("thresholds", "locate both crossings");
    std::string thresholds_report;
    thresholds_cmd->add_option("--report", thresholds_report, "write a JSON report here");
    thresholds_cmd->callback([&] {
        auto summary = pgg::verify::threshold_check();
        json j{{"graphic", pgg::cli::to_json(summary.graphic)},
               {"dpg", pgg::cli::to_json(summary.dpg)},
               {"pass", summary.pass()}};
        if (!thresholds_report.empty()) {
            std::ofstream out(thresholds_report, std::ios::trunc);
            if (!out) throw pgg::io_error("cannot write " + thresholds_report);
            out << j.dump(2) << '\n';
        }
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "graphic: crossing at t=%.4f (quoted 30.5 holds: %s)\n"
                      "dpg:     crossing at t=%.4f (quoted 34.5 holds: %s)\n",
                      summary.graphic.t_min, summary.graphic.holds_at_paper_t ? "yes" : "no",
                      summary.dpg.t_min, summary.dpg.holds_at_paper_t ? "yes" : "no");
        emit(j, as_json, buf);
    });

    auto* eval_cmd = analytic_cmd->add_subcommand("eval", "evaluate a named bound");
    std::string eval_op;
    double ev_t = 0, ev_sigma = 0, ev_alpha = 0.249, ev_delta = 1.0, ev_x = 0, ev_bigT = 0;
    double ev_log_x = 0, ev_log_n = 0, ev_log_m = 0, ev_log_t = 0, ev_log_i = 0;
    eval_cmd->add_option("--op", eval_op,
                         "eta|zero-density|big-c|sn-bound|first-moment|integral-bound|"
                         "threshold-graphic|threshold-dpg|delange|zeta-left|zeta-horizontal|"
                         "ef-error|dusart")
        ->required();
    eval_cmd->add_option("--t", ev_t, "t argument");
    eval_cmd->add_option("--sigma", ev_sigma, "sigma argument");
    eval_cmd->add_option("--alpha", ev_alpha, "alpha parameter");
    eval_cmd->add_option("--delta", ev_delta, "delta parameter");
    eval_cmd->add_option("--x", ev_x, "x argument (linear scale)");
    eval_cmd->add_option("--big-t", ev_bigT, "T argument (linear scale)");
    eval_cmd->add_option("--log-x", ev_log_x, "log x");
    eval_cmd->add_option("--log-n", ev_log_n, "log N");
    eval_cmd->add_option("--log-m", ev_log_m, "log of the max gap");
    eval_cmd->add_option("--log-t", ev_log_t, "log T");
    eval_cmd->add_option("--log-i", ev_log_i, "log of the integral value");
    eval_cmd->callback([&] {
        namespace an = pgg::analytic;
        an::Params params;
        params.alpha = ev_alpha;
        json j;
        if (eval_op == "eta") {
            double v = ev_log_t > 0 ? an::zero_free_eta_from_log(ev_log_t)
                                    : an::zero_free_eta(ev_t);
            j = json{{"op", eval_op}, {"eta", v}};
        } else if (eval_op == "zero-density") {
            auto b = an::zero_density_bound(ev_sigma, ev_bigT, params);
            j = json{{"op", eval_op},
                     {"logTwoTerm", b.two_term.log_magnitude()},
                     {"logOneTerm", b.one_term.log_magnitude()}};
        } else if (eval_op == "big-c") {
            j = json{{"op", eval_op}, {"C", an::integral_bound_constant(params)}};
        } else if (eval_op == "sn-bound") {
            auto r = an::large_gap_sum_bound(an::LogValue::from_log(ev_log_x),
                                             an::LogValue::from_log(ev_log_n), params,
                                             an::LogValue::from_log(ev_log_m));
            j = json{{"op", eval_op},
                     {"logValue", r.value.log_magnitude()},
                     {"hypothesesOk", r.hypotheses_ok},
                     {"violated", r.violated}};
        } else if (eval_op == "first-moment") {
            auto r = an::first_moment_bound(an::LogValue::from_log(ev_log_x), ev_delta,
                                            an::LogValue::from_log(ev_log_i),
                                            an::LogValue::from_log(ev_log_m));
            j = json{{"op", eval_op},
                     {"logValue", r.value.log_magnitude()},
                     {"hypothesesOk", r.hypotheses_ok},
                     {"violated", r.violated}};
        } else if (eval_op == "integral-bound") {
            auto r = an::integral_bound(an::LogValue::from_log(ev_log_x),
                                        an::LogValue::from_log(ev_log_t), ev_delta, params);
            j = json{{"op", eval_op},
                     {"logValue", r.value.log_magnitude()},
                     {"hypothesesOk", r.hypotheses_ok},
                     {"violated", r.violated}};
        } else if (eval_op == "threshold-graphic" || eval_op == "threshold-dpg") {
            auto s = eval_op == "threshold-graphic" ? an::graphic_threshold(ev_t)
                                                    : an::dpg_threshold(ev_t);
            j = json{{"op", eval_op}, {"t", ev_t}, {"lhs", s.lhs}, {"rhs", s.rhs},
                     {"holds", s.holds}};
        } else if (eval_op == "delange") {
            j = json{{"op", eval_op}, {"bound", an::delange_bound(ev_sigma)}};
        } else if (eval_op == "zeta-left") {
            j = json{{"op", eval_op}, {"bound", an::zeta_ratio_left_bound(ev_sigma, ev_t)}};
        } else if (eval_op == "zeta-horizontal") {
            j = json{{"op", eval_op}, {"bound", an::zeta_ratio_horizontal_bound(ev_t)}};
        } else if (eval_op == "ef-error") {
            j = json{{"op", eval_op}, {"bound", an::explicit_formula_error(ev_x, ev_bigT)}};
        } else if (eval_op == "dusart") {
            auto b = an::dusart_bounds(ev_x);
            j = json{{"op", eval_op},
                     {"lower", b.lower},
                     {"upper", b.upper},
                     {"lowerApplicable", b.lower_applicable},
                     {"upperApplicable", b.upper_applicable}};
        } else {
            throw pgg::domain_error("unknown op " + eval_op);
        }
        std::cout << j.dump(2) << '\n';
    });

    // ---- zeros ----
    auto* zeros_cmd = app.add_subcommand("zeros", "zeta zero data checks");
    zeros_cmd->require_subcommand(1);

    auto* zcheck_cmd = zeros_cmd->add_subcommand("check", "rectangle count check");
    std::string zcheck_file;
    zcheck_cmd->add_option("--file", zcheck_file, "ordinates file")->required();
    zcheck_cmd->callback([&] {
        auto table = pgg::zeros::load_zeros(zcheck_file);
        auto report = pgg::zeros::rect_count_check(table);
        json violations = json::array();
        for (const auto& v : report.violations)
            violations.push_back(json{{"t", v.t}, {"count", v.count}, {"bound", v.bound}});
        emit(json{{"zeroCount", table.count()},
                  {"maxOrdinate", table.max_ordinate()},
                  {"gridPoints", report.grid_points},
                  {"midpoints", report.midpoints},
                  {"violations", violations},
                  {"pass", report.pass}},
             as_json,
             std::string(report.pass ? "window counts pass" : "WINDOW COUNT VIOLATION") + " (" +
                 std::to_string(report.grid_points + report.midpoints) + " points)\n");
        if (!report.pass) std::exit(1);
    });

    auto* zpsi_cmd = zeros_cmd->add_subcommand("psi", "truncated explicit formula");
    std::string zpsi_file;
    double zpsi_x = 0, zpsi_T = 0;
    zpsi_cmd->add_option("--x", zpsi_x, "evaluation point")->required();
    zpsi_cmd->add_option("--T", zpsi_T, "zero sum cutoff")->required();
    zpsi_cmd->add_option("--file", zpsi_file, "ordinates file")->required();
    zpsi_cmd->callback([&] {
        auto table = pgg::zeros::load_zeros(zpsi_file);
        auto r = pgg::zeros::explicit_formula_psi(zpsi_x, zpsi_T, table);
        double psi = pgg::primes::chebyshev_psi(static_cast<std::int64_t>(r.x));
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "psi(%.1f) ~ %.4f  (sieved %.4f, |err| %.4g, envelope %.4g)\n", r.x,
                      r.approx, psi, std::fabs(r.approx - psi), r.trunc_error);
        emit(json{{"x", r.x},
                  {"T", zpsi_T},
                  {"approx", r.approx},
                  {"psi", psi},
                  {"error", std::fabs(r.approx - psi)},
                  {"envelope", r.trunc_error}},
             as_json, buf);
    });

    // ---- verify-all / report ----
    auto* verify_cmd = app.add_subcommand("verify-all", "run the whole pipeline");
    pgg::cli::RunConfig config;
    config.cache_dir = default_cache_dir();
    verify_cmd->add_option("--limit", config.limit, "sieve limit");
    verify_cmd->add_option("--max-n", config.max_n, "graphic sweep length");
    verify_cmd->add_option("--dpg-start", config.dpg_start, "growth start");
    verify_cmd->add_option("--dpg-end", config.dpg_end, "growth end");
    verify_cmd->add_option("--seed", config.seed, "seed");
    verify_cmd->add_option("--spot", config.spot_samples, "full-criterion spot checks");
    verify_cmd->add_option("--zeros", config.zeros_path, "zeta zero ordinates file");
    verify_cmd->add_option("--out", config.out_dir, "artifact directory");
    verify_cmd->add_option("--cache-dir", config.cache_dir,
                           "gap cache directory (default $PGG_CACHE_DIR)");
    verify_cmd->callback([&] {
        json cert = pgg::cli::verify_all(config);
        bool pass = cert["pass"].get<bool>();
        emit(cert, as_json,
             std::string(pass ? "verify-all PASS" : "verify-all FAIL") + " (artifacts in " +
                 config.out_dir + ")\n");
        if (!pass) std::exit(1);
    });

    auto* report_cmd = app.add_subcommand("report", "render CSV tables from artifacts");
    std::string report_dir = "pgg-out";
    report_cmd->add_option("--out", report_dir, "artifact directory");
    report_cmd->callback([&] {
        pgg::cli::write_report_csvs(report_dir);
        emit(json{{"outDir", report_dir}}, as_json, "wrote CSV tables to " + report_dir + "\n");
    });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const pgg::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
