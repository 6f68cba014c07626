#include "pgg/dpg.hpp"

#include <algorithm>
#include <limits>

namespace pgg::dpg {

DpgState dpg_step(DpgState state, std::mt19937_64& rng) {
    std::int64_t gap = state.next_gap;
    if (gap < 2 || gap % 2 != 0)
        throw domain_error("dpg_step: gap must be even and >= 2, got " + std::to_string(gap));
    std::int64_t nu = gap / 2;
    auto search = graphs::find_matching(state.graph, nu, rng);
    if (search.matching.size() < nu) throw DpgStuckError(state.n, gap);

    auto edges = search.matching.edges;
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) state.graph.remove_edge(u, v);
    std::int64_t fresh = state.graph.add_vertex();
    std::vector<std::int64_t> endpoints;
    endpoints.reserve(static_cast<std::size_t>(2 * nu));
    for (auto [u, v] : edges) {
        endpoints.push_back(u);
        endpoints.push_back(v);
    }
    std::sort(endpoints.begin(), endpoints.end());
    for (std::int64_t w : endpoints) state.graph.add_edge(fresh, w);

    ++state.n;
    state.next_gap = 0;
    return state;
}

namespace {

// exact comparison of the graph's degrees against the expected multiset
void check_degrees(const graphs::SimpleGraph& g, const graphic::DegreeMultiset& expected,
                   std::int64_t n) {
    if (g.vertex_count() != expected.size())
        throw error("dpg_run: vertex count drifted at n=" + std::to_string(n));
    std::vector<std::int64_t> histogram;
    for (std::int64_t v = 0; v < g.vertex_count(); ++v) {
        std::int64_t d = g.degree(v);
        if (d >= static_cast<std::int64_t>(histogram.size()))
            histogram.resize(static_cast<std::size_t>(d) + 1, 0);
        ++histogram[static_cast<std::size_t>(d)];
    }
    for (auto [value, count] : expected.counts()) {
        std::int64_t have =
            value < static_cast<std::int64_t>(histogram.size())
                ? histogram[static_cast<std::size_t>(value)]
                : 0;
        if (have != count)
            throw error("dpg_run: degree multiset mismatch at n=" + std::to_string(n) +
                        " (degree " + std::to_string(value) + ": " + std::to_string(have) +
                        " vs " + std::to_string(count) + ")");
    }
}

} // namespace

DpgRunResult dpg_run(std::int64_t start_n, std::int64_t end_n, std::uint64_t seed,
                     const CertificateSink& sink) {
    if (!(2 <= start_n && start_n < end_n))
        throw domain_error("dpg_run: need 2 <= start_n < end_n");
    auto gaps = primes::first_gaps(end_n);

    graphic::DegreeMultiset degrees;
    for (std::int64_t i = 0; i < start_n; ++i) degrees.insert(gaps[static_cast<std::size_t>(i)].gap);
    DpgState state{graphs::havel_hakimi_realize(degrees), start_n, 0};
    check_degrees(state.graph, degrees, start_n);

    std::mt19937_64 rng(seed);
    DpgRunResult result;
    result.start_n = start_n;
    result.end_n = end_n;
    for (std::int64_t n = start_n; n < end_n; ++n) {
        std::int64_t gap = gaps[static_cast<std::size_t>(n)].gap; // record n+1
        state.next_gap = gap;
        state = dpg_step(std::move(state), rng);
        degrees.insert(gap);
        check_degrees(state.graph, degrees, state.n);
        ++result.steps;
        DpgCertificate cert;
        cert.n = state.n;
        cert.gap = gap;
        cert.matching_size = gap / 2;
        cert.pass = true;
        if (!sink(cert)) break;
    }
    result.final_graph = std::move(state.graph);
    return result;
}

DpgCertificate dpg_inequality_witness(std::int64_t n) {
    auto gaps = primes::first_gaps(n + 1);
    return dpg_inequality_witness(n, gaps);
}

DpgCertificate dpg_inequality_witness(std::int64_t n,
                                      std::span<const primes::GapRecord> gaps) {
    if (n < 3) throw domain_error("dpg_inequality_witness: n must be >= 3");
    if (static_cast<std::int64_t>(gaps.size()) < n + 1)
        throw domain_error("dpg_inequality_witness: need gap records through n+1");
    std::int64_t p_n = gaps[static_cast<std::size_t>(n - 1)].prime;
    std::int64_t next_gap = gaps[static_cast<std::size_t>(n)].gap;

    // distinct gap values of PD_n ascending, with the total above each value
    std::map<std::int64_t, std::int64_t> histogram;
    for (std::int64_t i = 0; i < n; ++i) ++histogram[gaps[static_cast<std::size_t>(i)].gap];
    std::int64_t total = p_n - 1;

    DpgCertificate cert;
    cert.n = n;
    cert.gap = next_gap;
    cert.rhs = p_n;
    cert.lhs = std::numeric_limits<std::int64_t>::max();
    std::int64_t below_or_equal = 0;
    for (auto [value, count] : histogram) {
        below_or_equal += value * count;
        if (value < 2) continue;
        std::int64_t tail = total - below_or_equal; // sum of gaps strictly above value
        std::int64_t lhs = value * next_gap + 2 * tail;
        if (lhs < cert.lhs) cert.lhs = lhs;
        if (lhs < p_n) {
            cert.witness_n = value;
            cert.lhs = lhs;
            cert.pass = true;
            return cert;
        }
    }
    cert.pass = false;
    return cert;
}

} // namespace pgg::dpg
