#include "support/oracles.hpp"

#include <algorithm>

namespace pgg::test {

std::set<std::vector<std::int64_t>> all_realizable_degree_sequences(int max_n) {
    std::set<std::vector<std::int64_t>> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        std::uint64_t masks = std::uint64_t(1) << pairs.size();
        std::vector<std::int64_t> deg(static_cast<std::size_t>(n));
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            std::fill(deg.begin(), deg.end(), 0);
            for (std::size_t b = 0; b < pairs.size(); ++b) {
                if (mask >> b & 1) {
                    ++deg[static_cast<std::size_t>(pairs[b].first)];
                    ++deg[static_cast<std::size_t>(pairs[b].second)];
                }
            }
            std::vector<std::int64_t> key = deg;
            std::sort(key.begin(), key.end(), std::greater<>());
            out.insert(std::move(key));
        }
    }
    return out;
}

namespace {

std::int64_t matching_rec(const std::vector<graphs::Edge>& edges, std::size_t i,
                          std::uint32_t used) {
    if (i == edges.size()) return 0;
    std::int64_t best = matching_rec(edges, i + 1, used);
    auto [u, v] = edges[i];
    std::uint32_t mask = (std::uint32_t(1) << u) | (std::uint32_t(1) << v);
    if (!(used & mask)) best = std::max(best, 1 + matching_rec(edges, i + 1, used | mask));
    return best;
}

} // namespace

std::int64_t brute_force_max_matching(const graphs::SimpleGraph& g) {
    if (g.vertex_count() > 32) throw domain_error("brute_force_max_matching: too many vertices");
    auto edges = g.edges();
    if (edges.size() > 24) throw domain_error("brute_force_max_matching: too many edges");
    return matching_rec(edges, 0, 0);
}

graphs::SimpleGraph random_graph(std::int64_t n, double edge_prob, std::mt19937_64& rng) {
    graphs::SimpleGraph g(n);
    std::bernoulli_distribution coin(edge_prob);
    for (std::int64_t u = 0; u < n; ++u)
        for (std::int64_t v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

} // namespace pgg::test
