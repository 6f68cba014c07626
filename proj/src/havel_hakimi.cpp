#include <algorithm>

#include "pgg/graphs.hpp"

namespace pgg::graphs {

SimpleGraph havel_hakimi_realize(const graphic::DegreeMultiset& seq) {
    auto verdict = graphic::erdos_gallai_reduced(seq);
    if (!verdict.graphic)
        throw RealizationError("havel_hakimi_realize: sequence is not graphic" +
                                   (verdict.failing_k
                                        ? " (criterion fails at k=" +
                                              std::to_string(*verdict.failing_k) + ")"
                                        : std::string(" (odd degree sum)")),
                               verdict.failing_k.value_or(0));

    std::vector<std::int64_t> degree = seq.to_sorted_vector(); // vertex i gets d_i
    std::int64_t n = static_cast<std::int64_t>(degree.size());
    SimpleGraph g(n);
    std::vector<std::int64_t> residual = degree;
    std::vector<std::int64_t> order(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;

    for (;;) {
        // highest residual first, ties by lowest vertex index
        std::stable_sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
            if (residual[a] != residual[b]) return residual[a] > residual[b];
            return a < b;
        });
        std::int64_t v = order[0];
        std::int64_t need = residual[v];
        if (need == 0) break;
        if (need > n - 1)
            throw RealizationError("havel_hakimi_realize: degree exceeds n-1", 0);
        std::int64_t attached = 0;
        for (std::size_t i = 1; i < order.size() && attached < need; ++i) {
            std::int64_t w = order[i];
            if (residual[w] <= 0)
                throw RealizationError("havel_hakimi_realize: ran out of partners", 0);
            g.add_edge(v, w);
            --residual[w];
            ++attached;
        }
        if (attached < need)
            throw RealizationError("havel_hakimi_realize: ran out of partners", 0);
        residual[v] = 0;
    }
    return g;
}

} // namespace pgg::graphs
