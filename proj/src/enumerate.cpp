#include <algorithm>

#include "pgg/graphs.hpp"

namespace pgg::graphs {

namespace {

// Backtracking over the upper triangle: when vertex i is processed, every
// edge incident to vertices < i is already fixed, so residual[i] must be met
// entirely by neighbors j > i and the leftover degrees i+1..n-1 must stay
// graphic as a multiset.
struct Enumerator {
    std::int64_t n = 0;
    std::vector<std::int64_t> residual;
    std::vector<Edge> chosen;
    std::int64_t cap = 0;
    std::int64_t emitted = 0;
    const std::function<bool(const SimpleGraph&)>* sink = nullptr;

    bool tail_graphic(std::int64_t from) const {
        graphic::DegreeMultiset ms;
        for (std::int64_t j = from; j < n; ++j) ms.insert(residual[static_cast<std::size_t>(j)]);
        return graphic::erdos_gallai_reduced(ms).graphic;
    }

    // false aborts the whole enumeration (cap reached or sink said stop)
    bool vertex(std::int64_t i) {
        if (i == n) {
            ++emitted;
            bool keep = (*sink)(SimpleGraph::from_edges(n, chosen));
            return keep && emitted < cap;
        }
        return pick(i, i + 1, residual[static_cast<std::size_t>(i)]);
    }

    // choose `need` more neighbors of i among j >= from, ascending
    bool pick(std::int64_t i, std::int64_t from, std::int64_t need) {
        if (need == 0) {
            if (!tail_graphic(i + 1)) return true; // dead branch, keep siblings going
            return vertex(i + 1);
        }
        for (std::int64_t j = from; n - j >= need; ++j) {
            auto& rj = residual[static_cast<std::size_t>(j)];
            if (rj <= 0) continue;
            --rj;
            chosen.emplace_back(i, j);
            bool keep = pick(i, j + 1, need - 1);
            chosen.pop_back();
            ++rj;
            if (!keep) return false;
        }
        return true;
    }
};

} // namespace

std::int64_t enumerate_realizations(const graphic::DegreeMultiset& seq, std::int64_t cap,
                                    const std::function<bool(const SimpleGraph&)>& sink) {
    if (seq.size() > 10)
        throw domain_error("enumerate_realizations: refusing n > 10 (got n=" +
                           std::to_string(seq.size()) + ")");
    if (cap <= 0) return 0;
    if (seq.size() == 0) {
        sink(SimpleGraph(0)); // the empty graph realizes the empty sequence
        return 1;
    }
    Enumerator e;
    e.n = seq.size();
    e.residual = seq.to_sorted_vector();
    e.cap = cap;
    e.sink = &sink;
    e.vertex(0);
    return e.emitted;
}

} // namespace pgg::graphs
