#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <utility>
#include <vector>

#include "pgg/common.hpp"
#include "pgg/graphic.hpp"

namespace pgg::graphs {

using Edge = std::pair<std::int64_t, std::int64_t>;

// Undirected simple graph, sorted neighbor lists, no loops or multi-edges.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::int64_t n) : adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw domain_error("SimpleGraph: negative vertex count");
    }

    static SimpleGraph from_edges(std::int64_t n, const std::vector<Edge>& edges);

    std::int64_t vertex_count() const { return static_cast<std::int64_t>(adj_.size()); }
    std::int64_t edge_count() const { return edges_; }
    std::int64_t degree(std::int64_t v) const { return static_cast<std::int64_t>(at(v).size()); }
    const std::vector<std::int64_t>& neighbors(std::int64_t v) const { return at(v); }
    bool has_edge(std::int64_t u, std::int64_t v) const;

    void add_edge(std::int64_t u, std::int64_t v);
    void remove_edge(std::int64_t u, std::int64_t v);
    std::int64_t add_vertex();

    graphic::DegreeMultiset degree_multiset() const;
    std::vector<Edge> edges() const;

    // text exchange format: header "n m", then one "u v" per line, 0-indexed
    static SimpleGraph read_edge_list(std::istream& in);
    void write_edge_list(std::ostream& out) const;

private:
    const std::vector<std::int64_t>& at(std::int64_t v) const;
    std::vector<std::int64_t>& at(std::int64_t v);

    std::vector<std::vector<std::int64_t>> adj_;
    std::int64_t edges_ = 0;
};

struct Matching {
    std::vector<Edge> edges;
    std::int64_t size() const { return static_cast<std::int64_t>(edges.size()); }
};

// Maximum matching in a general graph: seeded greedy start, then augmenting
// paths with blossom contraction until no augmenting path remains.
Matching maximum_matching(const SimpleGraph& g, std::uint64_t seed = 1);

struct MatchingSearch {
    Matching matching;
    bool maximum = false; // true when no augmenting path remained
};

// Stops as soon as `target` edges are matched; if the result is smaller the
// matching is a certified maximum.
MatchingSearch find_matching(const SimpleGraph& g, std::int64_t target, std::mt19937_64& rng);

// Matching condition on a degree sequence: delta >= 1, even d >= 2, and
//   delta * d <= sum_{d_i < delta} d_i - sum_{d_i >= delta} d_i
// implies every realization has a matching of size d/2.
bool vizing_matching_bound(const graphic::DegreeMultiset& seq, std::int64_t delta,
                           std::int64_t d);

class RealizationError : public error {
public:
    RealizationError(std::string msg, std::int64_t failing_k)
        : error(std::move(msg)), failing_k(failing_k) {}
    std::int64_t failing_k;
};

// Deterministic Havel-Hakimi: repeatedly satisfy the highest-degree vertex
// against the next-highest residual degrees, ties broken by lowest index.
// Vertex i of the result carries the i-th largest degree of seq.
SimpleGraph havel_hakimi_realize(const graphic::DegreeMultiset& seq);

// Every labeled graph whose degree vector (vertex i -> i-th largest value of
// seq) matches, via backtracking over the upper triangle with residual
// graphicality pruning. n <= 10. The callback returns false to stop; at most
// `cap` graphs are emitted. Returns the number emitted.
std::int64_t enumerate_realizations(const graphic::DegreeMultiset& seq, std::int64_t cap,
                                    const std::function<bool(const SimpleGraph&)>& sink);

} // namespace pgg::graphs
