#pragma once

#include <random>
#include <set>
#include <vector>

#include "pgg/graphs.hpp"

// Brute-force reference implementations. These stay independent of the
// library code paths they check: graph existence is decided by enumerating
// every labeled graph, matchings by recursion over the edge list.
namespace pgg::test {

// Degree sequences (sorted descending) of every labeled simple graph on
// 1..max_n vertices. max_n <= 7 keeps this near 2^21 graphs.
std::set<std::vector<std::int64_t>> all_realizable_degree_sequences(int max_n);

// Maximum matching size by include/exclude recursion over the edges.
std::int64_t brute_force_max_matching(const graphs::SimpleGraph& g);

graphs::SimpleGraph random_graph(std::int64_t n, double edge_prob, std::mt19937_64& rng);

} // namespace pgg::test
